#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mq/liealg.hpp"

#include <random>

using namespace mq;

TEST_CASE("phi matrix") {
    RatMat phi = build_phi(1);
    // rows (0,0,0,-1),(0,0,1,0),(0,-1,0,0),(1,0,0,0)
    CHECK(phi.at(0, 3) == Rat(-1));
    CHECK(phi.at(1, 2) == Rat(1));
    CHECK(phi.at(2, 1) == Rat(-1));
    CHECK(phi.at(3, 0) == Rat(1));
    int nonzero = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (phi.at(i, j) != 0) ++nonzero;
    CHECK(nonzero == 4);

    for (int h = 1; h <= 4; ++h) {
        RatMat p = build_phi(h);
        CHECK(p.transpose() == p * Rat(-1));
        CHECK(p * p == RatMat::identity(2 * h + 2) * Rat(-1));
    }
}

TEST_CASE("canonical basis membership and count") {
    for (int h = 1; h <= 3; ++h) {
        auto basis = canonical_basis(h);
        CHECK(static_cast<long>(basis.size()) == lie_dim(h));
        for (const auto& b : basis) CHECK(is_in_lie(b.mat, h));
    }
    CHECK(lie_dim(1) == 6);
    CHECK(lie_dim(2) == 13);
    // dim(T) bookkeeping for the mirror quintic: h + dim(G) = 7
    CHECK(1 + lie_dim(1) == 7);
}

TEST_CASE("t element for h=1") {
    auto basis = canonical_basis(1);
    const RatMat* t = nullptr;
    for (const auto& b : basis)
        if (b.name == "t") t = &b.mat;
    REQUIRE(t != nullptr);
    CHECK(t->at(3, 0) == Rat(-1));
    int nz = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (t->at(i, j) != 0) ++nz;
    CHECK(nz == 1);
}

TEST_CASE("membership edge cases") {
    CHECK_FALSE(is_in_lie(RatMat::identity(4), 1));
    CHECK(is_in_lie(RatMat(4, 4), 1));
}

TEST_CASE("bracket properties") {
    auto basis = canonical_basis(1);
    for (const auto& b : basis) CHECK(RatMat::bracket(b.mat, b.mat).is_zero());

    // [g_0, k_1] stays in the algebra
    const RatMat* g0 = nullptr;
    const RatMat* k1 = nullptr;
    for (const auto& b : basis) {
        if (b.name == "g0") g0 = &b.mat;
        if (b.name == "k_a[1]") k1 = &b.mat;
    }
    REQUIRE(g0);
    REQUIRE(k1);
    RatMat br = RatMat::bracket(*g0, *k1);
    CHECK(is_in_lie(br, 1));
    CHECK(br == *k1); // matrix-level [g0, k1] = k1

    // Jacobi identity on random triples
    std::mt19937 rng(99);
    auto b2 = canonical_basis(2);
    std::uniform_int_distribution<size_t> pick(0, b2.size() - 1);
    for (int trial = 0; trial < 15; ++trial) {
        const RatMat& x = b2[pick(rng)].mat;
        const RatMat& y = b2[pick(rng)].mat;
        const RatMat& z = b2[pick(rng)].mat;
        RatMat jac = RatMat::bracket(x, RatMat::bracket(y, z)) +
                     RatMat::bracket(y, RatMat::bracket(z, x)) +
                     RatMat::bracket(z, RatMat::bracket(x, y));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("closure for h = 1,2,3") {
    for (int h = 1; h <= 3; ++h) {
        auto rep = closure_report(h);
        CHECK(rep.closed);
        CHECK(rep.pairs_checked == static_cast<int>(lie_dim(h) * lie_dim(h)));
        for (const auto& f : rep.failures) MESSAGE(f);
    }
}

TEST_CASE("matrix-level bracket rows of the structure table") {
    // pure Lie(G) rows hold at matrix level for generic h, e.g. [g_0, t] = 2t
    // on matrices (the vector-field table says [R_g0, R_t] = -2 R_t; the
    // assignment A_R = g^T reverses bracket order)
    for (int h = 1; h <= 3; ++h) {
        auto basis = canonical_basis(h);
        auto find = [&](const std::string& n) -> const RatMat& {
            for (const auto& b : basis)
                if (b.name == n) return b.mat;
            throw std::logic_error("missing " + n);
        };
        const RatMat& g0 = find("g0");
        const RatMat& t = find("t");
        CHECK(RatMat::bracket(g0, t) == t * Rat(2));
        for (int a = 1; a <= h; ++a) {
            const RatMat& ka = find("k_a[" + std::to_string(a) + "]");
            CHECK(RatMat::bracket(g0, ka) == ka);
            const RatMat& ta = find("t_a[" + std::to_string(a) + "]");
            CHECK(RatMat::bracket(g0, ta) == ta);
        }
    }
}

TEST_CASE("decompose rejects outsiders") {
    CHECK_FALSE(decompose_in_basis(RatMat::identity(4), 1).has_value());
}
