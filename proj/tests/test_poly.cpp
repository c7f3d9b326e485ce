#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mq/otelem.hpp"

#include <random>

using namespace mq;

namespace {
std::mt19937 rng(777);

OTElement random_ot(int maxdeg = 2) {
    std::uniform_int_distribution<int> coef(-5, 5), ex(0, maxdeg), den(0, 1);
    WeightedPoly p;
    for (int t = 0; t < 4; ++t) {
        Monomial7 m;
        for (int i = 0; i < 7; ++i) m.e[i] = static_cast<int16_t>(ex(rng) == maxdeg ? 1 : 0);
        p.add_term(m, Rat(coef(rng)));
    }
    if (p.is_zero()) p = wp_const(Rat(1));
    return OTElement(p, den(rng), den(rng), den(rng));
}
} // namespace

TEST_CASE("monomial gradings") {
    // w = 3 e0 + 2 e1 for every monomial (exhaustive up to bounded degree)
    for (int e0 = 0; e0 <= 8; ++e0)
        for (int e1 = 0; 2 * e1 <= e0; ++e1)
            for (const auto& m : enumerate_monomials(e0, e1)) {
                CHECK(grade_e0(m) == e0);
                CHECK(grade_e1(m) == e1);
                CHECK(grade_w(m) == 3 * e0 + 2 * e1);
            }
}

TEST_CASE("enumerate_monomials basics and brute force oracle") {
    auto only_one = enumerate_monomials(0, 0);
    REQUIRE(only_one.size() == 1);
    CHECK(grade_w(only_one[0]) == 0);

    auto t0_only = enumerate_monomials(1, 0);
    REQUIRE(t0_only.size() == 1);
    CHECK(t0_only[0].e[0] == 1);

    // independent brute force: loop all exponent tuples in range
    auto brute = [](int e0, int e1) {
        long count = 0;
        for (int i0 = 0; i0 <= e0; ++i0)
            for (int i1 = 0; 2 * i1 <= e0; ++i1)
                for (int i2 = 0; 3 * i2 <= e0; ++i2)
                    for (int i3 = 0; 4 * i3 <= e0; ++i3)
                        for (int i4 = 0; 5 * i4 <= e0; ++i4)
                            for (int i5 = 0; 3 * i5 <= e0; ++i5)
                                for (int i6 = 0; 2 * i6 <= e0; ++i6)
                                    if (i0 + 2 * i1 + 3 * i2 + 4 * i3 + 5 * i4 + 3 * i5 + 2 * i6 == e0 &&
                                        i5 + i6 == e1)
                                        ++count;
        return count;
    };
    CHECK(static_cast<long>(enumerate_monomials(21, 3).size()) == brute(21, 3));
    CHECK(static_cast<long>(enumerate_monomials(9, 2).size()) == brute(9, 2));
}

TEST_CASE("ring operations") {
    OTElement t0 = OTElement::var(0);
    CHECK(t0 + t0 == t0 * Rat(2));

    OTElement inv_t5(wp_const(Rat(1)), 1, 0, 0);
    OTElement t5 = OTElement::var(5);
    CHECK(inv_t5 * t5 == OTElement::constant(Rat(1)));

    // like denominators: (t4 - t0^5)/t5 + t0^5/t5 = t4/t5
    OTElement a(wp_disc(), 1, 0, 0);
    OTElement b(wp_var(0, 5), 1, 0, 0);
    OTElement expect(wp_var(4), 1, 0, 0);
    CHECK(a + b == expect);
}

TEST_CASE("partials") {
    OTElement t05 = OTElement::var(0, 5);
    CHECK(t05.partial(0) == OTElement::var(0, 4) * Rat(5));

    // d/dt0 (1/disc) = 5 t0^4 / disc^2
    OTElement inv_disc(wp_const(Rat(1)), 0, 0, 1);
    OTElement expect(wp_var(0, 4) * Rat(5), 0, 0, 2);
    CHECK(inv_disc.partial(0) == expect);

    // d/dt5 (t6/t5) = -t6/t5^2
    OTElement f(wp_var(6), 1, 0, 0);
    OTElement expect2(-wp_var(6), 2, 0, 0);
    CHECK(f.partial(5) == expect2);
}

TEST_CASE("leibniz and mixed partials on random elements") {
    for (int trial = 0; trial < 12; ++trial) {
        OTElement a = random_ot(), b = random_ot();
        for (int i : {0, 4, 5}) {
            CHECK((a * b).partial(i) == a.partial(i) * b + a * b.partial(i));
        }
        CHECK(a.partial(0).partial(4) == a.partial(4).partial(0));
        CHECK(a.partial(5).partial(0) == a.partial(0).partial(5));
    }
}

TEST_CASE("normalization") {
    // a * disc then divided by disc restores a; normalization idempotent
    for (int trial = 0; trial < 10; ++trial) {
        OTElement a = random_ot();
        OTElement prod = a * OTElement(wp_disc());
        auto q = ot_divide_exact(prod, OTElement(wp_disc()));
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
    // numerator divisible by t5 with positive exponent cancels
    OTElement unnorm(wp_var(5) * wp_var(0), 2, 0, 0);
    CHECK(unnorm.pow_t5() == 1);
    CHECK(unnorm.num() == wp_var(0));
}

TEST_CASE("grading report") {
    OTElement disc(wp_disc());
    auto [hom, w] = disc.grading('w');
    CHECK(hom);
    CHECK(w == 15);

    // Y_111 shape: disc^2/t5^3 has w = 30 - 33 = -3
    OTElement y(wp_disc() * wp_disc(), 3, 0, 0);
    auto [homy, wy] = y.grading('w');
    CHECK(homy);
    CHECK(wy == -3);

    OTElement mixed = OTElement::var(0) + OTElement::var(1);
    CHECK_FALSE(mixed.grading('w').first);
}

TEST_CASE("evaluate series") {
    std::array<QSeries, 7> vals;
    for (auto& v : vals) v = QSeries::one(4);
    QSeries onep(4);
    onep.set(0, Rat(1)); onep.set(1, Rat(1));
    vals[0] = onep;
    CHECK(OTElement::var(0).eval_series(vals) == onep);

    // 1/t5 with t5 = 1 - q
    std::array<QSeries, 7> vals2 = vals;
    QSeries onem(4);
    onem.set(0, Rat(1)); onem.set(1, Rat(-1));
    vals2[5] = onem;
    OTElement invt5(wp_const(Rat(1)), 1, 0, 0);
    QSeries g = invt5.eval_series(vals2);
    for (int n = 0; n <= 4; ++n) CHECK(g[n] == Rat(1));

    // two-route oracle: (disc/t4) evaluated directly vs num/den separately
    std::array<QSeries, 7> vals3;
    std::mt19937 r2(5150);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (auto& v : vals3) {
        v = QSeries(4);
        v.set(0, Rat(1 + (coef(r2) & 3)));
        for (int n = 1; n <= 4; ++n) v.set(n, Rat(coef(r2)));
    }
    OTElement f(wp_disc(), 0, 1, 0);
    QSeries route_a = f.eval_series(vals3);
    QSeries num = vals3[4] - vals3[0].pow(5);
    QSeries route_b = num / vals3[4];
    CHECK(route_a == route_b);
}

TEST_CASE("evaluation error paths") {
    // denominator vanishing at the expansion point is an explicit error
    std::array<QSeries, 7> vals;
    for (auto& v : vals) v = QSeries::one(3);
    vals[5] = QSeries::var(3); // t5(0) = 0
    OTElement invt5(wp_const(Rat(1)), 1, 0, 0);
    CHECK_THROWS_AS(invt5.eval_series(vals), std::domain_error);
    // disc = t4 - t0^5 = 0 when t4 = 1, t0 = 1
    OTElement invdisc(wp_const(Rat(1)), 0, 0, 1);
    CHECK_THROWS_AS(invdisc.eval_series(vals), std::domain_error);
}

TEST_CASE("canonical text round trip") {
    // spec format: terms sorted graded-lex ascending
    WeightedPoly p = wp_var(4, 2) * Rat(-625) + wp_var(0, 5) * wp_var(4) * Rat(3750);
    CHECK(wpoly_str(p) == "-625*t4^2 + 3750*t0^5*t4");
    CHECK(wpoly_parse(wpoly_str(p)) == p);

    for (int trial = 0; trial < 10; ++trial) {
        OTElement a = random_ot();
        CHECK(OTElement::parse(a.str()) == a);
    }
}
