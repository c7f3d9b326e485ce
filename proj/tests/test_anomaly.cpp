#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mq/anomaly.hpp"
#include "mq/boundary.hpp"

using namespace mq;

namespace {
const LogAmplitude f1{};          // printed normalization, reported
const LogAmplitude f1a = arbitrated_f1(); // normalization used in the recursion

const AffineOT& rhs2() {
    static AffineOT r = rhs_genus(2, f1a, {});
    return r;
}
GenusAmplitude& amp2() {
    static GenusAmplitude a = solve_genus(2, rhs2());
    return a;
}
} // namespace

TEST_CASE("genus one checks") {
    auto rep = f1_checks(f1, Rat(-200));
    CHECK(rep.annihilators_vanish);
    CHECK(rep.g0_value == rat(-59, 30));
    CHECK(rep.g11_value == rat(-1, 10));
    // claimed values differ (documented discrepancy); with the B-model sign
    // chi = +200 the ratio of claimed to measured is exactly 5 for both
    auto repb = f1_checks(f1, Rat(200));
    CHECK(repb.g0_claimed == rat(-59, 6));
    CHECK(repb.g0_claimed == rep.g0_value * Rat(5));
    CHECK(repb.g11_claimed == rep.g11_value * Rat(5));
}

TEST_CASE("R1 F1 is regular") {
    auto frame = canonical_fields();
    OTElement r1f1 = apply_to_f1(frame[F_R1], f1);
    CHECK(r1f1.pow_disc() == 0);
    CHECK(r1f1.pow_t4() == 0);
    // exact divisibility of R1(t4) by t4 and R1(disc) by disc
    OTElement t4 = OTElement::var(4);
    OTElement disc(wp_disc());
    CHECK(ot_divide_exact(frame[F_R1].apply(t4), t4).has_value());
    CHECK(ot_divide_exact(frame[F_R1].apply(disc), disc).has_value());
}

TEST_CASE("genus two right-hand side") {
    const AffineOT& r = rhs2();
    CHECK(r.terms.empty());
    CHECK_FALSE(r.base.is_zero());
    // rhs = (1/2)(R1F1)^2 + (1/2) R1 R1 F1 recomputed independently
    auto frame = canonical_fields();
    OTElement a = apply_to_f1(frame[F_R1], f1a);
    OTElement expect = (a * a + frame[F_R1].apply(a)) * rat(1, 2);
    CHECK(r.base == expect);
    // the printed genus-one normalization makes the system inconsistent;
    // the recursion arbitrates the factor of five
    OTElement ap = apply_to_f1(frame[F_R1], f1);
    AffineOT bad((ap * ap + frame[F_R1].apply(ap)) * rat(1, 2));
    CHECK_THROWS_AS(solve_genus(2, bad), std::domain_error);
    CHECK(apply_to_f1(frame[F_G11], f1a) == OTElement::constant(rat(-1, 2)));
    CHECK(apply_to_f1(frame[F_G0], f1a) ==
          OTElement::constant(-rat(1, 2) * (Rat(3) + arbitrated_chi_b() / Rat(12))));
}

TEST_CASE("genus two solve") {
    SolveStats stats;
    GenusAmplitude a = solve_genus(2, rhs2(), &stats);
    MESSAGE("unknowns ", stats.unknowns, ", equations ", stats.equations);
    CHECK(stats.unknowns == static_cast<int>(enumerate_monomials(21, 3).size()));
    CHECK(stats.kernel_dim == 3);
    CHECK(stats.kernel_matches_prediction);
    CHECK(a.kernel.size() == 3);
    // kernel monomials are t0^12, t0^7 t4, t0^2 t4^2 over disc^2 (times t5^3)
    for (const auto& k : a.kernel) {
        CHECK(k.size() == 1);
        auto [m, c] = *k.terms().begin();
        CHECK(m.e[5] == 3);
        CHECK(m.e[0] + 5 * m.e[4] == 12);
    }
    CHECK(a.support_condition());
    // the graded constraints hold for the solved amplitude
    auto frame = canonical_fields();
    OTElement F2 = a.as_ot({Rat(0), Rat(0), Rat(0)});
    CHECK(frame[F_G0].apply(F2) == F2 * Rat(2));
    CHECK(frame[F_G11].apply(F2).is_zero());
    // defining equations
    CHECK(frame[F_K1].apply(F2).is_zero());
    CHECK(frame[F_T11].apply(F2) == rhs2().base);
}

TEST_CASE("modular cross-check mode") {
    SolveStats s1, s2;
    GenusAmplitude a = solve_genus(2, rhs2(), &s1, SparseSystem::Mode::Rational);
    GenusAmplitude b = solve_genus(2, rhs2(), &s2, SparseSystem::Mode::Modular);
    CHECK(a.q_particular == b.q_particular);
    CHECK(a.kernel.size() == b.kernel.size());
}

TEST_CASE("genus three solve") {
    // lower amplitude with symbolic ambiguity propagates linearly
    GenusAmplitude a2 = amp2();
    AffineOT r3 = rhs_genus(3, f1a, {a2});
    CHECK(r3.terms.size() == 3);
    SolveStats stats;
    GenusAmplitude a3 = solve_genus(3, r3, &stats);
    MESSAGE("genus 3: unknowns ", stats.unknowns, ", equations ", stats.equations);
    CHECK(stats.kernel_dim == 5); // floor(24/5)+1
    CHECK(a3.q_params.size() == 3);
}

TEST_CASE("master equations") {
    auto rep = verify_master(f1a, amp2(), {Rat(0), Rat(0), Rat(0)}, arbitrated_chi_b());
    int structural_failures = 0;
    for (const auto& e : rep.entries) {
        if (!e.zero && !e.documented_discrepancy) {
            ++structural_failures;
            MESSAGE(e.name, " lambda^", e.lambda_order, " residual: ", e.residual);
        }
    }
    // every equation holds except the documented genus-one scaling
    // discrepancies and the chi-dependent R_t1/R_t relations
    CHECK(structural_failures == 0);
    // the defining relations are among the verified ones
    for (const auto& e : rep.entries) {
        if (e.name == "R_t11" && e.lambda_order == 2) CHECK(e.zero);
        if (e.name == "R_k1") CHECK(e.zero);
        if (e.name == "R_g11" && e.lambda_order == 2) CHECK(e.zero);
        if (e.name == "R_g0" && e.lambda_order == 2) CHECK(e.zero);
        if (e.name == "R_t1" && e.lambda_order == 0) CHECK(e.zero);
        if (e.name == "R_t" && e.lambda_order == 0) CHECK(e.zero);
    }
}

TEST_CASE("genus-3 fixing and invariants") {
    MirrorData md = build_mirror_data(12);
    TCoords tc = holomorphic_tcoords(md);
    ConifoldCoords cc = conifold_tcoords(18);
    auto n0 = gw_genus0(md.yukawa_w, 5);
    BoundaryConfig cfg;
    GenusAmplitude a2 = solve_genus(2, rhs_genus(2, f1a, {}));
    auto r2 = fix_ambiguity(a2, tc, cc, n0, cfg, 5);
    REQUIRE(r2.fixed);
    AffineOT rhs3 = rhs_genus(3, f1a, {a2});
    CHECK(rhs3.terms.empty()); // resolved lower genus feeds a concrete system
    GenusAmplitude a3 = solve_genus(3, rhs3);
    CHECK(a3.kernel.size() == 5);
    auto r3 = fix_ambiguity(a3, tc, cc, n0, cfg, 5, &r2.bps);
    REQUIRE(r3.fixed);
    // frozen from the same two-route validation as genus 2
    CHECK(r3.bps[1] == Rat(0));
    CHECK(r3.bps[2] == Rat(0));
    CHECK(r3.bps[3] == Rat(0));
    CHECK(r3.bps[4] == Rat(8625));
    CHECK(r3.bps[5] == Rat(-15663750));
    CHECK(r3.gap_leading == rat_pow(Rat(5) * r3.mu, 2) * gap_coefficient(3));
}

// ~30 s; run explicitly with: ./test_anomaly -ns -tc="genus-4*"
TEST_CASE("genus-4 solve and remaining freedom" * doctest::skip()) {
    MirrorData md = build_mirror_data(12);
    TCoords tc = holomorphic_tcoords(md);
    ConifoldCoords cc = conifold_tcoords(18);
    auto n0 = gw_genus0(md.yukawa_w, 5);
    BoundaryConfig cfg;
    GenusAmplitude a2 = solve_genus(2, rhs_genus(2, f1a, {}));
    auto r2 = fix_ambiguity(a2, tc, cc, n0, cfg, 5);
    REQUIRE(r2.fixed);
    GenusAmplitude a3 = solve_genus(3, rhs_genus(3, f1a, {a2}));
    auto r3 = fix_ambiguity(a3, tc, cc, n0, cfg, 5, &r2.bps);
    REQUIRE(r3.fixed);
    SolveStats st;
    GenusAmplitude a4 = solve_genus(4, rhs_genus(4, f1a, {a2, a3}), &st, SparseSystem::Mode::Modular);
    CHECK(st.kernel_dim == 8);
    Rat mu(-15625);
    auto r4 = fix_ambiguity(a4, tc, cc, n0, cfg, 5, nullptr, &mu);
    CHECK(r4.fixed);
    CHECK(r4.parameters_after == 1);
}

TEST_CASE("boundary fixing and genus-2 invariants") {
    MirrorData md = build_mirror_data(12);
    TCoords tc = holomorphic_tcoords(md);
    ConifoldCoords cc = conifold_tcoords(14);
    auto n0 = gw_genus0(md.yukawa_w, 5);
    BoundaryConfig cfg;
    GenusAmplitude a2 = amp2();
    auto res = fix_ambiguity(a2, tc, cc, n0, cfg, 5);
    for (const auto& n : res.notes) MESSAGE(n);
    REQUIRE(res.fixed);
    MESSAGE("mu = ", rat_str(res.mu));
    CHECK(res.parameters_before == 3);
    CHECK(res.parameters_after == 0);
    for (size_t d = 1; d < res.bps.size(); ++d) {
        MESSAGE("n2[", d, "] = ", rat_str(res.bps[d]));
        CHECK(is_integer(res.bps[d]));
    }
    // cross-validated independently: fitting the normalization and ambiguity
    // to the vanishing of degrees 1..3 plus the degree-4 invariant reproduces
    // the same amplitude and predicts degree 5 (and 6) correctly
    CHECK(res.mu == Rat(-15625));
    CHECK(res.bps[3] == Rat(0));
    CHECK(res.bps[4] == Rat(534750));
    CHECK(res.bps[5] == Rat(75478987900));
    CHECK(res.mum_constant == rat(5, 144) * Rat(-15625) * Rat(-1));
    CHECK(a2.resolved);
}
