// Acceptance suite: one test case per criterion, one printed line each.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mq/anomaly.hpp"
#include "mq/boundary.hpp"
#include "mq/mirrormap.hpp"
#include "mq/serialize.hpp"
#include "mq/specialring.hpp"

#include <cstdio>

using namespace mq;

namespace {

void line(int n, bool pass, const std::string& what) {
    std::printf("ACCEPTANCE %2d %s  %s\n", n, pass ? "PASS" : "FAIL", what.c_str());
    std::fflush(stdout);
}

const MirrorData& md() {
    static MirrorData m = build_mirror_data(12);
    return m;
}
const TCoords& tcoords() {
    static TCoords t = holomorphic_tcoords(md());
    return t;
}
const ConifoldCoords& ccoords() {
    static ConifoldCoords c = conifold_tcoords(16);
    return c;
}
const std::vector<Rat>& n0() {
    static std::vector<Rat> n = gw_genus0(md().yukawa_w, 6);
    return n;
}
GenusAmplitude& genus2() {
    static GenusAmplitude a = solve_genus(2, rhs_genus(2, arbitrated_f1(), {}));
    return a;
}
FixResult& genus2_fix() {
    static FixResult r = [] {
        BoundaryConfig cfg;
        return fix_ambiguity(genus2(), tcoords(), ccoords(), n0(), cfg, 5);
    }();
    return r;
}

} // namespace

TEST_CASE("criterion 1: Lie algebra structure for h = 1, 2, 3") {
    bool ok = true;
    for (int h = 1; h <= 3; ++h) {
        auto basis = canonical_basis(h);
        ok = ok && (static_cast<long>(basis.size()) == (3L * h * h + 5 * h + 4) / 2);
        for (const auto& b : basis) ok = ok && is_in_lie(b.mat, h);
        auto rep = closure_report(h);
        ok = ok && rep.closed;
    }
    line(1, ok, "canonical basis dimension, membership, exact closure (h = 1, 2, 3)");
    CHECK(ok);
}

TEST_CASE("criterion 2: bracket table with arbitrated Yukawa") {
    int pass_disc = 0, pass_printed = 0;
    for (const auto& r : verify_bracket_table(YukawaVariant::Disc))
        if (r.pass) ++pass_disc;
    for (const auto& r : verify_bracket_table(YukawaVariant::Printed))
        if (r.pass) ++pass_printed;
    bool ok = (pass_disc == 49) && (pass_printed < 49);
    line(2, ok,
         "49/49 brackets with disc variant (" + std::to_string(pass_disc) + "/49); printed variant " +
             std::to_string(pass_printed) + "/49");
    CHECK(ok);
}

TEST_CASE("criterion 3: flatness and pairing identities") {
    auto frame = canonical_fields();
    int s = calibrate_flatness_sign(YukawaVariant::Disc, frame);
    int flat_fail = 0, pair_fail = 0;
    for (int i = 0; i < 7; ++i)
        for (int j = i; j < 7; ++j)
            if (!flatness_residual(i, j, s, YukawaVariant::Disc, frame).is_zero()) ++flat_fail;
    for (int k = 0; k < 7; ++k)
        if (!pairing_residual(gm_matrix(k, YukawaVariant::Disc)).is_zero()) ++pair_fail;
    bool ok = (flat_fail == 0) && (pair_fail == 0);
    line(3, ok, "21 flatness and 7 pairing residuals vanish identically");
    CHECK(ok);
}

TEST_CASE("criterion 4: invariant subring kernel") {
    auto rep = invariant_subring_kernel(15);
    line(4, rep.pass,
         "joint kernel on e0 <= 15 equals the (t0, t4) span (" +
             std::to_string(rep.monomials_checked) + " monomials, dim " +
             std::to_string(rep.kernel_dim) + ")");
    CHECK(rep.pass);
    CHECK(rep.kernel_dim == rep.expected_dim);
}

TEST_CASE("criterion 5: special-ring identities") {
    bool combos_ok = true;
    for (const auto& c : canonical_combos()) combos_ok = combos_ok && c.constant && c.matches_basis;
    bool pairing_ok = check_pairing_B().is_zero();
    auto mism = m_matrix_display_check();
    bool t0_resolved = true;
    for (const auto& m : mism)
        if (m.find("M_g0") != std::string::npos) t0_resolved = false;
    bool ok = combos_ok && pairing_ok && t0_resolved;
    line(5, ok,
         "six combinations constant and equal to the basis; B Phi B^T = Phi; T_0 entry resolves to T (" +
             std::to_string(mism.size()) + " reported display deviations, all in M_g)");
    CHECK(combos_ok);
    CHECK(pairing_ok);
    CHECK(t0_resolved);
}

TEST_CASE("criterion 6: genus-two solver") {
    SolveStats stats;
    GenusAmplitude amp = solve_genus(2, rhs_genus(2, arbitrated_f1(), {}), &stats);
    bool kernel_ok = stats.kernel_dim == 3 && stats.kernel_matches_prediction;
    bool monos_ok = amp.kernel.size() == 3;
    for (const auto& k : amp.kernel) {
        auto [m, c] = *k.terms().begin();
        monos_ok = monos_ok && (m.e[0] + 5 * m.e[4] == 12) && m.e[5] == 3 && k.size() == 1;
    }
    bool support_ok = amp.support_condition();
    bool fixed_ok = genus2_fix().fixed && genus2_fix().parameters_after == 0;
    bool ok = kernel_ok && monos_ok && support_ok && fixed_ok;
    line(6, ok,
         "system consistent; kernel = {t0^12, t0^7 t4, t0^2 t4^2}/disc^2; support condition; 0 "
         "parameters after gap + constant-map fixing");
    CHECK(kernel_ok);
    CHECK(monos_ok);
    CHECK(support_ok);
    CHECK(fixed_ok);
}

TEST_CASE("criterion 7: mirror map and genus zero") {
    bool y0_ok = md().fb.s[0][0] == Rat(1) && md().fb.s[0][1] == Rat(120) &&
                 md().fb.s[0][2] == Rat(113400);
    bool zq_ok = md().z_of_q[1] == Rat(1) && md().z_of_q[2] == Rat(-770);
    QSeries y_alg = yukawa_q(tcoords());
    bool yukawa_ok = (y_alg == md().yukawa_w) && y_alg[0] == Rat(5) && y_alg[1] == Rat(2875) &&
                     y_alg[2] == Rat(4876875);
    bool n_ok = n0()[1] == Rat(2875) && n0()[2] == Rat(609250) && n0()[3] == Rat(317206375);
    for (int d = 1; d <= 5; ++d) n_ok = n_ok && is_integer(n0()[d]);
    bool ok = y0_ok && zq_ok && yukawa_ok && n_ok;
    line(7, ok,
         "y0 = 1 + 120z + 113400z^2; z(q) = q - 770q^2; Yukawa matches the Wronskian route; genus-0 "
         "invariants 2875, 609250, 317206375, integral to degree 5");
    CHECK(ok);
}

TEST_CASE("criterion 8: genus one") {
    auto g1 = genus1_invariants(tcoords(), n0(), 5);
    bool vanish = g1.invariants[1] == 0 && g1.invariants[2] == 0;
    bool integral = true;
    for (int d = 1; d <= 5; ++d) integral = integral && is_integer(g1.invariants[d]);
    // the discrepancy of the printed genus-one equations is carried in the
    // manifest of every artifact
    Manifest man;
    Json j = man.to_json();
    std::string rep = j["arbitration"]["f1_printed_scalings"].get<std::string>();
    bool reported = rep.find("-59/30") != std::string::npos && rep.find("-1/10") != std::string::npos;
    bool ok = vanish && integral && reported;
    line(8, ok,
         "elliptic invariants integral with degrees 1, 2 vanishing (normalization nu = " +
             rat_str(g1.nu) + "); genus-one scaling discrepancy reported in the manifest");
    CHECK(vanish);
    CHECK(integral);
    CHECK(reported);
}

TEST_CASE("criterion 9: genus-two invariants") {
    const FixResult& r = genus2_fix();
    bool integral = r.fixed;
    for (size_t d = 1; d < r.bps.size() && integral; ++d) integral = is_integer(r.bps[d]);
    bool gap_ok = r.fixed && r.notes.size() > 0;
    line(9, integral && gap_ok,
         "fully fixed genus-two amplitude yields integral invariants for d <= 5 (" +
             (r.fixed ? rat_str(r.bps[4]) + ", " + rat_str(r.bps[5]) + " at degrees 4, 5" :
                        std::string("fixing failed")) +
             ") with the gap structure");
    CHECK(integral);
    CHECK(gap_ok);
}

TEST_CASE("criterion 10: master equations") {
    const FixResult& r = genus2_fix();
    REQUIRE(r.fixed);
    auto rep = verify_master(arbitrated_f1(), genus2(), r.values, arbitrated_chi_b());
    int nonzero = 0;
    for (const auto& e : rep.entries) {
        if (!e.zero) {
            ++nonzero;
            MESSAGE(e.name, " lambda^", e.lambda_order, ": ", e.residual);
        }
    }
    // with the arbitrated normalization every residual vanishes, including
    // the relations the solver does not impose
    line(10, nonzero == 0,
         "all six master equations hold through lambda^2 (" +
             std::to_string(rep.entries.size() - nonzero) + "/" +
             std::to_string(rep.entries.size()) + " residuals zero)");
    CHECK(nonzero == 0);
}
