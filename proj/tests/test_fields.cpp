#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mq/fields.hpp"

#include <random>

using namespace mq;

namespace {
const std::array<VectorFieldOT, 7>& frame() {
    static auto f = canonical_fields();
    return f;
}
} // namespace

TEST_CASE("field displays") {
    const auto& f = frame();
    // R_t = d/dt1
    CHECK(f[F_T].apply(OTElement::var(1)) == OTElement::constant(Rat(1)));
    // R_g0 t5 = 3 t5
    CHECK(f[F_G0].apply(OTElement::var(5)) == OTElement::var(5) * Rat(3));
    // R_g0 component on d/dt4 is 5 t4
    CHECK(f[F_G0].comp[4] == OTElement::var(4) * Rat(5));
    // R_1 t4 = (15625 t0^4 t4 + 5 t3 t4)/t5
    OTElement expect(wp_var(0, 4) * wp_var(4) * Rat(15625) + wp_var(3) * wp_var(4) * Rat(5), 1, 0, 0);
    CHECK(f[F_R1].apply(OTElement::var(4)) == expect);
    // R_t11 = 625(t0^5 - t4)/t5 d6
    OTElement c6(wp_var(0, 5) * Rat(625) - wp_var(4) * Rat(625), 1, 0, 0);
    CHECK(f[F_T11].comp[6] == c6);
    for (int i = 0; i < 6; ++i) CHECK(f[F_T11].comp[i].is_zero());
}

TEST_CASE("fields have pure scaling weight") {
    static const int e0t[7] = {1, 2, 3, 4, 5, 3, 2};
    static const int expected_weight[7] = {0, 0, 0, -1, -2, -1, 1};
    const auto& f = frame();
    for (int k = 0; k < 7; ++k) {
        bool seen = false;
        long w = 0;
        for (int i = 0; i < 7; ++i) {
            if (f[k].comp[i].is_zero()) continue;
            auto [hom, d] = f[k].comp[i].grading('0');
            CHECK(hom);
            long weight = d - e0t[i];
            if (!seen) { w = weight; seen = true; }
            CHECK(w == weight);
        }
        CHECK(seen);
        CHECK(w == expected_weight[k]);
    }
}

TEST_CASE("frame determinant is a unit") {
    OTElement det = frame_determinant(frame());
    CHECK_FALSE(det.is_zero());
    WeightedPoly n = det.num();
    WeightedPoly q;
    while (n.exact_div(wp_disc(), q)) n = q;
    while (n.exact_div(wp_var(4), q)) n = q;
    while (n.exact_div(wp_var(5), q)) n = q;
    CHECK(n.size() == 1); // constant times distinguished factors only
    MESSAGE("frame det = ", det.str());
}

TEST_CASE("decompose_in_frame") {
    const auto& f = frame();
    SUBCASE("basis elements") {
        auto c = decompose_in_frame(f[F_R1], f);
        for (int k = 0; k < 7; ++k)
            CHECK(c[k] == (k == F_R1 ? OTElement::constant(Rat(1)) : OTElement()));
    }
    SUBCASE("O_T linearity") {
        VectorFieldOT z;
        z.label = "t0*R_t";
        for (int i = 0; i < 7; ++i) z.comp[i] = OTElement::var(0) * f[F_T].comp[i];
        auto c = decompose_in_frame(z, f);
        CHECK(c[F_T] == OTElement::var(0));
        for (int k = 0; k < 7; ++k)
            if (k != F_T) CHECK(c[k].is_zero());
    }
    SUBCASE("random recombination") {
        std::mt19937 rng(4242);
        std::uniform_int_distribution<int> coef(-3, 3);
        std::array<OTElement, 7> want;
        for (int k = 0; k < 7; ++k) {
            want[k] = OTElement::constant(Rat(coef(rng)));
            if (k == 2) want[k] = OTElement::var(0) * Rat(coef(rng));
        }
        VectorFieldOT z;
        z.label = "mix";
        for (int i = 0; i < 7; ++i)
            for (int k = 0; k < 7; ++k) z.comp[i] = z.comp[i] + want[k] * f[k].comp[i];
        auto c = decompose_in_frame(z, f);
        for (int k = 0; k < 7; ++k) CHECK(c[k] == want[k]);
    }
}

TEST_CASE("computed gm matrices match the expected formats") {
    auto rep = gm_format_report();
    for (const auto& s : rep.sector_map) MESSAGE(s);
    MESSAGE("computed Yukawa = ", yukawa_computed().str());
    CHECK(rep.r1_format_matches);
    CHECK(rep.yukawa_is_disc);
    CHECK_FALSE(rep.yukawa_is_printed);
    CHECK(rep.sector_consistent);

    OTMat a1 = gm_matrix(F_R1, YukawaVariant::Disc);
    CHECK(a1.e[0][1] == OTElement::constant(Rat(1)));
    CHECK(a1.e[1][2] == yukawa_ot(YukawaVariant::Disc));
    CHECK(a1.e[2][3] == OTElement::constant(Rat(1)));
    CHECK(a1.e[0][0].is_zero());
    CHECK(a1.e[3][0].is_zero());
}

TEST_CASE("pairing residuals") {
    for (int k = 0; k < 7; ++k) {
        OTMat res = pairing_residual(gm_computed(k));
        CHECK(res.is_zero());
    }
    CHECK_FALSE(pairing_residual(OTMat::identity()).is_zero());
}

TEST_CASE("bracket table arbitration") {
    auto res_disc = verify_bracket_table(YukawaVariant::Disc);
    int pass_disc = 0;
    for (const auto& r : res_disc) {
        if (r.pass) ++pass_disc;
        else MESSAGE("disc variant: ", r.detail);
    }
    auto res_printed = verify_bracket_table(YukawaVariant::Printed);
    int pass_printed = 0;
    for (const auto& r : res_printed)
        if (r.pass) ++pass_printed;
    MESSAGE("disc variant ", pass_disc, "/49, printed variant ", pass_printed, "/49");
    CHECK(pass_disc == 49);
    CHECK(pass_printed < 49);

    auto t1r1 = table_bracket(F_T1, F_R1, YukawaVariant::Disc);
    CHECK(t1r1[F_T11] == OTElement::constant(Rat(2)));
    CHECK(t1r1[F_K1] == -yukawa_ot(YukawaVariant::Disc));
    auto k1r1 = table_bracket(F_K1, F_R1, YukawaVariant::Disc);
    CHECK(k1r1[F_G0] == OTElement::constant(Rat(-1)));
    CHECK(k1r1[F_G11] == OTElement::constant(Rat(1)));
}

TEST_CASE("flatness") {
    const auto& f = frame();
    int s = calibrate_flatness_sign(YukawaVariant::Disc, f);
    MESSAGE("calibrated flatness sign s = ", s);
    int fails = 0;
    for (int i = 0; i < 7; ++i)
        for (int j = i; j < 7; ++j) {
            OTMat res = flatness_residual(i, j, s, YukawaVariant::Disc, f);
            if (!res.is_zero()) {
                ++fails;
                MESSAGE("flatness fails for pair (", f[i].label, ",", f[j].label, ")");
            }
        }
    CHECK(fails == 0);

    // the printed Yukawa variant must break at least one identity
    int fails_printed = 0;
    for (int i = 0; i < 7; ++i)
        for (int j = i; j < 7; ++j)
            if (!flatness_residual(i, j, s, YukawaVariant::Printed, f).is_zero()) ++fails_printed;
    CHECK(fails_printed > 0);
}

TEST_CASE("invariant subring kernel, small range") {
    auto rep = invariant_subring_kernel(8);
    CHECK(rep.pass);
    for (const auto& m : rep.failures) MESSAGE(m);
    const auto& f = frame();
    OTElement t02t4(wp_var(0, 2) * wp_var(4));
    for (int k : {F_G11, F_T11, F_T1, F_T, F_K1}) CHECK(f[k].apply(t02t4).is_zero());
    CHECK(f[F_G11].apply(OTElement::var(5)) == OTElement::var(5));
    CHECK(f[F_T].apply(OTElement::var(1)) == OTElement::constant(Rat(1)));
}
