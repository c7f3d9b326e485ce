#include "mq/fields.hpp"
#include <sstream>
#include <map>

namespace mq {

namespace {

WeightedPoly mono(const Rat& c, int i0, int i1, int i2, int i3, int i4, int i5, int i6) {
    Monomial7 m;
    m.e = {static_cast<int16_t>(i0), static_cast<int16_t>(i1), static_cast<int16_t>(i2),
           static_cast<int16_t>(i3), static_cast<int16_t>(i4), static_cast<int16_t>(i5),
           static_cast<int16_t>(i6)};
    return WeightedPoly::term(m, c);
}

OTElement ot_unit_inverse(const OTElement& e) {
    auto q = ot_divide_exact(OTElement::constant(Rat(1)), e);
    if (!q) throw std::domain_error("ot_unit_inverse: not a unit of the localized ring");
    return *q;
}

} // namespace

OTElement VectorFieldOT::apply(const OTElement& f) const {
    OTElement acc;
    for (int i = 0; i < 7; ++i) {
        if (comp[i].is_zero()) continue;
        acc = acc + comp[i] * f.partial(i);
    }
    return acc;
}

bool VectorFieldOT::is_zero() const {
    for (const auto& c : comp) if (!c.is_zero()) return false;
    return true;
}

VectorFieldOT VectorFieldOT::operator-(const VectorFieldOT& b) const {
    VectorFieldOT r;
    r.label = label + "-" + b.label;
    for (int i = 0; i < 7; ++i) r.comp[i] = comp[i] - b.comp[i];
    return r;
}

VectorFieldOT vf_bracket(const VectorFieldOT& x, const VectorFieldOT& y) {
    VectorFieldOT r;
    r.label = "[" + x.label + "," + y.label + "]";
    for (int i = 0; i < 7; ++i) r.comp[i] = x.apply(y.comp[i]) - y.apply(x.comp[i]);
    return r;
}

std::array<VectorFieldOT, 7> canonical_fields() {
    std::array<VectorFieldOT, 7> f;

    // R_g0: the weighted Euler field
    f[F_G0].label = "R_g0";
    {
        static const int w[7] = {1, 2, 3, 4, 5, 3, 2};
        for (int i = 0; i < 7; ++i) f[F_G0].comp[i] = OTElement::var(i) * Rat(w[i]);
    }

    // R_g11 = t5 d5 + t6 d6
    f[F_G11].label = "R_g11";
    f[F_G11].comp[5] = OTElement::var(5);
    f[F_G11].comp[6] = OTElement::var(6);

    // R_t11 = 625 (t0^5 - t4)/t5 d6
    f[F_T11].label = "R_t11";
    f[F_T11].comp[6] = OTElement(mono(Rat(625), 5,0,0,0,0,0,0) - mono(Rat(625), 0,0,0,0,1,0,0), 1, 0, 0);

    // R_t1 = (3125 t0^4 + t3)/t5 d1 - 625 (t0^5 - t4)/t5 d2   (sign-calibrated)
    f[F_T1].label = "R_t1";
    f[F_T1].comp[1] = OTElement(mono(Rat(3125), 4,0,0,0,0,0,0) + mono(Rat(1), 0,0,0,1,0,0,0), 1, 0, 0);
    f[F_T1].comp[2] = OTElement(mono(Rat(-625), 5,0,0,0,0,0,0) + mono(Rat(625), 0,0,0,0,1,0,0), 1, 0, 0);

    // R_t = d1
    f[F_T].label = "R_t";
    f[F_T].comp[1] = OTElement::constant(Rat(1));

    // R_k1 = -(5 t0^4 t6 - 5 t0^3 t5 - t2 t5/625 + t3 t6/625)/disc d1
    //        - t6 d2 - t5 d3                                   (sign-calibrated)
    f[F_K1].label = "R_k1";
    f[F_K1].comp[1] = OTElement(-(mono(Rat(5), 4,0,0,0,0,0,1) + mono(Rat(-5), 3,0,0,0,0,1,0) +
                                  mono(rat(-1, 625), 0,0,1,0,0,1,0) + mono(rat(1, 625), 0,0,0,1,0,0,1)),
                                0, 0, 1);
    f[F_K1].comp[2] = -OTElement::var(6);
    f[F_K1].comp[3] = -OTElement::var(5);

    // R_1, all seven components over t5
    f[F_R1].label = "R_1";
    f[F_R1].comp[0] = OTElement(
        mono(Rat(3750), 5,0,0,0,0,0,0) + mono(Rat(1), 1,0,0,1,0,0,0) + mono(Rat(-625), 0,0,0,0,1,0,0),
        1, 0, 0);
    f[F_R1].comp[1] = OTElement(
        -(mono(Rat(390625), 6,0,0,0,0,0,0) + mono(Rat(-3125), 4,1,0,0,0,0,0) +
          mono(Rat(-390625), 1,0,0,0,1,0,0) + mono(Rat(-1), 0,1,0,1,0,0,0)),
        1, 0, 0);
    f[F_R1].comp[2] = OTElement(
        -(mono(Rat(5859375), 7,0,0,0,0,0,0) + mono(Rat(625), 5,1,0,0,0,0,0) +
          mono(Rat(-6250), 4,0,1,0,0,0,0) + mono(Rat(-5859375), 2,0,0,0,1,0,0) +
          mono(Rat(-625), 0,1,0,0,1,0,0) + mono(Rat(-2), 0,0,1,1,0,0,0)),
        1, 0, 0);
    f[F_R1].comp[3] = OTElement(
        -(mono(Rat(9765625), 8,0,0,0,0,0,0) + mono(Rat(625), 5,0,1,0,0,0,0) +
          mono(Rat(-9375), 4,0,0,1,0,0,0) + mono(Rat(-9765625), 3,0,0,0,1,0,0) +
          mono(Rat(-625), 0,0,1,0,1,0,0) + mono(Rat(-3), 0,0,0,2,0,0,0)),
        1, 0, 0);
    f[F_R1].comp[4] = OTElement(
        mono(Rat(15625), 4,0,0,0,1,0,0) + mono(Rat(5), 0,0,0,1,1,0,0), 1, 0, 0);
    f[F_R1].comp[5] = OTElement(
        -(mono(Rat(625), 5,0,0,0,0,0,1) + mono(Rat(-9375), 4,0,0,0,0,1,0) +
          mono(Rat(-2), 0,0,0,1,0,1,0) + mono(Rat(-625), 0,0,0,0,1,0,1)),
        1, 0, 0);
    f[F_R1].comp[6] = OTElement(
        mono(Rat(9375), 4,0,0,0,0,0,1) + mono(Rat(-3125), 3,0,0,0,0,1,0) +
            mono(Rat(-2), 0,0,1,0,0,1,0) + mono(Rat(3), 0,0,0,1,0,0,1),
        1, 0, 0);

    return f;
}

OTElement yukawa_ot(YukawaVariant v) {
    WeightedPoly base = (v == YukawaVariant::Disc)
                            ? wp_disc()
                            : (wp_var(4) - wp_var(0)); // printed variant t4 - t0
    Rat c = rat_pow(Rat(5), 8);
    return OTElement(base * base * c, 3, 0, 0);
}

OTMat OTMat::zero() { return OTMat{}; }

OTMat OTMat::identity() {
    OTMat m;
    for (int i = 0; i < 4; ++i) m.e[i][i] = OTElement::constant(Rat(1));
    return m;
}

OTMat OTMat::operator+(const OTMat& b) const {
    OTMat r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.e[i][j] = e[i][j] + b.e[i][j];
    return r;
}

OTMat OTMat::operator-(const OTMat& b) const {
    OTMat r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.e[i][j] = e[i][j] - b.e[i][j];
    return r;
}

OTMat OTMat::operator*(const OTMat& b) const {
    OTMat r;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            if (e[i][k].is_zero()) continue;
            for (int j = 0; j < 4; ++j) {
                if (b.e[k][j].is_zero()) continue;
                r.e[i][j] = r.e[i][j] + e[i][k] * b.e[k][j];
            }
        }
    return r;
}

OTMat OTMat::scale(const OTElement& s) const {
    OTMat r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.e[i][j] = e[i][j] * s;
    return r;
}

OTMat OTMat::scale(const Rat& s) const {
    OTMat r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.e[i][j] = e[i][j] * s;
    return r;
}

OTMat OTMat::transpose() const {
    OTMat r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.e[i][j] = e[j][i];
    return r;
}

bool OTMat::is_zero() const {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!e[i][j].is_zero()) return false;
    return true;
}

bool OTMat::operator==(const OTMat& b) const {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!(e[i][j] == b.e[i][j])) return false;
    return true;
}

OTMat OTMat::bracket(const OTMat& a, const OTMat& b) { return a * b - b * a; }

std::string OTMat::str() const {
    std::ostringstream os;
    for (int i = 0; i < 4; ++i) {
        os << "[ ";
        for (int j = 0; j < 4; ++j) os << e[i][j].str() << (j < 3 ? " | " : "");
        os << " ]\n";
    }
    return os.str();
}

// ---- connection data -------------------------------------------------------

namespace {

GMData build_gm_data() {
    GMData d;
    d.C = OTMat::zero();
    // basis change from the derivative frame, the (3,1) entry resolved as a
    // single fraction (the displayed product fails the scaling gradings)
    d.C.e[0][0] = OTElement::constant(Rat(1));
    d.C.e[1][0] = OTElement(-(mono(Rat(3125), 4,0,0,0,0,0,0) + mono(Rat(1), 0,0,0,1,0,0,0)), 1, 0, 0);
    d.C.e[1][1] = OTElement(mono(Rat(-625), 0,0,0,0,0,0,0) * wp_disc(), 1, 0, 0);
    // f = ((3125 t0^4 + t3) t6 - (3125 t0^3 + t2) t5) / (625 disc)
    d.C.e[2][0] = OTElement(
        (mono(Rat(3125), 4,0,0,0,0,0,0) + mono(Rat(1), 0,0,0,1,0,0,0)) * wp_var(6) -
            (mono(Rat(3125), 3,0,0,0,0,0,0) + mono(Rat(1), 0,0,1,0,0,0,0)) * wp_var(5),
        0, 0, 1);
    d.C.e[2][0] = d.C.e[2][0] * rat(1, 625);
    d.C.e[2][1] = OTElement::var(6);
    d.C.e[2][2] = OTElement::var(5);
    // the fourth basis vector carries an overall minus relative to the
    // display; the sign is pinned by the constant-pairing normalization
    d.C.e[3][0] = -OTElement::var(1);
    d.C.e[3][1] = -OTElement::var(2);
    d.C.e[3][2] = -OTElement::var(3);
    d.C.e[3][3] = OTElement(wp_disc() * Rat(-625));

    // lower-triangular inverse by forward substitution
    d.Cinv = OTMat::zero();
    for (int i = 0; i < 4; ++i) {
        OTElement dinv = ot_unit_inverse(d.C.e[i][i]);
        d.Cinv.e[i][i] = dinv;
        for (int j = 0; j < i; ++j) {
            OTElement acc;
            for (int k = j; k < i; ++k) acc = acc + d.C.e[i][k] * d.Cinv.e[k][j];
            d.Cinv.e[i][j] = -(dinv * acc);
        }
    }

    // derivative-frame connection in the t0 direction: shift plus the
    // Picard-Fuchs reduction of the fifth derivative
    d.N0 = OTMat::zero();
    d.N0.e[0][1] = OTElement::constant(Rat(1));
    d.N0.e[1][2] = OTElement::constant(Rat(1));
    d.N0.e[2][3] = OTElement::constant(Rat(1));
    {
        // fifth derivative reduced through the hypergeometric relation,
        // rewritten in the derivative frame: (t0 v1 + 15 t0^2 v2 + 25 t0^3 v3
        // + 10 t0^4 v4)/disc
        static const long coef[4] = {1, 15, 25, 10};
        for (int j = 0; j < 4; ++j)
            d.N0.e[3][j] = OTElement(mono(Rat(coef[j]), j + 1, 0, 0, 0, 0, 0, 0), 0, 0, 1);
    }

    // t4 direction from the scaling relation: nabla_4 v_k = -(k v_k + t0 v_{k+1})/(5 t4)
    d.N4 = OTMat::zero();
    OTElement inv5t4(wp_const(rat(1, 5)), 0, 1, 0);
    for (int k = 0; k < 4; ++k) {
        d.N4.e[k][k] = d.N4.e[k][k] - inv5t4 * Rat(k + 1);
        if (k < 3) {
            d.N4.e[k][k + 1] = d.N4.e[k][k + 1] - inv5t4 * OTElement::var(0);
        } else {
            // v_5 through the Picard-Fuchs relation
            for (int j = 0; j < 4; ++j)
                d.N4.e[3][j] = d.N4.e[3][j] - inv5t4 * OTElement::var(0) * d.N0.e[3][j];
        }
    }
    return d;
}

} // namespace

const GMData& gm_data() {
    static GMData d = build_gm_data();
    return d;
}

OTMat gm_computed(int field_index) {
    static std::array<OTMat, 7> cache = [] {
        std::array<OTMat, 7> out;
        const GMData& d = gm_data();
        auto frame = canonical_fields();
        for (int k = 0; k < 7; ++k) {
            const VectorFieldOT& R = frame[k];
            OTMat rc = OTMat::zero(); // R applied to C entrywise
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) rc.e[i][j] = R.apply(d.C.e[i][j]);
            OTMat inner = d.N0.scale(R.comp[0]) + d.N4.scale(R.comp[4]);
            out[k] = (rc + d.C * inner) * d.Cinv;
        }
        return out;
    }();
    return cache.at(field_index);
}

const OTElement& yukawa_computed() {
    static OTElement y = gm_computed(F_R1).e[1][2];
    return y;
}

OTMat gm_matrix(int field_index, YukawaVariant v) {
    OTMat m = gm_computed(field_index);
    if (field_index == F_R1) m.e[1][2] = yukawa_ot(v);
    return m;
}

// ---- exact linear algebra over the coordinate ring ------------------------

std::vector<OTElement> decompose_in_frame(const VectorFieldOT& z,
                                          const std::array<VectorFieldOT, 7>& frame) {
    // solve M c = z, M[j][i] = component j of frame field i, by fraction-free
    // elimination; all divisions are exact in the ring
    const int n = 7;
    std::array<std::array<OTElement, 8>, 7> m; // augmented
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) m[j][i] = frame[i].comp[j];
        m[j][n] = z.comp[j];
    }
    std::array<int, 7> rp{};
    for (int i = 0; i < n; ++i) rp[i] = i;
    OTElement prev = OTElement::constant(Rat(1));
    for (int k = 0; k < n; ++k) {
        int best = -1;
        size_t best_sz = 0;
        for (int r = k; r < n; ++r) {
            const OTElement& cand = m[rp[r]][k];
            if (cand.is_zero()) continue;
            if (best < 0 || cand.num().size() < best_sz) {
                best = r;
                best_sz = cand.num().size();
            }
        }
        if (best < 0) throw std::domain_error("decompose_in_frame: singular frame");
        std::swap(rp[k], rp[best]);
        const OTElement piv = m[rp[k]][k];
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c <= n; ++c) {
                OTElement num = m[rp[r]][c] * piv - m[rp[r]][k] * m[rp[k]][c];
                auto q = ot_divide_exact(num, prev);
                if (!q) throw std::logic_error("decompose_in_frame: fraction-free division failed");
                m[rp[r]][c] = *q;
            }
            m[rp[r]][k] = OTElement();
        }
        prev = piv;
    }
    std::vector<OTElement> x(n);
    for (int i = n - 1; i >= 0; --i) {
        OTElement acc = m[rp[i]][n];
        for (int j = i + 1; j < n; ++j) acc = acc - m[rp[i]][j] * x[j];
        auto q = ot_divide_exact(acc, m[rp[i]][i]);
        if (!q) throw std::domain_error("decompose_in_frame: solution not in the coordinate ring");
        x[i] = *q;
    }
    return x;
}

OTElement frame_determinant(const std::array<VectorFieldOT, 7>& frame) {
    const int n = 7;
    std::array<std::array<OTElement, 7>, 7> m;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) m[j][i] = frame[i].comp[j];
    OTElement prev = OTElement::constant(Rat(1));
    Rat sign(1);
    for (int k = 0; k < n - 1; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r)
            if (!m[r][k].is_zero()) { piv = r; break; }
        if (piv < 0) return OTElement();
        if (piv != k) { std::swap(m[piv], m[k]); sign = -sign; }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                OTElement num = m[r][c] * m[k][k] - m[r][k] * m[k][c];
                auto q = ot_divide_exact(num, prev);
                if (!q) throw std::logic_error("frame_determinant: division failed");
                m[r][c] = *q;
            }
            m[r][k] = OTElement();
        }
        prev = m[k][k];
    }
    return m[n - 1][n - 1] * sign;
}

OTMat pairing_residual(const OTMat& a) {
    RatMat phi = build_phi(1);
    OTMat phiOT = OTMat::zero();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (phi.at(i, j) != 0) phiOT.e[i][j] = OTElement::constant(phi.at(i, j));
    return a * phiOT + phiOT * a.transpose();
}

static OTMat apply_field_to_mat(const VectorFieldOT& x, const OTMat& a) {
    OTMat r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.e[i][j] = x.apply(a.e[i][j]);
    return r;
}

OTMat flatness_residual(int i, int j, int sign, YukawaVariant v,
                        const std::array<VectorFieldOT, 7>& frame) {
    OTMat ax = gm_matrix(i, v);
    OTMat ay = gm_matrix(j, v);
    VectorFieldOT br = vf_bracket(frame[i], frame[j]);
    OTMat abr = OTMat::zero();
    if (!br.is_zero()) {
        auto coeffs = decompose_in_frame(br, frame);
        for (int k = 0; k < 7; ++k) {
            if (coeffs[k].is_zero()) continue;
            abr = abr + gm_matrix(k, v).scale(coeffs[k]);
        }
    }
    OTMat comm = OTMat::bracket(ax, ay).scale(Rat(sign));
    return apply_field_to_mat(frame[i], ay) - apply_field_to_mat(frame[j], ax) + comm - abr;
}

int calibrate_flatness_sign(YukawaVariant v, const std::array<VectorFieldOT, 7>& frame) {
    for (int s : {-1, +1})
        if (flatness_residual(F_G0, F_T, s, v, frame).is_zero()) return s;
    throw std::domain_error("flatness sign calibration failed on (R_g0, R_t)");
}

std::array<OTElement, 7> table_bracket(int i, int j, YukawaVariant v) {
    std::array<OTElement, 7> c;
    auto one = OTElement::constant(Rat(1));
    OTElement Y = yukawa_ot(v);
    auto set = [&](int k, const OTElement& val) { c[k] = val; };
    auto at = [&](int a, int b, int k, const OTElement& val) {
        if (i == a && j == b) set(k, val);
        if (i == b && j == a) set(k, -val);
    };
    // antisymmetric table, h = 1 specialization
    at(F_G0, F_T1, F_T1, -one);
    at(F_G0, F_T, F_T, one * Rat(-2));
    at(F_G0, F_K1, F_K1, -one);
    at(F_G0, F_R1, F_R1, one);
    at(F_G11, F_T11, F_T11, one * Rat(-2));
    at(F_G11, F_T1, F_T1, -one);
    at(F_G11, F_K1, F_K1, one);
    at(F_G11, F_R1, F_R1, -one);
    at(F_T11, F_K1, F_T1, one);
    if (i == F_T11 && j == F_R1) set(F_G11, -Y);
    if (i == F_R1 && j == F_T11) set(F_G11, Y);
    at(F_T1, F_K1, F_T, one * Rat(2));
    if (i == F_T1 && j == F_R1) { set(F_T11, one * Rat(2)); set(F_K1, -Y); }
    if (i == F_R1 && j == F_T1) { set(F_T11, one * Rat(-2)); set(F_K1, Y); }
    at(F_T, F_R1, F_T1, one);
    if (i == F_K1 && j == F_R1) { set(F_G0, -one); set(F_G11, one); }
    if (i == F_R1 && j == F_K1) { set(F_G0, one); set(F_G11, -one); }
    return c;
}

std::vector<TableEntryResult> verify_bracket_table(YukawaVariant v) {
    auto frame = canonical_fields();
    std::vector<TableEntryResult> out;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            TableEntryResult r;
            r.i = i;
            r.j = j;
            VectorFieldOT br = vf_bracket(frame[i], frame[j]);
            auto expected = table_bracket(i, j, v);
            VectorFieldOT rec;
            rec.label = "table";
            for (int k = 0; k < 7; ++k) {
                if (expected[k].is_zero()) continue;
                for (int m = 0; m < 7; ++m) rec.comp[m] = rec.comp[m] + expected[k] * frame[k].comp[m];
            }
            VectorFieldOT diff = br - rec;
            r.pass = diff.is_zero();
            if (!r.pass) {
                std::ostringstream os;
                os << "[" << frame[i].label << "," << frame[j].label << "] mismatch; residual = ";
                auto res = decompose_in_frame(diff, frame);
                bool first = true;
                for (int k = 0; k < 7; ++k) {
                    if (res[k].is_zero()) continue;
                    if (!first) os << " + ";
                    os << "(" << res[k].str() << ") " << frame[k].label;
                    first = false;
                }
                r.detail = os.str();
            }
            out.push_back(std::move(r));
        }
    return out;
}

FormatReport gm_format_report() {
    FormatReport rep;
    OTMat a1 = gm_computed(F_R1);
    OTMat fmt = OTMat::zero();
    fmt.e[0][1] = OTElement::constant(Rat(1));
    fmt.e[1][2] = yukawa_computed();
    fmt.e[2][3] = OTElement::constant(Rat(1));
    rep.r1_format_matches = (a1 == fmt);
    rep.yukawa_is_disc = (yukawa_computed() == yukawa_ot(YukawaVariant::Disc));
    rep.yukawa_is_printed = (yukawa_computed() == yukawa_ot(YukawaVariant::Printed));

    auto basis = canonical_basis(1);
    static const std::map<int, std::string> names = {
        {F_G0, "g0"}, {F_G11, "g[1][1]"}, {F_T11, "t_ab[1][1]"},
        {F_T1, "t_a[1]"}, {F_T, "t"}, {F_K1, "k_a[1]"}};
    for (const auto& [idx, nm] : names) {
        const RatMat* g = nullptr;
        for (const auto& b : basis)
            if (b.name == nm) g = &b.mat;
        OTMat computed = gm_computed(idx);
        auto matches = [&](const RatMat& cand) {
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    OTElement want = cand.at(i, j) == 0 ? OTElement() : OTElement::constant(cand.at(i, j));
                    if (!(computed.e[i][j] == want)) return false;
                }
            return true;
        };
        // candidate conventions: g^T, -g^T, D g D, -D g D with D = diag(-1,1,1,1)
        RatMat gt = g->transpose();
        RatMat D(4, 4);
        D.at(0, 0) = -1; D.at(1, 1) = 1; D.at(2, 2) = 1; D.at(3, 3) = 1;
        RatMat dgd = D * (*g) * D;
        std::string rel;
        if (matches(*g)) rel = "identity";
        else if (matches(gt)) rel = "transpose";
        else if (matches(gt * Rat(-1))) rel = "-transpose";
        else if (matches(dgd)) rel = "D-conjugate";
        else if (matches(dgd * Rat(-1))) rel = "-D-conjugate";
        else {
            rel = "UNRELATED";
            rep.sector_consistent = false;
        }
        rep.sector_map.push_back(nm + ": " + rel);
    }
    return rep;
}

KernelReport invariant_subring_kernel(int max_e0) {
    KernelReport rep;
    auto frame = canonical_fields();
    const std::array<int, 5> idx = {F_G11, F_T11, F_T1, F_T, F_K1};
    auto clear_mult = [&](int f) -> OTElement {
        switch (f) {
            case F_T11:
            case F_T1: return OTElement::var(5);
            case F_K1: return OTElement(wp_disc());
            default: return OTElement::constant(Rat(1));
        }
    };
    for (int e0 = 0; e0 <= max_e0; ++e0) {
        for (int e1 = 0; 2 * e1 <= e0; ++e1) {
            auto monos = enumerate_monomials(e0, e1);
            if (monos.empty()) continue;
            rep.monomials_checked += static_cast<int>(monos.size());
            std::vector<std::map<int, Rat>> cols(monos.size());
            int nrows = 0;
            for (int fsel = 0; fsel < 5; ++fsel) {
                int f = idx[fsel];
                OTElement mult = clear_mult(f);
                std::map<Monomial7, int, MonoCmp<7, QuinticWeights>> local_index;
                std::vector<std::map<int, Rat>> local_cols(monos.size());
                for (size_t c = 0; c < monos.size(); ++c) {
                    OTElement img = frame[f].apply(OTElement(WeightedPoly::term(monos[c], Rat(1)))) * mult;
                    if (img.is_zero()) continue;
                    if (!img.is_polynomial())
                        throw std::logic_error("invariant_subring_kernel: residual denominator");
                    for (const auto& [m, coef] : img.num().terms()) {
                        auto [it, fresh] = local_index.emplace(m, static_cast<int>(local_index.size()));
                        local_cols[c][it->second] = coef;
                    }
                }
                for (size_t c = 0; c < monos.size(); ++c)
                    for (const auto& [r, coef] : local_cols[c]) cols[c][nrows + r] = coef;
                nrows += static_cast<int>(local_index.size());
            }
            RatMat sys(std::max(nrows, 1), static_cast<int>(monos.size()));
            for (size_t c = 0; c < monos.size(); ++c)
                for (const auto& [r, coef] : cols[c]) sys.at(r, static_cast<int>(c)) = coef;
            auto null_basis = sys.nullspace();
            long expected = (e1 == 0) ? (e0 / 5 + 1) : 0;
            rep.kernel_dim += static_cast<long>(null_basis.size());
            rep.expected_dim += expected;
            if (static_cast<long>(null_basis.size()) != expected) {
                rep.pass = false;
                std::ostringstream os;
                os << "block (e0=" << e0 << ", e1=" << e1 << "): kernel dim "
                   << null_basis.size() << " expected " << expected;
                rep.failures.push_back(os.str());
                continue;
            }
            if (e1 == 0) {
                for (int b = 0; 5 * b <= e0; ++b) {
                    int a = e0 - 5 * b;
                    Monomial7 m;
                    m.e[0] = static_cast<int16_t>(a);
                    m.e[4] = static_cast<int16_t>(b);
                    OTElement mexpr{WeightedPoly::term(m, Rat(1))};
                    for (int fsel = 0; fsel < 5; ++fsel) {
                        if (!frame[idx[fsel]].apply(mexpr).is_zero()) {
                            rep.pass = false;
                            rep.failures.push_back("expected kernel monomial not annihilated");
                        }
                    }
                }
            }
        }
    }
    return rep;
}

} // namespace mq
