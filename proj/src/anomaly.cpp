#include "mq/anomaly.hpp"
#include <sstream>

namespace mq {

OTElement apply_to_f1(const VectorFieldOT& x, const LogAmplitude& f1) {
    // X(-ln(t4^a disc^b t5^c)) = -(a X(t4)/t4 + b X(disc)/disc + c X(t5)/t5)
    OTElement t4 = OTElement::var(4);
    OTElement t5 = OTElement::var(5);
    OTElement disc(wp_disc());
    auto term = [&](const OTElement& u, const Rat& expnt) {
        OTElement xu = x.apply(u);
        if (xu.is_zero()) return OTElement();
        auto q = ot_divide_exact(xu, u);
        if (!q) throw std::logic_error("apply_to_f1: log derivative not regular");
        return *q * expnt;
    };
    return -(term(t4, f1.e4) + term(disc, f1.edisc) + term(t5, f1.e5));
}

F1Report f1_checks(const LogAmplitude& f1, const Rat& chi) {
    F1Report rep;
    auto frame = canonical_fields();
    for (int k = 0; k < 7; ++k) rep.values[k] = apply_to_f1(frame[k], f1);
    rep.annihilators_vanish = rep.values[F_T11].is_zero() && rep.values[F_T1].is_zero() &&
                              rep.values[F_T].is_zero() && rep.values[F_K1].is_zero();
    auto constant_of = [](const OTElement& e) {
        if (e.is_zero()) return Rat(0);
        if (!e.is_polynomial() || e.num().size() != 1 || !(e.num().terms().begin()->first == Monomial7{}))
            throw std::logic_error("f1_checks: scaling value not constant");
        return e.num().terms().begin()->second;
    };
    rep.g0_value = constant_of(rep.values[F_G0]);
    rep.g11_value = constant_of(rep.values[F_G11]);
    rep.g0_claimed = -rat(1, 2) * (Rat(3) + chi / Rat(12));
    rep.g11_claimed = rat(-1, 2);
    return rep;
}

AffineOT AffineOT::operator+(const AffineOT& o) const {
    AffineOT r;
    r.base = base + o.base;
    r.terms = terms;
    for (const auto& [k, v] : o.terms) {
        auto it = r.terms.find(k);
        if (it == r.terms.end()) r.terms[k] = v;
        else it->second = it->second + v;
    }
    return r;
}

AffineOT AffineOT::operator*(const Rat& s) const {
    AffineOT r;
    r.base = base * s;
    for (const auto& [k, v] : terms) r.terms[k] = v * s;
    return r;
}

AffineOT AffineOT::mul(const AffineOT& o) const {
    if (!terms.empty() && !o.terms.empty())
        throw std::domain_error("AffineOT: product would be quadratic in the parameters");
    AffineOT r;
    r.base = base * o.base;
    for (const auto& [k, v] : terms) r.terms[k] = v * o.base;
    for (const auto& [k, v] : o.terms) {
        auto it = r.terms.find(k);
        if (it == r.terms.end()) r.terms[k] = base * v;
        else it->second = it->second + base * v;
    }
    return r;
}

bool AffineOT::is_zero() const {
    if (!base.is_zero()) return false;
    for (const auto& [k, v] : terms)
        if (!v.is_zero()) return false;
    return true;
}

OTElement GenusAmplitude::as_ot(const std::vector<Rat>& ambiguity) const {
    if (ambiguity.size() != kernel.size())
        throw std::invalid_argument("GenusAmplitude: ambiguity size mismatch");
    WeightedPoly q = q_particular;
    for (size_t k = 0; k < kernel.size(); ++k) q = q + kernel[k] * ambiguity[k];
    if (!q_params.empty())
        throw std::domain_error("GenusAmplitude: unresolved lower-genus parameters");
    return OTElement(q, denom_t5(), 0, denom_disc());
}

OTElement GenusAmplitude::as_ot_resolved() const {
    if (!resolved) throw std::domain_error("GenusAmplitude: ambiguity not fixed");
    return as_ot(fixed);
}

bool GenusAmplitude::support_condition() const {
    for (const auto& [m, c] : q_particular.terms()) {
        long s = 0;
        for (int i = 2; i <= 6; ++i) s += m.e[i];
        if (s < 3 * (g - 1)) return false;
    }
    return true;
}

AffineOT rhs_genus(int g, const LogAmplitude& f1, const std::vector<GenusAmplitude>& lower) {
    if (g < 2) throw std::invalid_argument("rhs_genus: genus must be >= 2");
    auto frame = canonical_fields();
    const auto& R1 = frame[F_R1];

    // R1 applied to F_h; affine in the ambiguity parameters of F_h unless
    // the amplitude has been resolved by the boundary conditions
    auto r1_of = [&](int h) -> AffineOT {
        if (h == 1) return AffineOT(apply_to_f1(R1, f1));
        const GenusAmplitude& amp = lower.at(h - 2);
        AffineOT f;
        if (amp.resolved) {
            f.base = amp.as_ot_resolved();
        } else {
            f.base = OTElement(amp.q_particular, amp.denom_t5(), 0, amp.denom_disc());
            for (size_t k = 0; k < amp.kernel.size(); ++k)
                f.terms[amp.kernel_names[k]] =
                    OTElement(amp.kernel[k], amp.denom_t5(), 0, amp.denom_disc());
            for (const auto& [nm, qp] : amp.q_params)
                f.terms[nm] = f.terms[nm] + OTElement(qp, amp.denom_t5(), 0, amp.denom_disc());
        }
        AffineOT r;
        r.base = R1.apply(f.base);
        for (const auto& [k, v] : f.terms) r.terms[k] = R1.apply(v);
        return r;
    };

    AffineOT rhs;
    for (int h = 1; h <= g - 1; ++h) {
        AffineOT prod = r1_of(h).mul(r1_of(g - h));
        rhs = rhs + prod * rat(1, 2);
    }
    // (1/2) R1 R1 F_{g-1}
    AffineOT r1f = r1_of(g - 1);
    AffineOT r1r1f;
    r1r1f.base = R1.apply(r1f.base);
    for (const auto& [k, v] : r1f.terms) r1r1f.terms[k] = R1.apply(v);
    rhs = rhs + r1r1f * rat(1, 2);
    return rhs;
}

namespace {

// index map for a monomial list
struct MonoIndex {
    std::map<Monomial7, int, MonoCmp<7, QuinticWeights>> idx;
    int intern(const Monomial7& m) {
        auto [it, fresh] = idx.emplace(m, static_cast<int>(idx.size()));
        return it->second;
    }
};

// clear the OTElement f against the expected denominator t5^a4 disc^c and
// return the polynomial numerator f * t5^a * disc^c (throws if not exact)
WeightedPoly clear_denominator(const OTElement& f, int a, int c) {
    if (f.is_zero()) return WeightedPoly();
    if (f.pow_t4() != 0) throw std::domain_error("clear_denominator: unexpected t4 pole");
    if (f.pow_t5() > a || f.pow_disc() > c)
        throw std::domain_error("clear_denominator: pole order too high");
    WeightedPoly n = f.num();
    if (a - f.pow_t5() > 0) n = n * wp_var(5, a - f.pow_t5());
    for (int i = 0; i < c - f.pow_disc(); ++i) n = n * wp_disc();
    return n;
}

} // namespace

GenusAmplitude solve_genus(int g, const AffineOT& rhs, SolveStats* stats,
                           SparseSystem::Mode mode) {
    GenusAmplitude amp;
    amp.g = g;
    const int e0 = 21 * (g - 1);
    const int e1 = 3 * (g - 1);
    auto monos = enumerate_monomials(e0, e1);
    const int n_unknown = static_cast<int>(monos.size());
    auto frame = canonical_fields();

    // scaling constraints hold identically on the graded ansatz: check on a
    // sample monomial (R_g0 eigenvalue and R_g11 annihilation)
    {
        OTElement probe(WeightedPoly::term(monos.front(), Rat(1)), amp.denom_t5(), 0,
                        amp.denom_disc());
        OTElement g0f = frame[F_G0].apply(probe) - probe * Rat(2 * g - 2);
        if (!g0f.is_zero()) throw std::logic_error("solve_genus: scaling eigenvalue violated");
        if (!frame[F_G11].apply(probe).is_zero())
            throw std::logic_error("solve_genus: secondary scaling violated");
    }

    // equation 1: -625 disc dQ/dt6 = rhs * t5^(3g-2) * disc^(2g-2), both sides
    // polynomial; equation 2: 625 N dQ/dt1 - disc(625 t6 dQ/dt2 + 625 t5 dQ/dt3) = 0
    // with N the numerator of the R_k1 d/dt1 coefficient (components carry
    // the calibrated signs; the overall sign cancels in a homogeneous system
    // and is kept for the rhs-bearing row)
    const OTElement& k1c1 = frame[F_K1].comp[1];
    WeightedPoly Npoly = k1c1.num() * Rat(625); // over disc
    if (k1c1.pow_disc() != 1 || k1c1.pow_t5() != 0)
        throw std::logic_error("solve_genus: unexpected R_k1 shape");

    MonoIndex rows1, rows2;
    std::vector<std::map<int, Rat>> col1(n_unknown), col2(n_unknown);
    for (int c = 0; c < n_unknown; ++c) {
        WeightedPoly q = WeightedPoly::term(monos[c], Rat(1));
        // eq1 rows: R_t11 comp6 = -625 disc / t5; cleared LHS = -625 disc dQ/dt6
        WeightedPoly lhs1 = wp_disc() * q.derivative(6) * Rat(-625);
        for (const auto& [m, v] : lhs1.terms()) col1[c][rows1.intern(m)] = v;
        // eq2 rows
        WeightedPoly lhs2 = Npoly * q.derivative(1) -
                            wp_disc() * (wp_var(6) * q.derivative(2) + wp_var(5) * q.derivative(3)) * Rat(625);
        for (const auto& [m, v] : lhs2.terms()) col2[c][rows2.intern(m)] = v;
    }

    // clear the affine rhs for equation 1: target polynomial per component.
    // R_t11 F = rhs  =>  -625 disc dQ/dt6 / (t5^(3g-2) disc^(2g-2)) = rhs
    std::map<std::string, WeightedPoly> rhs_cleared;
    WeightedPoly rhs_base = clear_denominator(rhs.base, 3 * g - 2, 2 * g - 2);
    for (const auto& [k, v] : rhs.terms) rhs_cleared[k] = clear_denominator(v, 3 * g - 2, 2 * g - 2);
    // the cleared rhs lives in the same graded space as eq1 rows
    for (const auto& [m, v] : rhs_base.terms()) rows1.intern(m);
    for (const auto& [k, p] : rhs_cleared)
        for (const auto& [m, v] : p.terms()) rows1.intern(m);

    const int n1 = static_cast<int>(rows1.idx.size());
    const int n2 = static_cast<int>(rows2.idx.size());
    SparseSystem sys(n1 + n2, n_unknown);
    for (int c = 0; c < n_unknown; ++c) {
        for (const auto& [r, v] : col1[c]) sys.add(r, c, v);
        for (const auto& [r, v] : col2[c]) sys.add(n1 + r, c, v);
    }
    if (stats) {
        stats->unknowns = n_unknown;
        stats->equations = n1 + n2;
    }

    // solve base system
    for (const auto& [m, v] : rhs_base.terms()) sys.set_rhs(rows1.idx.at(m), v);
    auto sol = sys.solve(mode);
    if (!sol.consistent) {
        std::ostringstream os;
        os << "solve_genus: inconsistent system at genus " << g << " (row " << sol.offending_row
           << ", residual " << rat_str(sol.offending_residual) << ")";
        throw std::domain_error(os.str());
    }
    if (!sys.verify(sol.particular)) throw std::logic_error("solve_genus: residual check failed");
    for (int c = 0; c < n_unknown; ++c)
        if (sol.particular[c] != 0) amp.q_particular.add_term(monos[c], sol.particular[c]);

    // parameter directions share the matrix
    for (const auto& [k, p] : rhs_cleared) {
        SparseSystem s2(n1 + n2, n_unknown);
        for (int c = 0; c < n_unknown; ++c) {
            for (const auto& [r, v] : col1[c]) s2.add(r, c, v);
            for (const auto& [r, v] : col2[c]) s2.add(n1 + r, c, v);
        }
        for (const auto& [m, v] : p.terms()) s2.set_rhs(rows1.idx.at(m), v);
        auto ps = s2.solve(mode);
        if (!ps.consistent) throw std::domain_error("solve_genus: parameter direction inconsistent");
        WeightedPoly qp;
        for (int c = 0; c < n_unknown; ++c)
            if (ps.particular[c] != 0) qp.add_term(monos[c], ps.particular[c]);
        amp.q_params[k] = qp;
    }

    // kernel: must coincide with span{t0^a t4^b t5^(3g-3) : a + 5b = 12(g-1)}
    const int target = 12 * (g - 1);
    std::vector<WeightedPoly> expected;
    for (int b = 0; 5 * b <= target; ++b) {
        Monomial7 m;
        m.e[0] = static_cast<int16_t>(target - 5 * b);
        m.e[4] = static_cast<int16_t>(b);
        m.e[5] = static_cast<int16_t>(3 * (g - 1));
        expected.push_back(WeightedPoly::term(m, Rat(1)));
    }
    bool kernel_ok = (sol.kernel.size() == expected.size());
    if (kernel_ok) {
        // every expected monomial is killed by both equations
        for (const auto& p : expected) {
            WeightedPoly l1 = wp_disc() * p.derivative(6);
            WeightedPoly l2 = Npoly * p.derivative(1) -
                              wp_disc() * (wp_var(6) * p.derivative(2) + wp_var(5) * p.derivative(3));
            if (!l1.is_zero() || !l2.is_zero()) kernel_ok = false;
        }
    }
    if (stats) {
        stats->kernel_dim = static_cast<long>(sol.kernel.size());
        stats->kernel_matches_prediction = kernel_ok;
    }
    if (!kernel_ok) throw std::domain_error("solve_genus: kernel does not match the prediction");
    amp.kernel = expected;
    for (size_t k = 0; k < expected.size(); ++k) {
        std::ostringstream os;
        os << "a" << g << "_" << k;
        amp.kernel_names.push_back(os.str());
    }
    return amp;
}

MasterReport verify_master(const LogAmplitude& f1, const GenusAmplitude& f2,
                           const std::vector<Rat>& ambiguity, const Rat& chi) {
    MasterReport rep;
    auto frame = canonical_fields();
    OTElement F2 = f2.as_ot(ambiguity);
    auto add = [&](const std::string& name, int order, const OTElement& residual,
                   bool documented = false) {
        MasterReport::Entry e;
        e.name = name;
        e.lambda_order = order;
        e.zero = residual.is_zero();
        if (!e.zero) e.residual = residual.str();
        e.documented_discrepancy = documented;
        rep.entries.push_back(std::move(e));
    };
    std::array<OTElement, 7> xf1, xf2;
    for (int k = 0; k < 7; ++k) {
        xf1[k] = apply_to_f1(frame[k], f1);
        xf2[k] = frame[k].apply(F2);
    }
    OTElement r1f1 = xf1[F_R1];
    OTElement r1r1f1 = frame[F_R1].apply(r1f1);
    Rat c = chi / Rat(24);

    // R_g0 Z = (-3/2 - chi/24 + theta_lambda) Z
    add("R_g0", 0, xf1[F_G0] + OTElement::constant(rat(3, 2) + c), true);
    add("R_g0", 2, xf2[F_G0] - F2 * Rat(2));
    // R_g11 Z = -(1/2) Z
    add("R_g11", 0, xf1[F_G11] + OTElement::constant(rat(1, 2)), true);
    add("R_g11", 2, xf2[F_G11]);
    // R_t11 Z = (lambda^2/2) R1 R1 Z
    add("R_t11", 0, xf1[F_T11]);
    add("R_t11", 2, xf2[F_T11] - (r1r1f1 + r1f1 * r1f1) * rat(1, 2));
    // R_k1 Z = 0
    add("R_k1", 0, xf1[F_K1]);
    add("R_k1", 2, xf2[F_K1]);
    // R_t1 Z = lambda^2 (-chi/24 + theta_lambda) R1 Z
    add("R_t1", 0, xf1[F_T1]);
    add("R_t1", 2, xf2[F_T1] + r1f1 * c, true);
    // R_t Z = (lambda^2/2)(-chi/24 + theta_lambda)(-chi/24 - 1 + theta_lambda) Z
    add("R_t", 0, xf1[F_T]);
    add("R_t", 2, xf2[F_T] - OTElement::constant(c * (c + 1) * rat(1, 2)), true);
    return rep;
}

} // namespace mq
