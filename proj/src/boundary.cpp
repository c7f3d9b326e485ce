#include "mq/boundary.hpp"
#include "mq/ratmat.hpp"
#include <sstream>

namespace mq {

BoundaryConfig::BoundaryConfig() {
    for (int k = -8; k <= 8; ++k)
        for (int s : {+1, -1}) mu_scan.push_back(rat_pow(Rat(5), k) * s);
}

Rat bernoulli(int n) {
    switch (n) {
        case 2: return rat(1, 6);
        case 4: return rat(-1, 30);
        case 6: return rat(1, 42);
        case 8: return rat(-1, 30);
        default: throw std::invalid_argument("bernoulli: index out of table");
    }
}

Rat gap_coefficient(int g) {
    Rat b = bernoulli(2 * g);
    Rat c = b / (Rat(2 * g) * Rat(2 * g - 2));
    if (g % 2 == 0) c = -c;
    return c; // (-1)^(g-1) B_2g / (2g(2g-2))
}

Rat constant_map_value(int g, const Rat& chi_a) {
    Rat b1 = bernoulli(2 * g);
    if (b1 < 0) b1 = -b1;
    Rat b2 = bernoulli(2 * g - 2);
    if (b2 < 0) b2 = -b2;
    Rat fact(1);
    for (int i = 2; i <= 2 * g - 2; ++i) fact *= i;
    Rat v = chi_a / Rat(2) * b1 * b2 / (Rat(2 * g) * Rat(2 * g - 2) * fact);
    if (g % 2 == 1) v = -v;
    return v;
}

FixResult fix_ambiguity(GenusAmplitude& amp, const TCoords& tc, const ConifoldCoords& cc,
                        const std::vector<Rat>& n0, const BoundaryConfig& cfg,
                        int max_degree, const std::vector<Rat>* n2, const Rat* mu_fixed) {
    const int g = amp.g;
    FixResult res;
    res.parameters_before = static_cast<int>(amp.kernel.size());
    if (!amp.q_params.empty())
        throw std::domain_error("fix_ambiguity: lower-genus parameters not resolved");

    // conifold expansions of the particular part and each kernel direction
    auto conifold_of = [&](const WeightedPoly& q) {
        OTElement f(q, amp.denom_t5(), 0, amp.denom_disc());
        LaurentQ fx = f.eval_laurent(cc.t);
        return expand_in_td(fx, cc);
    };
    LaurentQ base_td = conifold_of(amp.q_particular);
    std::vector<LaurentQ> ker_td;
    for (const auto& k : amp.kernel) ker_td.push_back(conifold_of(k));

    // MUM constant terms
    OTElement fbase(amp.q_particular, amp.denom_t5(), 0, amp.denom_disc());
    Rat base_q0 = fbase.eval_series(tc.t)[0];
    std::vector<Rat> ker_q0;
    for (const auto& k : amp.kernel)
        ker_q0.push_back(OTElement(k, amp.denom_t5(), 0, amp.denom_disc()).eval_series(tc.t)[0]);

    // condition rows: leading gap coefficient, vanishing subleading, MUM
    const int lead = 2 - 2 * g;
    const int n_param = static_cast<int>(amp.kernel.size());

    std::vector<Rat> candidates = cfg.mu_scan;
    if (mu_fixed) candidates = {*mu_fixed};
    for (const Rat& mu : candidates) {
        std::vector<std::vector<Rat>> rows;
        std::vector<Rat> rhs;
        // leading
        {
            std::vector<Rat> r;
            for (auto& k : ker_td) r.push_back(k.coeff(lead));
            rows.push_back(r);
            rhs.push_back(rat_pow(cfg.triple * mu, g - 1) * gap_coefficient(g) - base_td.coeff(lead));
        }
        // subleading gap
        for (int ord = lead + 1; ord <= -1; ++ord) {
            std::vector<Rat> r;
            for (auto& k : ker_td) r.push_back(k.coeff(ord));
            rows.push_back(r);
            rhs.push_back(-base_td.coeff(ord));
        }
        // MUM constant map
        {
            rows.push_back(ker_q0);
            rhs.push_back(rat_pow(mu, g - 1) * constant_map_value(g, cfg.chi_a) - base_q0);
        }
        if (static_cast<int>(rows.size()) != n_param) {
            std::ostringstream os;
            os << "boundary system has " << rows.size() << " conditions for " << n_param
               << " parameters";
            res.notes.push_back(os.str());
        }
        RatMat M(static_cast<int>(rows.size()), n_param);
        for (size_t i = 0; i < rows.size(); ++i)
            for (int j = 0; j < n_param; ++j) M.at(static_cast<int>(i), j) = rows[i][j];
        auto sol = M.solve(rhs);
        if (!sol) continue;

        // underdetermined boundary system: the residual freedom persists and
        // is reported, matching floor((2g-2)/5) undetermined coefficients
        long freedom = static_cast<long>(M.nullspace().size());
        if (freedom > 0) {
            res.fixed = true;
            res.mu = mu;
            res.values = *sol;
            res.parameters_after = static_cast<int>(freedom);
            std::ostringstream os;
            os << freedom << " coefficient(s) remain undetermined by the boundary conditions";
            res.notes.push_back(os.str());
            amp.fixed = *sol;
            amp.resolved = false;
            return res;
        }

        // integrality arbitration: the A-model amplitude is F^alg / mu^(g-1)
        OTElement fg = amp.as_ot(*sol);
        QSeries fq = fg.eval_series(tc.t);
        QSeries inst = fq * (Rat(1) / rat_pow(mu, g - 1));
        inst.set(0, Rat(0));
        std::vector<Rat> bps;
        try {
            if (g == 2) bps = gw_genus2(inst, n0, max_degree);
            else if (g == 3 && n2) bps = gw_genus3(inst, n0, *n2, max_degree);
            else continue; // integrality arbitration needs the lower tables
        } catch (const std::domain_error&) {
            continue;
        }
        // degree 1 and 2 curves are rational: those invariants must vanish
        if (bps.size() > 2 && (bps[1] != 0 || bps[2] != 0)) continue;
        res.fixed = true;
        res.mu = mu;
        res.values = *sol;
        res.parameters_after = 0;
        res.bps = bps;
        // measured boundary values for the report
        LaurentQ full = base_td;
        for (size_t k = 0; k < ker_td.size(); ++k) full = full + ker_td[k] * (*sol)[k];
        res.gap_leading = full.coeff(lead);
        res.mum_constant = fq[0];
        {
            std::ostringstream os;
            os << "gap " << rat_str(res.gap_leading) << " = (triple*mu)^" << (g - 1) << " * "
               << rat_str(gap_coefficient(g)) << "; yukawa residue rho = "
               << rat_str(cc.yukawa_residue);
            res.notes.push_back(os.str());
        }
        amp.fixed = *sol;
        amp.resolved = true;
        return res;
    }
    res.notes.push_back("no normalization candidate produced integral invariants");
    return res;
}

} // namespace mq
