#include <CLI11.hpp>

#include "mq/anomaly.hpp"
#include "mq/boundary.hpp"
#include "mq/config.hpp"
#include "mq/mirrormap.hpp"
#include "mq/serialize.hpp"
#include "mq/specialring.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

using namespace mq;

namespace {

struct Line {
    bool pass;
    std::string name;
    std::string residual;
};

struct Report {
    std::vector<Line> lines;
    Json extra;
    bool all_pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
};

void emit(const Report& rep, const Manifest& man, const std::string& format) {
    if (format == "json") {
        Json j;
        j["manifest"] = man.to_json();
        Json lines = Json::array();
        for (const auto& l : rep.lines) {
            Json e;
            e["pass"] = l.pass;
            e["name"] = l.name;
            if (!l.residual.empty()) e["residual"] = l.residual;
            lines.push_back(e);
        }
        j["checks"] = lines;
        if (!rep.extra.is_null()) j["results"] = rep.extra;
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (const auto& l : rep.lines) {
        std::cout << (l.pass ? "PASS " : "FAIL ") << l.name;
        if (!l.pass && !l.residual.empty()) std::cout << "  [" << l.residual << "]";
        std::cout << "\n";
    }
    std::cout << "manifest: command=" << man.command << " order=" << man.order
              << " chi_a=" << rat_str(man.chi_a) << " yukawa=" << man.yukawa_variant
              << " kappa=-25 f1-normalization=5x-printed mu=-5^6\n";
}

YukawaVariant variant_of(const std::string& s) {
    return s == "printed" ? YukawaVariant::Printed : YukawaVariant::Disc;
}

int run_verify(const std::string& module, int h, const std::string& yv,
               const std::string& format, bool timings) {
    Report rep;
    auto t0 = std::chrono::steady_clock::now();
    YukawaVariant v = variant_of(yv);

    if (module == "all" || module == "liealg") {
        for (int hh : (h > 0 ? std::vector<int>{h} : std::vector<int>{1, 2, 3})) {
            auto basis = canonical_basis(hh);
            bool dim_ok = static_cast<long>(basis.size()) == lie_dim(hh);
            rep.lines.push_back({dim_ok, "liealg h=" + std::to_string(hh) + " basis count " +
                                             std::to_string(basis.size()),
                                 ""});
            bool memb = true;
            for (const auto& b : basis) memb = memb && is_in_lie(b.mat, hh);
            rep.lines.push_back({memb, "liealg h=" + std::to_string(hh) + " membership", ""});
            auto cl = closure_report(hh);
            rep.lines.push_back({cl.closed, "liealg h=" + std::to_string(hh) + " closure (" +
                                                std::to_string(cl.pairs_checked) + " brackets)",
                                 cl.failures.empty() ? "" : cl.failures.front()});
        }
    }
    if (module == "all" || module == "fields") {
        auto frame = canonical_fields();
        auto fmt = gm_format_report();
        rep.lines.push_back({fmt.r1_format_matches, "gauss-manin matrix of R_1 has the expected nilpotent shape", ""});
        rep.lines.push_back(
            {fmt.yukawa_is_disc, "computed Yukawa equals 5^8 (t4-t0^5)^2/t5^3", yukawa_computed().str()});
        rep.lines.push_back({fmt.sector_consistent, "constant sector matches the canonical basis", ""});
        auto table = verify_bracket_table(v);
        int pass = 0;
        std::string first_fail;
        for (const auto& t : table) {
            if (t.pass) ++pass;
            else if (first_fail.empty()) first_fail = t.detail;
        }
        rep.lines.push_back({pass == 49,
                             "bracket table " + std::to_string(pass) + "/49 (variant " + yv + ")",
                             first_fail});
        int s = calibrate_flatness_sign(YukawaVariant::Disc, frame);
        int flat_fail = 0;
        for (int i = 0; i < 7; ++i)
            for (int j = i; j < 7; ++j)
                if (!flatness_residual(i, j, s, v, frame).is_zero()) ++flat_fail;
        rep.lines.push_back({flat_fail == 0,
                             "flatness residuals (21 pairs, s=" + std::to_string(s) + ", variant " +
                                 yv + ")",
                             flat_fail ? std::to_string(flat_fail) + " nonzero" : ""});
        int pair_fail = 0;
        for (int k = 0; k < 7; ++k)
            if (!pairing_residual(gm_matrix(k, v)).is_zero()) ++pair_fail;
        rep.lines.push_back({pair_fail == 0, "pairing residuals (7 matrices, variant " + yv + ")",
                             pair_fail ? std::to_string(pair_fail) + " nonzero" : ""});
        auto kern = invariant_subring_kernel(15);
        rep.lines.push_back({kern.pass,
                             "invariant-subring kernel, e0 <= 15 (" +
                                 std::to_string(kern.monomials_checked) + " monomials, dim " +
                                 std::to_string(kern.kernel_dim) + ")",
                             kern.failures.empty() ? "" : kern.failures.front()});
        OTElement det = frame_determinant(frame);
        rep.lines.push_back({!det.is_zero(), "frame determinant is a unit", det.str()});
    }
    if (module == "all" || module == "special-ring") {
        auto combos = canonical_combos();
        bool all_const = true, all_match = true;
        for (const auto& c : combos) {
            all_const = all_const && c.constant;
            all_match = all_match && c.matches_basis;
        }
        rep.lines.push_back({all_const && all_match,
                             "six generator combinations reproduce the canonical basis", ""});
        rep.lines.push_back({check_pairing_B().is_zero(), "B Phi B^T = Phi identically", ""});
        auto mism = m_matrix_display_check();
        rep.lines.push_back({mism.size() == 6,
                             "M-matrix displays (T_0 read as T; 6 known g-power deviations)",
                             mism.empty() ? "" : mism.front()});
        Json mj = Json::array();
        for (const auto& m : mism) mj.push_back(m);
        rep.extra["m_matrix_deviations"] = mj;
    }
    if (module == "all" || module == "f1") {
        auto f1rep = f1_checks(LogAmplitude{}, Rat(200));
        rep.lines.push_back({f1rep.annihilators_vanish, "R_t11, R_t1, R_t, R_k1 annihilate F_1", ""});
        rep.lines.push_back({true,
                             "scaling values of printed F_1: R_g0 -> " + rat_str(f1rep.g0_value) +
                                 " (claimed " + rat_str(f1rep.g0_claimed) + "), R_g11 -> " +
                                 rat_str(f1rep.g11_value) + " (claimed " + rat_str(f1rep.g11_claimed) +
                                 "); recursion uses 5x the printed amplitude",
                             ""});
    }

    Manifest man;
    man.command = "verify";
    man.yukawa_variant = yv;
    if (timings) {
        auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        rep.extra["elapsed_ms"] = dt;
    }
    emit(rep, man, format);
    return rep.all_pass() ? 0 : 1;
}

int run_solve(int genus, bool fix, const Rat& chi, int order, bool modular,
              const std::string& format, bool timings) {
    auto t0 = std::chrono::steady_clock::now();
    order = std::max(order, 10); // boundary data needs invariants to degree 5
    Report rep;
    LogAmplitude f1 = arbitrated_f1();
    auto mode = modular ? SparseSystem::Mode::Modular : SparseSystem::Mode::Rational;

    std::vector<GenusAmplitude> lower;
    std::vector<std::vector<Rat>> bps_tables; // per fixed genus, starting at 2
    GenusAmplitude target;
    SolveStats stats;
    for (int g = 2; g <= genus; ++g) {
        AffineOT rhs = rhs_genus(g, f1, lower);
        SolveStats st;
        GenusAmplitude amp = solve_genus(g, rhs, &st, mode);
        if (g < genus) {
            // lower amplitudes must be resolved before feeding the next level
            MirrorData md = build_mirror_data(order);
            TCoords tc = holomorphic_tcoords(md);
            ConifoldCoords cc = conifold_tcoords(order + 4);
            auto n0 = gw_genus0(md.yukawa_w, 5);
            BoundaryConfig bc;
            bc.chi_a = chi;
            const std::vector<Rat>* n2p =
                (g == 3 && !bps_tables.empty()) ? &bps_tables[0] : nullptr;
            auto res = fix_ambiguity(amp, tc, cc, n0, bc, 5, n2p);
            if (!res.fixed) {
                std::cerr << "cannot resolve genus " << g << " ambiguity\n";
                return 1;
            }
            bps_tables.push_back(res.bps);
        }
        lower.push_back(amp);
        target = lower.back();
        stats = st;
    }
    rep.lines.push_back({true,
                         "genus " + std::to_string(genus) + " system: " +
                             std::to_string(stats.unknowns) + " unknowns, " +
                             std::to_string(stats.equations) + " equations",
                         ""});
    rep.lines.push_back({stats.kernel_matches_prediction,
                         "kernel dimension " + std::to_string(stats.kernel_dim) +
                             " matches floor(12(g-1)/5)+1",
                         ""});
    rep.lines.push_back({target.support_condition(), "numerator support condition i2+..+i6 >= 3g-3", ""});
    rep.extra["ambiguity_parameters"] = static_cast<int>(target.kernel.size());
    {
        Json kb = Json::array();
        for (const auto& k : target.kernel) kb.push_back(wpoly_str(k));
        rep.extra["kernel_basis"] = kb;
        rep.extra["system"] = {{"unknowns", stats.unknowns}, {"equations", stats.equations}};
    }

    if (fix) {
        MirrorData md = build_mirror_data(order);
        TCoords tc = holomorphic_tcoords(md);
        ConifoldCoords cc = conifold_tcoords(order + 6);
        auto n0 = gw_genus0(md.yukawa_w, 5);
        BoundaryConfig bc;
        bc.chi_a = chi;
        const std::vector<Rat>* n2p =
            (genus == 3 && !bps_tables.empty()) ? &bps_tables[0] : nullptr;
        Rat mu_pinned(-15625);
        const Rat* mu_fixed = (genus >= 4) ? &mu_pinned : nullptr;
        auto res = fix_ambiguity(target, tc, cc, n0, bc, 5, n2p, mu_fixed);
        rep.lines.push_back({res.fixed, "gap + constant-map fixing", ""});
        for (const auto& nmsg : res.notes) rep.lines.push_back({true, nmsg, ""});
        if (res.fixed) {
            rep.extra["mu"] = rat_str(res.mu);
            rep.extra["parameters_before"] = res.parameters_before;
            rep.extra["parameters_after"] = res.parameters_after;
            Json amb = Json::array();
            for (const auto& v : res.values) amb.push_back(rat_str(v));
            rep.extra["ambiguity_values"] = amb;
            Json bps = Json::array();
            for (size_t d = 1; d < res.bps.size(); ++d) bps.push_back(rat_str(res.bps[d]));
            rep.extra["bps_genus_" + std::to_string(genus)] = bps;
            rep.extra["gap_leading"] = rat_str(res.gap_leading);
            rep.extra["mum_constant"] = rat_str(res.mum_constant);
            if (res.parameters_after == 0)
                std::cout << "Q_" << genus << " (resolved) = "
                          << wpoly_str(target.as_ot_resolved().num()) << "\n";
        }
    } else {
        std::cout << "Q_" << genus << " particular = " << wpoly_str(target.q_particular) << "\n";
        for (size_t k = 0; k < target.kernel.size(); ++k)
            std::cout << "ambiguity " << target.kernel_names[k] << " * "
                      << wpoly_str(target.kernel[k]) << "\n";
    }

    Manifest man;
    man.command = "solve-fg";
    man.genus = genus;
    man.order = order;
    man.chi_a = chi;
    if (timings) {
        auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        rep.extra["elapsed_ms"] = dt;
    }
    emit(rep, man, format);
    return rep.all_pass() ? 0 : 1;
}

int run_qexpand(const std::string& object, int order, int genus, const std::string& format) {
    MirrorData md = build_mirror_data(order);
    Report rep;
    Manifest man;
    man.command = "q-expand";
    man.order = order;
    if (object == "yukawa") {
        TCoords tc = holomorphic_tcoords(md);
        QSeries y = yukawa_q(tc);
        rep.lines.push_back({y == md.yukawa_w, "algebraic route equals the Wronskian route", ""});
        rep.extra["yukawa"] = series_json(y);
        if (format == "text") std::cout << "Y(q) = " << y.str() << "\n";
    } else if (object == "t") {
        TCoords tc = holomorphic_tcoords(md);
        auto flow = integrate_flow(tc, order);
        bool agree = true;
        for (int i = 0; i < 7; ++i) agree = agree && (flow[i] == tc.t[i]);
        rep.lines.push_back({agree, "period matching equals the flow integration", ""});
        for (int i = 0; i < 7; ++i) {
            rep.extra["t" + std::to_string(i)] = series_json(tc.t[i]);
            if (format == "text") std::cout << "t" << i << "(q) = " << tc.t[i].str() << "\n";
        }
        rep.extra["kappa"] = rat_str(tc.kappa);
    } else if (object == "F1") {
        TCoords tc = holomorphic_tcoords(md);
        QSeries g1 = theta_f1_alg(tc);
        rep.extra["theta_F1"] = series_json(g1);
        if (format == "text") std::cout << "theta_q F1(q) = " << g1.str() << "\n";
        rep.lines.push_back({true, "theta_q F1 expansion", ""});
    } else if (object == "Fg") {
        LogAmplitude f1 = arbitrated_f1();
        GenusAmplitude amp = solve_genus(genus, rhs_genus(genus, f1, {}));
        TCoords tc = holomorphic_tcoords(md);
        ConifoldCoords cc = conifold_tcoords(order + 4);
        auto n0 = gw_genus0(md.yukawa_w, 5);
        BoundaryConfig bc;
        auto res = fix_ambiguity(amp, tc, cc, n0, bc, 5);
        rep.lines.push_back({res.fixed, "ambiguity fixed", ""});
        if (res.fixed && res.parameters_after == 0) {
            QSeries fq = amp.as_ot_resolved().eval_series(tc.t);
            rep.extra["Fg"] = series_json(fq);
            if (format == "text") std::cout << "F" << genus << "(q) = " << fq.str() << "\n";
        }
    } else {
        std::cerr << "unknown object '" << object << "'\n";
        return 2;
    }
    if (format == "json") emit(rep, man, format);
    return rep.all_pass() ? 0 : 1;
}

int run_gw(int genus, int maxdeg, const std::string& format) {
    int order = std::max(12, maxdeg + 4);
    MirrorData md = build_mirror_data(order);
    TCoords tc = holomorphic_tcoords(md);
    auto n0 = gw_genus0(md.yukawa_w, maxdeg);
    Report rep;
    BPSTable bps;
    if (genus == 0) {
        for (int d = 1; d <= maxdeg; ++d) bps.n[{0, d}] = n0[d];
        rep.lines.push_back({bps.all_integral(0, maxdeg), "genus-0 invariants integral", ""});
    } else if (genus == 1) {
        auto g1 = genus1_invariants(tc, n0, maxdeg);
        for (int d = 1; d <= maxdeg; ++d) bps.n[{1, d}] = g1.invariants[d];
        rep.lines.push_back({g1.invariants[1] == 0 && g1.invariants[2] == 0,
                             "degree 1, 2 elliptic invariants vanish", ""});
        rep.extra["nu"] = rat_str(g1.nu);
    } else if (genus == 2 || genus == 3) {
        LogAmplitude f1 = arbitrated_f1();
        GenusAmplitude a2 = solve_genus(2, rhs_genus(2, f1, {}));
        ConifoldCoords cc = conifold_tcoords(order + 6);
        BoundaryConfig bc;
        auto r2 = fix_ambiguity(a2, tc, cc, n0, bc, maxdeg);
        rep.lines.push_back({r2.fixed, "genus-2 ambiguity fixed by gap + constant map", ""});
        if (!r2.fixed) {
            emit(rep, Manifest{}, format);
            return 1;
        }
        if (genus == 2) {
            for (int d = 1; d <= maxdeg; ++d) bps.n[{2, d}] = r2.bps[d];
        } else {
            GenusAmplitude a3 = solve_genus(3, rhs_genus(3, f1, {a2}));
            auto r3 = fix_ambiguity(a3, tc, cc, n0, bc, maxdeg, &r2.bps);
            rep.lines.push_back({r3.fixed, "genus-3 ambiguity fixed by gap + constant map", ""});
            if (!r3.fixed) {
                emit(rep, Manifest{}, format);
                return 1;
            }
            for (int d = 1; d <= maxdeg; ++d) bps.n[{3, d}] = r3.bps[d];
        }
    } else {
        std::cerr << "genus must be 0, 1, 2 or 3\n";
        return 2;
    }
    Json table = Json::array();
    for (const auto& [key, v] : bps.n) {
        table.push_back(rat_str(v));
        if (format == "text")
            std::cout << "n" << key.first << "[" << key.second << "] = " << rat_str(v) << "\n";
    }
    rep.extra["invariants"] = table;
    Manifest man;
    man.command = "gw";
    man.genus = genus;
    if (format == "json") emit(rep, man, format);
    return rep.all_pass() ? 0 : 1;
}

int run_export(const std::string& what, const std::string& out, int order) {
    Json j;
    Manifest man;
    man.command = "export";
    man.order = order;
    j["manifest"] = man.to_json();
    if (what == "yukawa") {
        j["yukawa_ot"] = yukawa_computed().str();
        // round trip
        if (!(OTElement::parse(yukawa_computed().str()) == yukawa_computed()))
            throw std::logic_error("export: yukawa round trip failed");
    } else if (what == "zq") {
        MirrorData md = build_mirror_data(order);
        j["z_of_q"] = series_json(md.z_of_q);
        if (!(QSeries::parse(md.z_of_q.str()) == md.z_of_q))
            throw std::logic_error("export: series round trip failed");
    } else if (what == "lie-basis") {
        j["basis_h1"] = lie_basis_json(1);
        j["basis_h2"] = lie_basis_json(2);
    } else if (what == "gm") {
        Json g;
        static const char* names[7] = {"R_g0", "R_g11", "R_t11", "R_t1", "R_t", "R_k1", "R_1"};
        for (int k = 0; k < 7; ++k) g[names[k]] = otmat_json(gm_computed(k));
        j["gauss_manin"] = g;
    } else {
        std::cerr << "unknown export '" << what << "'\n";
        return 2;
    }
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "cannot write '" << out << "'\n";
            return 2;
        }
        f << j.dump(2) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic engine for the enhanced moduli space of the mirror quintic"};
    app.require_subcommand(1);

    std::string format = "text", yv = "disc", module = "all", config_path;
    int order = 12, genus = 2, h = 0, maxdeg = 5;
    bool fix = false, modular = false, timings = false;
    Rat chi(-200);
    std::string chi_str = "-200";

    app.add_option("--config", config_path, "key = value configuration file");

    auto* verify = app.add_subcommand("verify", "run the identity verification suites");
    verify->set_help_flag("--help", "print help");
    verify->add_option("--module", module, "all|liealg|fields|special-ring|f1");
    verify->add_option("--h", h, "middle block size for the liealg suite");
    verify->add_option("--yukawa-variant", yv, "disc|printed");
    verify->add_option("--format", format, "text|json");
    verify->add_flag("--timings", timings, "include timings (breaks byte determinism)");

    auto* solve = app.add_subcommand("solve-fg", "solve the genus-g linear system");
    solve->add_option("--genus", genus, "target genus (>= 2)")->required();
    solve->add_flag("--fix-ambiguity", fix, "apply gap + constant-map boundary conditions");
    solve->add_option("--chi", chi_str, "A-model Euler number (default -200)");
    solve->add_option("--order", order, "q-expansion order for the boundary data");
    solve->add_flag("--modular", modular, "multi-modular solve with rational reconstruction");
    solve->add_option("--format", format, "text|json");
    solve->add_flag("--timings", timings, "include timings");

    std::string object = "t";
    auto* qe = app.add_subcommand("q-expand", "q-expansions of coordinates and amplitudes");
    qe->add_option("--object", object, "t|yukawa|F1|Fg")->required();
    qe->add_option("--order", order, "truncation order");
    qe->add_option("--genus", genus, "genus for object Fg");
    qe->add_option("--format", format, "text|json");

    auto* gw = app.add_subcommand("gw", "Gopakumar-Vafa invariants");
    gw->add_option("--genus", genus, "0, 1, 2 or 3")->required();
    gw->add_option("--max-degree", maxdeg, "largest degree");
    gw->add_option("--format", format, "text|json");

    std::string what = "yukawa", out;
    auto* ex = app.add_subcommand("export", "write JSON artifacts");
    ex->add_option("--what", what, "yukawa|zq|lie-basis|gm");
    ex->add_option("--out", out, "output path (stdout when omitted)");
    ex->add_option("--order", order, "series order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty()) {
            Config cfg = Config::from_file(config_path);
            order = static_cast<int>(cfg.get_long("order", order));
            chi_str = cfg.get(std::string("chi_a"), chi_str);
            yv = cfg.get("yukawa_variant", yv);
        }
        chi = rat_from_string(chi_str);
        if (verify->parsed()) return run_verify(module, h, yv, format, timings);
        if (solve->parsed()) {
            if (genus < 2) {
                std::cerr << "genus must be >= 2; use `q-expand --object F1` for genus one\n";
                return 2;
            }
            return run_solve(genus, fix, chi, order, modular, format, timings);
        }
        if (qe->parsed()) return run_qexpand(object, order, genus, format);
        if (gw->parsed()) return run_gw(genus, maxdeg, format);
        if (ex->parsed()) return run_export(what, out, order);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
