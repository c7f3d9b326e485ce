#include "mq/mirrormap.hpp"
#include "mq/ratmat.hpp"
#include <sstream>

namespace mq {

namespace {

// D_k = (-1)^k (1+5 theta)(2+5 theta)...(k+5 theta) in the modulus variable
ThetaOp derivative_frame_op(int k, const ThetaOp& theta) {
    ThetaOp acc = ThetaOp::identity();
    for (int j = 1; j <= k; ++j) {
        ThetaOp lin = theta * Rat(5) + ThetaOp(0, {Rat(j)});
        acc = lin * acc;
    }
    if (k % 2 == 1) acc = acc * Rat(-1);
    return acc;
}

LogSeries solve2_log(const LogSeries& A, const LogSeries& B, const LogSeries& C,
                     const LogSeries& D, const LogSeries& P, const LogSeries& Q,
                     bool first, const QSeries& det_inv) {
    // x A + y B = P, x C + y D = Q; returns x (first) or y
    if (first) {
        LogSeries num = P * D - Q * B;
        return num.mul_pure(det_inv);
    }
    LogSeries num = A * Q - C * P;
    return num.mul_pure(det_inv);
}

} // namespace

MirrorData build_mirror_data(int order) {
    MirrorData md;
    md.order = order;
    // one guard order: log(z(q)/q) at order N needs z(q) at order N+1
    const int M = order + 1;
    ThetaOp op = quintic_pf_operator();
    md.fb = frobenius_mum(op, M);
    // operator annihilates the basis (defining property, asserted)
    for (int k = 0; k < 4; ++k)
        if (!op.apply(md.fb.y[k]).is_zero())
            throw std::logic_error("build_mirror_data: operator does not annihilate Frobenius basis");

    QSeries ratio = md.fb.s[1] / md.fb.s[0];
    md.q_of_z = QSeries::var(M) * ratio.exp();
    md.z_of_q = md.q_of_z.reverse();
    // z(q)/q = unit
    QSeries unit(order);
    for (int n = 0; n <= order; ++n) unit.set(n, md.z_of_q[n + 1]);
    md.ell = unit.log();
    md.z_of_q = md.z_of_q.truncated(order);
    md.q_of_z = md.q_of_z.truncated(order);
    for (int k = 0; k < 4; ++k) {
        md.fb.y[k] = LogSeries(order) + md.fb.y[k];
        md.fb.s[k] = md.fb.s[k].truncated(order);
        md.yq[k] = md.fb.y[k].compose(md.z_of_q, md.ell);
    }

    // Wronskian-route Yukawa: 5 (theta_q z / z)^3 / ((1 - 5^5 z) y0^2)
    QSeries dlog = QSeries::one(order) + unit.theta() / unit;
    QSeries y0q = md.fb.s[0].compose(md.z_of_q);
    QSeries denom = (QSeries::one(order) - md.z_of_q * Rat(3125)) * y0q * y0q;
    md.yukawa_w = dlog.pow(3) * Rat(5) / denom;
    return md;
}

TCoords holomorphic_tcoords(const MirrorData& md) {
    const int N = md.order;
    TCoords tc;
    tc.c1 = rat(1, 5);
    tc.lambda = rat(-1, 25);
    tc.kappa = Rat(1) / tc.lambda;

    ThetaOp theta = ThetaOp::theta();
    std::array<ThetaOp, 4> dk;
    for (int k = 0; k < 4; ++k) dk[k] = derivative_frame_op(k, theta);

    // period columns u_j in the z variable; the third and fourth columns are
    // the combinations that complete the Frobenius basis to the symplectic
    // frame; e_const/f_const are solved from the format below
    auto build_columns = [&](const Rat& e, const Rat& f) {
        std::array<LogSeries, 4> u;
        u[0] = md.fb.y[0] * tc.c1;
        u[1] = md.fb.y[1] * (tc.c1 * tc.lambda);
        u[2] = md.fb.y[2] * (tc.c1 * Rat(5) * tc.lambda * tc.lambda);
        u[3] = md.fb.y[3] * (tc.c1 * Rat(-5) * tc.lambda * tc.lambda * tc.lambda) +
               md.fb.y[2] * (tc.c1 * e) + md.fb.y[1] * (tc.c1 * f);
        return u;
    };

    QSeries t0q = md.fb.s[0].compose(md.z_of_q) * tc.c1;
    QSeries t0inv = t0q.inverse();

    auto build_pi = [&](const std::array<LogSeries, 4>& u) {
        std::array<std::array<LogSeries, 4>, 4> pi;
        for (int k = 0; k < 4; ++k) {
            QSeries scale = t0inv.pow(k + 1);
            for (int j = 0; j < 4; ++j)
                pi[k][j] = dk[k].apply(u[j]).compose(md.z_of_q, md.ell).mul_pure(scale);
        }
        return pi;
    };

    auto u = build_columns(Rat(0), Rat(0));
    auto pi = build_pi(u);

    LogSeries T = LogSeries::tau(N) * tc.lambda;

    // row 1 identities: (1, T) in the first two slots
    if (!(pi[0][0] == LogSeries(QSeries::one(N))))
        throw std::logic_error("tcoords: first period not normalized");
    if (!(pi[0][1] == T)) throw std::logic_error("tcoords: flat-coordinate slot mismatch");

    const LogSeries& A = pi[0][0];
    const LogSeries& B = pi[1][0];
    const LogSeries& C = pi[0][1];
    const LogSeries& D = pi[1][1];
    LogSeries detL = A * D - B * C;
    QSeries det = detL.pure(); // throws if a log survives
    if (det[0] == 0) throw std::logic_error("tcoords: singular period 2x2 block");
    QSeries det_inv = det.inverse();

    LogSeries zero(N);
    LogSeries one(QSeries::one(N));

    // row 2: C-matrix entries c21, c22
    QSeries c21 = solve2_log(A, B, C, D, zero, one, true, det_inv).pure();
    QSeries c22 = solve2_log(A, B, C, D, zero, one, false, det_inv).pure();

    QSeries t4q = md.z_of_q * t0q.pow(5) * Rat(3125);
    QSeries discq = t4q - t0q.pow(5);
    if (discq[0] == 0) throw std::logic_error("tcoords: discriminant vanishes at the MUM point");
    QSeries t5q = (-discq * Rat(625)) / c22;
    QSeries t3q = -(c21 * t5q) - t0q.pow(4) * Rat(3125);

    // row 3: c31 and t6
    LogSeries P30 = pi[2][0].mul_pure(t5q) * Rat(-1);
    LogSeries P31 = pi[2][1].mul_pure(t5q) * Rat(-1);
    QSeries c31 = solve2_log(A, B, C, D, P30, P31, true, det_inv).pure();
    QSeries t6q = solve2_log(A, B, C, D, P30, P31, false, det_inv).pure();

    // row 4: t1 and t2 (C row 4 is (-t1, -t2, -t3, -625 disc))
    LogSeries P40 = pi[2][0].mul_pure(t3q) + pi[3][0].mul_pure(discq * Rat(625));
    LogSeries P41 = pi[2][1].mul_pure(t3q) + pi[3][1].mul_pure(discq * Rat(625));
    QSeries t1q = -solve2_log(A, B, C, D, P40, P41, true, det_inv).pure();
    QSeries t2q = -solve2_log(A, B, C, D, P40, P41, false, det_inv).pure();

    tc.t = {t0q, t1q, t2q, t3q, t4q, t5q, t6q};

    // assemble P = C * Pi and solve the completion constants
    auto apply_row = [&](const std::array<QSeries, 4>& coeffs,
                         const std::array<std::array<LogSeries, 4>, 4>& pim, int j) {
        LogSeries acc(N);
        for (int k = 0; k < 4; ++k) {
            if (coeffs[k].is_zero()) continue;
            acc = acc + pim[k][j].mul_pure(coeffs[k]);
        }
        return acc;
    };
    std::array<QSeries, 4> row2 = {c21, c22, QSeries::zero(N), QSeries::zero(N)};
    std::array<QSeries, 4> row3 = {c31, t6q, t5q, QSeries::zero(N)};
    std::array<QSeries, 4> row4 = {-t1q, -t2q, -t3q, -(discq * Rat(625))};

    // completion: e from the (3,4) slot, f from the (2,4) format identity
    {
        LogSeries p34 = apply_row(row3, pi, 3);
        LogSeries defect = p34 + T;
        if (defect.log_degree() != 0)
            throw std::logic_error("tcoords: (3,4) completion defect has logs");
        QSeries d = defect.pure();
        for (int n = 1; n <= N; ++n)
            if (d[n] != 0) throw std::logic_error("tcoords: (3,4) completion defect not constant");
        tc.e_const = -d[0];
    }
    {
        // rebuild with e fixed to isolate f
        u = build_columns(tc.e_const, Rat(0));
        pi = build_pi(u);
        LogSeries p24 = apply_row(row2, pi, 3);
        LogSeries p13 = pi[0][2];
        LogSeries p23 = apply_row(row2, pi, 2);
        LogSeries defect = p24 - (p13 - T * p23);
        if (defect.log_degree() != 0)
            throw std::logic_error("tcoords: (2,4) completion defect has logs");
        QSeries d = defect.pure();
        for (int n = 1; n <= N; ++n)
            if (d[n] != 0) throw std::logic_error("tcoords: (2,4) completion defect not constant");
        tc.f_const = -d[0];
    }
    u = build_columns(tc.e_const, tc.f_const);
    pi = build_pi(u);

    // full special-format verification
    auto expect = [&](const LogSeries& got, const LogSeries& want, const char* what) {
        if (!(got == want)) throw std::logic_error(std::string("tcoords: format check failed: ") + what);
        tc.checks.push_back(what);
    };
    std::array<std::array<LogSeries, 4>, 4> P;
    for (int j = 0; j < 4; ++j) {
        P[0][j] = pi[0][j];
        P[1][j] = apply_row(row2, pi, j);
        P[2][j] = apply_row(row3, pi, j);
        P[3][j] = apply_row(row4, pi, j);
    }
    expect(P[0][0], one, "P11 = 1");
    expect(P[0][1], T, "P12 = T");
    expect(P[1][0], zero, "P21 = 0");
    expect(P[1][1], one, "P22 = 1");
    expect(P[2][0], zero, "P31 = 0");
    expect(P[2][1], zero, "P32 = 0");
    expect(P[2][2], one, "P33 = 1");
    expect(P[2][3], -T, "P34 = -T");
    expect(P[3][0], zero, "P41 = 0");
    expect(P[3][1], zero, "P42 = 0");
    expect(P[3][2], zero, "P43 = 0");
    expect(P[3][3], -one, "P44 = -1");
    // connection cascade: theta_T applied to each row steps down the frame
    Rat linv = Rat(1) / tc.lambda;
    for (int j = 0; j < 4; ++j) {
        expect(P[0][j].theta() * linv, P[1][j], "theta P1 = P2");
        expect(P[1][j].theta() * linv, P[2][j].mul_pure(md.yukawa_w), "theta P2 = Y P3");
        expect(P[2][j].theta() * linv, P[3][j], "theta P3 = P4");
        expect(P[3][j].theta() * linv, zero, "theta P4 = 0");
    }
    // resolved (3,1) basis-change entry
    {
        QSeries lhs = c31 * (discq * Rat(625));
        QSeries rhs = (t0q.pow(4) * Rat(3125) + t3q) * t6q - (t0q.pow(3) * Rat(3125) + t2q) * t5q;
        if (!(lhs == rhs)) throw std::logic_error("tcoords: resolved (3,1) entry mismatch");
        tc.checks.push_back("c31 formula");
    }
    // flow consistency: kappa theta_q t_i = R_1(t_i) on the moving point
    {
        auto frame = canonical_fields();
        for (int i = 0; i < 7; ++i) {
            QSeries lhs = tc.t[i].theta() * tc.kappa;
            QSeries rhs = frame[F_R1].comp[i].eval_series(tc.t);
            if (!(lhs == rhs)) throw std::logic_error("tcoords: flow equation fails");
        }
        tc.checks.push_back("R_1 flow");
    }
    return tc;
}

std::array<QSeries, 7> integrate_flow(const TCoords& seed, int order) {
    auto frame = canonical_fields();
    const auto& R = frame[F_R1];
    // Jacobian at the base point
    std::array<QSeries, 7> base;
    for (int i = 0; i < 7; ++i) base[i] = QSeries::constant(seed.t[i][0], 0);
    RatMat J(7, 7);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            QSeries v = R.comp[i].partial(j).eval_series(base);
            J.at(i, j) = v[0];
        }
    // the base point is an equilibrium of the flow (the field vanishes
    // there), so the linear coefficients seed the eigendirection; they come
    // from the order-q matching
    {
        std::vector<Rat> r0(7);
        for (int i = 0; i < 7; ++i) r0[i] = R.comp[i].eval_series(base)[0];
        for (const Rat& v : r0)
            if (v != 0) throw std::logic_error("integrate_flow: base point is not an equilibrium");
    }
    std::array<QSeries, 7> t;
    for (int i = 0; i < 7; ++i) {
        t[i] = QSeries(order);
        t[i].set(0, seed.t[i][0]);
        if (order >= 1) t[i].set(1, seed.t[i][1]);
    }
    for (int n = 2; n <= order; ++n) {
        // evaluate the field with the unknown coefficients set to zero
        std::array<QSeries, 7> tpad;
        for (int i = 0; i < 7; ++i) tpad[i] = t[i].truncated(n);
        std::vector<Rat> rhs(7);
        for (int i = 0; i < 7; ++i) rhs[i] = R.comp[i].eval_series(tpad)[n];
        RatMat M(7, 7);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j)
                M.at(i, j) = (i == j ? seed.kappa * Rat(n) : Rat(0)) - J.at(i, j);
        auto sol = M.solve(rhs);
        if (!sol) throw std::domain_error("integrate_flow: order-" + std::to_string(n) + " system singular");
        for (int i = 0; i < 7; ++i) t[i].set(n, (*sol)[i]);
    }
    return t;
}

QSeries yukawa_q(const TCoords& tc, YukawaVariant v) {
    return yukawa_ot(v).eval_series(tc.t);
}

// ---- conifold --------------------------------------------------------------

ConifoldCoords conifold_tcoords(int order) {
    ConifoldCoords cc;
    cc.order = order;
    ThetaOp op = quintic_pf_conifold();
    ConifoldBasis cb = frobenius_conifold(op, order);

    // theta_z at the conifold coordinate: -(1-x)/x * D
    ThetaOp tz = ThetaOp(-1, {Rat(0), Rat(-1)}) + ThetaOp(0, {Rat(0), Rat(1)});
    std::array<ThetaOp, 4> dk;
    for (int k = 0; k < 4; ++k) dk[k] = derivative_frame_op(k, tz);

    QSeries t0 = cb.v0; // conifold frame gauge: t0 = v0
    QSeries t0inv = t0.inverse();
    std::array<QSeries, 2> ucols = {cb.v0, cb.v1};
    std::array<std::array<QSeries, 2>, 4> pi;
    for (int k = 0; k < 4; ++k) {
        QSeries scale = t0inv.pow(k + 1);
        for (int j = 0; j < 2; ++j) {
            LogSeries in(order);
            in.set_part(0, ucols[j]);
            pi[k][j] = dk[k].apply(in).pure() * scale;
        }
    }
    cc.t_d = pi[0][1]; // T_D = v1/v0
    if (cc.t_d.valuation() != 1)
        throw std::logic_error("conifold_tcoords: flat coordinate does not vanish to first order");
    cc.x_of_td = cc.t_d.reverse();

    // 2x2 solves as at the MUM point, now over plain series
    QSeries A = pi[0][0], B = pi[1][0], C = pi[0][1], D = pi[1][1];
    QSeries det = A * D - B * C;
    if (det[0] == 0) throw std::logic_error("conifold_tcoords: singular period block");
    QSeries det_inv = det.inverse();
    QSeries c21 = (-B) * det_inv;       // (0*D - 1*B)/det
    QSeries c22 = A * det_inv;          // (A*1 - C*0)/det
    QSeries t4 = (QSeries::one(order) - QSeries::var(order)) * t0.pow(5);
    QSeries disc = t4 - t0.pow(5);      // = -x t0^5 exactly
    {
        QSeries check = disc + QSeries::var(order) * t0.pow(5);
        if (!check.is_zero()) throw std::logic_error("conifold_tcoords: discriminant identity");
    }
    if (disc.valuation() != 1)
        throw std::logic_error("conifold_tcoords: discriminant does not vanish to first order");
    // t5 = -625 disc / c22 has valuation 1: carry Laurent values
    LaurentQ t5 = LaurentQ::from(-disc * Rat(625)) * LaurentQ::from(c22).inverse();
    QSeries t3 = -(c21 * (-disc * Rat(625)) / c22) - t0.pow(4) * Rat(3125);

    QSeries P30 = -(pi[2][0] * ((-disc * Rat(625)) / c22));
    QSeries P31 = -(pi[2][1] * ((-disc * Rat(625)) / c22));
    QSeries c31 = (P30 * D - P31 * B) * det_inv;
    QSeries t6 = (A * P31 - C * P30) * det_inv;
    QSeries P40 = pi[2][0] * t3 + pi[3][0] * (disc * Rat(625));
    QSeries P41 = pi[2][1] * t3 + pi[3][1] * (disc * Rat(625));
    QSeries t1 = -((P40 * D - P41 * B) * det_inv);
    QSeries t2 = -((A * P41 - C * P40) * det_inv);

    cc.t = {LaurentQ::from(t0), LaurentQ::from(t1), LaurentQ::from(t2), LaurentQ::from(t3),
            LaurentQ::from(t4), t5, LaurentQ::from(t6)};

    // flow consistency in the conifold parametrization:
    // theta_x t_i / theta_x T_D = R_1(t_i)(t)
    auto frame = canonical_fields();
    LaurentQ dtd = LaurentQ::from(cc.t_d.theta());
    LaurentQ dtd_inv = dtd.inverse();
    for (int i = 0; i < 7; ++i) {
        LaurentQ lhs = LaurentQ{cc.t[i].val, cc.t[i].u.theta() + cc.t[i].u * Rat(cc.t[i].val)};
        lhs = lhs.normalized() * dtd_inv;
        LaurentQ rhs = frame[F_R1].comp[i].eval_laurent(cc.t);
        if (!(lhs - rhs).is_zero())
            throw std::logic_error("conifold_tcoords: flow equation fails on component " +
                                   std::to_string(i));
    }
    // Yukawa has a simple pole with the residue read in the T_D variable
    LaurentQ y = yukawa_ot(YukawaVariant::Disc).eval_laurent(cc.t);
    LaurentQ ytd = expand_in_td(y, cc);
    if (ytd.val != -1) throw std::logic_error("conifold_tcoords: Yukawa pole is not simple");
    cc.yukawa_residue = ytd.u[0];
    return cc;
}

LaurentQ expand_in_td(const LaurentQ& fx, const ConifoldCoords& cc) {
    // substitute x = x(T_D); powers of x built incrementally, negative powers
    // through the Laurent inverse
    int N = cc.x_of_td.order();
    LaurentQ x = LaurentQ::from(cc.x_of_td);
    LaurentQ acc = LaurentQ::zero(N);
    LaurentQ xpow = x.pow(fx.val);
    for (int n = 0; n <= fx.u.order(); ++n) {
        if (fx.u[n] != 0) acc = acc + xpow * fx.u[n];
        xpow = xpow * x;
    }
    return acc.normalized();
}

// ---- invariant extraction --------------------------------------------------

bool BPSTable::all_integral(int genus, int max_degree) const {
    for (int d = 1; d <= max_degree; ++d) {
        auto it = n.find({genus, d});
        if (it == n.end()) return false;
        if (!is_integer(it->second)) return false;
    }
    return true;
}

std::vector<Rat> gw_genus0(const QSeries& yukawa, int max_degree) {
    // Y = n_0 + sum_d n_d d^3 q^d / (1 - q^d)
    std::vector<Rat> n(max_degree + 1);
    for (int d = 1; d <= max_degree; ++d) {
        Rat acc = yukawa[d];
        for (int e = 1; e < d; ++e)
            if (d % e == 0) acc -= n[e] * Rat(e) * Rat(e) * Rat(e);
        n[d] = acc / (Rat(d) * Rat(d) * Rat(d));
        if (!is_integer(n[d]))
            throw std::domain_error("gw_genus0: non-integral invariant at degree " + std::to_string(d));
    }
    return n;
}

std::vector<Rat> gw_genus1(const QSeries& theta_f1_inst, const std::vector<Rat>& n0,
                           int max_degree) {
    // theta F_1 = sum_d q^d sum_{b|d} b m_b, with m_b = n1_b + n0_b/12
    std::vector<Rat> m(max_degree + 1), n1(max_degree + 1);
    for (int d = 1; d <= max_degree; ++d) {
        Rat acc = theta_f1_inst[d];
        for (int b = 1; b < d; ++b)
            if (d % b == 0) acc -= Rat(b) * m[b];
        m[d] = acc / Rat(d);
        n1[d] = m[d] - n0.at(d) / Rat(12);
        if (!is_integer(n1[d]))
            throw std::domain_error("gw_genus1: non-integral invariant at degree " + std::to_string(d));
    }
    return n1;
}

std::vector<Rat> gw_genus2(const QSeries& f2_inst, const std::vector<Rat>& n0, int max_degree) {
    // F_2 = sum_d q^d sum_{k|d} k M_{d/k}, with M_b = n2_b + n0_b/240
    std::vector<Rat> M(max_degree + 1), n2(max_degree + 1);
    for (int d = 1; d <= max_degree; ++d) {
        Rat acc = f2_inst[d];
        for (int b = 1; b < d; ++b)
            if (d % b == 0) acc -= Rat(d / b) * M[b];
        M[d] = acc;
        n2[d] = M[d] - n0.at(d) / Rat(240);
        if (!is_integer(n2[d]))
            throw std::domain_error("gw_genus2: non-integral invariant at degree " + std::to_string(d));
    }
    return n2;
}

std::vector<Rat> gw_genus3(const QSeries& f3_inst, const std::vector<Rat>& n0,
                           const std::vector<Rat>& n2, int max_degree) {
    // F_3 = sum_d q^d sum_{k|d} k^3 M_{d/k}, with
    // M_b = n3_b - n2_b/12 + n0_b/6048 from the multicover expansion
    std::vector<Rat> M(max_degree + 1), n3(max_degree + 1);
    for (int d = 1; d <= max_degree; ++d) {
        Rat acc = f3_inst[d];
        for (int b = 1; b < d; ++b)
            if (d % b == 0) {
                long k = d / b;
                acc -= Rat(k) * Rat(k) * Rat(k) * M[b];
            }
        M[d] = acc;
        n3[d] = M[d] + n2.at(d) / Rat(12) - n0.at(d) / Rat(6048);
        if (!is_integer(n3[d]))
            throw std::domain_error("gw_genus3: non-integral invariant at degree " + std::to_string(d));
    }
    return n3;
}

QSeries theta_f1_alg(const TCoords& tc) {
    int N = tc.t[0].order();
    // theta log t4 with t4 of valuation 1: 1 + theta(u)/u for t4 = q u
    QSeries u(N - 1 >= 0 ? N - 1 : 0);
    for (int n = 0; n + 1 <= N; ++n) u.set(n, tc.t[4][n + 1]);
    if (u[0] == 0) throw std::domain_error("theta_f1_alg: t4 does not vanish to first order");
    QSeries dlog_t4 = QSeries::one(u.order()) + u.theta() / u;
    QSeries disc = (tc.t[4] - tc.t[0].pow(5)).truncated(u.order());
    QSeries t5 = tc.t[5].truncated(u.order());
    QSeries dlog_disc = disc.theta() / disc;
    QSeries dlog_t5 = t5.theta() / t5;
    return -(dlog_t4 * rat(5, 12) - dlog_disc * rat(1, 12) + dlog_t5 * rat(1, 10));
}

Genus1Result genus1_invariants(const TCoords& tc, const std::vector<Rat>& n0, int max_degree) {
    Genus1Result res;
    QSeries g = theta_f1_alg(tc);
    if (g[1] == 0) throw std::domain_error("genus1_invariants: no degree-1 instanton term");
    // vanishing degree-1 elliptic invariant fixes the normalization:
    // nu g[1] = n0_1/12
    res.nu = (n0.at(1) / Rat(12)) / g[1];
    QSeries gn = g * res.nu;
    res.classical_term = gn[0];
    QSeries inst = gn;
    inst.set(0, Rat(0));
    res.invariants = gw_genus1(inst, n0, max_degree);
    return res;
}

} // namespace mq
