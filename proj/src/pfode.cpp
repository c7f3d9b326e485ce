#include "mq/pfode.hpp"
#include <algorithm>
#include <optional>

namespace mq {

namespace {

// polynomial helpers over Q (coefficient vectors, index = degree)
std::vector<Rat> poly_add(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::vector<Rat> poly_shift(const std::vector<Rat>& p, const Rat& c) {
    // p(s + c) via incremental powers of (s + c)
    std::vector<Rat> base{c, Rat(1)};
    std::vector<Rat> cur{Rat(1)};
    std::vector<Rat> out;
    for (size_t k = 0; k < p.size(); ++k) {
        if (p[k] != 0) {
            std::vector<Rat> term = cur;
            for (auto& t : term) t *= p[k];
            out = poly_add(out, term);
        }
        cur = poly_mul(cur, base);
    }
    return out;
}

Rat poly_eval(const std::vector<Rat>& p, const Rat& x) {
    Rat r;
    for (size_t k = p.size(); k-- > 0;) r = r * x + p[k];
    return r;
}

std::vector<Rat> poly_derivative(const std::vector<Rat>& p) {
    if (p.size() <= 1) return {};
    std::vector<Rat> r(p.size() - 1);
    for (size_t k = 1; k < p.size(); ++k) r[k - 1] = p[k] * Rat(static_cast<long>(k));
    return r;
}

// Q[eps]/(eps^4)
struct Eps4 {
    std::array<Rat, 4> c{};
    static Eps4 scalar(const Rat& v) {
        Eps4 e;
        e.c[0] = v;
        return e;
    }
    Eps4 operator+(const Eps4& b) const {
        Eps4 r;
        for (int i = 0; i < 4; ++i) r.c[i] = c[i] + b.c[i];
        return r;
    }
    Eps4 operator-(const Eps4& b) const {
        Eps4 r;
        for (int i = 0; i < 4; ++i) r.c[i] = c[i] - b.c[i];
        return r;
    }
    Eps4 operator*(const Eps4& b) const {
        Eps4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; i + j < 4; ++j) r.c[i + j] += c[i] * b.c[j];
        return r;
    }
    Eps4 inverse() const {
        if (c[0] == 0) throw std::domain_error("Eps4: inverse of non-unit");
        Eps4 r;
        r.c[0] = Rat(1) / c[0];
        for (int n = 1; n < 4; ++n) {
            Rat acc;
            for (int k = 1; k <= n; ++k) acc += c[k] * r.c[n - k];
            r.c[n] = -r.c[0] * acc;
        }
        return r;
    }
};

Eps4 poly_eval_eps(const std::vector<Rat>& p, const Rat& n) {
    // p(n + eps) in Q[eps]/eps^4
    Eps4 r;
    Eps4 x;
    x.c[0] = n;
    x.c[1] = 1;
    for (size_t k = p.size(); k-- > 0;) {
        r = r * x;
        r.c[0] += p[k];
    }
    return r;
}

} // namespace

ThetaOp::ThetaOp(int j, std::vector<Rat> pcoeffs) {
    while (!pcoeffs.empty() && pcoeffs.back() == 0) pcoeffs.pop_back();
    if (!pcoeffs.empty()) t_[j] = std::move(pcoeffs);
}

ThetaOp ThetaOp::identity() { return ThetaOp(0, {Rat(1)}); }
ThetaOp ThetaOp::theta() { return ThetaOp(0, {Rat(0), Rat(1)}); }
ThetaOp ThetaOp::times_x(int power) { return ThetaOp(power, {Rat(1)}); }

ThetaOp ThetaOp::operator+(const ThetaOp& b) const {
    ThetaOp r = *this;
    for (const auto& [j, p] : b.t_) {
        auto it = r.t_.find(j);
        if (it == r.t_.end()) {
            r.t_[j] = p;
        } else {
            it->second = poly_add(it->second, p);
            if (it->second.empty()) r.t_.erase(it);
        }
    }
    return r;
}

ThetaOp ThetaOp::operator-(const ThetaOp& b) const { return *this + b * Rat(-1); }

ThetaOp ThetaOp::operator*(const ThetaOp& b) const {
    // (x^{j1} P(D)) (x^{j2} Q(D)) = x^{j1+j2} P(D + j2) Q(D)
    ThetaOp r;
    for (const auto& [j1, p] : t_)
        for (const auto& [j2, q] : b.t_) {
            std::vector<Rat> shifted = poly_shift(p, Rat(j2));
            std::vector<Rat> prod = poly_mul(shifted, q);
            ThetaOp term(j1 + j2, prod);
            r = r + term;
        }
    return r;
}

ThetaOp ThetaOp::operator*(const Rat& s) const {
    ThetaOp r;
    if (s == 0) return r;
    for (const auto& [j, p] : t_) {
        auto q = p;
        for (auto& c : q) c *= s;
        r.t_[j] = std::move(q);
    }
    return r;
}

int ThetaOp::min_power() const {
    if (t_.empty()) throw std::domain_error("ThetaOp: empty operator");
    return t_.begin()->first;
}

ThetaOp ThetaOp::shifted(int k) const {
    ThetaOp r;
    for (const auto& [j, p] : t_) r.t_[j + k] = p;
    return r;
}

std::vector<Rat> ThetaOp::indicial() const {
    int m = min_power();
    auto it = t_.find(m);
    return it->second;
}

LogSeries ThetaOp::apply(const LogSeries& f) const {
    int N = f.order();
    // terms with negative shift leave the top coefficients undetermined
    int out_order = N + std::min(0, t_.empty() ? 0 : t_.begin()->first);
    if (out_order < 0) throw std::domain_error("ThetaOp::apply: order too small");
    LogSeries out(N);
    // action on x^m tau^k: P(D) = sum_i P^(i)(m)/i! N^i with N the tau-drop
    for (const auto& [j, p] : t_) {
        // precompute P, P', P''/2, P'''/6 as polynomials
        std::array<std::vector<Rat>, 4> der;
        der[0] = p;
        Rat fact(1);
        for (int i = 1; i < 4; ++i) {
            der[i] = poly_derivative(der[i - 1]);
            for (auto& c : der[i]) c /= Rat(i);
        }
        for (int m = 0; m <= N; ++m) {
            if (m + j < 0 || m + j > N) continue;
            std::array<Rat, 4> pv;
            for (int i = 0; i < 4; ++i) pv[i] = poly_eval(der[i], Rat(m));
            for (int k = 0; k < 4; ++k) {
                const Rat& c = f.part(k)[m];
                if (c == 0) continue;
                // N^i tau^k = k!/(k-i)! tau^{k-i}
                long fall = 1;
                for (int i = 0; i <= k; ++i) {
                    if (pv[i] != 0) {
                        QSeries add = QSeries::zero(N);
                        add.set(m + j, c * pv[i] * Rat(fall));
                        out.set_part(k - i, out.part(k - i) + add);
                    }
                    fall *= (k - i);
                    if (fall == 0) break;
                }
            }
        }
    }
    // drop coefficients past the reliable order
    if (out_order < N) {
        LogSeries trimmed(out_order);
        for (int k = 0; k < 4; ++k) trimmed.set_part(k, out.part(k).truncated(out_order));
        return trimmed;
    }
    return out;
}

LogSeries ThetaOp::apply_dlog(const LogSeries& f) const {
    ThetaOp d;
    for (const auto& [j, p] : t_) {
        auto q = poly_derivative(p);
        if (!q.empty()) d = d + ThetaOp(j, q);
    }
    if (d.t_.empty()) return LogSeries(f.order());
    return d.apply(f);
}

ThetaOp quintic_pf_operator() {
    ThetaOp D = ThetaOp::theta();
    auto lin = [&](long a, long b) { return ThetaOp(0, {Rat(b), Rat(a)}); }; // a D + b
    ThetaOp d4 = D * D * D * D;
    ThetaOp prod = lin(5, 1) * lin(5, 2) * lin(5, 3) * lin(5, 4);
    return d4 - ThetaOp::times_x(1) * prod * Rat(5);
}

ThetaOp quintic_pf_conifold() {
    // z = (1 - x)/5^5 where x is the conifold coordinate; theta_z = -(1/x - 1) D
    ThetaOp tz = ThetaOp(-1, {Rat(0), Rat(-1)}) + ThetaOp(0, {Rat(0), Rat(1)});
    ThetaOp z = ThetaOp(0, {rat(1, 3125)}) + ThetaOp(1, {rat(-1, 3125)});
    auto lin = [&](long a, long b) {
        return tz * Rat(a) + ThetaOp(0, {Rat(b)});
    };
    ThetaOp t4 = tz * tz * tz * tz;
    ThetaOp prod = lin(5, 1) * lin(5, 2) * lin(5, 3) * lin(5, 4);
    ThetaOp L = t4 - z * prod * Rat(5);
    int m = L.min_power();
    if (m < 0) L = L.shifted(-m);
    return L;
}

FrobeniusBasis frobenius_mum(const ThetaOp& op, int order) {
    int m0 = op.min_power();
    if (m0 != 0) throw std::invalid_argument("frobenius_mum: operator not normalized");
    auto ind = op.indicial();
    // require indicial = c * s^4
    if (ind.size() != 5) throw std::invalid_argument("frobenius_mum: order must be 4");
    for (int k = 0; k < 4; ++k)
        if (ind[k] != 0) throw std::invalid_argument("frobenius_mum: indicial root not quadruple zero");

    // a_n(eps) from P_0(eps+n) a_n = -sum_{j>=1} P_j(eps+n-j) a_{n-j}
    std::vector<Eps4> a(order + 1);
    a[0] = Eps4::scalar(Rat(1));
    for (int n = 1; n <= order; ++n) {
        Eps4 rhs;
        for (const auto& [j, p] : op.terms()) {
            if (j < 1 || j > n) continue;
            rhs = rhs + poly_eval_eps(p, Rat(n - j)) * a[n - j];
        }
        Eps4 p0 = poly_eval_eps(op.indicial(), Rat(n));
        a[n] = (rhs * p0.inverse()) * Eps4::scalar(Rat(-1));
    }
    FrobeniusBasis fb;
    for (int m = 0; m < 4; ++m) {
        fb.s[m] = QSeries(order);
        for (int n = 0; n <= order; ++n) fb.s[m].set(n, a[n].c[m]);
    }
    // y_k = sum_{j=0}^{k} tau^j / j! * s_{k-j}
    for (int k = 0; k < 4; ++k) {
        LogSeries y(order);
        Rat fact(1);
        for (int j = 0; j <= k; ++j) {
            if (j > 0) fact *= j;
            y.set_part(j, fb.s[k - j] * (Rat(1) / fact));
        }
        fb.y[k] = y;
    }
    return fb;
}

namespace {

// pure-series solution x^sigma (1 + ...) of op, zero right-hand side;
// resonances must be unobstructed and are resolved by choosing 0
QSeries pure_solution(const ThetaOp& op, int sigma, int order, const LogSeries* rhs) {
    auto ind = op.indicial();
    LogSeries sol(order);
    QSeries s(order);
    s.set(sigma, Rat(1));
    if (rhs) s.set(sigma, Rat(0));
    sol.set_part(0, s);
    for (int n = (rhs ? 0 : sigma + 1); n <= order; ++n) {
        if (rhs && n < sigma) continue;
        // residual at order n determines coefficient n (if unobstructed)
        LogSeries res = op.apply(sol);
        if (rhs) res = res - *rhs;
        Rat r = res.part(0)[n];
        bool has_log = false;
        for (int k = 1; k < 4; ++k)
            if (res.part(k)[n] != 0) has_log = true;
        if (has_log) throw std::domain_error("pure_solution: log obstruction");
        Rat p0 = poly_eval(ind, Rat(n));
        if (p0 == 0) {
            if (r != 0) throw std::domain_error("pure_solution: obstructed resonance");
            continue; // canonical choice: coefficient stays 0
        }
        if (r == 0) continue;
        QSeries cur = sol.part(0);
        cur.set(n, cur[n] - r / p0);
        sol.set_part(0, cur);
    }
    LogSeries res = op.apply(sol);
    if (rhs) res = res - *rhs;
    if (!res.is_zero()) throw std::domain_error("pure_solution: recurrence inconsistency");
    return sol.part(0);
}

} // namespace

namespace {

// first obstructed-resonance residual of op(w) = rhs at exponent 0, or 0
// when a pure solution exists
std::optional<std::pair<int, Rat>> first_obstruction(const ThetaOp& op, const LogSeries& rhs,
                                                     int order) {
    auto ind = op.indicial();
    LogSeries sol(order);
    for (int n = 0; n <= order; ++n) {
        LogSeries res = op.apply(sol) - rhs;
        Rat r = res.part(0)[n];
        Rat p0 = poly_eval(ind, Rat(n));
        if (p0 == 0) {
            if (r != 0) return std::make_pair(n, r);
            continue;
        }
        if (r == 0) continue;
        QSeries cur = sol.part(0);
        cur.set(n, cur[n] - r / p0);
        sol.set_part(0, cur);
    }
    return std::nullopt;
}

} // namespace

ConifoldBasis frobenius_conifold(const ThetaOp& op, int order) {
    auto ind = op.indicial();
    // indicial roots must be {0,1,1,2}: P0(s) = c s (s-1)^2 (s-2)
    for (Rat root : {Rat(0), Rat(1), Rat(2)})
        if (poly_eval(ind, root) != 0)
            throw std::domain_error("frobenius_conifold: unexpected indicial roots");
    {
        auto d = poly_derivative(ind);
        if (poly_eval(d, Rat(1)) != 0)
            throw std::domain_error("frobenius_conifold: exponent 1 not a double root");
    }
    ConifoldBasis cb;
    cb.v0 = pure_solution(op, 0, order, nullptr);
    cb.v1 = pure_solution(op, 1, order, nullptr);
    cb.v2 = pure_solution(op, 2, order, nullptr);

    // The vanishing solution carrying the log partner is v1 + c v2 for the
    // unique c killing the resonance obstruction of op(w) = -dop(v1 + c v2);
    // the obstruction is affine in c.
    auto rhs_for = [&](const Rat& c) {
        LogSeries v(order);
        v.set_part(0, cb.v1 + cb.v2 * c);
        return op.apply_dlog(v) * Rat(-1);
    };
    auto ob0 = first_obstruction(op, rhs_for(Rat(0)), order);
    if (ob0) {
        auto ob1 = first_obstruction(op, rhs_for(Rat(1)), order);
        if (!ob1 || ob1->first != ob0->first)
            throw std::domain_error("frobenius_conifold: obstruction structure unexpected");
        Rat slope = ob1->second - ob0->second;
        if (slope == 0) throw std::domain_error("frobenius_conifold: obstruction not removable");
        Rat c = -ob0->second / slope;
        if (first_obstruction(op, rhs_for(c), order))
            throw std::domain_error("frobenius_conifold: higher obstruction remains");
        cb.v1 = cb.v1 + cb.v2 * c;
    }
    LogSeries rhs = rhs_for(Rat(0));
    {
        LogSeries v(order);
        v.set_part(0, cb.v1);
        rhs = op.apply_dlog(v) * Rat(-1);
    }
    QSeries w = pure_solution(op, 0, order, &rhs);
    cb.v3 = LogSeries(order);
    cb.v3.set_part(1, cb.v1);
    cb.v3.set_part(0, w);
    LogSeries res = op.apply(cb.v3);
    if (!res.is_zero()) throw std::domain_error("frobenius_conifold: log partner inconsistent");
    return cb;
}

} // namespace mq
