#ifndef MQ_PFODE_HPP
#define MQ_PFODE_HPP

#include "mq/logseries.hpp"
#include <map>
#include <vector>

namespace mq {

// Differential operator sum_j x^j P_j(D) with D = x d/dx and rational
// polynomial coefficients; j may be negative during construction.
class ThetaOp {
public:
    ThetaOp() = default;
    // single term x^j P(D)
    ThetaOp(int j, std::vector<Rat> pcoeffs);

    static ThetaOp identity();
    static ThetaOp theta();              // D
    static ThetaOp times_x(int power);   // multiplication by x^power

    const std::map<int, std::vector<Rat>>& terms() const { return t_; }

    ThetaOp operator+(const ThetaOp& b) const;
    ThetaOp operator-(const ThetaOp& b) const;
    ThetaOp operator*(const ThetaOp& b) const; // operator composition
    ThetaOp operator*(const Rat& s) const;

    int min_power() const; // smallest j with nonzero P_j
    ThetaOp shifted(int k) const; // multiply by x^k on the left

    // indicial polynomial P_0 after normalizing min_power to 0
    std::vector<Rat> indicial() const;

    // apply to a log-series in x (tau = log x); truncation order preserved
    LogSeries apply(const LogSeries& f) const;

    // apply with every P_j replaced by its derivative P_j' (the log-shift
    // part: op(tau f) = tau op(f) + dop(f))
    LogSeries apply_dlog(const LogSeries& f) const;

private:
    std::map<int, std::vector<Rat>> t_;
};

// the quintic operator D^4 - 5x(5D+1)(5D+2)(5D+3)(5D+4) at the MUM point
ThetaOp quintic_pf_operator();

// the same operator rewritten at the conifold, x = (1 - delta 5^5 z ...):
// substitution z = (1-delta)/5^5, normalized to nonnegative powers
ThetaOp quintic_pf_conifold();

// Frobenius basis at a maximal unipotent point: y_k = sum_{j<=k}
// tau^j/j! s_{k-j}(x), with s_0(0)=1, s_m(0)=0. Requires the indicial
// polynomial to be (s - rho)^4.
struct FrobeniusBasis {
    std::array<LogSeries, 4> y; // solutions in increasing log degree
    std::array<QSeries, 4> s;   // pure parts
};
FrobeniusBasis frobenius_mum(const ThetaOp& op, int order);

// Frobenius-type basis at the quintic conifold: indicial roots {0,1,1,2};
// three pure solutions normalized x^sigma(1+...) and one log solution
// v3 = v1 log x + w.
struct ConifoldBasis {
    QSeries v0, v1, v2; // exponents 0, 1, 2
    LogSeries v3;       // v1 log + pure tail
};
ConifoldBasis frobenius_conifold(const ThetaOp& op, int order);

} // namespace mq

#endif
