#ifndef MQ_LOGSERIES_HPP
#define MQ_LOGSERIES_HPP

#include "mq/qseries.hpp"
#include <array>

namespace mq {

// Element of Q[[q]][tau] with tau = log q treated as a formal symbol,
// tau-degree at most 3 (Frobenius basis of an order-4 operator). part(k)
// is the coefficient series of tau^k. theta() acts as q d/dq with
// theta(tau) = 1. Products raising the tau-degree past 3 with a nonzero
// coefficient throw.
class LogSeries {
public:
    LogSeries() = default;
    explicit LogSeries(int order);
    explicit LogSeries(const QSeries& pure);

    static LogSeries tau(int order); // the symbol log q

    int order() const { return parts_[0].order(); }
    const QSeries& part(int k) const { return parts_.at(k); }
    void set_part(int k, const QSeries& s);

    int log_degree() const; // largest k with part(k) nonzero, or 0
    bool is_pure() const { return log_degree() == 0; }
    bool is_zero() const;
    // requires is_pure()
    QSeries pure() const;

    LogSeries operator+(const LogSeries& b) const;
    LogSeries operator-(const LogSeries& b) const;
    LogSeries operator-() const;
    LogSeries operator*(const LogSeries& b) const;
    LogSeries operator*(const Rat& s) const;
    LogSeries mul_pure(const QSeries& s) const;
    // divide by a pure series with nonzero constant term
    LogSeries div_pure(const QSeries& s) const;

    LogSeries theta() const;

    // substitute q -> inner(q'), tau -> tau + shift(q'), where inner has
    // zero constant term and nonzero linear term and shift is pure.
    // This is the change of expansion variable z -> z(q) with
    // log z = log q + shift.
    LogSeries compose(const QSeries& inner, const QSeries& shift) const;

    bool operator==(const LogSeries& b) const;

private:
    std::array<QSeries, 4> parts_;
};

inline LogSeries operator*(const Rat& s, const LogSeries& a) { return a * s; }

} // namespace mq

#endif
