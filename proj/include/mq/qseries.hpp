#ifndef MQ_QSERIES_HPP
#define MQ_QSERIES_HPP

#include "mq/rat.hpp"
#include <vector>
#include <string>

namespace mq {

// Truncated power series with exact rational coefficients.
// Coefficients are indexed by exponent 0..order (inclusive); nothing past
// the truncation order is ever reported. Binary operations truncate to the
// smaller order of the two operands.
class QSeries {
public:
    QSeries() : order_(0), c_(1) {}
    explicit QSeries(int order) : order_(order), c_(order + 1) {}
    QSeries(std::vector<Rat> coeffs, int order);

    static QSeries constant(const Rat& v, int order);
    static QSeries one(int order) { return constant(Rat(1), order); }
    static QSeries zero(int order) { return constant(Rat(0), order); }
    // the variable q itself
    static QSeries var(int order);

    int order() const { return order_; }
    const Rat& operator[](int n) const;
    void set(int n, const Rat& v);

    bool is_zero() const;
    // smallest n with c_n != 0, or order+1 if identically zero
    int valuation() const;

    QSeries truncated(int new_order) const;

    QSeries operator+(const QSeries& b) const;
    QSeries operator-(const QSeries& b) const;
    QSeries operator-() const;
    QSeries operator*(const QSeries& b) const;
    QSeries operator*(const Rat& s) const;
    // requires b(0) != 0
    QSeries operator/(const QSeries& b) const;

    QSeries inverse() const;       // requires c_0 != 0
    QSeries pow(long e) const;     // e >= 0, or e<0 with invertible base

    // substitute b into this; requires b(0) = 0
    QSeries compose(const QSeries& b) const;
    // compositional inverse; requires c_0 = 0 and c_1 != 0
    QSeries reverse() const;

    QSeries exp() const;           // requires c_0 = 0
    QSeries log() const;           // requires c_0 = 1
    QSeries theta() const;         // q d/dq
    // antiderivative of theta: coefficient n -> c_n / n; requires c_0 = 0
    QSeries theta_integral() const;

    bool operator==(const QSeries& b) const;

    std::string str() const;                       // "c0 + c1*q + ... + O(q^N)"
    static QSeries parse(const std::string& text); // exact round trip

private:
    int order_;
    std::vector<Rat> c_;
};

inline QSeries operator*(const Rat& s, const QSeries& a) { return a * s; }

} // namespace mq

#endif
