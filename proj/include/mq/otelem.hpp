#ifndef MQ_OTELEM_HPP
#define MQ_OTELEM_HPP

#include "mq/poly.hpp"
#include "mq/qseries.hpp"
#include <optional>

namespace mq {

// Laurent series q^val * u, minimal support for expansions at points where
// the distinguished denominators vanish.
struct LaurentQ {
    int val{0};
    QSeries u; // unit part, u[0] may be zero only for the zero element

    static LaurentQ zero(int order) { return {0, QSeries::zero(order)}; }
    static LaurentQ from(const QSeries& s);
    bool is_zero() const { return u.is_zero(); }
    LaurentQ normalized() const; // pull valuation out of u
    LaurentQ operator+(const LaurentQ& b) const;
    LaurentQ operator-(const LaurentQ& b) const;
    LaurentQ operator*(const LaurentQ& b) const;
    LaurentQ operator*(const Rat& s) const;
    LaurentQ inverse() const;
    LaurentQ pow(int e) const;
    // coefficient of q^n
    Rat coeff(int n) const;
};

// Element of the coordinate ring of the enhanced moduli space: a polynomial
// numerator over the distinguished denominator t5^a * t4^b * disc^c with
// disc = t4 - t0^5. Kept normalized: whenever an exponent is positive the
// numerator is not exactly divisible by the corresponding factor.
class OTElement {
public:
    OTElement() = default;
    OTElement(WeightedPoly num, int a, int b, int c);
    explicit OTElement(const WeightedPoly& num) : OTElement(num, 0, 0, 0) {}

    static OTElement constant(const Rat& v) { return OTElement(wp_const(v)); }
    static OTElement var(int i, int power = 1) { return OTElement(wp_var(i, power)); }

    const WeightedPoly& num() const { return num_; }
    int pow_t5() const { return a_; }
    int pow_t4() const { return b_; }
    int pow_disc() const { return c_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return a_ == 0 && b_ == 0 && c_ == 0; }

    OTElement operator+(const OTElement& b) const;
    OTElement operator-(const OTElement& b) const;
    OTElement operator-() const;
    OTElement operator*(const OTElement& b) const;
    OTElement operator*(const Rat& s) const;
    bool operator==(const OTElement& b) const;

    OTElement partial(int i) const;

    // (homogeneous?, degree) under grading which in {'w','0','1'}
    std::pair<bool, long> grading(char which) const;

    QSeries eval_series(const std::array<QSeries, 7>& vals) const;
    LaurentQ eval_laurent(const std::array<LaurentQ, 7>& vals) const;

    std::string str() const;
    static OTElement parse(const std::string& text);

private:
    void normalize();
    WeightedPoly num_;
    int a_{0}, b_{0}, c_{0};
};

// exact division inside the ring; empty when the quotient is not in O_T
std::optional<OTElement> ot_divide_exact(const OTElement& a, const OTElement& b);

} // namespace mq

#endif
