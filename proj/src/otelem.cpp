#include "mq/otelem.hpp"
#include <sstream>

namespace mq {

// ---- LaurentQ ------------------------------------------------------------

LaurentQ LaurentQ::from(const QSeries& s) { return LaurentQ{0, s}.normalized(); }

LaurentQ LaurentQ::normalized() const {
    if (u.is_zero()) return {0, u};
    int v = u.valuation();
    if (v == 0) return *this;
    // shift down by v
    QSeries w(u.order() - v);
    for (int n = 0; n + v <= u.order(); ++n) w.set(n, u[n + v]);
    return {val + v, w};
}

LaurentQ LaurentQ::operator+(const LaurentQ& b) const {
    if (u.is_zero()) return b;
    if (b.u.is_zero()) return *this;
    int v = std::min(val, b.val);
    int N = std::min(u.order() + val, b.u.order() + b.val) - v;
    QSeries s(N);
    for (int n = 0; n <= N; ++n) {
        Rat x;
        int i = n + v - val;
        if (i >= 0 && i <= u.order()) x += u[i];
        int j = n + v - b.val;
        if (j >= 0 && j <= b.u.order()) x += b.u[j];
        s.set(n, x);
    }
    return LaurentQ{v, s}.normalized();
}

LaurentQ LaurentQ::operator-(const LaurentQ& b) const { return *this + (b * Rat(-1)); }

LaurentQ LaurentQ::operator*(const LaurentQ& b) const {
    return LaurentQ{val + b.val, u * b.u}.normalized();
}

LaurentQ LaurentQ::operator*(const Rat& s) const { return {val, u * s}; }

LaurentQ LaurentQ::inverse() const {
    if (u.is_zero() || u[0] == 0) throw std::domain_error("LaurentQ: inverse of non-unit");
    return {-val, u.inverse()};
}

LaurentQ LaurentQ::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    LaurentQ r{0, QSeries::one(u.order())};
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

Rat LaurentQ::coeff(int n) const {
    int i = n - val;
    if (i < 0 || i > u.order()) return Rat(0);
    return u[i];
}

// ---- OTElement -----------------------------------------------------------

OTElement::OTElement(WeightedPoly num, int a, int b, int c)
    : num_(std::move(num)), a_(a), b_(b), c_(c) {
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("OTElement: negative denominator exponent");
    normalize();
}

void OTElement::normalize() {
    if (num_.is_zero()) { a_ = b_ = c_ = 0; return; }
    static const WeightedPoly t5 = wp_var(5);
    static const WeightedPoly t4 = wp_var(4);
    static const WeightedPoly disc = wp_disc();
    WeightedPoly q;
    while (a_ > 0 && num_.exact_div(t5, q)) { num_ = q; --a_; }
    while (b_ > 0 && num_.exact_div(t4, q)) { num_ = q; --b_; }
    while (c_ > 0 && num_.exact_div(disc, q)) { num_ = q; --c_; }
}

static WeightedPoly denom_power(int a, int b, int c) {
    WeightedPoly d = wp_const(Rat(1));
    if (a > 0) d = d * wp_var(5, a);
    if (b > 0) d = d * wp_var(4, b);
    for (int i = 0; i < c; ++i) d = d * wp_disc();
    return d;
}

OTElement OTElement::operator+(const OTElement& o) const {
    int A = std::max(a_, o.a_), B = std::max(b_, o.b_), C = std::max(c_, o.c_);
    WeightedPoly n1 = num_ * denom_power(A - a_, B - b_, C - c_);
    WeightedPoly n2 = o.num_ * denom_power(A - o.a_, B - o.b_, C - o.c_);
    return OTElement(n1 + n2, A, B, C);
}

OTElement OTElement::operator-(const OTElement& o) const { return *this + (-o); }

OTElement OTElement::operator-() const {
    OTElement r = *this;
    r.num_ = -r.num_;
    return r;
}

OTElement OTElement::operator*(const OTElement& o) const {
    return OTElement(num_ * o.num_, a_ + o.a_, b_ + o.b_, c_ + o.c_);
}

OTElement OTElement::operator*(const Rat& s) const {
    if (s == 0) return OTElement();
    OTElement r = *this;
    r.num_ = r.num_ * s;
    return r;
}

bool OTElement::operator==(const OTElement& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && num_ == o.num_;
}

OTElement OTElement::partial(int i) const {
    // d(num / (t5^a t4^b disc^c)) with the quotient rule; disc' wrt t0 is -5 t0^4
    WeightedPoly dnum = num_.derivative(i);
    WeightedPoly extra; // num * d(log denominator) * denominator
    if (a_ > 0 && i == 5) extra = extra + num_ * Rat(a_) * denom_power(0, 1, 1);
    if (b_ > 0 && i == 4) extra = extra + num_ * Rat(b_) * denom_power(1, 0, 1);
    if (c_ > 0) {
        WeightedPoly ddisc; // derivative of (t4 - t0^5)
        if (i == 4) ddisc = wp_const(Rat(1));
        if (i == 0) ddisc = wp_const(Rat(-5)) * wp_var(0, 4);
        if (!ddisc.is_zero()) extra = extra + num_ * Rat(c_) * ddisc * denom_power(1, 1, 0);
    }
    WeightedPoly n = dnum * denom_power(1, 1, 1) - extra;
    return OTElement(n, a_ + 1, b_ + 1, c_ + 1);
}

std::pair<bool, long> OTElement::grading(char which) const {
    std::function<long(const Monomial7&)> deg;
    long dden = 0;
    switch (which) {
        case 'w':
            deg = grade_w;
            dden = 11L * a_ + 15L * b_ + 15L * c_;
            break;
        case '0':
            deg = grade_e0;
            dden = 3L * a_ + 5L * b_ + 5L * c_;
            break;
        case '1':
            deg = grade_e1;
            dden = 1L * a_;
            break;
        default:
            throw std::invalid_argument("OTElement::grading: which must be 'w','0','1'");
    }
    auto [hom, d] = num_.graded_degree(deg);
    return {hom, d - dden};
}

QSeries OTElement::eval_series(const std::array<QSeries, 7>& vals) const {
    int N = vals[0].order();
    for (const auto& v : vals) N = std::min(N, v.order());
    QSeries one = QSeries::one(N);
    QSeries n = num_.eval<QSeries>(
        {vals[0].truncated(N), vals[1].truncated(N), vals[2].truncated(N),
         vals[3].truncated(N), vals[4].truncated(N), vals[5].truncated(N),
         vals[6].truncated(N)},
        one);
    QSeries d = one;
    if (a_ > 0) d = d * vals[5].truncated(N).pow(a_);
    if (b_ > 0) d = d * vals[4].truncated(N).pow(b_);
    if (c_ > 0) d = d * (vals[4].truncated(N) - vals[0].truncated(N).pow(5)).pow(c_);
    if (d[0] == 0)
        throw std::domain_error("OTElement::eval_series: denominator vanishes at the expansion point");
    return n / d;
}

LaurentQ OTElement::eval_laurent(const std::array<LaurentQ, 7>& vals) const {
    int N = vals[0].u.order();
    LaurentQ one{0, QSeries::one(N)};
    LaurentQ n = num_.eval<LaurentQ>(vals, one);
    LaurentQ d = one;
    if (a_ > 0) d = d * vals[5].pow(a_);
    if (b_ > 0) d = d * vals[4].pow(b_);
    if (c_ > 0) d = d * (vals[4] - vals[0].pow(5)).pow(c_);
    if (d.is_zero()) throw std::domain_error("OTElement::eval_laurent: zero denominator");
    return n * d.inverse();
}

std::string OTElement::str() const {
    std::ostringstream os;
    if (is_polynomial()) return wpoly_str(num_);
    os << "(" << wpoly_str(num_) << ") / (";
    bool first = true;
    auto piece = [&](const std::string& name, int e) {
        if (e == 0) return;
        if (!first) os << " * ";
        first = false;
        os << name;
        if (e > 1) os << "^" << e;
    };
    piece("t5", a_);
    piece("t4", b_);
    piece("disc", c_);
    os << ")";
    return os.str();
}

OTElement OTElement::parse(const std::string& text) {
    auto slash = text.find(") / (");
    if (slash == std::string::npos) return OTElement(wpoly_parse(text));
    auto open = text.find('(');
    std::string numtxt = text.substr(open + 1, slash - open - 1);
    std::string dentxt = text.substr(slash + 5);
    auto close = dentxt.rfind(')');
    dentxt = dentxt.substr(0, close);
    int a = 0, b = 0, c = 0;
    size_t i = 0;
    while (i < dentxt.size()) {
        if (isspace(static_cast<unsigned char>(dentxt[i])) || dentxt[i] == '*') { ++i; continue; }
        int* slot = nullptr;
        if (dentxt.compare(i, 4, "disc") == 0) { slot = &c; i += 4; }
        else if (dentxt.compare(i, 2, "t5") == 0) { slot = &a; i += 2; }
        else if (dentxt.compare(i, 2, "t4") == 0) { slot = &b; i += 2; }
        else throw std::invalid_argument("OTElement::parse: bad denominator '" + dentxt + "'");
        int e = 1;
        if (i < dentxt.size() && dentxt[i] == '^') {
            ++i;
            size_t k = i;
            while (k < dentxt.size() && isdigit(static_cast<unsigned char>(dentxt[k]))) ++k;
            e = std::stoi(dentxt.substr(i, k - i));
            i = k;
        }
        *slot += e;
    }
    return OTElement(wpoly_parse(numtxt), a, b, c);
}

std::optional<OTElement> ot_divide_exact(const OTElement& a, const OTElement& b) {
    if (b.is_zero()) throw std::domain_error("ot_divide_exact: division by zero");
    if (a.is_zero()) return OTElement();
    // split the divisor numerator into distinguished factors (units of the
    // localized ring) times a core coprime to them
    WeightedPoly core = b.num();
    int i5 = 0, i4 = 0, ic = 0;
    WeightedPoly q;
    while (core.exact_div(wp_var(5), q)) { core = q; ++i5; }
    while (core.exact_div(wp_var(4), q)) { core = q; ++i4; }
    while (core.exact_div(wp_disc(), q)) { core = q; ++ic; }
    // a/b = (a.num * D_b) / (core * t5^i5 t4^i4 disc^ic * D_a)
    WeightedPoly n;
    if (!a.num().exact_div(core, n)) return std::nullopt;
    if (b.pow_t5() > 0) n = n * wp_var(5, b.pow_t5());
    if (b.pow_t4() > 0) n = n * wp_var(4, b.pow_t4());
    for (int k = 0; k < b.pow_disc(); ++k) n = n * wp_disc();
    return OTElement(n, a.pow_t5() + i5, a.pow_t4() + i4, a.pow_disc() + ic);
}

} // namespace mq
