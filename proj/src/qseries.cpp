#include "mq/qseries.hpp"
#include <algorithm>
#include <sstream>

namespace mq {

QSeries::QSeries(std::vector<Rat> coeffs, int order) : order_(order), c_(std::move(coeffs)) {
    if (order_ < 0) throw std::invalid_argument("QSeries: negative order");
    c_.resize(order_ + 1);
}

QSeries QSeries::constant(const Rat& v, int order) {
    QSeries s(order);
    s.c_[0] = v;
    return s;
}

QSeries QSeries::var(int order) {
    QSeries s(order);
    if (order >= 1) s.c_[1] = 1;
    return s;
}

const Rat& QSeries::operator[](int n) const {
    static const Rat zero{};
    if (n < 0 || n > order_) return zero;
    return c_[n];
}

void QSeries::set(int n, const Rat& v) {
    if (n < 0 || n > order_) throw std::out_of_range("QSeries::set past truncation order");
    c_[n] = v;
}

bool QSeries::is_zero() const {
    for (const auto& x : c_) if (x != 0) return false;
    return true;
}

int QSeries::valuation() const {
    for (int n = 0; n <= order_; ++n) if (c_[n] != 0) return n;
    return order_ + 1;
}

QSeries QSeries::truncated(int new_order) const {
    QSeries r(new_order);
    for (int n = 0; n <= std::min(order_, new_order); ++n) r.c_[n] = c_[n];
    return r;
}

QSeries QSeries::operator+(const QSeries& b) const {
    int N = std::min(order_, b.order_);
    QSeries r(N);
    for (int n = 0; n <= N; ++n) r.c_[n] = c_[n] + b.c_[n];
    return r;
}

QSeries QSeries::operator-(const QSeries& b) const {
    int N = std::min(order_, b.order_);
    QSeries r(N);
    for (int n = 0; n <= N; ++n) r.c_[n] = c_[n] - b.c_[n];
    return r;
}

QSeries QSeries::operator-() const {
    QSeries r(order_);
    for (int n = 0; n <= order_; ++n) r.c_[n] = -c_[n];
    return r;
}

QSeries QSeries::operator*(const QSeries& b) const {
    int N = std::min(order_, b.order_);
    QSeries r(N);
    for (int i = 0; i <= N; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; i + j <= N; ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] += c_[i] * b.c_[j];
        }
    }
    return r;
}

QSeries QSeries::operator*(const Rat& s) const {
    QSeries r(order_);
    for (int n = 0; n <= order_; ++n) r.c_[n] = c_[n] * s;
    return r;
}

QSeries QSeries::inverse() const {
    if (c_[0] == 0) throw std::domain_error("QSeries: inverse of series with zero constant term");
    QSeries r(order_);
    Rat inv0 = Rat(1) / c_[0];
    r.c_[0] = inv0;
    for (int n = 1; n <= order_; ++n) {
        Rat acc;
        for (int k = 1; k <= n; ++k) acc += c_[k] * r.c_[n - k];
        r.c_[n] = -inv0 * acc;
    }
    return r;
}

QSeries QSeries::operator/(const QSeries& b) const {
    if (b[0] == 0) throw std::domain_error("QSeries: division by series with zero constant term");
    int N = std::min(order_, b.order_);
    return truncated(N) * b.truncated(N).inverse();
}

QSeries QSeries::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QSeries r = one(order_);
    QSeries base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

QSeries QSeries::compose(const QSeries& b) const {
    if (b[0] != 0) throw std::domain_error("QSeries: compose requires inner constant term zero");
    int N = std::min(order_, b.order());
    // Horner from the top coefficient down
    QSeries r = constant(c_[std::min(order_, N)], N);
    r = constant(Rat(0), N);
    for (int k = std::min(order_, N); k >= 0; --k) {
        r = r * b.truncated(N);
        r.c_[0] += c_[k];
    }
    return r;
}

QSeries QSeries::reverse() const {
    if (c_[0] != 0) throw std::domain_error("QSeries: reversion requires zero constant term");
    if (order_ < 1 || c_[1] == 0)
        throw std::domain_error("QSeries: reversion requires nonzero linear term");
    int N = order_;
    QSeries r(N);
    r.c_[1] = Rat(1) / c_[1];
    for (int n = 2; n <= N; ++n) {
        // a(r_{<n}) has correct coefficients below n; fix order n with the
        // linear term a_1 * r_n.
        QSeries e = compose(r);
        r.c_[n] = -e.c_[n] / c_[1];
    }
    return r;
}

QSeries QSeries::exp() const {
    if (c_[0] != 0) throw std::domain_error("QSeries: exp requires zero constant term");
    // E' = a' E  =>  n E_n = sum_{k=1..n} k a_k E_{n-k}
    QSeries r(order_);
    r.c_[0] = 1;
    for (int n = 1; n <= order_; ++n) {
        Rat acc;
        for (int k = 1; k <= n; ++k) acc += Rat(k) * c_[k] * r.c_[n - k];
        r.c_[n] = acc / n;
    }
    return r;
}

QSeries QSeries::log() const {
    if (c_[0] != 1) throw std::domain_error("QSeries: log requires constant term one");
    // L' = a'/a  =>  n L_n = n a_n - sum_{k=1..n-1} k L_k a_{n-k}
    QSeries r(order_);
    for (int n = 1; n <= order_; ++n) {
        Rat acc = Rat(n) * c_[n];
        for (int k = 1; k < n; ++k) acc -= Rat(k) * r.c_[k] * c_[n - k];
        r.c_[n] = acc / n;
    }
    return r;
}

QSeries QSeries::theta() const {
    QSeries r(order_);
    for (int n = 0; n <= order_; ++n) r.c_[n] = Rat(n) * c_[n];
    return r;
}

QSeries QSeries::theta_integral() const {
    if (c_[0] != 0) throw std::domain_error("QSeries: theta_integral requires zero constant term");
    QSeries r(order_);
    for (int n = 1; n <= order_; ++n) r.c_[n] = c_[n] / n;
    return r;
}

bool QSeries::operator==(const QSeries& b) const {
    int N = std::min(order_, b.order_);
    for (int n = 0; n <= N; ++n) if (c_[n] != b.c_[n]) return false;
    return true;
}

std::string QSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= order_; ++n) {
        if (c_[n] == 0) continue;
        Rat a = c_[n];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (n == 0) {
            os << rat_str(a);
        } else {
            if (a != 1) os << rat_str(a) << "*";
            os << "q";
            if (n > 1) os << "^" << n;
        }
    }
    if (first) os << "0";
    os << " + O(q^" << (order_ + 1) << ")";
    return os.str();
}

QSeries QSeries::parse(const std::string& text) {
    // grammar: term (+|-) term ... + O(q^N); term = rat | rat*q^k | q^k | q
    auto fail = [&]() { throw std::invalid_argument("QSeries::parse: bad input '" + text + "'"); };
    std::string s = text;
    auto opos = s.find("O(q^");
    if (opos == std::string::npos) fail();
    int order = 0;
    {
        auto close = s.find(')', opos);
        if (close == std::string::npos) fail();
        order = std::stoi(s.substr(opos + 4, close - opos - 4)) - 1;
        if (order < 0) fail();
    }
    s = s.substr(0, opos);
    // strip trailing "+"
    QSeries r(order);
    size_t i = 0;
    auto skipws = [&]() { while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i; };
    int sign = 1;
    bool expect_term = true;
    skipws();
    while (true) {
        skipws();
        if (i >= s.size()) break;
        if (s[i] == '+') { sign = 1; ++i; expect_term = true; continue; }
        if (s[i] == '-') { sign = -1; ++i; expect_term = true; continue; }
        if (!expect_term) fail();
        // coefficient
        Rat coef(1);
        bool have_coef = false;
        size_t j = i;
        while (j < s.size() && (isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
        if (j > i) {
            coef = rat_from_string(s.substr(i, j - i));
            have_coef = true;
            i = j;
        }
        skipws();
        int expn = 0;
        if (i < s.size() && s[i] == '*') { ++i; skipws(); }
        if (i < s.size() && s[i] == 'q') {
            ++i;
            expn = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t k = i;
                while (k < s.size() && isdigit(static_cast<unsigned char>(s[k]))) ++k;
                if (k == i) fail();
                expn = std::stoi(s.substr(i, k - i));
                i = k;
            }
        } else if (!have_coef) {
            fail();
        }
        if (expn <= order) r.c_[expn] += Rat(sign) * coef;
        sign = 1;
        expect_term = false;
    }
    return r;
}

} // namespace mq
