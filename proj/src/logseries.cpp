#include "mq/logseries.hpp"

namespace mq {

LogSeries::LogSeries(int order) {
    for (auto& p : parts_) p = QSeries(order);
}

LogSeries::LogSeries(const QSeries& pure) {
    for (auto& p : parts_) p = QSeries(pure.order());
    parts_[0] = pure;
}

LogSeries LogSeries::tau(int order) {
    LogSeries t(order);
    t.parts_[1] = QSeries::one(order);
    return t;
}

void LogSeries::set_part(int k, const QSeries& s) { parts_.at(k) = s; }

int LogSeries::log_degree() const {
    for (int k = 3; k >= 1; --k) if (!parts_[k].is_zero()) return k;
    return 0;
}

bool LogSeries::is_zero() const {
    for (const auto& p : parts_) if (!p.is_zero()) return false;
    return true;
}

QSeries LogSeries::pure() const {
    if (!is_pure()) throw std::domain_error("LogSeries: nonzero log part where pure series expected");
    return parts_[0];
}

LogSeries LogSeries::operator+(const LogSeries& b) const {
    LogSeries r(std::min(order(), b.order()));
    for (int k = 0; k < 4; ++k) r.parts_[k] = parts_[k] + b.parts_[k];
    return r;
}

LogSeries LogSeries::operator-(const LogSeries& b) const {
    LogSeries r(std::min(order(), b.order()));
    for (int k = 0; k < 4; ++k) r.parts_[k] = parts_[k] - b.parts_[k];
    return r;
}

LogSeries LogSeries::operator-() const {
    LogSeries r(order());
    for (int k = 0; k < 4; ++k) r.parts_[k] = -parts_[k];
    return r;
}

LogSeries LogSeries::operator*(const LogSeries& b) const {
    LogSeries r(std::min(order(), b.order()));
    for (int i = 0; i < 4; ++i) {
        if (parts_[i].is_zero()) continue;
        for (int j = 0; j < 4; ++j) {
            if (b.parts_[j].is_zero()) continue;
            QSeries prod = parts_[i] * b.parts_[j];
            if (prod.is_zero()) continue;
            if (i + j > 3)
                throw std::domain_error("LogSeries: log degree overflow (> 3)");
            r.parts_[i + j] = r.parts_[i + j] + prod;
        }
    }
    return r;
}

LogSeries LogSeries::operator*(const Rat& s) const {
    LogSeries r(order());
    for (int k = 0; k < 4; ++k) r.parts_[k] = parts_[k] * s;
    return r;
}

LogSeries LogSeries::mul_pure(const QSeries& s) const {
    LogSeries r(std::min(order(), s.order()));
    for (int k = 0; k < 4; ++k) r.parts_[k] = parts_[k] * s;
    return r;
}

LogSeries LogSeries::div_pure(const QSeries& s) const {
    QSeries inv = s.inverse();
    return mul_pure(inv);
}

LogSeries LogSeries::theta() const {
    // theta(tau^k f) = tau^k theta(f) + k tau^{k-1} f
    LogSeries r(order());
    for (int k = 0; k < 4; ++k) {
        r.parts_[k] = r.parts_[k] + parts_[k].theta();
        if (k >= 1) r.parts_[k - 1] = r.parts_[k - 1] + parts_[k] * Rat(k);
    }
    return r;
}

LogSeries LogSeries::compose(const QSeries& inner, const QSeries& shift) const {
    int N = std::min(order(), inner.order());
    // tau_z^k -> (tau + shift)^k expanded binomially
    std::array<QSeries, 4> comp; // composed pure parts
    for (int k = 0; k < 4; ++k) comp[k] = parts_[k].compose(inner.truncated(N));
    LogSeries r(N);
    // binomial coefficients up to 3
    static const long binom[4][4] = {{1,0,0,0},{1,1,0,0},{1,2,1,0},{1,3,3,1}};
    std::array<QSeries, 4> shift_pow;
    shift_pow[0] = QSeries::one(N);
    for (int j = 1; j < 4; ++j) shift_pow[j] = shift_pow[j - 1] * shift.truncated(N);
    for (int k = 0; k < 4; ++k) {
        if (comp[k].is_zero()) continue;
        for (int j = 0; j <= k; ++j) {
            // tau^j * shift^{k-j}
            QSeries add = comp[k] * shift_pow[k - j] * Rat(binom[k][j]);
            r.parts_[j] = r.parts_[j] + add;
        }
    }
    return r;
}

bool LogSeries::operator==(const LogSeries& b) const {
    for (int k = 0; k < 4; ++k) if (!(parts_[k] == b.parts_[k])) return false;
    return true;
}

} // namespace mq
