#include "mq/ratmat.hpp"
#include <stdexcept>

namespace mq {

RatMat RatMat::identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool RatMat::is_zero() const {
    for (const auto& x : a_) if (x != 0) return false;
    return true;
}

RatMat RatMat::operator+(const RatMat& b) const {
    if (r_ != b.r_ || c_ != b.c_) throw std::invalid_argument("RatMat: shape mismatch");
    RatMat m(r_, c_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + b.a_[k];
    return m;
}

RatMat RatMat::operator-(const RatMat& b) const {
    if (r_ != b.r_ || c_ != b.c_) throw std::invalid_argument("RatMat: shape mismatch");
    RatMat m(r_, c_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - b.a_[k];
    return m;
}

RatMat RatMat::operator*(const RatMat& b) const {
    if (c_ != b.r_) throw std::invalid_argument("RatMat: shape mismatch in product");
    RatMat m(r_, b.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < b.c_; ++j) {
                const Rat& y = b.at(k, j);
                if (y == 0) continue;
                m.at(i, j) += x * y;
            }
        }
    return m;
}

RatMat RatMat::operator*(const Rat& s) const {
    RatMat m(r_, c_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * s;
    return m;
}

RatMat RatMat::transpose() const {
    RatMat m(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool RatMat::operator==(const RatMat& b) const { return r_ == b.r_ && c_ == b.c_ && a_ == b.a_; }

RatMat RatMat::bracket(const RatMat& a, const RatMat& b) { return a * b - b * a; }

namespace {
// row-reduce [A | tail] in place; returns pivot columns of A
std::vector<int> rref(RatMat& m, int acols) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < acols && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m.at(i, col) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        Rat inv = Rat(1) / m.at(row, col);
        for (int j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Rat f = m.at(i, col);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}
} // namespace

std::optional<std::vector<Rat>> RatMat::solve(const std::vector<Rat>& rhs) const {
    if (static_cast<int>(rhs.size()) != r_) throw std::invalid_argument("RatMat::solve: rhs size");
    RatMat aug(r_, c_ + 1);
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, c_) = rhs[i];
    }
    auto pivots = rref(aug, c_);
    // inconsistency: zero row of A with nonzero rhs
    for (int i = static_cast<int>(pivots.size()); i < r_; ++i)
        if (aug.at(i, c_) != 0) return std::nullopt;
    std::vector<Rat> x(c_);
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(static_cast<int>(k), c_);
    return x;
}

std::vector<std::vector<Rat>> RatMat::nullspace() const {
    RatMat m = *this;
    auto pivots = rref(m, c_);
    std::vector<bool> is_pivot(c_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < c_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(c_);
        v[free] = 1;
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(static_cast<int>(k), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rat RatMat::det() const {
    if (r_ != c_) throw std::invalid_argument("RatMat::det: not square");
    RatMat m = *this;
    Rat d(1);
    for (int col = 0; col < c_; ++col) {
        int p = -1;
        for (int i = col; i < r_; ++i)
            if (m.at(i, col) != 0) { p = i; break; }
        if (p < 0) return Rat(0);
        if (p != col) {
            for (int j = 0; j < c_; ++j) std::swap(m.at(p, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Rat inv = Rat(1) / m.at(col, col);
        for (int i = col + 1; i < r_; ++i) {
            if (m.at(i, col) == 0) continue;
            Rat f = m.at(i, col) * inv;
            for (int j = col; j < c_; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

} // namespace mq
