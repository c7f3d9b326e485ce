#ifndef MQ_RATMAT_HPP
#define MQ_RATMAT_HPP

#include "mq/rat.hpp"
#include <vector>
#include <optional>

namespace mq {

// Dense matrix over Q, row major.
class RatMat {
public:
    RatMat() : r_(0), c_(0) {}
    RatMat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static RatMat identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    bool is_zero() const;
    RatMat operator+(const RatMat& b) const;
    RatMat operator-(const RatMat& b) const;
    RatMat operator*(const RatMat& b) const;
    RatMat operator*(const Rat& s) const;
    RatMat transpose() const;
    bool operator==(const RatMat& b) const;

    // [a,b] = ab - ba
    static RatMat bracket(const RatMat& a, const RatMat& b);

    // solve A x = rhs exactly; empty when inconsistent. When the system is
    // underdetermined the particular solution sets free variables to 0.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& rhs) const;

    // basis of the right null space
    std::vector<std::vector<Rat>> nullspace() const;

    Rat det() const;

private:
    int r_, c_;
    std::vector<Rat> a_;
};

} // namespace mq

#endif
