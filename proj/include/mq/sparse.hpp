#ifndef MQ_SPARSE_HPP
#define MQ_SPARSE_HPP

#include "mq/rat.hpp"
#include <map>
#include <optional>
#include <vector>

namespace mq {

// Sparse exact linear system A x = b over Q. Elimination uses Markowitz-style
// pivoting with a fixed deterministic tie break, so identical inputs produce
// identical elimination paths.
class SparseSystem {
public:
    SparseSystem(int rows, int cols) : rows_(rows), cols_(cols), a_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add(int r, int c, const Rat& v);
    void set_rhs(int r, const Rat& v);

    struct Solution {
        bool consistent{false};
        std::vector<Rat> particular;            // free variables set to 0
        std::vector<std::vector<Rat>> kernel;   // right null space basis
        // first inconsistent row residual when !consistent
        Rat offending_residual;
        int offending_row{-1};
    };

    enum class Mode { Rational, Modular };

    Solution solve(Mode mode = Mode::Rational) const;

    // exact residual check A x - b
    bool verify(const std::vector<Rat>& x) const;

private:
    Solution solve_rational() const;
    Solution solve_modular() const;

    int rows_, cols_;
    std::vector<std::map<int, Rat>> a_;
    std::map<int, Rat> b_;
};

} // namespace mq

#endif
