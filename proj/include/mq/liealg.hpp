#ifndef MQ_LIEALG_HPP
#define MQ_LIEALG_HPP

#include "mq/ratmat.hpp"
#include <string>
#include <vector>

namespace mq {

// Constant linear algebra for the symmetry group of an enhanced moduli
// space with h-dimensional middle blocks: matrices are (2h+2)x(2h+2),
// block partition 1 + h + h + 1.
struct LieBasisElement {
    std::string name;
    RatMat mat;
};

// intersection matrix
RatMat build_phi(int h);

// block index (0..3) of a row/column under the 1+h+h+1 partition
int block_of(int index, int h);

// canonical basis of the Lie algebra; size (3h^2+5h+4)/2
std::vector<LieBasisElement> canonical_basis(int h);

long lie_dim(int h); // (3h^2+5h+4)/2

// membership: block triangular with nonzero blocks on or below the
// diagonal (the printed convention) and  g^T Phi + Phi g = 0
bool is_in_lie(const RatMat& m, int h);

// exact expansion of m over the canonical basis; empty when m is outside
// the span. Residual is verified to vanish.
std::optional<std::vector<Rat>> decompose_in_basis(const RatMat& m, int h);

struct ClosureReport {
    bool closed{true};
    int pairs_checked{0};
    std::vector<std::string> failures;
};

// brackets of all basis pairs decompose exactly in the basis
ClosureReport closure_report(int h);

} // namespace mq

#endif
