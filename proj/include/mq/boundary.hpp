#ifndef MQ_BOUNDARY_HPP
#define MQ_BOUNDARY_HPP

#include "mq/anomaly.hpp"
#include "mq/mirrormap.hpp"

namespace mq {

// Boundary data for the ambiguity fixing. In the conifold frame built by
// conifold_tcoords (flat coordinate t_D monic, the vanishing solution pinned
// by its logarithmic partner) the genus-g amplitude must expand as
//   (triple * mu)^(g-1) * gap_coefficient(g) * t_D^(2-2g) + 0 * t_D^(3-2g)
//   + ... + 0 * t_D^(-1) + O(1),
// and its constant term at the large complex structure point equals
// mu^(g-1) * constant_map_value(g). The residue factors of the Yukawa cancel
// out of the leading condition, leaving the classical triple intersection.
// The amplitude normalization mu is scanned against BPS integrality.
struct BoundaryConfig {
    Rat chi_a{-200};          // A-model Euler number (quintic)
    Rat triple{5};            // classical triple intersection (Yukawa constant term)
    std::vector<Rat> mu_scan; // candidate normalizations F^alg = mu^(g-1) F^phys
    BoundaryConfig();
};

Rat bernoulli(int n); // B_2..B_8 as needed

// (-1)^(g-1) B_{2g} / (2g (2g-2))
Rat gap_coefficient(int g);
// (-1)^g chi/2 |B_{2g}| |B_{2g-2}| / (2g (2g-2) (2g-2)!)
Rat constant_map_value(int g, const Rat& chi_a);

struct FixResult {
    bool fixed{false};
    Rat mu;                    // accepted normalization
    std::vector<Rat> values;   // resolved ambiguity coefficients
    int parameters_before{0};
    int parameters_after{0};
    std::vector<Rat> bps;      // genus-g invariants d = 1..max_degree
    Rat gap_leading;           // measured T_D^(2-2g) coefficient
    Rat mum_constant;          // measured q^0 value
    std::vector<std::string> notes;
};

// solve the boundary system for the genus-g ambiguity and test integrality;
// genus 3 needs the genus-2 invariants for the multicover inversion. When
// the boundary system is underdetermined (floor((2g-2)/5) > 0, genus 4 up)
// the remaining free parameters are reported and the normalization must be
// supplied instead of scanned.
FixResult fix_ambiguity(GenusAmplitude& amp, const TCoords& tc, const ConifoldCoords& cc,
                        const std::vector<Rat>& n0, const BoundaryConfig& cfg,
                        int max_degree = 5, const std::vector<Rat>* n2 = nullptr,
                        const Rat* mu_fixed = nullptr);

} // namespace mq

#endif
