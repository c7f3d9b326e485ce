#ifndef MQ_SPECIALRING_HPP
#define MQ_SPECIALRING_HPP

#include "mq/poly.hpp"
#include "mq/ratmat.hpp"
#include <array>
#include <string>
#include <vector>

namespace mq {

// Symbol alphabet of the special polynomial differential ring (h = 1):
// the six generators, the two holomorphic constants of the B-matrix, and
// the six auxiliary holomorphic functions of the differential ring.
enum SymIndex {
    S_G0 = 0,  // g_0
    S_G = 1,   // g = g^1_1
    S_T11 = 2, // T^{11}
    S_T1 = 3,  // T^1
    S_T = 4,   // T
    S_L1 = 5,  // L_1
    S_H = 6,   // H
    S_H1 = 7,  // H^1
    S_C111 = 8,
    S_S111 = 9,
    S_H111 = 10,
    S_H11 = 11,
    S_HH1 = 12, // h_1
    S_K11 = 13,
    SYM_COUNT = 14
};

extern const char* const sym_names[SYM_COUNT];

struct TotalDegWeights {
    static constexpr std::array<int, 14> weights{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
};

using SymPoly = Poly<14, TotalDegWeights>;

// Laurent element: polynomial numerator over g_0^a g^b. Every entry of the
// B-matrix and everything derived from it lives here.
class SymElement {
public:
    SymElement() = default;
    SymElement(SymPoly num, int pow_g0, int pow_g);
    explicit SymElement(const SymPoly& p) : SymElement(p, 0, 0) {}

    static SymElement constant(const Rat& v) { return SymElement(SymPoly::constant(v)); }
    static SymElement var(int i, int power = 1) { return SymElement(SymPoly::variable(i, power)); }

    const SymPoly& num() const { return num_; }
    int pow_g0() const { return a_; }
    int pow_g() const { return b_; }
    bool is_zero() const { return num_.is_zero(); }
    // nonzero constant, no symbols
    bool is_constant() const;
    Rat constant_value() const;

    SymElement operator+(const SymElement& o) const;
    SymElement operator-(const SymElement& o) const;
    SymElement operator-() const;
    SymElement operator*(const SymElement& o) const;
    SymElement operator*(const Rat& s) const;
    bool operator==(const SymElement& o) const;

    SymElement inverse() const; // unit (constant times g0/g monomial) only
    SymElement partial(int i) const;

    std::string str() const;

private:
    void normalize();
    SymPoly num_;
    int a_{0}, b_{0};
};

struct SymMat {
    std::array<std::array<SymElement, 4>, 4> e;
    static SymMat zero();
    static SymMat identity();
    SymMat operator+(const SymMat& b) const;
    SymMat operator-(const SymMat& b) const;
    SymMat operator*(const SymMat& b) const;
    SymMat scale(const SymElement& s) const;
    bool is_zero() const;
    bool is_constant() const;
    RatMat constant_part() const;
    bool operator==(const SymMat& b) const;
    std::string str() const;
};

// the B-matrix of the special polynomial ring, E-shifts set to zero,
// holomorphic constants H, H1 kept symbolic
SymMat build_B();
SymMat build_B_inverse();
// variant with the (4,2) holomorphic constant kept as a symbol, used to
// exhibit the symplectic obstruction
SymMat build_B_symbolic_H1();

// M_s = (dB/ds) B^{-1} for a generator symbol s
SymMat m_matrix(int sym);

// the printed h=1 displays of the M-matrices (with T_0 read as T);
// returns per-entry mismatch descriptions against the computed matrices
std::vector<std::string> m_matrix_display_check();

// the six combinations that must reproduce the canonical Lie algebra basis;
// returned in the order t_ab, t_a, t, k^a, g^a_b, g_0 together with a
// pass/fail per combination
struct ComboResult {
    std::string name;
    bool constant;
    bool matches_basis;
    SymMat value;
};
std::vector<ComboResult> canonical_combos();

// B Phi B^T - Phi, identically zero in the symbols
SymMat check_pairing_B();

// the formal derivation of the differential ring (h = 1 rules, extended by
// Leibniz; the auxiliary symbols are annihilated)
SymElement dring_derivation(const SymElement& f);

} // namespace mq

#endif
