#ifndef MQ_MIRRORMAP_HPP
#define MQ_MIRRORMAP_HPP

#include "mq/pfode.hpp"
#include "mq/fields.hpp"
#include <map>

namespace mq {

// Frobenius data at the large complex structure point, recast in the
// exponentiated flat coordinate q.
struct MirrorData {
    int order;
    FrobeniusBasis fb;            // in z
    QSeries q_of_z;               // q(z) = z exp(s1/s0)
    QSeries z_of_q;               // series reversion
    QSeries ell;                  // log(z(q)/q), pure
    std::array<LogSeries, 4> yq;  // Frobenius solutions in the q variable
    QSeries yukawa_w;             // Wronskian-route Yukawa in q
};

MirrorData build_mirror_data(int order);

// special coordinates of the moduli point moving along the flow, as
// q-series, together with the frozen normalizations
struct TCoords {
    std::array<QSeries, 7> t;
    Rat c1;     // t0 = c1 y0
    Rat lambda; // flat-coordinate slot T = lambda log q
    Rat kappa;  // flow normalization: kappa theta_q t_i = R_1(t_i), kappa = 1/lambda
    Rat e_const, f_const; // frame completion constants (fourth period column)
    std::vector<std::string> checks; // names of verified internal identities
};

// route (a): period matching against the special format, with every
// consistency identity asserted; throws on any failure
TCoords holomorphic_tcoords(const MirrorData& md);

// route (b): integrate kappa theta_q t_i = R_1(t_i) from the q^0 values;
// returns the series for comparison with the matching route
std::array<QSeries, 7> integrate_flow(const TCoords& seed, int order);

// Yukawa coupling evaluated on the moving point (must match yukawa_w)
QSeries yukawa_q(const TCoords& tc, YukawaVariant v = YukawaVariant::Disc);

// ---- conifold side ---------------------------------------------------------

struct ConifoldCoords {
    int order;
    std::array<LaurentQ, 7> t; // series in the conifold coordinate x
    QSeries t_d;               // flat coordinate t_D(x) = v1/v0, valuation 1
    QSeries x_of_td;           // reversion of t_d
    Rat yukawa_residue;        // residue of Y_111 at t_D = 0 (simple pole)
};

ConifoldCoords conifold_tcoords(int order);

// re-expand a Laurent series in x into a Laurent series in t_D
LaurentQ expand_in_td(const LaurentQ& fx, const ConifoldCoords& cc);

// ---- invariant extraction --------------------------------------------------

struct BPSTable {
    std::map<std::pair<int, int>, Rat> n; // (genus, degree) -> invariant
    bool all_integral(int genus, int max_degree) const;
};

// genus 0: Y = n0 + sum n_d d^3 q^d/(1-q^d); asserts integrality
std::vector<Rat> gw_genus0(const QSeries& yukawa, int max_degree);

// genus 1 from the instanton part of theta_q F_1^A; needs genus-0 numbers
std::vector<Rat> gw_genus1(const QSeries& theta_f1_inst, const std::vector<Rat>& n0,
                           int max_degree);

// genus 2 from the instanton part of F_2^A; needs genus-0 numbers
std::vector<Rat> gw_genus2(const QSeries& f2_inst, const std::vector<Rat>& n0,
                           int max_degree);

// genus 3 from the instanton part of F_3^A; needs genus-0 and genus-2 numbers
std::vector<Rat> gw_genus3(const QSeries& f3_inst, const std::vector<Rat>& n0,
                           const std::vector<Rat>& n2, int max_degree);

// theta_q of the genus-one amplitude evaluated on the moving point
QSeries theta_f1_alg(const TCoords& tc);

// genus-1 A-model normalization nu fixed by the vanishing degree-1 elliptic
// invariant; returns nu and the elliptic invariants for d <= max_degree
struct Genus1Result {
    Rat nu;
    Rat classical_term; // constant term of nu * theta F_1^alg
    std::vector<Rat> invariants;
};
Genus1Result genus1_invariants(const TCoords& tc, const std::vector<Rat>& n0, int max_degree);

} // namespace mq

#endif
