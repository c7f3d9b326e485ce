#ifndef MQ_POLY_HPP
#define MQ_POLY_HPP

#include "mq/rat.hpp"
#include <array>
#include <cstdint>
#include <map>
#include <vector>
#include <functional>

namespace mq {

// Sparse multivariate polynomial over Q with a graded-lex canonical term
// order: terms compare by (weighted degree, exponent vector lex). The weight
// vector is a property of the instantiation (Traits::weights).
template <int N>
struct Mono {
    std::array<int16_t, N> e{};

    long weighted_degree(const std::array<int, N>& w) const {
        long d = 0;
        for (int i = 0; i < N; ++i) d += static_cast<long>(e[i]) * w[i];
        return d;
    }
    bool operator==(const Mono& b) const { return e == b.e; }
    bool divides(const Mono& b) const {
        for (int i = 0; i < N; ++i) if (e[i] > b.e[i]) return false;
        return true;
    }
    Mono operator*(const Mono& b) const {
        Mono r;
        for (int i = 0; i < N; ++i) r.e[i] = static_cast<int16_t>(e[i] + b.e[i]);
        return r;
    }
    Mono operator/(const Mono& b) const {
        Mono r;
        for (int i = 0; i < N; ++i) r.e[i] = static_cast<int16_t>(e[i] - b.e[i]);
        return r;
    }
};

template <int N, typename Traits>
struct MonoCmp {
    bool operator()(const Mono<N>& a, const Mono<N>& b) const {
        long da = a.weighted_degree(Traits::weights);
        long db = b.weighted_degree(Traits::weights);
        if (da != db) return da < db;
        return a.e < b.e;
    }
};

template <int N, typename Traits>
class Poly {
public:
    using M = Mono<N>;
    using Map = std::map<M, Rat, MonoCmp<N, Traits>>;

    Poly() = default;

    static Poly constant(const Rat& v) {
        Poly p;
        if (v != 0) p.t_[M{}] = v;
        return p;
    }
    static Poly variable(int i, int power = 1) {
        Poly p;
        M m;
        m.e[i] = static_cast<int16_t>(power);
        p.t_[m] = 1;
        return p;
    }
    static Poly term(const M& m, const Rat& c) {
        Poly p;
        if (c != 0) p.t_[m] = c;
        return p;
    }

    const Map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }

    void add_term(const M& m, const Rat& c) {
        if (c == 0) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    Poly operator+(const Poly& b) const {
        Poly r = *this;
        for (const auto& [m, c] : b.t_) r.add_term(m, c);
        return r;
    }
    Poly operator-(const Poly& b) const {
        Poly r = *this;
        for (const auto& [m, c] : b.t_) r.add_term(m, -c);
        return r;
    }
    Poly operator-() const {
        Poly r;
        for (const auto& [m, c] : t_) r.t_[m] = -c;
        return r;
    }
    Poly operator*(const Poly& b) const {
        Poly r;
        for (const auto& [m1, c1] : t_)
            for (const auto& [m2, c2] : b.t_) r.add_term(m1 * m2, c1 * c2);
        return r;
    }
    Poly operator*(const Rat& s) const {
        Poly r;
        if (s == 0) return r;
        for (const auto& [m, c] : t_) r.t_[m] = c * s;
        return r;
    }
    Poly mul_term(const M& m, const Rat& c) const {
        Poly r;
        if (c == 0) return r;
        for (const auto& [mm, cc] : t_) r.t_[mm * m] = cc * c;
        return r;
    }

    bool operator==(const Poly& b) const { return t_ == b.t_; }

    // leading term in the canonical order (largest)
    std::pair<M, Rat> leading() const {
        if (t_.empty()) throw std::domain_error("Poly: leading term of zero");
        auto it = std::prev(t_.end());
        return {it->first, it->second};
    }

    // exact division: returns true and sets q if *this == q * d
    bool exact_div(const Poly& d, Poly& q) const {
        if (d.is_zero()) throw std::domain_error("Poly: division by zero");
        Poly rem = *this;
        Poly quo;
        auto [dm, dc] = d.leading();
        while (!rem.is_zero()) {
            auto [rm, rc] = rem.leading();
            if (!dm.divides(rm)) return false;
            M qm = rm / dm;
            Rat qc = rc / dc;
            quo.add_term(qm, qc);
            rem = rem - d.mul_term(qm, qc);
        }
        q = quo;
        return true;
    }

    bool divisible_by(const Poly& d) const {
        Poly q;
        return exact_div(d, q);
    }

    Poly derivative(int i) const {
        Poly r;
        for (const auto& [m, c] : t_) {
            if (m.e[i] == 0) continue;
            M mm = m;
            mm.e[i] = static_cast<int16_t>(mm.e[i] - 1);
            r.add_term(mm, c * Rat(m.e[i]));
        }
        return r;
    }

    Poly pow(int k) const {
        Poly r = constant(Rat(1));
        for (int i = 0; i < k; ++i) r = r * (*this);
        return r;
    }

    // degree in a single variable
    int degree_in(int i) const {
        int d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(m.e[i]));
        return d;
    }

    // reports (homogeneous?, degree) for an arbitrary grading functional
    std::pair<bool, long> graded_degree(const std::function<long(const M&)>& deg) const {
        if (t_.empty()) return {true, 0};
        bool first = true;
        long d0 = 0;
        for (const auto& [m, c] : t_) {
            long d = deg(m);
            if (first) { d0 = d; first = false; }
            else if (d != d0) return {false, 0};
        }
        return {true, d0};
    }

    // evaluation over any commutative ring R supplied with one()
    template <typename R>
    R eval(const std::array<R, N>& vals, const R& one) const {
        R acc = one - one; // zero
        for (const auto& [m, c] : t_) {
            R term = one * Rat(c);
            for (int i = 0; i < N; ++i)
                for (int k = 0; k < m.e[i]; ++k) term = term * vals[i];
            acc = acc + term;
        }
        return acc;
    }

private:
    Map t_;
};

// ---- the mirror-quintic coordinate ring instantiation -------------------

struct QuinticWeights {
    // deg(t_i) = 3(i+1) for i=0..4, deg(t_5)=11, deg(t_6)=8
    static constexpr std::array<int, 7> weights{3, 6, 9, 12, 15, 11, 8};
};

using Monomial7 = Mono<7>;
using WeightedPoly = Poly<7, QuinticWeights>;

// gradings of a single monomial
long grade_w(const Monomial7& m);  // 3i0+6i1+9i2+12i3+15i4+11i5+8i6
long grade_e0(const Monomial7& m); // i0+2i1+3i2+4i3+5i4+3i5+2i6
long grade_e1(const Monomial7& m); // i5+i6

WeightedPoly wp_var(int i, int power = 1);
WeightedPoly wp_const(const Rat& c);
// t4 - t0^5
WeightedPoly wp_disc();

// complete duplicate-free list of monomials with prescribed bidegree
std::vector<Monomial7> enumerate_monomials(int e0, int e1);

std::string wpoly_str(const WeightedPoly& p);
WeightedPoly wpoly_parse(const std::string& text);

} // namespace mq

#endif
