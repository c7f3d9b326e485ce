#ifndef MQ_RAT_HPP
#define MQ_RAT_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace mq {

// Exact rational scalar. mpq_class keeps values canonicalized
// (gcd(|num|,den)=1, den>0) as long as they are built through arithmetic;
// raw constructions go through rat() below which canonicalizes.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("rat: bad literal '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Rat rat_pow(const Rat& b, long e) {
    if (e == 0) return Rat(1);
    Rat z;
    if (e > 0) {
        mpz_pow_ui(z.get_num_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(z.get_den_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(e));
    } else {
        if (b == 0) throw std::domain_error("rat_pow: 0 to negative power");
        mpz_pow_ui(z.get_num_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(-e));
        mpz_pow_ui(z.get_den_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(-e));
    }
    z.canonicalize();
    return z;
}

} // namespace mq

#endif
