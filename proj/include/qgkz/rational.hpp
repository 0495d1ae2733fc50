#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace qgkz {

// Exact scalars are GMP rationals; mpq_class keeps gcd(|p|,q)=1 and q>=1.
using Rat = mpq_class;
using Int = mpz_class;

inline std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

inline double rat_double(const Rat& r) { return r.get_d(); }

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1) / base;
    unsigned long n = e > 0 ? e : -e;
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

// Exact rational square root; returns false when the argument is not a
// perfect square of a rational.
inline bool rat_sqrt(const Rat& r, Rat& out) {
    if (sgn(r) < 0) return false;
    Int num = r.get_num(), den = r.get_den();
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    if (sn * sn != num || sd * sd != den) return false;
    out = Rat(sn) / Rat(sd);
    return true;
}

} // namespace qgkz
