#ifndef CARPET_RATIONAL_HPP
#define CARPET_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace carpet {

/// Exact rational scalar used throughout the library.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1)
{
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat pow_int(long base, int exp)
{
    if (exp < 0) {
        Rat r = pow_int(base, -exp);
        return 1 / r;
    }
    Rat r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

inline double to_double(const Rat& r) { return r.get_d(); }

inline int sign(const Rat& r) { return sgn(r); }

inline Rat abs_rat(const Rat& r) { return r < 0 ? Rat(-r) : r; }

/// True when r equals 1/base^k for some k >= 1 (or k >= 0 when
/// allow_one is set).
inline bool is_reciprocal_power(const Rat& r, int base, bool allow_one = false)
{
    if (r <= 0 || r > 1) return false;
    if (r == 1) return allow_one;
    if (r.get_num() != 1) return false;
    mpz_class den = r.get_den();
    while (den > 1) {
        if (den % base != 0) return false;
        den /= base;
    }
    return true;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace carpet

#endif
