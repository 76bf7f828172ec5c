#pragma once

/* Exact rational scalars.
 *
 * All arithmetic in this project is exact; rationals are GMP mpq values
 * (always canonical: coprime numerator/denominator, positive denominator).
 * This header adds the few helpers the rest of the code needs on top of
 * gmpxx: parsing/printing in "p/q" form, floor, and integer powers with
 * negative exponents.
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orbint {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

/* floor(r) as an integer (rounds toward -infinity). */
inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

/* r^e for integer e of either sign; r != 0 when e < 0. */
inline Rat rat_pow(const Rat& r, long e) {
    if (e == 0)
        return Rat(1);
    if (r == 0 && e < 0)
        throw std::domain_error("0 raised to a negative power");
    Rat base = e > 0 ? r : Rat(1) / r;
    unsigned long k = e > 0 ? (unsigned long)e : (unsigned long)(-e);
    Rat out(1);
    while (k) {
        if (k & 1)
            out *= base;
        base *= base;
        k >>= 1;
    }
    return out;
}

/* an integral rational as a machine long (throws when it is neither) */
inline long rat_to_long(const Rat& r) {
    if (!rat_is_integer(r))
        throw std::domain_error("expected an integer, got " + r.get_str());
    if (!r.get_num().fits_slong_p())
        throw std::overflow_error("integer too large for a machine word: " + r.get_str());
    return r.get_num().get_si();
}

/* "p/q" (or plain "p") -> canonical rational. */
inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("cannot parse rational: " + s);
    if (r.get_den() == 0)
        throw std::domain_error("rational with zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace orbint
