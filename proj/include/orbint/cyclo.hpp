#pragma once

/* Cyclotomic numbers: elements of Q(zeta_N) in the power basis
 * 1, z, ..., z^{phi(N)-1} of Q[x]/Phi_N(x), with eager reduction so the
 * representation is a normal form and equality is coefficient equality.
 *
 * A value remembers its order N. Orders are promoted automatically:
 * mixing Q(zeta_M) and Q(zeta_N) lands in Q(zeta_lcm(M,N)) via
 * zeta_M = zeta_L^{L/M}. Rational numbers are the N=1 case, so Cyclo can
 * be used as the scalar field of Poly/RatFunc directly.
 */

#include "orbint/poly.hpp"
#include "orbint/rational.hpp"

#include <numeric>
#include <vector>

namespace orbint {

unsigned long euler_phi(unsigned long n);

/* Phi_N as exact rational coefficients, low degree first (cached). */
const std::vector<Rat>& cyclotomic_poly(unsigned long N);

class Cyclo {
  public:
    Cyclo() : n_(1), c_(1, Rat(0)) {}
    Cyclo(int v) : n_(1), c_(1, Rat(v)) {}
    Cyclo(Rat v) : n_(1), c_(1, std::move(v)) {}
    /* coefficients in the power basis of Q(zeta_N); reduced on entry */
    Cyclo(unsigned long N, std::vector<Rat> coeffs);

    /* zeta_N^k */
    static Cyclo root_of_unity(unsigned long N, long k);

    unsigned long order() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /* the rational it equals; error if not rational */
    Rat rational_part() const;

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
    friend bool operator==(const Cyclo& a, const Cyclo& b);

    Cyclo inverse() const;

    /* re-express in Q(zeta_M); M must be a multiple of the current order */
    Cyclo promoted(unsigned long M) const;
    /* drop to the smallest representation we detect cheaply (exact order
     * minimization is not attempted; rational values drop to N=1) */
    Cyclo compressed() const;

    std::string str() const;

  private:
    unsigned long n_;
    std::vector<Rat> c_; /* length phi(n_) */
};

/* zeta_N^k reduced modulo Phi_N */
inline Cyclo cyclo_reduce(unsigned long N, long k) { return Cyclo::root_of_unity(N, k); }

}  // namespace orbint
