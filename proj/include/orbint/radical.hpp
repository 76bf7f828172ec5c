#pragma once

/* Values of the form  sum_m c_m * sqrt(m)  over squarefree positive
 * integers m, with rational coefficients.  This is where lattice
 * covolumes and the theta values built from them live.
 *
 * The type is closed under +, -, * (products of square roots are
 * renormalized through squarefree decomposition).  Division is only
 * supported by values with a single term: that is all the covolume
 * calculus ever needs, and it keeps zero-testing trivial — by the
 * Q-linear independence of sqrt(m) over distinct squarefree m, a value
 * is zero iff every stored coefficient is zero.
 */

#include "orbint/rational.hpp"

#include <map>
#include <string>

namespace orbint {

class RadExt {
  public:
    RadExt() = default;
    RadExt(Rat v) { add_term(1, std::move(v)); }
    RadExt(int v) : RadExt(Rat(v)) {}

    /* c * sqrt(m), m > 0 arbitrary (squarefree part extracted) */
    static RadExt sqrt_term(const Rat& c, const Int& m);
    /* sqrt of a nonnegative rational */
    static RadExt sqrt_of(const Rat& v);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    Rat rational_part() const; /* coefficient of sqrt(1) */
    /* coefficient of sqrt(m) for squarefree m */
    Rat coeff(const Int& m) const;
    const std::map<Int, Rat>& terms() const { return terms_; }

    friend RadExt operator+(const RadExt& a, const RadExt& b);
    friend RadExt operator-(const RadExt& a, const RadExt& b);
    friend RadExt operator*(const RadExt& a, const RadExt& b);
    RadExt operator-() const;
    /* only single-term divisors are invertible here */
    friend RadExt operator/(const RadExt& a, const RadExt& b);
    friend bool operator==(const RadExt& a, const RadExt& b);

    std::string str() const;

  private:
    void add_term(Int squarefree_m, Rat c);
    std::map<Int, Rat> terms_; /* squarefree m -> nonzero coefficient */
};

inline bool radical_is_zero(const RadExt& v) { return v.is_zero(); }

/* m = s^2 * f with f squarefree; returns (s, f) */
std::pair<Int, Int> squarefree_decompose(const Int& m);

}  // namespace orbint
