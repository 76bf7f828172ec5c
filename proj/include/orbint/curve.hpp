#pragma once

/* Zeta functions of smooth projective curves over F_q.
 *
 * A curve is stored as (q, genus, P) with
 *     Z_C(t) = P(t) / ((1-t)(1-qt)),   deg P = 2g,  P(0) = 1,
 * and the functional equation  P(t) = q^g t^{2g} P(1/(qt))  enforced as a
 * polynomial identity when a curve is constructed.  The modified zeta
 * Z*_C(t) = (1-qt) Z_C(t) removes the pole at t = 1/q.
 *
 * On top of that sit the block-zeta products used by the volume and
 * series computations:
 *     Z^d_{C,D}(X)   = X^{-d deg D} Z_C(X/q) ... Z_C(X/q^d)
 *     Ztilde_{d,D}(s)= q^{s d deg D} (1 - q^{-s}) q^{d^2(g-1)}
 *                      zeta(s+1) ... zeta(s+d),   written in y = q^{-s}
 * and the Tamagawa-style volume
 *     vol_gl(C,d) = Ztilde_{d,D}(0)
 *                 = q^{d^2(g-1)} Z*_C(q^{-1}) Z_C(q^{-2}) ... Z_C(q^{-d}).
 */

#include "orbint/cyclo.hpp"
#include "orbint/poly.hpp"
#include "orbint/rational.hpp"

#include <string>
#include <vector>

namespace orbint {

struct Curve {
    long q = 2;
    int genus = 0;
    Poly<Rat> numerator; /* P(t), degree 2*genus, P(0)=1 */

    /* throws std::invalid_argument when P(0) != 1, deg != 2g, or the
     * functional equation fails */
    void validate() const;
};

/* build from |C(F_{q^k})| for k = 1..g; the numerator is completed from the
 * truncated exp series by the functional equation */
Curve curve_from_counts(long q, int genus, const std::vector<long>& counts);
Curve curve_from_numerator(long q, int genus, Poly<Rat> numerator);

/* Z_C at a rational-function argument (composition), over any scalar field */
template <class K>
RatFunc<K> zeta_eval(const Curve& c, const RatFunc<K>& arg) {
    RatFunc<K> p = c.numerator.template eval_in<RatFunc<K>>(arg);
    RatFunc<K> one(K(1));
    RatFunc<K> den = (one - arg) * (one - RatFunc<K>(K(Rat(c.q))) * arg);
    if (den.is_zero())
        throw std::domain_error("zeta evaluated at an identically singular argument");
    return p / den;
}

/* Z*_C = (1-qt) Z_C: only the t=1 pole remains */
template <class K>
RatFunc<K> zeta_star_eval(const Curve& c, const RatFunc<K>& arg) {
    RatFunc<K> p = c.numerator.template eval_in<RatFunc<K>>(arg);
    RatFunc<K> den = RatFunc<K>(K(1)) - arg;
    return p / den;
}

Rat zeta_at(const Curve& c, const Rat& t);      /* plain rational point */
Rat zeta_star_at(const Curve& c, const Rat& t);

/* Z^d_{C,D}(arg) for an invertible monomial argument a*X^m */
template <class K>
RatFunc<K> z_dD(const Curve& c, int d, long degD, const K& a, long m) {
    if (a == K(0))
        throw std::domain_error("z_dD needs an invertible monomial argument");
    RatFunc<K> out = RatFunc<K>::monomial(K(1), -(long)d * degD).subst_monomial(a, m);
    RatFunc<K> x = RatFunc<K>::monomial(a, m);
    Rat qinv = Rat(1) / Rat(c.q);
    Rat f(1);
    for (int j = 1; j <= d; j++) {
        f *= qinv;
        out = out * zeta_eval(c, RatFunc<K>(K(f)) * x);
    }
    return out;
}

/* Ztilde_{d,D} as a rational function of y = q^{-s} */
RatFunc<Rat> ztilde_dD(const Curve& c, int d, long degD);

/* vol(GL(d,F)\GL(d,A)^0), exact */
Rat vol_gl(const Curve& c, int d);

/* Laurent coefficients of Z_{d,D}(s+d) = q^{d^2 degD} y^{-d degD}
 * Z_C(y/q)...Z_C(y/q^d) as a series in y = q^{-s}: returns the T
 * coefficients of y^{-d degD}, ..., y^{-d degD + T - 1}. */
std::vector<Rat> series_coeffs_ZdD(const Curve& c, int d, long degD, size_t T);

}  // namespace orbint
