#pragma once

/* Top-level exact evaluation for the block-regular nilpotent contribution:
 * the zeta-product factor phihat, the symmetrized rational function Psi
 * built from it, its exact value at t = 1 along a generic one-parameter
 * line, and the final volume-times-q-power-times-Psi product, together
 * with the Siegel case (d = n) and a closed-form oracle for the root-of-
 * unity part when r = n/d is prime.  A truncated-lattice-series versus
 * closed-form comparison cross-checks the analytic input.
 */

#include "orbint/arthur.hpp"
#include "orbint/curve.hpp"
#include "orbint/radical.hpp"

#include <string>
#include <vector>

namespace orbint {

struct IntegralQuery {
    Curve curve;
    long degD = 0;
    int n = 1;  /* rank */
    int d = 1;  /* Jordan block count; must divide n */
    long e = 0; /* degree; the main formula needs gcd(e, n/d) = 1 */
};

/* the one-parameter line t_i = X^{b_i} inside the norm-one torus: sum of
 * the b_i is zero, and genericity means no nonempty proper subset of the
 * b_i sums to zero (so every permuted partial sum is a nonzero exponent) */
struct GenericDirection {
    std::vector<long> b;
    unsigned salt = 0;
};

bool direction_admissible(const std::vector<long>& b);
/* deterministic direction for rank r: b_i = r (r+1)^{i-1} - sum_j (r+1)^{j-1};
 * a nonzero salt replaces the base r+1 by r+1+salt, and the salt is
 * incremented until the subset-sum condition holds */
GenericDirection default_direction(int r, unsigned salt = 0);

/* phihat(y) = q^{d^2(g-1)} y^{-d degD} Z_C(y/q) Z_C(y/q^2) ... Z_C(y/q^d),
 * the block zeta factor written in y = q^{-s} */
RatFunc<Rat> phi_of_y(const Curve& c, int d, long degD);

/* one summand of the symmetrized sum along the line, as a univariate
 * rational function over Q(zeta_r):
 *     prod_{j=1}^{r-1} phihat(zeta_r^{k j} X^{d s_j}),
 * where s_j = b_{w^{-1}(1)} + ... + b_{w^{-1}(j)} is the permuted partial
 * sum and w is given by its images w[i] (0-based).  Throws
 * std::domain_error when some partial sum vanishes (degenerate line). */
RatFunc<Cyclo> phi_P_line(const Curve& c, int n, int d, long degD, const std::vector<int>& w,
                          long k, const GenericDirection& dir);

/* Psi^{d,e}(1): the value at X = 1 of
 *     (1/(r r!)) sum_{k=0}^{r-1} sum_{w} zeta_r^{-ke} prod_j fac(zeta_r^{kj} X^{d s_j})
 * where fac(y) = y^{-d degD} Z_C(y/q)...Z_C(y/q^d) = phihat / q^{d^2(g-1)}.
 * The limit is taken exactly (Laurent data at X = 1); PoleAtOne is thrown
 * when the pole terms fail to cancel, std::logic_error when the limit has
 * a nonvanishing root-of-unity component. */
Rat psi_at_one(const IntegralQuery& query, const GenericDirection& dir);

/* the k != 0 part of the same sum, in the phihat normalization (each
 * factor keeps its q^{d^2(g-1)}); this is what the closed-form oracle
 * below reproduces when r is prime */
Rat psi_tail_at_one(const IntegralQuery& query, const GenericDirection& dir);

/* closed form of the k != 0 part for prime r and gcd(e, r) = 1:
 *     -(1/r) prod_{j=1}^{r-1} phihat(zeta_r^j),
 * a rational number by Galois stability */
Rat prime_r_oracle(const IntegralQuery& query);

struct IntegralResult {
    RadExt value;      /* q_power * volume_factor * psi */
    Rat psi;           /* Psi^{d,e}(1) */
    Rat volume_factor; /* Z*_C(1/q) Z_C(1/q^2) ... Z_C(1/q^d) */
    RadExt q_power;    /* q^{n(n-d)degD/2 + nd(g-1)}, possibly sqrt(q) times a rational */
    GenericDirection direction_used;
};

/* the full product q^{n(n-d)degD/2} q^{nd(g-1)} Z*_C(1/q)...Z_C(1/q^d) Psi(1);
 * throws std::invalid_argument unless d | n and gcd(e, n/d) = 1 */
IntegralResult integral_value(const IntegralQuery& query);
IntegralResult integral_value(const IntegralQuery& query, const GenericDirection& dir);

/* q^{n^2(g-1)} Z*_C(1/q) Z_C(1/q^2) ... Z_C(1/q^n), the volume of the
 * degree-zero quotient in rank n */
Rat siegel_value(const Curve& c, int n);

/* Truncated lattice series against the closed product form, in the rank-r
 * weight lattice (r = n/d).  The series side sums, over integer
 * coefficient vectors h in [-box, box]^{r-1} of H = sum_j h_j w_j^vee,
 *     tau_hat_P(H/d - xi) * prod_{alpha in Delta_0^P} B(<alpha, H>) * X^{<mu,H>}
 * with B(m) the cumulative coefficient sums of Ztilde_{d,D} and mu a fixed
 * interior direction; the closed side is the averaged
 *     thetaq_hat_{P0}^P * prod Ztilde(<.,w_alpha^vee>) * thetaq_P^{G, b d xi}
 * expanded along the same line.  Compares `order` consecutive Laurent
 * coefficients starting at the lowest exponent; throws
 * std::invalid_argument when the box cannot certify that many
 * coefficients, or when the lattice shape has no certified enumeration
 * bound (that needs rank 1 or no cone constraint). */
bool series_vs_closed_check(const Curve& c, long degD, int n, int d, const Parabolic& p,
                            const Vec& xi, long box, size_t order, std::string* why = nullptr);

}  // namespace orbint
