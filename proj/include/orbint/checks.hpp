#pragma once

/* Executable identity suites over the theta/vartheta calculus: families of
 * product functions that agree across walls ("cofamilies"), their assembled
 * sums over a Weyl orbit of parabolics, the equality of the assembled
 * function with the sum of the (averaged) c operators, and a collection of
 * smaller structural identities (cone orthogonality, Gamma support and
 * inversion, bracket projections, finite Fourier expansions).
 *
 * Each suite either verifies an identity on randomized inputs or fails with
 * a human-readable counterexample.  run_identity_checks bundles them for
 * the command-line runner.
 */

#include "orbint/arthur.hpp"
#include "orbint/curve.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace orbint {

/* the members phi_P, one per parabolic with the given Levi, each in the
 * per-weight product form of ProductPhi */
using Cofamily = std::vector<ProductPhi>;

/* the standard example of a wall-compatible family: a single univariate
 * factor applied to every weight pairing,
 *     phi_P(lambda) = prod_{alpha in Delta_P} f(q^{-<lambda, w_alpha^vee>}) */
Cofamily product_cofamily(const Parabolic& levi, const RatFunc<Cyclo>& factor);

/* member as a function of lambda, through a character context */
template <class Ctx>
typename Ctx::Value member_eval(const ProductPhi& phi, const Ctx& ctx) {
    return phi_at(phi, full_group(phi.p.n()), ctx);
}

/* wall compatibility: for every co-adjacent pair of members the two
 * functions agree, as reduced rational functions, along random lines inside
 * the shared wall <lambda, w^vee> = 0 */
bool cofamily_check(const Cofamily& fam, long q, int lines_per_wall, std::mt19937_64& rng,
                    std::string* why = nullptr);

/* phi_M(lambda) = sum_P theta_hat_P^G(lambda) phi_P(lambda), evaluated
 * exactly at a phase-free point (member values must come out rational) */
RadExt assemble(const Cofamily& fam, long q, const Vec& lambda);

/* periodic assembly sum_P vartheta_hat_P^G(lambda) phi_P(lambda) */
template <class Ctx>
typename Ctx::Value assemble_periodic(const Cofamily& fam, const Ctx& ctx) {
    Parabolic g = full_group(fam.front().p.n());
    typename Ctx::Value out = ctx.constant(Rat(0));
    for (const auto& m : fam)
        out = out + vartheta_hat(m.p, g, ctx) * member_eval(m, ctx);
    return out;
}

/* phi_M(lambda^G) = sum_P c_P^G(phi_P, lambda) at a regular point */
bool sum_formula_holds(const Cofamily& fam, long q, const Vec& lambda);

/* periodic counterpart with the averaged operators: the assembled function
 * equals sum_P c_{P,N}^{G,xi}(phi_P, .) for xi in general position */
template <class Ctx>
bool periodic_sum_formula_holds(const Cofamily& fam, const Vec& xi, const DualTriplet& t,
                                const Ctx& ctx) {
    typename Ctx::Value lhs = assemble_periodic(fam, ctx);
    typename Ctx::Value rhs = ctx.constant(Rat(0));
    for (const auto& m : fam)
        rhs = rhs + c_xi_fn(m, xi, t, ctx);
    return lhs == rhs;
}

/* sum_{P in P^Q(M)} vartheta_P^{Q,xi} is 0 when M is a proper Levi of Q
 * and 1 when M is the Levi of Q itself */
template <class Ctx>
bool vartheta_partition_holds(const Parabolic& levi, const Parabolic& q, const Vec& xi,
                              const Ctx& ctx) {
    typename Ctx::Value sum = ctx.constant(Rat(0));
    for (const auto& p : parabolics_with_levi(levi_of(levi)))
        if (contained_in(p, q))
            sum = sum + vartheta(p, q, xi, ctx);
    bool full = same_levi(levi, q);
    return sum == (full ? ctx.one() : ctx.constant(Rat(0)));
}

/* holomorphy of c_P^G(phi, .) along the line u -> u * dir through 0, for a
 * member with rational factors: after clearing the uniform u^{-k} with
 * k = dim a_P^G, the alternating sum of covolume-weighted factor products
 * must vanish at Y = 1 to order >= k, radical by radical */
bool line_holomorphy_check(const Parabolic& p, const std::vector<RatFunc<Rat>>& factors,
                           const Vec& dir, std::string* why = nullptr);

/* the finite Fourier expansion of the averaged operator at the exponential
 * function with lattice exponent X = sum_i m_i w_i^vee:
 *     c_{P,N}^{G,xi}(q^{-<.,X>}, lambda)
 *       = sum_H Gamma_P^G(H, X - sum_i w_i^vee, xi) q^{-<lambda,H>},
 * summed over the weight lattice within the given window (which must
 * contain the support; checked) */
bool fourier_expansion_holds(const Parabolic& p, const std::vector<long>& m, const Vec& xi,
                             const Vec& lam, long q, int window, std::string* why = nullptr);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; /* counterexample or short summary */
    long elapsed_ms = 0;
};

/* all suites, with ranks capped at nmax (some suites cap lower or go one
 * higher where the contract asks for it); deterministic for a fixed seed.
 * on_result, when given, is called after each suite finishes (progress
 * reporting for long runs). */
std::vector<CheckResult> run_identity_checks(
    int nmax, unsigned seed,
    const std::function<void(const CheckResult&)>& on_result = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace orbint
