#pragma once

/* Relative root data of a pair of nested parabolics P ⊂ Q of GL(n).
 *
 * Everything lives in Q^n with the standard inner product (W-invariant,
 * constant vectors spanning the center direction).  For adjacent blocks
 * B_i, B_{i+1} of P inside a Q-block, the projection to a_P of a simple
 * root between the blocks is
 *     1/|B_i| on B_i  -  1/|B_{i+1}| on B_{i+1},
 * and these projected roots form the basis of a_P^Q.  In type A roots
 * and coroots coincide under this identification, as do the dual weight
 * and coweight bases, so a RootSets bundle stores just two lists:
 * `roots` (= coroots) and `duals` (the basis with <roots[i], duals[j]> =
 * delta_ij inside a_P^Q).
 */

#include "orbint/parabolic.hpp"
#include "orbint/radical.hpp"
#include "orbint/vec.hpp"

#include <optional>

namespace orbint {

struct RootSets {
    std::vector<Vec> roots; /* basis of a_P^Q: projected simple roots/coroots */
    std::vector<Vec> duals; /* dual basis: weights/coweights */
};

/* requires P ⊂ Q (throws otherwise) */
RootSets root_sets(const Parabolic& p, const Parabolic& q);

/* orthogonal projection onto a_P^Q = span of root_sets(p, q).roots */
Vec project(const Vec& v, const Parabolic& p, const Parabolic& q);
/* orthogonal projection onto a_{M_P} (vectors constant on P's blocks) */
Vec project_levi(const Vec& v, const Parabolic& p);

/* cone indicators: tau uses the roots, tau_hat the dual (weight) basis;
 * both strict inequalities */
bool tau(const Parabolic& p, const Parabolic& q, const Vec& h);
bool tau_hat(const Parabolic& p, const Parabolic& q, const Vec& h);

/* sqrt(det Gram) of an independent family: the covolume of the lattice it
 * spans inside its own real span */
RadExt covolume(const std::vector<Vec>& basis);

/* P1, P2 with the same Levi are co-adjacent when their root systems share
 * all simple roots but one; the witness is the unique dual-basis vector in
 * duals(P1) ∩ (-duals(P2)).  Returns nullopt when not co-adjacent. */
std::optional<Vec> co_adjacent(const Parabolic& p1, const Parabolic& p2);

/* [xi]_P^Q = sum_alpha ceil'(<dual_alpha, xi>) * root_alpha, where
 * ceil'(x) = floor(x) + 1 is the smallest integer strictly above x.
 * Lands in the lattice spanned by the roots. */
Vec xi_bracket(const Vec& xi, const Parabolic& p, const Parabolic& q);

/* block permutation action.  w maps block index i of the reference levi to
 * block w[i]; blocks being permuted must have equal sizes. */
Vec weyl_act(const std::vector<int>& w, const Parabolic& levi_ref, const Vec& v);
Parabolic weyl_act(const std::vector<int>& w, const Parabolic& levi_ref, const Parabolic& p);

}  // namespace orbint
