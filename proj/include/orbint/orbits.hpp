#pragma once

/* Nilpotent orbits of GL(n) as partitions of n, with the type-A
 * combinatorial form of parabolic induction of orbits: inducing a
 * blockwise nilpotent from a Levi adds the (zero-padded) partitions
 * componentwise.  Richardson orbits (induction of zero) are transposes
 * of the block-size composition; dim O = n^2 - sum of squared parts of
 * the transpose.
 */

#include "orbint/parabolic.hpp"

#include <map>
#include <vector>

namespace orbint {

/* weakly decreasing positive parts */
using Partition = std::vector<int>;

Partition partition_normalize(std::vector<int> parts); /* sort desc, drop zeros */
int partition_sum(const Partition& p);
Partition transpose(const Partition& p);
/* dominance order: a ≼ b (prefix sums of a bounded by b's); requires equal sums */
bool dominated_by(const Partition& a, const Partition& b);

/* componentwise sum of zero-padded partitions; parts[i] must sum to sizes[i] */
Partition ls_induce(const std::vector<int>& sizes, const std::vector<Partition>& parts);
/* induction of the zero orbit of the Levi with P's block sizes */
Partition richardson(const Parabolic& p);
int dim_orbit(const Partition& p);

/* a nilpotent element of the Levi of `levi`, one partition per block (in
 * block order, each summing to the block size) */
struct BlockNilpotent {
    Parabolic levi;
    std::vector<Partition> parts;
    void validate() const;
};

/* induce X from P's Levi into each Q-block (P ⊂ Q): per Q-block, the
 * constituent partitions of X are induced within the block */
BlockNilpotent induce_to(const Parabolic& p, const BlockNilpotent& x, const Parabolic& q);
/* all the way to G */
Partition induce_to_group(const Parabolic& p, const BlockNilpotent& x);

/* view X inside the coarser Levi of Q (P ⊂ Q): the M_Q-orbit of the
 * block-diagonal element, i.e. per Q-block the merge of the constituent
 * partitions (Jordan type of a direct sum) */
BlockNilpotent restrict_to(const Parabolic& p, const BlockNilpotent& x, const Parabolic& q);

/* sum of (-1)^{dim a_P^G} over P1 ⊂ P ⊂ P2 such that inducing X from P
 * (X viewed as an element of P's Levi) gives the orbit O */
int xi_sum(const Parabolic& p1, const Parabolic& p2, const Partition& o, const BlockNilpotent& x);

}  // namespace orbint
