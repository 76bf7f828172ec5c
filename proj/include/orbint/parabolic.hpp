#pragma once

/* Semi-standard parabolic subgroups of GL(n), encoded combinatorially.
 *
 * A parabolic containing the diagonal torus is an ordered set partition
 * of {1..n}: the blocks are the Levi blocks, their order fixes the
 * unipotent radical.  P is contained in Q exactly when Q's blocks are
 * obtained by merging consecutive blocks of P (order preserved).  The
 * standard parabolics are those whose blocks are increasing intervals.
 */

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace orbint {

struct Parabolic {
    /* blocks[b] lists the 0-based torus coordinates of block b; blocks are
     * sorted internally, pairwise disjoint, and cover {0..n-1} */
    std::vector<std::vector<int>> blocks;

    int n() const;
    size_t nblocks() const { return blocks.size(); }
    void validate() const; /* throws std::invalid_argument on malformed input */
    bool is_standard() const;
    std::string str() const;

    /* which block contains coordinate i */
    int block_of(int i) const;

    bool operator==(const Parabolic& o) const { return blocks == o.blocks; }
    bool operator<(const Parabolic& o) const { return blocks < o.blocks; }
};

/* the Levi = the blocks as an unordered (canonically sorted) partition */
std::vector<std::vector<int>> levi_of(const Parabolic& p);
bool same_levi(const Parabolic& a, const Parabolic& b);

/* containment P ⊂ Q */
bool contained_in(const Parabolic& p, const Parabolic& q);

Parabolic full_group(int n);   /* one block */
Parabolic borel(int n);        /* n singleton blocks in order */
/* standard parabolic with given interval block sizes */
Parabolic standard_parabolic(const std::vector<int>& sizes);

/* all 2^{n-1} standard parabolics (compositions of n) */
std::vector<Parabolic> standard_parabolics(int n);
/* all semi-standard parabolics = ordered set partitions of {1..n} */
std::vector<Parabolic> all_parabolics(int n);
/* P(M): all orderings of the given block partition */
std::vector<Parabolic> parabolics_with_levi(const std::vector<std::vector<int>>& levi);
/* all R with P ⊂ R ⊂ Q */
std::vector<Parabolic> parabolics_between(const Parabolic& p, const Parabolic& q);
/* F(P) = all parabolics containing P */
inline std::vector<Parabolic> parabolics_containing(const Parabolic& p) {
    return parabolics_between(p, full_group(p.n()));
}

}  // namespace orbint
