#include "orbint/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace orbint {

Partition partition_normalize(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    for (int p : parts)
        if (p < 0)
            throw std::invalid_argument("negative partition part");
    return parts;
}

int partition_sum(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition transpose(const Partition& p) {
    if (p.empty())
        return {};
    Partition t(p[0], 0);
    for (int part : p)
        for (int i = 0; i < part; i++)
            t[i]++;
    return t;
}

bool dominated_by(const Partition& a, const Partition& b) {
    if (partition_sum(a) != partition_sum(b))
        throw std::invalid_argument("dominance comparison of unequal sizes");
    int sa = 0, sb = 0;
    size_t k = std::max(a.size(), b.size());
    for (size_t i = 0; i < k; i++) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa > sb)
            return false;
    }
    return true;
}

Partition ls_induce(const std::vector<int>& sizes, const std::vector<Partition>& parts) {
    if (sizes.size() != parts.size())
        throw std::invalid_argument("ls_induce: sizes/parts length mismatch");
    size_t width = 0;
    for (size_t i = 0; i < parts.size(); i++) {
        if (partition_sum(parts[i]) != sizes[i])
            throw std::invalid_argument("ls_induce: partition does not sum to its block size");
        width = std::max(width, parts[i].size());
    }
    Partition out(width, 0);
    for (const auto& p : parts)
        for (size_t j = 0; j < p.size(); j++)
            out[j] += p[j];
    return partition_normalize(out);
}

Partition richardson(const Parabolic& p) {
    std::vector<int> sizes;
    for (const auto& b : p.blocks)
        sizes.push_back((int)b.size());
    /* inducing zero orbits (1^size per block) sums the columns: the result
     * is the transpose of the sorted size composition */
    std::vector<Partition> zeros;
    for (int s : sizes)
        zeros.push_back(Partition((size_t)s, 1));
    return ls_induce(sizes, zeros);
}

int dim_orbit(const Partition& p) {
    int n = partition_sum(p);
    int s = 0;
    for (int c : transpose(p))
        s += c * c;
    return n * n - s;
}

void BlockNilpotent::validate() const {
    if (parts.size() != levi.blocks.size())
        throw std::invalid_argument("block nilpotent: one partition per block required");
    for (size_t i = 0; i < parts.size(); i++)
        if (partition_sum(parts[i]) != (int)levi.blocks[i].size())
            throw std::invalid_argument("block nilpotent: partition/block size mismatch");
}

BlockNilpotent induce_to(const Parabolic& p, const BlockNilpotent& x, const Parabolic& q) {
    if (!(x.levi == p))
        throw std::invalid_argument("induce_to: nilpotent not aligned with P");
    x.validate();
    if (!contained_in(p, q))
        throw std::invalid_argument("induce_to: P not contained in Q");
    BlockNilpotent out{q, {}};
    size_t pi = 0;
    for (const auto& qb : q.blocks) {
        std::vector<int> sizes;
        std::vector<Partition> parts;
        size_t cnt = 0;
        while (cnt < qb.size()) {
            sizes.push_back((int)p.blocks[pi].size());
            parts.push_back(x.parts[pi]);
            cnt += p.blocks[pi].size();
            pi++;
        }
        out.parts.push_back(ls_induce(sizes, parts));
    }
    return out;
}

Partition induce_to_group(const Parabolic& p, const BlockNilpotent& x) {
    return induce_to(p, x, full_group(p.n())).parts[0];
}

BlockNilpotent restrict_to(const Parabolic& p, const BlockNilpotent& x, const Parabolic& q) {
    if (!(x.levi == p))
        throw std::invalid_argument("restrict_to: nilpotent not aligned with P");
    x.validate();
    if (!contained_in(p, q))
        throw std::invalid_argument("restrict_to: P not contained in Q");
    BlockNilpotent out{q, {}};
    size_t pi = 0;
    for (const auto& qb : q.blocks) {
        std::vector<int> merged;
        size_t cnt = 0;
        while (cnt < qb.size()) {
            merged.insert(merged.end(), x.parts[pi].begin(), x.parts[pi].end());
            cnt += p.blocks[pi].size();
            pi++;
        }
        out.parts.push_back(partition_normalize(merged));
    }
    return out;
}

int xi_sum(const Parabolic& p1, const Parabolic& p2, const Partition& o, const BlockNilpotent& x) {
    if (!contained_in(p1, p2))
        throw std::invalid_argument("xi_sum: P1 not contained in P2");
    int total = 0;
    for (const auto& p : parabolics_between(p1, p2)) {
        /* X viewed as an element of M_P, then induced up to G */
        BlockNilpotent on_p = restrict_to(p1, x, p);
        Partition induced = induce_to_group(p, on_p);
        if (induced == o) {
            int dim_ap = (int)p.nblocks() - 1; /* dim a_P^G */
            total += dim_ap % 2 == 0 ? 1 : -1;
        }
    }
    return total;
}

}  // namespace orbint
