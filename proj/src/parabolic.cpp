#include "orbint/parabolic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orbint {

int Parabolic::n() const {
    size_t total = 0;
    for (const auto& b : blocks)
        total += b.size();
    return (int)total;
}

void Parabolic::validate() const {
    std::set<int> seen;
    int total = 0;
    for (const auto& b : blocks) {
        if (b.empty())
            throw std::invalid_argument("empty parabolic block");
        if (!std::is_sorted(b.begin(), b.end()))
            throw std::invalid_argument("parabolic block not sorted");
        for (int i : b) {
            if (!seen.insert(i).second)
                throw std::invalid_argument("repeated coordinate in parabolic");
            total++;
        }
    }
    for (int i = 0; i < total; i++)
        if (!seen.count(i))
            throw std::invalid_argument("parabolic blocks do not cover {1..n}");
}

bool Parabolic::is_standard() const {
    int next = 0;
    for (const auto& b : blocks)
        for (int i : b)
            if (i != next++)
                return false;
    return true;
}

int Parabolic::block_of(int i) const {
    for (size_t b = 0; b < blocks.size(); b++)
        if (std::binary_search(blocks[b].begin(), blocks[b].end(), i))
            return (int)b;
    throw std::out_of_range("coordinate not in any block");
}

std::string Parabolic::str() const {
    std::ostringstream os;
    for (size_t b = 0; b < blocks.size(); b++) {
        os << (b ? "|" : "");
        for (size_t i = 0; i < blocks[b].size(); i++)
            os << (i ? "," : "") << blocks[b][i] + 1;
    }
    return os.str();
}

std::vector<std::vector<int>> levi_of(const Parabolic& p) {
    auto blocks = p.blocks;
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

bool same_levi(const Parabolic& a, const Parabolic& b) { return levi_of(a) == levi_of(b); }

bool contained_in(const Parabolic& p, const Parabolic& q) {
    /* each Q-block must be a union of consecutive P-blocks, in order */
    size_t pi = 0;
    for (const auto& qb : q.blocks) {
        std::vector<int> merged;
        while (merged.size() < qb.size()) {
            if (pi >= p.blocks.size())
                return false;
            merged.insert(merged.end(), p.blocks[pi].begin(), p.blocks[pi].end());
            pi++;
        }
        std::sort(merged.begin(), merged.end());
        if (merged != qb)
            return false;
    }
    return pi == p.blocks.size();
}

Parabolic full_group(int n) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return Parabolic{{all}};
}

Parabolic borel(int n) {
    Parabolic p;
    for (int i = 0; i < n; i++)
        p.blocks.push_back({i});
    return p;
}

Parabolic standard_parabolic(const std::vector<int>& sizes) {
    Parabolic p;
    int next = 0;
    for (int s : sizes) {
        if (s <= 0)
            throw std::invalid_argument("nonpositive block size");
        std::vector<int> b(s);
        std::iota(b.begin(), b.end(), next);
        next += s;
        p.blocks.push_back(std::move(b));
    }
    return p;
}

std::vector<Parabolic> standard_parabolics(int n) {
    std::vector<Parabolic> out;
    /* compositions of n via subsets of the n-1 gaps */
    for (unsigned long mask = 0; mask < (1ul << (n - 1)); mask++) {
        std::vector<int> sizes;
        int run = 1;
        for (int gap = 0; gap < n - 1; gap++) {
            if (mask & (1ul << gap)) {
                sizes.push_back(run);
                run = 1;
            } else {
                run++;
            }
        }
        sizes.push_back(run);
        out.push_back(standard_parabolic(sizes));
    }
    return out;
}

namespace {

void ordered_partitions(std::vector<int> remaining, Parabolic cur, std::vector<Parabolic>& out) {
    if (remaining.empty()) {
        out.push_back(cur);
        return;
    }
    /* choose the next block: any nonempty subset of the remaining letters
     * (block order matters, so no deduplication is wanted) */
    size_t k = remaining.size();
    for (unsigned long mask = 1; mask < (1ul << k); mask++) {
        std::vector<int> block, left;
        for (size_t i = 0; i < k; i++)
            (mask & (1ul << i) ? block : left).push_back(remaining[i]);
        cur.blocks.push_back(block);
        ordered_partitions(left, cur, out);
        cur.blocks.pop_back();
    }
}

}  // namespace

std::vector<Parabolic> all_parabolics(int n) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::vector<Parabolic> out;
    ordered_partitions(all, Parabolic{}, out);
    return out;
}

std::vector<Parabolic> parabolics_with_levi(const std::vector<std::vector<int>>& levi) {
    std::vector<std::vector<int>> blocks = levi;
    for (auto& b : blocks)
        std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    std::vector<Parabolic> out;
    do {
        out.push_back(Parabolic{blocks});
    } while (std::next_permutation(blocks.begin(), blocks.end()));
    return out;
}

std::vector<Parabolic> parabolics_between(const Parabolic& p, const Parabolic& q) {
    if (!contained_in(p, q))
        throw std::invalid_argument("parabolics_between: P not contained in Q");
    /* within each Q-block, the P-blocks it contains form an ordered list;
     * an intermediate R merges consecutive runs of that list independently
     * per Q-block (a composition choice per Q-block) */
    std::vector<std::vector<std::vector<int>>> runs_per_qblock;
    {
        size_t pi = 0;
        for (const auto& qb : q.blocks) {
            std::vector<std::vector<int>> list;
            size_t cnt = 0;
            while (cnt < qb.size()) {
                list.push_back(p.blocks[pi]);
                cnt += p.blocks[pi].size();
                pi++;
            }
            runs_per_qblock.push_back(std::move(list));
        }
    }
    std::vector<Parabolic> out;
    /* enumerate the product of composition choices */
    std::vector<unsigned long> mask(runs_per_qblock.size(), 0);
    for (;;) {
        Parabolic r;
        for (size_t b = 0; b < runs_per_qblock.size(); b++) {
            const auto& list = runs_per_qblock[b];
            unsigned long m = mask[b];
            std::vector<int> cur = list[0];
            for (size_t i = 1; i < list.size(); i++) {
                if (m & (1ul << (i - 1))) {
                    std::sort(cur.begin(), cur.end());
                    r.blocks.push_back(cur);
                    cur = list[i];
                } else {
                    cur.insert(cur.end(), list[i].begin(), list[i].end());
                }
            }
            std::sort(cur.begin(), cur.end());
            r.blocks.push_back(cur);
        }
        out.push_back(std::move(r));
        /* odometer over the per-block gap masks */
        size_t b = 0;
        for (; b < runs_per_qblock.size(); b++) {
            size_t gaps = runs_per_qblock[b].size() - 1;
            if (++mask[b] < (1ul << gaps))
                break;
            mask[b] = 0;
        }
        if (b == runs_per_qblock.size())
            break;
    }
    return out;
}

}  // namespace orbint
