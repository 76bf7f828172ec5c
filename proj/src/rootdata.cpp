#include "orbint/rootdata.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbint {

RootSets root_sets(const Parabolic& p, const Parabolic& q) {
    if (!contained_in(p, q))
        throw std::invalid_argument("root_sets: P not contained in Q");
    int n = p.n();
    RootSets rs;
    size_t pi = 0;
    for (const auto& qb : q.blocks) {
        /* the P-blocks inside this Q-block, in order */
        std::vector<const std::vector<int>*> list;
        size_t cnt = 0;
        while (cnt < qb.size()) {
            list.push_back(&p.blocks[pi]);
            cnt += p.blocks[pi].size();
            pi++;
        }
        for (size_t i = 0; i + 1 < list.size(); i++) {
            Vec r = vec_zero(n);
            Rat a = Rat(1) / Rat((long)list[i]->size());
            Rat b = Rat(1) / Rat((long)list[i + 1]->size());
            for (int c : *list[i])
                r[c] = a;
            for (int c : *list[i + 1])
                r[c] = -b;
            rs.roots.push_back(std::move(r));
        }
    }
    /* dual basis inside span(roots): duals[j] = sum_i (G^{-1})_{ij} roots[i] */
    size_t k = rs.roots.size();
    for (size_t j = 0; j < k; j++) {
        Vec e = vec_zero(k);
        e[j] = Rat(1);
        /* solve G x = e_j where G = Gram(roots) */
        std::vector<Vec> gram_cols(k, vec_zero(k));
        for (size_t a2 = 0; a2 < k; a2++)
            for (size_t b2 = 0; b2 < k; b2++)
                gram_cols[a2][b2] = dot(rs.roots[a2], rs.roots[b2]);
        auto x = solve_columns(gram_cols, e);
        if (!x)
            throw std::logic_error("degenerate Gram matrix for simple roots");
        Vec d = vec_zero(n);
        for (size_t i = 0; i < k; i++)
            d = d + (*x)[i] * rs.roots[i];
        rs.duals.push_back(std::move(d));
    }
    return rs;
}

Vec project(const Vec& v, const Parabolic& p, const Parabolic& q) {
    RootSets rs = root_sets(p, q);
    Vec out = vec_zero(v.size());
    for (size_t j = 0; j < rs.roots.size(); j++)
        out = out + dot(v, rs.roots[j]) * rs.duals[j];
    return out;
}

Vec project_levi(const Vec& v, const Parabolic& p) {
    Vec out = vec_zero(v.size());
    for (const auto& b : p.blocks) {
        Rat avg(0);
        for (int c : b)
            avg += v[c];
        avg /= Rat((long)b.size());
        for (int c : b)
            out[c] = avg;
    }
    return out;
}

bool tau(const Parabolic& p, const Parabolic& q, const Vec& h) {
    for (const auto& r : root_sets(p, q).roots)
        if (dot(r, h) <= 0)
            return false;
    return true;
}

bool tau_hat(const Parabolic& p, const Parabolic& q, const Vec& h) {
    for (const auto& d : root_sets(p, q).duals)
        if (dot(d, h) <= 0)
            return false;
    return true;
}

RadExt covolume(const std::vector<Vec>& basis) {
    Rat det = gram_det(basis);
    if (det == 0)
        throw std::invalid_argument("covolume of a dependent family");
    return RadExt::sqrt_of(det);
}

std::optional<Vec> co_adjacent(const Parabolic& p1, const Parabolic& p2) {
    if (!same_levi(p1, p2))
        throw std::invalid_argument("co_adjacent requires equal Levi components");
    int n = p1.n();
    Parabolic g = full_group(n);
    RootSets r1 = root_sets(p1, g), r2 = root_sets(p2, g);
    /* count shared simple roots */
    size_t shared = 0;
    for (const auto& a : r1.roots)
        for (const auto& b : r2.roots)
            if (a == b)
                shared++;
    if (r1.roots.empty() || shared + 1 != r1.roots.size())
        return std::nullopt;
    /* the witness: the unique member of duals(P1) that is the negative of a
     * member of duals(P2) */
    std::optional<Vec> witness;
    for (const auto& d1 : r1.duals)
        for (const auto& d2 : r2.duals) {
            Vec sum = d1 + d2;
            if (vec_is_zero(sum)) {
                if (witness)
                    return std::nullopt; /* not unique: not co-adjacent */
                witness = d1;
            }
        }
    return witness;
}

Vec xi_bracket(const Vec& xi, const Parabolic& p, const Parabolic& q) {
    RootSets rs = root_sets(p, q);
    Vec xi_pq = project(xi, p, q);
    Vec out = vec_zero(xi.size());
    for (size_t j = 0; j < rs.roots.size(); j++) {
        Rat pairing = dot(rs.duals[j], xi_pq);
        Rat coeff = Rat(rat_floor(pairing)) + 1; /* smallest integer > pairing */
        out = out + coeff * rs.roots[j];
    }
    return out;
}

namespace {

/* coordinate permutation induced by a block permutation: the a-th element
 * of block i goes to the a-th element of block w[i] */
std::vector<int> coord_perm(const std::vector<int>& w, const Parabolic& levi_ref) {
    if (w.size() != levi_ref.blocks.size())
        throw std::invalid_argument("block permutation has wrong length");
    std::vector<int> perm(levi_ref.n(), -1);
    for (size_t i = 0; i < w.size(); i++) {
        const auto& src = levi_ref.blocks[i];
        const auto& dst = levi_ref.blocks[(size_t)w[i]];
        if (src.size() != dst.size())
            throw std::invalid_argument("block permutation mixes unequal block sizes");
        for (size_t a = 0; a < src.size(); a++)
            perm[(size_t)src[a]] = dst[a];
    }
    return perm;
}

}  // namespace

Vec weyl_act(const std::vector<int>& w, const Parabolic& levi_ref, const Vec& v) {
    auto perm = coord_perm(w, levi_ref);
    Vec out = vec_zero(v.size());
    for (size_t i = 0; i < v.size(); i++)
        out[(size_t)perm[i]] = v[i];
    return out;
}

Parabolic weyl_act(const std::vector<int>& w, const Parabolic& levi_ref, const Parabolic& p) {
    auto perm = coord_perm(w, levi_ref);
    Parabolic out;
    for (const auto& b : p.blocks) {
        std::vector<int> nb;
        for (int c : b)
            nb.push_back(perm[(size_t)c]);
        std::sort(nb.begin(), nb.end());
        out.blocks.push_back(std::move(nb));
    }
    return out;
}

}  // namespace orbint
