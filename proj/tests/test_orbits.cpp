#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbint/orbits.hpp"

#include <numeric>
#include <random>

using namespace orbint;

namespace {

Partition rnd_partition(std::mt19937_64& rng, int n) {
    /* random composition of n, then sort */
    std::vector<int> parts;
    std::uniform_int_distribution<int> d(1, n);
    int left = n;
    while (left > 0) {
        int p = std::min(left, d(rng));
        parts.push_back(p);
        left -= p;
    }
    return partition_normalize(parts);
}

std::vector<int> rnd_composition(std::mt19937_64& rng, int n) {
    std::vector<int> sizes;
    std::uniform_int_distribution<int> d(1, n);
    int left = n;
    while (left > 0) {
        int s = std::min(left, d(rng));
        sizes.push_back(s);
        left -= s;
    }
    return sizes;
}

}  // namespace

TEST_CASE("partition plumbing") {
    CHECK(partition_normalize({0, 3, 1, 2, 0}) == Partition{3, 2, 1});
    CHECK_THROWS_AS(partition_normalize({2, -1}), std::invalid_argument);
    CHECK(partition_sum({3, 2, 1}) == 6);

    CHECK(transpose({3}) == Partition{1, 1, 1});
    CHECK(transpose({3, 3}) == Partition{2, 2, 2}); /* rectangle (r^d) -> (d^r) */
    CHECK(transpose({}) == Partition{});

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; trial++) {
        Partition p = rnd_partition(rng, 1 + (int)(rng() % 12));
        CHECK(transpose(transpose(p)) == p);
    }
}

TEST_CASE("dominance order") {
    CHECK(dominated_by({1, 1, 1}, {3}));
    CHECK(dominated_by({2, 1}, {3}));
    CHECK(!dominated_by({3}, {2, 1}));
    CHECK(dominated_by({2, 2}, {3, 1}));
    CHECK(!dominated_by({3, 1}, {2, 2}));
    CHECK_THROWS_AS(dominated_by({2}, {1, 1, 1}), std::invalid_argument);

    /* reflexive and transitive on random triples */
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 100; trial++) {
        int n = 2 + (int)(rng() % 8);
        Partition a = rnd_partition(rng, n), b = rnd_partition(rng, n), c = rnd_partition(rng, n);
        CHECK(dominated_by(a, a));
        if (dominated_by(a, b) && dominated_by(b, c))
            CHECK(dominated_by(a, c));
    }
}

TEST_CASE("componentwise-sum induction and Richardson orbits") {
    /* zero orbits from GL(d)^r give the d-blocks-of-size-r rectangle */
    for (int d = 1; d <= 4; d++)
        for (int r = 1; r <= 4; r++) {
            std::vector<int> sizes(r, d);
            std::vector<Partition> zeros(r, Partition((size_t)d, 1));
            CHECK(ls_induce(sizes, zeros) == Partition((size_t)d, r));
            CHECK(richardson(standard_parabolic(sizes)) == Partition((size_t)d, r));
        }

    /* single block: identity */
    CHECK(ls_induce({5}, {{3, 2}}) == Partition{3, 2});

    CHECK(richardson(borel(4)) == Partition{4});
    CHECK(richardson(full_group(4)) == Partition{1, 1, 1, 1});
    /* richardson = transpose of the sorted size composition */
    CHECK(richardson(standard_parabolic({3, 1, 2})) == transpose(Partition{3, 2, 1}));

    CHECK_THROWS_AS(ls_induce({2, 2}, {{2}, {1}}), std::invalid_argument);
}

TEST_CASE("orbit dimensions") {
    /* rectangle (r^d): dim = n(n-d) */
    for (int d = 1; d <= 5; d++)
        for (int r = 1; r <= 5; r++) {
            int n = r * d;
            CHECK(dim_orbit(Partition((size_t)d, r)) == n * (n - d));
        }
    CHECK(dim_orbit({1, 1, 1}) == 0);
    CHECK(dim_orbit({5}) == 20);

    /* Richardson dimension = n^2 - sum of squared block sizes, all
     * compositions of n <= 8 */
    for (int n = 1; n <= 8; n++)
        for (const auto& p : standard_parabolics(n)) {
            int s = 0;
            for (const auto& b : p.blocks)
                s += (int)(b.size() * b.size());
            CHECK(dim_orbit(richardson(p)) == n * n - s);
        }
}

TEST_CASE("induction through an intermediate parabolic, 200 random cases") {
    std::mt19937_64 rng(23);
    int done = 0;
    while (done < 200) {
        int n = 2 + (int)(rng() % 9); /* n <= 10 */
        auto sizes = rnd_composition(rng, n);
        Parabolic p = standard_parabolic(sizes);
        /* random coarser standard parabolic: merge consecutive blocks */
        std::vector<int> qsizes;
        int acc = 0;
        for (size_t i = 0; i < sizes.size(); i++) {
            acc += sizes[i];
            if (rng() % 2 || i + 1 == sizes.size()) {
                qsizes.push_back(acc);
                acc = 0;
            }
        }
        Parabolic q = standard_parabolic(qsizes);
        BlockNilpotent x{p, {}};
        for (int s : sizes)
            x.parts.push_back(rnd_partition(rng, s));

        Partition direct = induce_to_group(p, x);
        Partition stepwise = induce_to_group(q, induce_to(p, x, q));
        CHECK(direct == stepwise);
        done++;
    }
}

TEST_CASE("induction examples and dominance monotonicity") {
    /* n=2: zero on the torus induces blockwise (1),(1) in B and the regular
     * orbit (2) in the full group */
    Parabolic t2 = borel(2);
    BlockNilpotent zero2{t2, {{1}, {1}}};
    auto on_b = induce_to(t2, zero2, t2);
    CHECK(on_b.parts == std::vector<Partition>{{1}, {1}});
    CHECK(induce_to_group(t2, zero2) == Partition{2});

    CHECK_THROWS_AS(induce_to(t2, BlockNilpotent{full_group(2), {{2}}}, t2), std::invalid_argument);

    /* coarsening the parabolic can only lower the induced orbit: with Y
     * blockwise dominated by the induced orbit on Q, inducing Y onward stays
     * dominated by the direct induction */
    std::mt19937_64 rng(29);
    int done = 0;
    while (done < 100) {
        int n = 2 + (int)(rng() % 7);
        auto sizes = rnd_composition(rng, n);
        Parabolic p = standard_parabolic(sizes);
        std::vector<int> qsizes;
        int acc = 0;
        for (size_t i = 0; i < sizes.size(); i++) {
            acc += sizes[i];
            if (rng() % 2 || i + 1 == sizes.size()) {
                qsizes.push_back(acc);
                acc = 0;
            }
        }
        Parabolic q = standard_parabolic(qsizes);
        BlockNilpotent x{p, {}};
        for (int s : sizes)
            x.parts.push_back(rnd_partition(rng, s));
        BlockNilpotent ind = induce_to(p, x, q);
        /* lower each block orbit to a random dominated partition */
        BlockNilpotent y{q, {}};
        for (size_t i = 0; i < ind.parts.size(); i++) {
            int s = partition_sum(ind.parts[i]);
            Partition cand = rnd_partition(rng, s);
            y.parts.push_back(dominated_by(cand, ind.parts[i]) ? cand : ind.parts[i]);
        }
        CHECK(dominated_by(induce_to_group(q, y), induce_to_group(p, x)));
        /* special case: Richardson orbits shrink under coarsening */
        CHECK(dominated_by(richardson(q), richardson(p)));
        done++;
    }
}

TEST_CASE("alternating orbit counts") {
    /* P1 = P2: a single summand */
    Parabolic t2 = borel(2);
    BlockNilpotent zero2{t2, {{1}, {1}}};
    CHECK(xi_sum(t2, t2, {2}, zero2) == -1); /* dim a_B^G = 1 */
    CHECK(xi_sum(t2, t2, {1, 1}, zero2) == 0);

    /* n=3, B to G with X = 0: the four intermediate parabolics give
     * (3) -> +1, (2,1) -> -2, (1,1,1) -> +1 */
    Parabolic t3 = borel(3);
    BlockNilpotent zero3{t3, {{1}, {1}, {1}}};
    CHECK(xi_sum(t3, full_group(3), {3}, zero3) == 1);
    CHECK(xi_sum(t3, full_group(3), {2, 1}, zero3) == -2);
    CHECK(xi_sum(t3, full_group(3), {1, 1, 1}, zero3) == 1);

    CHECK_THROWS_AS(xi_sum(full_group(2), t2, {2}, BlockNilpotent{full_group(2), {{2}}}),
                    std::invalid_argument);

    /* summing over all orbits recovers the signed count of intermediate
     * parabolics (each contributes to exactly one orbit) */
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; trial++) {
        int n = 2 + (int)(rng() % 4);
        auto sizes = rnd_composition(rng, n);
        Parabolic p1 = standard_parabolic(sizes);
        Parabolic p2 = full_group(n);
        BlockNilpotent x{p1, {}};
        for (int s : sizes)
            x.parts.push_back(rnd_partition(rng, s));
        int direct = 0, via_orbits = 0;
        std::set<Partition> orbits;
        for (const auto& r : parabolics_between(p1, p2)) {
            direct += ((int)r.nblocks() - 1) % 2 == 0 ? 1 : -1;
            orbits.insert(induce_to_group(r, restrict_to(p1, x, r)));
        }
        for (const auto& o : orbits)
            via_orbits += xi_sum(p1, p2, o, x);
        CHECK(direct == via_orbits);
    }
}
