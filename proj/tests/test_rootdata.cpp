#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbint/rootdata.hpp"

#include <map>
#include <random>

using namespace orbint;

namespace {

Vec rnd_int_vec(std::mt19937_64& rng, int n, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> d(lo, hi);
    Vec v(n);
    for (auto& x : v)
        x = Rat(d(rng));
    return v;
}

Vec rnd_rat_vec(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> num(-15, 15), den(1, 7);
    Vec v(n);
    for (auto& x : v)
        x = rat(num(rng), den(rng));
    return v;
}

int dim_rel(const Parabolic& p, const Parabolic& q) {
    return (int)p.nblocks() - (int)q.nblocks();
}

}  // namespace

TEST_CASE("parabolic enumeration") {
    CHECK(standard_parabolics(1).size() == 1);
    CHECK(standard_parabolics(3).size() == 4);
    CHECK(standard_parabolics(4).size() == 8);
    /* ordered set partitions: Fubini numbers */
    CHECK(all_parabolics(3).size() == 13);
    CHECK(all_parabolics(4).size() == 75);

    CHECK(parabolics_with_levi({{0}, {1}}).size() == 2);
    CHECK(parabolics_with_levi({{0, 1, 2, 3}}).size() == 1);
    CHECK(parabolics_with_levi({{0, 1}, {2, 3}}).size() == 2);

    for (const auto& p : all_parabolics(4))
        p.validate();
}

TEST_CASE("containment is a partial order compatible with between-enumeration") {
    auto all = all_parabolics(4);
    for (const auto& p : all) {
        CHECK(contained_in(p, p));
        for (const auto& q : all) {
            if (!contained_in(p, q))
                continue;
            for (const auto& r : all)
                if (contained_in(q, r))
                    CHECK(contained_in(p, r));
            /* parabolics_between agrees with direct filtering */
            auto betw = parabolics_between(p, q);
            size_t direct = 0;
            for (const auto& r : all)
                if (contained_in(p, r) && contained_in(r, q))
                    direct++;
            CHECK(betw.size() == direct);
        }
    }
}

TEST_CASE("root sets and duality") {
    int n = 2;
    Parabolic b = borel(n), g = full_group(n);
    RootSets rs = root_sets(b, g);
    REQUIRE(rs.roots.size() == 1);
    CHECK(rs.roots[0] == Vec{Rat(1), Rat(-1)});
    CHECK(rs.duals[0] == Vec{rat(1, 2), rat(-1, 2)});

    /* P = Q: empty sets */
    CHECK(root_sets(b, b).roots.empty());

    /* n=3: inside the (2,1) parabolic the Borel sees one root */
    Parabolic p21 = standard_parabolic({2, 1});
    RootSets inner = root_sets(borel(3), p21);
    REQUIRE(inner.roots.size() == 1);
    CHECK(inner.roots[0] == Vec{Rat(1), Rat(-1), Rat(0)});

    CHECK_THROWS_AS(root_sets(p21, borel(3)), std::invalid_argument);
}

TEST_CASE("duality holds for every chain, n <= 5") {
    for (int n = 2; n <= 5; n++) {
        for (const auto& p : all_parabolics(n))
            for (const auto& q : all_parabolics(n)) {
                if (!contained_in(p, q))
                    continue;
                RootSets rs = root_sets(p, q);
                for (size_t i = 0; i < rs.roots.size(); i++)
                    for (size_t j = 0; j < rs.roots.size(); j++)
                        CHECK(dot(rs.roots[i], rs.duals[j]) == (i == j ? 1 : 0));
            }
    }
}

TEST_CASE("projections") {
    std::mt19937_64 rng(31);
    Parabolic b = borel(2), g = full_group(2);
    CHECK(project(Vec{Rat(3), Rat(1)}, b, g) == Vec{Rat(1), Rat(-1)});
    /* constant vectors die */
    CHECK(vec_is_zero(project(Vec{Rat(5), Rat(5)}, b, g)));

    for (int n = 2; n <= 4; n++) {
        auto all = all_parabolics(n);
        for (int trial = 0; trial < 10; trial++) {
            Vec v = rnd_rat_vec(rng, n);
            for (const auto& p : all) {
                Vec pr = project(v, p, full_group(n));
                CHECK(project(pr, p, full_group(n)) == pr);
                /* orthogonal decomposition a_T = a_T^P + a_P^G + a_G */
                Vec inner = v - project_levi(v, p);
                Rat mean(0);
                for (const auto& x : v)
                    mean += x;
                mean /= n;
                Vec central(n, mean);
                CHECK(inner + pr + central == v);
            }
        }
    }
}

TEST_CASE("cone indicators and orthogonality sweep, n <= 5") {
    std::mt19937_64 rng(37);
    /* n=2 hand values */
    Parabolic b = borel(2), g = full_group(2);
    CHECK(tau(b, g, Vec{Rat(1), Rat(-1)}));
    CHECK(tau_hat(b, g, Vec{Rat(1), Rat(-1)}));
    CHECK(!tau(b, g, vec_zero(2)));
    CHECK(!tau_hat(b, g, vec_zero(2)));

    for (int n = 2; n <= 5; n++) {
        auto all = all_parabolics(n);
        std::vector<std::pair<Parabolic, Parabolic>> chains;
        for (const auto& p : all)
            for (const auto& q : all)
                if (contained_in(p, q))
                    chains.push_back({p, q});
        for (const auto& [p, q] : chains) {
            auto between = parabolics_between(p, q);
            int hits = 0;
            for (int trial = 0; trial < (n == 5 ? 20 : 100); trial++) {
                Vec h = rnd_int_vec(rng, n);
                /* avoid walls: all pairings against roots and duals nonzero */
                bool wall = false;
                for (const auto& r : between) {
                    RootSets lo = root_sets(p, r), hi = root_sets(r, q);
                    for (const auto& v : lo.roots)
                        wall |= dot(v, h) == 0;
                    for (const auto& v : lo.duals)
                        wall |= dot(v, h) == 0;
                    for (const auto& v : hi.roots)
                        wall |= dot(v, h) == 0;
                    for (const auto& v : hi.duals)
                        wall |= dot(v, h) == 0;
                }
                if (wall)
                    continue;
                hits++;
                int sum1 = 0, sum2 = 0;
                for (const auto& r : between) {
                    int sign1 = dim_rel(p, r) % 2 == 0 ? 1 : -1;
                    int sign2 = dim_rel(r, q) % 2 == 0 ? 1 : -1;
                    sum1 += sign1 * (tau(p, r, h) && tau_hat(r, q, h) ? 1 : 0);
                    sum2 += sign2 * (tau_hat(p, r, h) && tau(r, q, h) ? 1 : 0);
                }
                int expect = p == q ? 1 : 0;
                CHECK(sum1 == expect);
                CHECK(sum2 == expect);
            }
            CHECK(hits > 0);
        }
    }
}

TEST_CASE("covolumes") {
    CHECK(covolume({Vec{Rat(1), Rat(-1)}}) == RadExt::sqrt_of(Rat(2)));
    CHECK(covolume({Vec{rat(1, 2), rat(-1, 2)}}) == RadExt::sqrt_of(rat(1, 2)));
    CHECK(covolume({Vec{Rat(1), Rat(0)}, Vec{Rat(0), Rat(1)}}) == RadExt(Rat(1)));
    CHECK_THROWS_AS(covolume({Vec{Rat(1), Rat(1)}, Vec{Rat(2), Rat(2)}}), std::invalid_argument);
}

TEST_CASE("co-adjacency") {
    /* n=2: the two Borels */
    Parabolic b12 = borel(2);
    Parabolic b21{{{1}, {0}}};
    auto w = co_adjacent(b12, b21);
    REQUIRE(w.has_value());
    CHECK(*w == Vec{rat(1, 2), rat(-1, 2)});
    CHECK(!co_adjacent(b12, b12).has_value());

    /* n=3: the orders (1,2,3) and (2,3,1) share exactly the root e2-e3 */
    Parabolic p123 = borel(3);
    Parabolic p231{{{1}, {2}, {0}}};
    CHECK(co_adjacent(p123, p231).has_value());
    /* ... while (1,2,3) and (1,3,2) share no simple root at all */
    Parabolic p132{{{0}, {2}, {1}}};
    CHECK(!co_adjacent(p123, p132).has_value());

    CHECK_THROWS_AS(co_adjacent(b12, full_group(2)), std::invalid_argument);

    /* symmetry with negated witness, plus a non-co-adjacent pair for n=3 */
    Parabolic p321{{{2}, {1}, {0}}};
    CHECK(!co_adjacent(p123, p321).has_value());
    std::mt19937_64 rng(41);
    for (int n = 3; n <= 4; n++) {
        auto members = parabolics_with_levi(levi_of(borel(n)));
        for (const auto& p1 : members)
            for (const auto& p2 : members) {
                if (p1 == p2)
                    continue;
                auto w12 = co_adjacent(p1, p2);
                auto w21 = co_adjacent(p2, p1);
                CHECK(w12.has_value() == w21.has_value());
                if (w12)
                    CHECK(vec_is_zero(*w12 + *w21));
            }
    }
}

TEST_CASE("integer rounding of xi lands in the root lattice and projects well") {
    std::mt19937_64 rng(43);
    /* hand checks: single root, pairing 1/2 -> coefficient 1; pairing 1 -> 2 */
    Parabolic b = borel(2), g = full_group(2);
    Vec alpha{Rat(1), Rat(-1)};
    CHECK(xi_bracket(rat(1, 2) * alpha, b, g) == alpha);           /* <w,xi> = 1/2 */
    CHECK(xi_bracket(alpha, b, g) == Rat(2) * alpha);              /* <w,xi> = 1 */

    for (int n = 2; n <= 4; n++) {
        auto all = all_parabolics(n);
        for (int trial = 0; trial < (n == 4 ? 30 : 60); trial++) {
            Vec xi = rnd_rat_vec(rng, n);
            for (const auto& p : all)
                for (const auto& q : all) {
                    if (!contained_in(p, q))
                        continue;
                    Vec br = xi_bracket(xi, p, q);
                    CHECK(in_lattice(root_sets(p, q).roots, br));
                    /* compatibility with coarsening */
                    for (const auto& r : parabolics_between(p, q))
                        CHECK(project(br, r, q) == xi_bracket(xi, r, q));
                }
        }
    }
}

TEST_CASE("block permutation action") {
    Parabolic t2 = borel(2);
    CHECK(weyl_act({1, 0}, t2, Vec{Rat(3), Rat(5)}) == Vec{Rat(5), Rat(3)});
    CHECK(weyl_act({0, 1}, t2, Vec{Rat(3), Rat(5)}) == Vec{Rat(3), Rat(5)});

    /* simply transitive on P(M), r = 3 equal blocks */
    Parabolic m3 = standard_parabolic({2, 2, 2});
    std::vector<int> perm{0, 1, 2};
    std::set<Parabolic> orbit;
    do {
        orbit.insert(weyl_act(perm, m3, m3));
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(orbit.size() == 6);

    CHECK_THROWS_AS(weyl_act({1, 0}, standard_parabolic({2, 1}), Vec{Rat(1), Rat(2), Rat(3)}),
                    std::invalid_argument);
}
