#include <catch2/catch_amalgamated.hpp>
#include <numeric>
#include <set>

#include "rainbow/gen/generators.hpp"
#include "rainbow/gen/prng.hpp"
#include "rainbow/iso/rainbow_cycle.hpp"
#include "rainbow/iso/total_digraph.hpp"

using namespace rainbow;

namespace {

// Auxiliary digraph of a spanning star in a properly coloured K_n, on the
// leaf subset J. Dense because the host is complete and the star carries
// every colour at the root.
TotallyColouredDigraph dense_digraph(int n, uint64_t seed, int drop) {
    ColouredGraph g = permuted_seeded(round_robin_one_factorization(n), seed);
    Spider star;
    star.root = 0;
    for (int v = 1; v < n; ++v) star.ordinary_leaves.push_back(v);
    SplitMix64 rng(seed * 31 + 1);
    std::set<int> dropped;
    while (static_cast<int>(dropped.size()) < drop)
        dropped.insert(1 + static_cast<int>(rng.next_below(n - 1)));
    std::vector<int> j_set;
    for (int v = 1; v < n; ++v)
        if (!dropped.count(v)) j_set.push_back(v);
    return build_auxiliary_digraph(g, star, 0, j_set);
}

// Small random totally coloured digraphs for the oracle comparison. Arc and
// vertex colours are drawn from a small palette and the per-vertex proper
// total colouring rules are enforced during construction.
TotallyColouredDigraph random_small_digraph(int n, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    int palette = n + 4;
    TotallyColouredDigraph d(ids, palette + n);
    // vertex colours: distinct by construction
    for (int i = 0; i < n; ++i) d.set_vertex_colour(i, palette + i);
    std::vector<std::set<int>> out_used(n), in_used(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v || rng.next_below(100) < 35) continue;
            int c = static_cast<int>(rng.next_below(palette));
            if (out_used[u].count(c) || in_used[v].count(c)) continue;
            d.add_arc(u, v, c);
            out_used[u].insert(c);
            in_used[v].insert(c);
        }
    return d;
}

}  // namespace

TEST_CASE("auxiliary digraph construction") {
    SECTION("arc-count identity e(D) = 2 e(H[J]) when all leaf hits stay in J") {
        for (uint64_t seed = 0; seed < 10; ++seed) {
            int n = 20 + static_cast<int>(seed) * 4;
            ColouredGraph g = permuted_seeded(round_robin_one_factorization(n), seed);
            Spider star;
            star.root = 0;
            for (int v = 1; v < n; ++v) star.ordinary_leaves.push_back(v);
            std::vector<int> j_set;
            for (int v = 1; v < n; ++v) j_set.push_back(v);
            TotallyColouredDigraph d = build_auxiliary_digraph(g, star, 0, j_set);
            long inside = 0;
            for (int a : j_set)
                for (int b : j_set)
                    if (a < b && g.has_edge(a, b)) ++inside;
            REQUIRE(d.arc_count() == 2 * inside);
        }
    }

    SECTION("no edges inside J gives an empty arc set") {
        ColouredGraph g(6, 5);
        for (int v = 1; v < 6; ++v) g.add_edge(0, v, v - 1);
        Spider star;
        star.root = 0;
        for (int v = 1; v < 6; ++v) star.ordinary_leaves.push_back(v);
        TotallyColouredDigraph d = build_auxiliary_digraph(g, star, 0, {1, 2, 3, 4, 5});
        REQUIRE(d.arc_count() == 0);
    }

    SECTION("proper total colouring and vertex-rainbowness hold on dense instances") {
        for (uint64_t seed = 0; seed < 8; ++seed) {
            TotallyColouredDigraph d = dense_digraph(50, seed, 3);
            REQUIRE(d.properly_totally_coloured());
            REQUIRE(d.vertex_rainbow());
        }
    }

    SECTION("a colour on J missing from the star is an input error") {
        ColouredGraph g(6, 6);
        for (int v = 1; v < 6; ++v) g.add_edge(0, v, v - 1);
        g.add_edge(1, 2, 5);  // colour 5 never occurs at the root
        Spider star;
        star.root = 0;
        for (int v = 1; v < 6; ++v) star.ordinary_leaves.push_back(v);
        REQUIRE_THROWS_AS(build_auxiliary_digraph(g, star, 0, {1, 2, 3, 4, 5}), InputError);
    }
}

TEST_CASE("find_rainbow_cycle (Lemma 4.7)") {
    SECTION("s < 3 is an input error") {
        TotallyColouredDigraph d = dense_digraph(20, 1, 0);
        REQUIRE_THROWS_AS(find_rainbow_cycle(d, 2, false), InputError);
    }

    SECTION("s=3 on a dense 100-vertex instance, strict mode") {
        TotallyColouredDigraph d = dense_digraph(100, 3, 0);
        std::vector<int> cycle = find_rainbow_cycle(d, 3, true);
        REQUIRE(cycle.size() == 3);
        REQUIRE(cycle_jointly_rainbow(d, cycle));
    }

    SECTION("200 dense instances from n in [50, 100]: returned cycles jointly rainbow") {
        int runs = 0;
        for (uint64_t seed = 0; runs < 200; ++seed) {
            int n = 50 + static_cast<int>(seed % 51);
            int s = 3 + static_cast<int>(seed % 4);
            TotallyColouredDigraph d = dense_digraph(n, seed, static_cast<int>(seed % 5));
            std::vector<int> cycle = find_rainbow_cycle(d, s, false);
            REQUIRE(static_cast<int>(cycle.size()) == s);
            REQUIRE(cycle_jointly_rainbow(d, cycle));
            // every arc of the cycle is present in d (part of the invariant)
            for (size_t i = 0; i < cycle.size(); ++i)
                REQUIRE(d.has_arc(cycle[i], cycle[(i + 1) % cycle.size()]));
            ++runs;
        }
    }

    SECTION("agreement with the exhaustive oracle on 200 seeded |D| <= 6 instances") {
        int found = 0, absent = 0;
        for (uint64_t seed = 0; seed < 200; ++seed) {
            int n = 4 + static_cast<int>(seed % 3);
            TotallyColouredDigraph d = random_small_digraph(n, seed);
            bool oracle = exhaustive_rainbow_cycle_exists(d, 3);
            bool greedy;
            try {
                std::vector<int> cycle = find_rainbow_cycle(d, 3, false);
                REQUIRE(cycle_jointly_rainbow(d, cycle));
                greedy = true;
            } catch (const CycleError&) {
                greedy = false;
            }
            REQUIRE(greedy == oracle);
            (oracle ? found : absent)++;
        }
        // the instance family must exercise both outcomes
        REQUIRE(found > 20);
        REQUIRE(absent > 20);
    }
}
