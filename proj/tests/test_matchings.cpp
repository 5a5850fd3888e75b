#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "rainbow/core/brute_force.hpp"
#include "rainbow/gen/generators.hpp"
#include "rainbow/gen/prng.hpp"
#include "rainbow/matchings/matching_family.hpp"
#include "rainbow/matchings/rainbow_matching.hpp"

using namespace rainbow;

namespace {

// Round-robin K_n with each colour class thinned to at most b seeded edges;
// the workhorse instance family for the Lemma 4.2 tests.
ColouredGraph thinned_round_robin(int n, int b, uint64_t seed) {
    ColouredGraph full = round_robin_one_factorization(n);
    SplitMix64 rng(seed);
    ColouredGraph g(n, full.colour_count());
    for (int c = 0; c < full.colour_count(); ++c) {
        EdgeList cls = full.colour_class(c);
        for (size_t i = cls.size() - 1; i > 0; --i) {
            size_t j = rng.next_below(i + 1);
            std::swap(cls[i], cls[j]);
        }
        for (size_t i = 0; i < std::min<size_t>(b, cls.size()); ++i)
            g.add_edge(cls[i].u, cls[i].v, c);
    }
    return g;
}

}  // namespace

TEST_CASE("greedy rainbow matching bound") {
    SECTION("1-factorized K_4: bound 6/8, greedy >= 1, optimum 1") {
        ColouredGraph g = round_robin_one_factorization(4);
        EdgeList m = greedy_rainbow_matching(g, 2);
        REQUIRE(m.size() >= 1);
        REQUIRE(is_maximal_rainbow_matching(g, m));
        EdgeList best = brute_force_max_rainbow_matching(g);
        REQUIRE(m.size() <= best.size());
        REQUIRE(best.size() == 1);
    }

    SECTION("single edge comes back despite a sub-1 bound") {
        ColouredGraph g(2, 1);
        g.add_edge(0, 1, 0);
        REQUIRE(greedy_rainbow_matching(g, 1) == EdgeList{Edge(0, 1)});
    }

    SECTION("1-factorized K_8: bound ceil(28/18) = 2") {
        ColouredGraph g = round_robin_one_factorization(8);
        REQUIRE(rainbow_matching_lower_bound(28, 7, 4) == 2);
        EdgeList m = greedy_rainbow_matching(g, 4);
        REQUIRE(m.size() >= 2);
    }

    SECTION("colour class exceeding b is an input error") {
        ColouredGraph g = round_robin_one_factorization(8);
        REQUIRE_THROWS_AS(greedy_rainbow_matching(g, 3), InputError);
    }

    SECTION("greedy meets the bound on seeded proper colourings") {
        for (uint64_t seed = 0; seed < 60; ++seed) {
            int n = 10 + static_cast<int>((seed * 29) % 120);
            ColouredGraph g = proper_colouring(n, seed, static_cast<int>(seed % 25));
            int b = g.max_class_size();
            EdgeList m = greedy_rainbow_matching(g, b);
            REQUIRE(static_cast<long>(m.size()) >=
                    rainbow_matching_lower_bound(g.edge_count(), g.max_degree(), b));
            REQUIRE(is_maximal_rainbow_matching(g, m));
        }
    }
}

TEST_CASE("many rainbow matchings (root-set construction)") {
    SECTION("delta = 0 gives empty matchings and a root set") {
        ColouredGraph g = round_robin_one_factorization(200);
        MatchingFamily fam = many_rainbow_matchings(g, 0, 100, 3);
        REQUIRE(fam.matchings.size() == 3);
        for (const EdgeList& m : fam.matchings) REQUIRE(m.empty());
        REQUIRE(fam.roots.size() == 3);
        REQUIRE(check_matching_family(g, fam, 0));
    }

    SECTION("t = 0 gives an empty family") {
        ColouredGraph g = round_robin_one_factorization(200);
        MatchingFamily fam = many_rainbow_matchings(g, 1, 100, 0);
        REQUIRE(fam.matchings.empty());
        REQUIRE(fam.roots.empty());
    }

    SECTION("feasibility error names the failed inequality") {
        ColouredGraph g = round_robin_one_factorization(10);
        REQUIRE_THROWS_AS(many_rainbow_matchings(g, 4, 5, 3), FeasibilityError);
        try {
            many_rainbow_matchings(g, 4, 5, 3);
        } catch (const FeasibilityError& err) {
            REQUIRE(std::string(err.what()).find("29t") != std::string::npos);
        }
    }

    SECTION("thinned K_500 instance per the spec arithmetic") {
        ColouredGraph g = thinned_round_robin(500, 30, 1);
        REQUIRE(g.max_class_size() <= 30);
        long delta = 4;
        REQUIRE(g.min_degree() >= delta);
        int t = (500 - 72 * 4 - 6 * 30) / 29;
        REQUIRE(t == 1);
        MatchingFamily fam = many_rainbow_matchings(g, delta, 30, t);
        REQUIRE(check_matching_family(g, fam, delta));
    }

    SECTION("50 feasible instances pass all four invariants") {
        int built = 0;
        for (uint64_t seed = 0; built < 50 && seed < 200; ++seed) {
            int n = 450 + 2 * static_cast<int>((seed * 17) % 40);
            int b = 16 + static_cast<int>(seed % 3) * 4;
            long delta = 2 + static_cast<long>(seed % 2);
            ColouredGraph g = thinned_round_robin(n, b, seed);
            long cap = (g.order() - 72 * delta - 6L * b) / 29;
            if (cap < 1 || g.min_degree() < delta || g.max_class_size() > b) continue;
            int t = static_cast<int>(std::min<long>(cap, 3));
            MatchingFamily fam = many_rainbow_matchings(g, delta, b, t);
            REQUIRE(fam.matchings.size() == static_cast<size_t>(t));
            REQUIRE(check_matching_family(g, fam, delta));
            ++built;
        }
        REQUIRE(built == 50);
    }
}
