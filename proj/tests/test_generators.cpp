#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "rainbow/core/io.hpp"
#include "rainbow/gen/generators.hpp"

using namespace rainbow;

TEST_CASE("round robin one-factorization") {
    SECTION("K_4: 3 colours, each a 2-edge perfect matching") {
        ColouredGraph g = round_robin_one_factorization(4);
        REQUIRE(g.colour_count() == 3);
        for (int c = 0; c < 3; ++c) REQUIRE(g.class_size(c) == 2);
        REQUIRE(g.is_proper());
    }

    SECTION("K_6: 5 colours x 3 edges = 15 edges") {
        ColouredGraph g = round_robin_one_factorization(6);
        REQUIRE(g.edge_count() == 15);
        REQUIRE(g.colour_count() == 5);
        for (int c = 0; c < 5; ++c) REQUIRE(g.class_size(c) == 3);
    }

    SECTION("K_90: proper, classes of size 45") {
        ColouredGraph g = round_robin_one_factorization(90);
        REQUIRE(g.colour_count() == 89);
        REQUIRE(g.is_proper());
        REQUIRE(g.complete());
        for (int c = 0; c < 89; ++c) REQUIRE(g.class_size(c) == 45);
    }

    SECTION("odd n rejected") {
        REQUIRE_THROWS_AS(round_robin_one_factorization(7), InputError);
    }

    SECTION("every colour appears exactly once at every vertex") {
        for (int n : {4, 10, 16, 40}) {
            ColouredGraph g = round_robin_one_factorization(n);
            for (int v = 0; v < n; ++v) {
                std::set<int> seen;
                for (int u = 0; u < n; ++u) {
                    int c = g.colour(v, u);
                    if (c >= 0) REQUIRE(seen.insert(c).second);
                }
                REQUIRE(seen.size() == static_cast<size_t>(n - 1));
            }
        }
    }
}

TEST_CASE("proper colouring generator") {
    SECTION("n=5, no extra colours: 5 colours, each class 2 edges") {
        ColouredGraph g = proper_colouring(5, 0, 0);
        REQUIRE(g.colour_count() == 5);
        for (int c = 0; c < 5; ++c) REQUIRE(g.class_size(c) == 2);
        REQUIRE(g.is_proper());
        REQUIRE(g.complete());
    }

    SECTION("n=4 with 3 extra colours: all 6 edges distinct") {
        ColouredGraph g = proper_colouring(4, 3, 3);
        REQUIRE(g.colour_count() == 6);
        for (int c = 0; c < 6; ++c) REQUIRE(g.class_size(c) == 1);
    }

    SECTION("extraColours beyond e(K_n) rejected") {
        REQUIRE_THROWS_AS(proper_colouring(4, 0, 4), InputError);
    }

    SECTION("n=200 with splits stays proper; class sizes sum to e") {
        ColouredGraph g = proper_colouring(200, 1, 50);
        REQUIRE(g.is_proper());
        REQUIRE(g.complete());
        REQUIRE(g.colour_count() == 199 + 50);
        long total = 0;
        for (int c = 0; c < g.colour_count(); ++c) {
            REQUIRE(g.class_size(c) >= 1);
            total += g.class_size(c);
        }
        REQUIRE(total == g.edge_count());
    }

    SECTION("properness holds across seeds and split counts") {
        for (uint64_t seed = 0; seed < 20; ++seed) {
            int n = 10 + static_cast<int>(seed) * 7;
            ColouredGraph g = proper_colouring(n, seed, static_cast<int>(seed % 9));
            REQUIRE(g.is_proper());
            REQUIRE(g.complete());
        }
    }

    SECTION("same seed, same output") {
        std::string a = write_colouring(proper_colouring(30, 42, 10));
        std::string b = write_colouring(proper_colouring(30, 42, 10));
        REQUIRE(a == b);
    }
}
