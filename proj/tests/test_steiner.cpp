#include <catch2/catch_amalgamated.hpp>
#include <map>

#include "rainbow/core/io.hpp"
#include "rainbow/gen/steiner.hpp"

using namespace rainbow;

TEST_CASE("steiner triple systems") {
    SECTION("m=3 is the single triple") {
        SteinerTripleSystem sts = steiner_triple_system(3);
        REQUIRE(sts.triples == std::vector<Triple>{{0, 1, 2}});
    }

    SECTION("m=7 has 7 triples, each pair covered once") {
        SteinerTripleSystem sts = steiner_triple_system(7);
        REQUIRE(sts.triples.size() == 7);
        REQUIRE(sts.covers_every_pair_once());
    }

    SECTION("m=5 does not exist") {
        REQUIRE_THROWS_AS(steiner_triple_system(5), ExistenceError);
        REQUIRE_THROWS_AS(steiner_triple_system(11), ExistenceError);
    }

    SECTION("m=1 is the empty system") {
        REQUIRE(steiner_triple_system(1).triples.empty());
    }

    SECTION("pair coverage exact for all admissible m <= 99") {
        for (int m = 1; m <= 99; ++m) {
            if (m % 6 != 1 && m % 6 != 3) continue;
            SteinerTripleSystem sts = steiner_triple_system(m);
            REQUIRE(sts.triples.size() == static_cast<size_t>(m) * (m - 1) / 6);
            REQUIRE(sts.covers_every_pair_once());
        }
    }
}

TEST_CASE("oriented steiner triple systems") {
    SECTION("single triple gives exactly one orbit of 3 ordered triples") {
        OrientedSTS o = orient_sts(steiner_triple_system(3), 0);
        REQUIRE(o.oriented.size() == 3);
        bool fwd = o.contains(0, 1, 2) && o.contains(1, 2, 0) && o.contains(2, 0, 1);
        bool rev = o.contains(0, 2, 1) && o.contains(2, 1, 0) && o.contains(1, 0, 2);
        REQUIRE(fwd != rev);
    }

    SECTION("m=7: 21 ordered triples, orbit consistency") {
        OrientedSTS o = orient_sts(steiner_triple_system(7), 5);
        REQUIRE(o.oriented.size() == 21);
        for (const Triple& t : o.oriented) {
            REQUIRE(o.contains(t[1], t[2], t[0]));
            REQUIRE(o.contains(t[2], t[0], t[1]));
            REQUIRE_FALSE(o.contains(t[0], t[2], t[1]));
        }
    }

    SECTION("for every ordered pair (x,y) exactly one of (x,y,*) or (y,x,*)") {
        OrientedSTS o = orient_sts(steiner_triple_system(9), 3);
        for (int x = 0; x < 9; ++x)
            for (int y = 0; y < 9; ++y) {
                if (x == y) continue;
                int hits = 0;
                for (const Triple& t : o.oriented)
                    if ((t[0] == x && t[1] == y) || (t[0] == y && t[1] == x)) ++hits;
                REQUIRE(hits == 1);
            }
    }

    SECTION("same seed twice gives identical output") {
        SteinerTripleSystem sts = steiner_triple_system(13);
        OrientedSTS a = orient_sts(sts, 77);
        OrientedSTS b = orient_sts(sts, 77);
        REQUIRE(a.oriented == b.oriented);
    }
}

TEST_CASE("sts file round-trip") {
    SteinerTripleSystem sts = steiner_triple_system(9);
    std::string bytes = write_sts(sts);
    std::istringstream in(bytes);
    SteinerTripleSystem back = read_sts(in);
    REQUIRE(back.m == 9);
    REQUIRE(back.triples == sts.triples);
}
