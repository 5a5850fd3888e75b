#include <catch2/catch_amalgamated.hpp>
#include <numeric>
#include <set>

#include "rainbow/gen/generators.hpp"
#include "rainbow/proper/bipartite_cover.hpp"
#include "rainbow/proper/free_graph.hpp"

using namespace rainbow;

namespace {

// Complete bipartite graph between the first a vertices and the rest of a
// properly coloured K_n; properness is inherited.
struct BipartiteFixture {
    ColouredGraph kab;
    std::vector<int> roots;
    std::vector<int> b_side;
};

BipartiteFixture make_bipartite(int n, int a, uint64_t seed) {
    ColouredGraph k = proper_colouring(n, seed, 0);
    BipartiteFixture fx{ColouredGraph(n, k.colour_count()), {}, {}};
    fx.roots.resize(a);
    std::iota(fx.roots.begin(), fx.roots.end(), 0);
    for (int v = a; v < n; ++v) fx.b_side.push_back(v);
    for (int r : fx.roots)
        for (int v : fx.b_side) fx.kab.add_edge(r, v, k.colour(r, v));
    return fx;
}

}  // namespace

TEST_CASE("cover_bipartite (Lemma 4.3)") {
    SECTION("a=1: a 0-spider star avoiding F_1") {
        BipartiteFixture fx = make_bipartite(30, 1, 0);
        std::set<int> f1{0, 1, 2};
        std::vector<Spider> out = cover_bipartite(fx.kab, fx.roots, fx.b_side, {f1}, 0.2);
        REQUIRE(out.size() == 1);
        REQUIRE(out[0].t() == 0);
        for (int leaf : out[0].ordinary_leaves) REQUIRE_FALSE(f1.count(fx.kab.colour(0, leaf)));
        // every b with an allowed colour is included
        for (int b : fx.b_side)
            if (!f1.count(fx.kab.colour(0, b)))
                REQUIRE(out[0].contains_vertex(b));
    }

    SECTION("a=3, |B|=40, F empty: edge-disjoint rainbow 2-spiders covering A") {
        BipartiteFixture fx = make_bipartite(43, 3, 1);
        std::vector<Spider> out =
            cover_bipartite(fx.kab, fx.roots, fx.b_side, std::vector<std::set<int>>(3), 0.0);
        REQUIRE(out.size() == 3);
        std::set<Edge> all;
        for (const Spider& s : out) {
            REQUIRE(s.t() == 2);
            REQUIRE(s.order() >= 40 - 3 + 1);
            REQUIRE(is_rainbow(fx.kab, s.edges()));
            for (int r : fx.roots) REQUIRE(s.contains_vertex(r));
            for (const Edge& e : s.edges()) REQUIRE(all.insert(e).second);
        }
    }

    SECTION("b_{i,j}, b_{i,k}, b_{j,i}, b_{k,j} all distinct") {
        // Re-derive the chosen joints from the output legs: the leg of S_i
        // with foot r_j has joint b_{i,j}.
        BipartiteFixture fx = make_bipartite(60, 4, 2);
        std::vector<Spider> out =
            cover_bipartite(fx.kab, fx.roots, fx.b_side, std::vector<std::set<int>>(4), 0.0);
        std::map<std::pair<int, int>, int> b_of;
        for (int i = 0; i < 4; ++i)
            for (auto [joint, foot] : out[i].legs) b_of[{i, foot}] = joint;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k) {
                    if (i == j || j == k || i == k) continue;
                    std::set<int> four{b_of[{i, fx.roots[j]}], b_of[{i, fx.roots[k]}],
                                       b_of[{j, fx.roots[i]}], b_of[{k, fx.roots[j]}]};
                    REQUIRE(four.size() == 4);
                }
    }

    SECTION("spiders avoid their forbidden sets and stay large") {
        BipartiteFixture fx = make_bipartite(80, 4, 3);
        std::vector<std::set<int>> forbidden(4);
        for (int i = 0; i < 4; ++i)
            for (int c = 0; c < 5; ++c) forbidden[i].insert((i * 5 + c) % fx.kab.colour_count());
        double delta = 0.12;
        std::vector<Spider> out = cover_bipartite(fx.kab, fx.roots, fx.b_side, forbidden, delta);
        for (int i = 0; i < 4; ++i) {
            for (const Edge& e : out[i].edges())
                REQUIRE_FALSE(forbidden[i].count(fx.kab.colour(e)));
            REQUIRE(out[i].order() >= (1.0 - delta) * 76 - 4 + 1);
        }
    }

    SECTION("precondition failure raises feasibility error") {
        BipartiteFixture fx = make_bipartite(12, 4, 4);
        REQUIRE_THROWS_AS(
            cover_bipartite(fx.kab, fx.roots, fx.b_side, std::vector<std::set<int>>(4), 0.4),
            FeasibilityError);
    }
}

TEST_CASE("free graph (section 2)") {
    SECTION("single 0-spider family: min degree >= n - 4") {
        ColouredGraph k = proper_colouring(40, 5, 0);
        SpiderFamilyState family;
        Spider star;
        star.root = 0;
        for (int v = 1; v < 30; ++v) star.ordinary_leaves.push_back(v);
        family.spiders.push_back(star);
        ColouredGraph fg = free_graph(k, family, 0);
        REQUIRE(fg.order() == 40);
        REQUIRE(fg.min_degree() >= 40 - 4);
    }

    SECTION("m=3 family of 2-spiders on K_100: measured bound n-3m-4t-1 = 82") {
        ColouredGraph k = proper_colouring(100, 6, 0);
        std::vector<int> roots{0, 1, 2};
        std::vector<int> b_side;
        for (int v = 3; v < 100; ++v) b_side.push_back(v);
        ColouredGraph kab(100, k.colour_count());
        for (int r : roots)
            for (int v : b_side) kab.add_edge(r, v, k.colour(r, v));
        SpiderFamilyState family;
        family.spiders =
            cover_bipartite(kab, roots, b_side, std::vector<std::set<int>>(3), 0.0);
        REQUIRE(family.edge_disjoint());
        REQUIRE(family.root_covering());
        for (size_t i = 0; i < 3; ++i) {
            REQUIRE(family.spiders[i].t() == 2);
            ColouredGraph fg = free_graph(k, family, i);
            REQUIRE(fg.min_degree() >= 100 - 3 * 3 - 4 * 2 - 1);
        }
    }

    SECTION("deleted colour set equals the core's colours exactly") {
        ColouredGraph k = proper_colouring(50, 7, 0);
        SpiderFamilyState family;
        Spider d;
        d.root = 5;
        d.legs = {{6, 7}, {8, 9}};
        for (int v = 10; v < 40; ++v) d.ordinary_leaves.push_back(v);
        family.spiders.push_back(d);
        ColouredGraph fg = free_graph(k, family, 0);
        std::set<int> core_colours;
        for (const Edge& e : d.core().edges()) core_colours.insert(k.colour(e));
        for (int c = 0; c < k.colour_count(); ++c) {
            if (core_colours.count(c))
                REQUIRE(fg.class_size(c) == 0);
            else
                REQUIRE(fg.class_size(c) >= k.class_size(c) - 4);  // vertex removals only
        }
    }
}
