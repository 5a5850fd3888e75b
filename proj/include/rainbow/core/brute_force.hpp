#pragma once

#include <functional>
#include <set>
#include <vector>

#include "rainbow/core/coloured_graph.hpp"
#include "rainbow/core/errors.hpp"

namespace rainbow {

// Exhaustive maximum-cardinality rainbow matching. Guarded to e(G) <= 30.
// Ties broken lexicographically: the include-first DFS over the lex-ordered
// edge list reports the lexicographically least maximum matching.
inline EdgeList brute_force_max_rainbow_matching(const ColouredGraph& g) {
    if (g.edge_count() > 30)
        throw SizeError("brute_force_max_rainbow_matching: e(G) > 30");
    EdgeList all = g.edges();
    EdgeList best, current;
    std::vector<bool> vertex_used(g.n(), false);
    std::vector<bool> colour_used(g.colour_count(), false);

    std::function<void(size_t)> dfs = [&](size_t i) {
        if (current.size() > best.size()) best = current;
        if (i == all.size()) return;
        // Remaining edges cannot beat best: prune.
        if (current.size() + (all.size() - i) <= best.size()) return;
        const Edge& e = all[i];
        int c = g.colour(e);
        if (!vertex_used[e.u] && !vertex_used[e.v] && !colour_used[c]) {
            vertex_used[e.u] = vertex_used[e.v] = colour_used[c] = true;
            current.push_back(e);
            dfs(i + 1);
            current.pop_back();
            vertex_used[e.u] = vertex_used[e.v] = colour_used[c] = false;
        }
        dfs(i + 1);
    };
    dfs(0);
    return best;
}

namespace detail {

// All spanning trees of g as edge lists (subsets of size n-1 that connect).
inline std::vector<EdgeList> all_spanning_trees(const ColouredGraph& g) {
    EdgeList all = g.edges();
    int n = g.order();
    std::vector<EdgeList> out;
    if (n == 0) return out;
    std::vector<int> verts = g.vertices();
    EdgeList current;

    std::function<bool(const EdgeList&)> connects = [&](const EdgeList& edges) {
        std::set<int> seen{verts[0]};
        bool grew = true;
        while (grew) {
            grew = false;
            for (const Edge& e : edges) {
                bool su = seen.count(e.u), sv = seen.count(e.v);
                if (su != sv) {
                    seen.insert(su ? e.v : e.u);
                    grew = true;
                }
            }
        }
        return static_cast<int>(seen.size()) == n;
    };

    std::function<void(size_t)> dfs = [&](size_t i) {
        if (static_cast<int>(current.size()) == n - 1) {
            if (connects(current)) out.push_back(current);
            return;
        }
        if (all.size() - i < n - 1 - current.size()) return;
        current.push_back(all[i]);
        dfs(i + 1);
        current.pop_back();
        dfs(i + 1);
    };
    dfs(0);
    return out;
}

}  // namespace detail

// True iff k pairwise edge-disjoint rainbow spanning trees exist. Exhaustive;
// guarded to n <= 6.
inline bool brute_force_edge_disjoint_rainbow_spanning_trees(const ColouredGraph& g, int k) {
    if (g.order() > 6)
        throw SizeError("brute_force_edge_disjoint_rainbow_spanning_trees: n > 6");
    if (k <= 0) return true;
    if (static_cast<long>(k) * (g.order() - 1) > g.edge_count()) return false;

    std::vector<EdgeList> trees;
    for (const EdgeList& t : detail::all_spanning_trees(g))
        if (is_rainbow(g, t)) trees.push_back(t);

    std::vector<std::set<Edge>> tree_sets;
    tree_sets.reserve(trees.size());
    for (const EdgeList& t : trees) tree_sets.emplace_back(t.begin(), t.end());

    std::function<bool(size_t, int, std::set<Edge>&)> pick = [&](size_t i, int left,
                                                                 std::set<Edge>& used) {
        if (left == 0) return true;
        if (trees.size() - i < static_cast<size_t>(left)) return false;
        for (size_t j = i; j < trees.size(); ++j) {
            bool clash = false;
            for (const Edge& e : trees[j])
                if (used.count(e)) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            for (const Edge& e : trees[j]) used.insert(e);
            if (pick(j + 1, left - 1, used)) return true;
            for (const Edge& e : trees[j]) used.erase(e);
        }
        return false;
    };
    std::set<Edge> used;
    return pick(0, k, used);
}

}  // namespace rainbow
