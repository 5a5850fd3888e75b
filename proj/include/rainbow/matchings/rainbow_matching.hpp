#pragma once

#include <string>
#include <vector>

#include "rainbow/core/coloured_graph.hpp"
#include "rainbow/core/errors.hpp"

namespace rainbow {

// Greedy maximal rainbow matching in lexicographic edge order. Maximality
// forces size >= ceil(e(G) / (2*Delta(G) + b)) whenever every colour class
// has at most b edges: an edge blocked by neither V(M) nor colours(M) would
// extend M, and the two block counts cover at most (2*Delta + b) * |M| edges.
inline EdgeList greedy_rainbow_matching(const ColouredGraph& g, int b) {
    if (g.max_class_size() > b)
        throw InputError("greedy_rainbow_matching: a colour class exceeds b (" +
                         std::to_string(g.max_class_size()) + " > " + std::to_string(b) + ")");
    EdgeList matching;
    std::vector<bool> vertex_used(g.n(), false);
    std::vector<bool> colour_used(g.colour_count(), false);
    for (int u = 0; u < g.n(); ++u) {
        if (vertex_used[u]) continue;
        for (int v = u + 1; v < g.n(); ++v) {
            if (vertex_used[u]) break;
            int c = g.colour(u, v);
            if (c < 0 || vertex_used[v] || colour_used[c]) continue;
            matching.emplace_back(u, v);
            vertex_used[u] = vertex_used[v] = true;
            colour_used[c] = true;
        }
    }
    return matching;
}

// ceil(e / (2*Delta + b)); the Lemma 4.1 counting bound as an integer.
inline long rainbow_matching_lower_bound(long e, int max_degree, int b) {
    long denom = 2L * max_degree + b;
    if (denom <= 0) return 0;
    return (e + denom - 1) / denom;
}

// Maximality restated as the contradiction in the proof: no edge of g is
// simultaneously vertex-disjoint from and colour-disjoint from `matching`.
inline bool is_maximal_rainbow_matching(const ColouredGraph& g, const EdgeList& matching) {
    std::vector<bool> vertex_used(g.n(), false);
    std::vector<bool> colour_used(g.colour_count(), false);
    for (const Edge& e : matching) {
        vertex_used[e.u] = vertex_used[e.v] = true;
        colour_used[g.colour(e)] = true;
    }
    for (const Edge& e : g.edges())
        if (!vertex_used[e.u] && !vertex_used[e.v] && !colour_used[g.colour(e)]) return false;
    return true;
}

}  // namespace rainbow
