#pragma once

#include <vector>

#include "rainbow/core/coloured_graph.hpp"
#include "rainbow/core/errors.hpp"
#include "rainbow/gen/prng.hpp"

namespace rainbow {

// Circle-method 1-factorization of K_n (n even): fix vertex n-1, rotate the
// rest. Colour r is the round-r perfect matching, so the result is a proper
// (n-1)-edge-colouring with every colour class of size n/2.
inline ColouredGraph round_robin_one_factorization(int n) {
    if (n < 2 || n % 2 != 0)
        throw InputError("round_robin_one_factorization: n must be even and >= 2");
    ColouredGraph g(n, n - 1);
    int m = n - 1;
    for (int round = 0; round < m; ++round) {
        g.add_edge(n - 1, round, round);
        for (int k = 1; k <= n / 2 - 1; ++k) {
            int a = (round + k) % m;
            int b = (round - k + m) % m;
            g.add_edge(a, b, round);
        }
    }
    return g;
}

// Relabels vertices and colours. Output edge (pv[u], pv[v]) has colour pc[c].
inline ColouredGraph permuted(const ColouredGraph& g, const std::vector<int>& vertex_perm,
                              const std::vector<int>& colour_perm) {
    ColouredGraph out(g.n(), g.colour_count());
    for (const Edge& e : g.edges())
        out.add_edge(vertex_perm[e.u], vertex_perm[e.v], colour_perm[g.colour(e)]);
    return out;
}

inline ColouredGraph permuted_seeded(const ColouredGraph& g, uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<int> pv = random_permutation(g.n(), rng);
    std::vector<int> pc = random_permutation(g.colour_count(), rng);
    return permuted(g, pv, pc);
}

// Proper colouring of K_n. Even n: seeded permutation of the round-robin
// 1-factorization (n-1 colours). Odd n: K_{n+1} round-robin restricted to the
// first n vertices (n colours, each vertex missing exactly one). Then
// `extra_colours` seeded splits, each moving a nonempty proper subset of one
// class to a fresh colour; splitting preserves properness.
inline ColouredGraph proper_colouring(int n, uint64_t seed, int extra_colours) {
    if (n < 2) throw InputError("proper_colouring: n must be >= 2");
    if (extra_colours < 0) throw InputError("proper_colouring: negative extraColours");

    int base_colours = n % 2 == 0 ? n - 1 : n;
    long max_extra = static_cast<long>(n) * (n - 1) / 2 - base_colours;
    if (extra_colours > max_extra)
        throw InputError("proper_colouring: extraColours exceeds e(K_n) - baseColours (" +
                         std::to_string(extra_colours) + " > " + std::to_string(max_extra) + ")");

    SplitMix64 rng(seed);
    ColouredGraph base = round_robin_one_factorization(n % 2 == 0 ? n : n + 1);

    ColouredGraph g(n, base_colours + extra_colours);
    {
        std::vector<int> pv = random_permutation(n, rng);
        std::vector<int> pc = random_permutation(base_colours, rng);
        for (const Edge& e : base.edges()) {
            if (e.u >= n || e.v >= n) continue;  // dropped vertex of K_{n+1}
            g.add_edge(pv[e.u], pv[e.v], pc[base.colour(e)]);
        }
    }

    int next_colour = base_colours;
    for (int round = 0; round < extra_colours; ++round) {
        std::vector<int> splittable;
        for (int c = 0; c < next_colour; ++c)
            if (g.class_size(c) >= 2) splittable.push_back(c);
        if (splittable.empty())
            throw InvariantBreachError("proper_colouring: no splittable class left");
        int c = splittable[rng.next_below(splittable.size())];
        EdgeList cls = g.colour_class(c);
        // Nonempty proper subset: seeded shuffle, take a seeded prefix.
        for (size_t i = cls.size() - 1; i > 0; --i) {
            size_t j = rng.next_below(i + 1);
            std::swap(cls[i], cls[j]);
        }
        size_t take = 1 + rng.next_below(cls.size() - 1);
        for (size_t i = 0; i < take; ++i) {
            g.remove_edge(cls[i].u, cls[i].v);
            g.add_edge(cls[i].u, cls[i].v, next_colour);
        }
        ++next_colour;
    }
    return g;
}

}  // namespace rainbow
