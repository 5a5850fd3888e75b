#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/core/certificate.hpp"
#include "rainbow/core/coloured_graph.hpp"
#include "rainbow/core/errors.hpp"
#include "rainbow/factorization/spider_decomposition.hpp"
#include "rainbow/factorization/tree_growth.hpp"
#include "rainbow/gen/steiner.hpp"

namespace rainbow {

struct FactorizationResult {
    ForestCertificate certificate;
    std::vector<GrowthTrace> traces;
    int m = 0;  // number of spiders / trees attempted
};

// Largest m in [n/9 - 6, n/9 - 1] with m = 1 or 3 (mod 6). Any window of
// width five contains one; fails only when the window has no integer >= 1.
inline int choose_factorization_m(int n) {
    if (n < 9) return -1;
    int hi = (n - 9) / 9;  // floor(n/9 - 1)
    double lo = n / 9.0 - 6.0;
    for (int m = hi; m >= 1 && m >= lo; --m)
        if (m % 6 == 1 || m % 6 == 3) return m;
    return -1;
}

// Theorem-1.5 track: decompose K_n minus K_{n-m} into m spiders rooted in A
// (Lemma 3.1), then grow each spider into a spanning rainbow tree on the
// residual graph (Lemma 3.3 with delta = 1/3, alpha = 1/9), where tree i sees
// K_n minus the already-built trees and the not-yet-processed spiders.
inline FactorizationResult theorem2_pipeline(const ColouredGraph& g, uint64_t seed = 0) {
    int n = g.n();
    if (n % 2 != 0)
        throw InputError("theorem2_pipeline: n must be even (no (n-1)-proper colouring exists)");
    if (!g.complete() || g.order() != n)
        throw InputError("theorem2_pipeline: input must be a complete K_n");
    if (g.colour_count() != n - 1)
        throw InputError("theorem2_pipeline: expects exactly n-1 colours");
    if (!g.is_proper()) throw InputError("theorem2_pipeline: colouring is not proper");

    int m = choose_factorization_m(n);
    if (m < 1)
        throw InputError("theorem2_pipeline: no valid m in [n/9-6, n/9-1] for n=" +
                         std::to_string(n));

    FactorizationResult result;
    result.m = m;
    result.certificate.claims = {.spanning = true, .rainbow = true, .edge_disjoint = true};

    std::vector<int> a_set(m);
    std::iota(a_set.begin(), a_set.end(), 0);

    // Lemma 3.1 works on K_n minus the edges inside B.
    ColouredGraph restricted = g;
    for (int u = m; u < n; ++u)
        for (int v = u + 1; v < n; ++v) restricted.remove_edge(u, v);

    OrientedSTS osts = orient_sts(steiner_triple_system(m), seed);
    std::vector<Spider> spiders = spider_decomposition(restricted, a_set, osts);

    // Residual bookkeeping: start with every spider's edges removed, then
    // restore spider i just before growing tree i.
    ColouredGraph residual = g;
    for (const Spider& d : spiders) residual.remove_edges(d.edges());

    GrowthParams params{1.0 / 3.0, 1.0 / 9.0};
    for (int i = 0; i < m; ++i) {
        for (const Edge& e : spiders[i].edges())
            residual.add_edge(e.u, e.v, g.colour(e));
        try {
            auto [tree, trace] = grow_spanning_tree(residual, spiders[i], params);
            result.certificate.trees.push_back({tree, spiders[i].root, -1});
            result.traces.push_back(std::move(trace));
            residual.remove_edges(tree);
        } catch (const GrowthError& err) {
            result.certificate.stage_report =
                "growth failed at tree " + std::to_string(i) + ": " + err.what();
            return result;
        }
    }
    return result;
}

}  // namespace rainbow
