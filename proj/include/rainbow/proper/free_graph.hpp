#pragma once

#include <set>
#include <vector>

#include "rainbow/core/coloured_graph.hpp"
#include "rainbow/core/spider.hpp"

namespace rainbow {

// Edge-disjoint spiders D_1..D_k with a common-root-coverage property: once
// established, every root lies in every spider's vertex set.
struct SpiderFamilyState {
    std::vector<Spider> spiders;

    std::vector<int> roots() const {
        std::vector<int> out;
        out.reserve(spiders.size());
        for (const Spider& d : spiders) out.push_back(d.root);
        return out;
    }

    bool edge_disjoint() const {
        std::set<Edge> seen;
        for (const Spider& d : spiders)
            for (const Edge& e : d.edges())
                if (!seen.insert(e).second) return false;
        return true;
    }

    bool root_covering() const {
        for (const Spider& a : spiders)
            for (const Spider& b : spiders)
                if (!b.contains_vertex(a.root)) return false;
        return true;
    }

    bool all_rainbow(const ColouredGraph& g) const {
        for (const Spider& d : spiders)
            if (!is_rainbow(g, d.edges())) return false;
        return true;
    }
};

// The modification room around spider i: K_n minus the other spiders' roots
// and edges, minus every edge sharing a colour with the core of D_i, minus
// the core's vertices except the root. Rainbow spiders found here swap in for
// the ordinary-leaf star of D_i without disturbing the rest of the family,
// and the minimum degree stays >= n - 3m - 4t - 1.
inline ColouredGraph free_graph(const ColouredGraph& k, const SpiderFamilyState& family,
                                size_t index) {
    if (index >= family.spiders.size()) throw InputError("free_graph: index out of range");
    const Spider& di = family.spiders[index];
    ColouredGraph out = k;

    for (const Edge& e : di.core().edges()) out.remove_colour_class(k.colour(e));

    for (size_t j = 0; j < family.spiders.size(); ++j) {
        if (j == index) continue;
        out.remove_edges(family.spiders[j].edges());
        out.deactivate_vertex(family.spiders[j].root);
    }

    for (auto [joint, foot] : di.legs) {
        out.deactivate_vertex(joint);
        out.deactivate_vertex(foot);
    }
    return out;
}

}  // namespace rainbow
