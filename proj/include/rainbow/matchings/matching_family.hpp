#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rainbow/core/coloured_graph.hpp"
#include "rainbow/core/errors.hpp"
#include "rainbow/matchings/rainbow_matching.hpp"

namespace rainbow {

// t edge-disjoint rainbow matchings M_1..M_t of a common size, plus a root
// set A = {r_1..r_t} disjoint from every V(M_i) such that each edge xy of M_i
// satisfies one of: r_i x not an edge, r_i y not an edge, c(r_i x) not a
// colour of M_i, c(r_i y) not a colour of M_i.
struct MatchingFamily {
    std::vector<EdgeList> matchings;
    std::vector<int> roots;
};

namespace detail {

// Per-edge root condition of the family, recomputable from scratch.
inline bool root_side_condition(const ColouredGraph& g, int root, const EdgeList& matching) {
    std::set<int> colours;
    for (const Edge& e : matching) colours.insert(g.colour(e));
    for (const Edge& e : matching) {
        int cx = g.colour(root, e.u);
        int cy = g.colour(root, e.v);
        bool ok = cx < 0 || cy < 0 || !colours.count(cx) || !colours.count(cy);
        if (!ok) return false;
    }
    return true;
}

// Thins a raw rainbow matching to `target` edges while establishing the root
// condition edge by edge ("choose the edges of M' one at a time"): each kept
// edge designates an endpoint p with r p not an edge or c(r p) off the final
// colour set; colours relied upon are locked against later picks.
inline bool thin_with_root_condition(const ColouredGraph& g, int root, const EdgeList& raw,
                                     long target, EdgeList& out) {
    out.clear();
    std::set<int> chosen_colours;
    std::set<int> locked;  // c(r p) values the kept edges rely on staying off M'
    for (const Edge& e : raw) {
        if (static_cast<long>(out.size()) == target) break;
        int ce = g.colour(e);
        if (locked.count(ce)) continue;
        bool accepted = false;
        for (int p : {e.u, e.v}) {
            int cp = g.colour(root, p);
            if (cp < 0) {
                accepted = true;
                break;
            }
            if (!chosen_colours.count(cp) && cp != ce && !locked.count(cp)) {
                // cp must also stay off the colours we add later.
                locked.insert(cp);
                accepted = true;
                break;
            }
        }
        if (!accepted) continue;
        out.push_back(e);
        chosen_colours.insert(ce);
    }
    return static_cast<long>(out.size()) == target;
}

}  // namespace detail

// Lemma-style construction of t edge-disjoint rainbow matchings of size
// `delta` with the root set A. Induction on delta: while some vertex has
// degree >= 6*delta + 2t, set it aside and solve for delta-1 without it, then
// extend each matching by a distinct edge at that vertex; in the bounded
// base case (Delta <= 6*delta + 2t) take A as the t smallest-degree vertices
// and repeatedly extract 3*delta-sized rainbow matchings from G - A, thinning
// each to size delta under the root condition.
inline MatchingFamily many_rainbow_matchings(const ColouredGraph& g, long delta, int b, int t) {
    if (t < 0 || delta < 0) throw InputError("many_rainbow_matchings: negative parameter");
    MatchingFamily family;
    if (t == 0) return family;
    if (delta == 0) {
        // Trivial base of the induction: empty matchings plus any t roots.
        if (g.order() < t)
            throw FeasibilityError("many_rainbow_matchings: fewer than t vertices");
        family.matchings.assign(t, {});
        std::vector<int> verts = g.vertices();
        std::stable_sort(verts.begin(), verts.end(),
                         [&g](int a, int b2) { return g.degree(a) < g.degree(b2); });
        family.roots.assign(verts.begin(), verts.begin() + t);
        std::sort(family.roots.begin(), family.roots.end());
        return family;
    }
    {
        std::ostringstream slack;
        bool ok = true;
        if (g.min_degree() < delta) {
            slack << "min degree " << g.min_degree() << " < delta " << delta << "; ";
            ok = false;
        }
        if (g.max_class_size() > b) {
            slack << "colour class " << g.max_class_size() << " > b " << b << "; ";
            ok = false;
        }
        long cap = (g.order() - 72 * delta - 6L * b);
        if (29L * t > cap) {
            slack << "29t = " << 29L * t << " > |G| - 72*delta - 6b = " << cap;
            ok = false;
        }
        if (!ok) throw FeasibilityError("many_rainbow_matchings: " + slack.str());
    }

    family.matchings.assign(t, {});
    ColouredGraph work = g;

    // Peel high-degree vertices, one per level, decrementing delta.
    std::vector<int> peeled;
    long level_delta = delta;
    while (level_delta > 0) {
        int found = -1;
        for (int v = 0; v < work.n(); ++v)
            if (work.active(v) && work.degree(v) >= 6 * level_delta + 2L * t) {
                found = v;
                break;
            }
        if (found < 0) break;
        peeled.push_back(found);
        work.deactivate_vertex(found);
        --level_delta;
    }

    // Bounded base case on the remaining graph.
    {
        std::vector<int> verts = work.vertices();
        std::stable_sort(verts.begin(), verts.end(),
                         [&work](int a, int b2) { return work.degree(a) < work.degree(b2); });
        family.roots.assign(verts.begin(), verts.begin() + t);
        std::sort(family.roots.begin(), family.roots.end());

        ColouredGraph h = work;
        for (int r : family.roots) h.deactivate_vertex(r);
        for (int i = 0; i < t; ++i) {
            EdgeList raw = greedy_rainbow_matching(h, b);
            if (!detail::thin_with_root_condition(g, family.roots[i], raw, level_delta,
                                                  family.matchings[i]))
                throw InvariantBreachError(
                    "many_rainbow_matchings: base extraction too small (raw " +
                    std::to_string(raw.size()) + ", need " + std::to_string(level_delta) +
                    " at matching " + std::to_string(i) + ")");
            h.remove_edges(family.matchings[i]);
        }
    }

    // Unwind the peeled vertices in reverse, extending every matching by one
    // valid edge at the restored vertex; lowest-id y wins, lower i first.
    std::vector<bool> removed(g.n(), false);
    for (int p : peeled) removed[p] = true;
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        int v = *it;
        removed[v] = false;
        std::set<int> taken;  // endpoints already claimed at v this level
        for (int i = 0; i < t; ++i) {
            EdgeList& mi = family.matchings[i];
            int root = family.roots[i];
            std::set<int> mi_colours;
            std::set<int> mi_vertices;
            std::set<int> root_colours;  // c(r_i u) for u in V(M_i)
            for (const Edge& e : mi) {
                mi_colours.insert(g.colour(e));
                for (int u : {e.u, e.v}) {
                    mi_vertices.insert(u);
                    int cu = g.colour(root, u);
                    if (cu >= 0) root_colours.insert(cu);
                }
            }
            int pick = -1;
            for (int y = 0; y < g.n(); ++y) {
                if (y == v || taken.count(y)) continue;
                int c = g.colour(v, y);
                if (c < 0) continue;
                if (std::binary_search(family.roots.begin(), family.roots.end(), y)) continue;
                if (removed[y]) continue;  // y only returns at a shallower level
                if (mi_vertices.count(y) || mi_colours.count(c) || root_colours.count(c))
                    continue;
                int cry = g.colour(root, y);
                if (cry >= 0 && mi_colours.count(cry)) continue;
                pick = y;
                break;
            }
            if (pick < 0)
                throw InvariantBreachError(
                    "many_rainbow_matchings: no extension edge at restored vertex " +
                    std::to_string(v) + " for matching " + std::to_string(i));
            taken.insert(pick);
            mi.emplace_back(v, pick);
            std::sort(mi.begin(), mi.end());
        }
    }

    for (EdgeList& m : family.matchings) std::sort(m.begin(), m.end());
    return family;
}

// Full recomputation of the MatchingFamily invariants; used by tests and by
// pipelines that refuse to trust their own construction.
inline bool check_matching_family(const ColouredGraph& g, const MatchingFamily& family,
                                  long expected_size) {
    std::set<Edge> all;
    std::set<int> roots(family.roots.begin(), family.roots.end());
    if (family.roots.size() != family.matchings.size()) return false;
    if (roots.size() != family.roots.size()) return false;
    for (size_t i = 0; i < family.matchings.size(); ++i) {
        const EdgeList& m = family.matchings[i];
        if (expected_size >= 0 && static_cast<long>(m.size()) != expected_size) return false;
        std::set<int> vertices, colours;
        for (const Edge& e : m) {
            if (g.colour(e) < 0) return false;
            if (!all.insert(e).second) return false;  // edge-disjointness
            if (!vertices.insert(e.u).second || !vertices.insert(e.v).second) return false;
            if (!colours.insert(g.colour(e)).second) return false;  // rainbow
            if (roots.count(e.u) || roots.count(e.v)) return false;
        }
        if (!detail::root_side_condition(g, family.roots[i], m)) return false;
    }
    return true;
}

}  // namespace rainbow
