#pragma once

#include <map>
#include <set>
#include <vector>

#include "rainbow/core/coloured_graph.hpp"
#include "rainbow/core/errors.hpp"
#include "rainbow/core/spider.hpp"

namespace rainbow {

// Digraph with colours on both arcs and vertices. Properly totally coloured:
// at each vertex the in-arc colours are distinct, the out-arc colours are
// distinct, and no arc at v carries v's own colour; c(xv) = c(vy) stays
// legal. Vertex-rainbow: all vertex colours distinct.
class TotallyColouredDigraph {
  public:
    TotallyColouredDigraph(const std::vector<int>& vertex_ids, int colour_space)
        : ids_(vertex_ids), colour_space_(colour_space) {
        int n = static_cast<int>(ids_.size());
        arc_.assign(static_cast<size_t>(n) * n, -1);
        vertex_colour_.assign(n, -1);
        index_of_.clear();
        for (int i = 0; i < n; ++i) index_of_[ids_[i]] = i;
    }

    int size() const { return static_cast<int>(ids_.size()); }
    int vertex_id(int index) const { return ids_[index]; }
    bool knows(int id) const { return index_of_.count(id) > 0; }
    int index_of(int id) const { return index_of_.at(id); }

    void set_vertex_colour(int index, int colour) { vertex_colour_[index] = colour; }
    int vertex_colour(int index) const { return vertex_colour_[index]; }

    void add_arc(int from, int to, int colour) {
        if (from == to) throw InputError("TotallyColouredDigraph: loop");
        arc_[pos(from, to)] = colour;
        ++arc_count_;
    }

    bool has_arc(int from, int to) const { return from != to && arc_[pos(from, to)] >= 0; }
    int arc_colour(int from, int to) const { return arc_[pos(from, to)]; }
    long arc_count() const { return arc_count_; }
    int colour_space() const { return colour_space_; }

    int out_degree(int v) const {
        int d = 0;
        for (int u = 0; u < size(); ++u)
            if (arc_[pos(v, u)] >= 0) ++d;
        return d;
    }

    int in_degree(int v) const {
        int d = 0;
        for (int u = 0; u < size(); ++u)
            if (arc_[pos(u, v)] >= 0) ++d;
        return d;
    }

    bool properly_totally_coloured() const {
        for (int v = 0; v < size(); ++v) {
            std::set<int> in, out;
            for (int u = 0; u < size(); ++u) {
                int co = arc_[pos(v, u)];
                if (co >= 0 && (co == vertex_colour_[v] || !out.insert(co).second)) return false;
                int ci = arc_[pos(u, v)];
                if (ci >= 0 && (ci == vertex_colour_[v] || !in.insert(ci).second)) return false;
            }
        }
        return true;
    }

    bool vertex_rainbow() const {
        std::set<int> seen(vertex_colour_.begin(), vertex_colour_.end());
        return seen.size() == vertex_colour_.size();
    }

  private:
    size_t pos(int a, int b) const { return static_cast<size_t>(a) * size() + b; }

    std::vector<int> ids_;
    int colour_space_;
    std::vector<int32_t> arc_;
    std::vector<int> vertex_colour_;
    std::map<int, int> index_of_;
    long arc_count_ = 0;
};

// Lemma-4.8 auxiliary digraph on the vertex set J: arc x -> y with colour z
// whenever h has a colour-c(rx) edge z y with z in J; every vertex is
// coloured by itself. Each edge of h[J] whose star leaf lies in J contributes
// exactly two arcs. Requires every colour on h[J] to occur on the star S.
inline TotallyColouredDigraph build_auxiliary_digraph(const ColouredGraph& h, const Spider& star,
                                                      int root, const std::vector<int>& j_set) {
    std::vector<int> leaf_of_colour(h.colour_count(), -1);
    for (int s : star.ordinary_leaves) {
        int c = h.colour(root, s);
        if (c < 0) throw InputError("build_auxiliary_digraph: star edge missing from H");
        leaf_of_colour[c] = s;
    }

    TotallyColouredDigraph d(j_set, h.n());
    for (int i = 0; i < d.size(); ++i) d.set_vertex_colour(i, j_set[i]);

    std::set<int> j_lookup(j_set.begin(), j_set.end());
    for (size_t a = 0; a < j_set.size(); ++a) {
        for (size_t b = a + 1; b < j_set.size(); ++b) {
            int z = j_set[a], y = j_set[b];
            int c = h.colour(z, y);
            if (c < 0) continue;
            int x = leaf_of_colour[c];
            if (x < 0)
                throw InputError("build_auxiliary_digraph: colour " + std::to_string(c) +
                                 " on J does not occur on the star");
            if (!j_lookup.count(x)) continue;
            // Edge z-y realizes both arc x->y (colour z) and arc x->z (colour y).
            d.add_arc(d.index_of(x), d.index_of(y), z);
            d.add_arc(d.index_of(x), d.index_of(z), y);
        }
    }
    return d;
}

}  // namespace rainbow
