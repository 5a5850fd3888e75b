#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/core/errors.hpp"

namespace rainbow {

// Undirected edge, stored with u < v. Ordering is lexicographic, which is the
// global tie-break rule for every deterministic scan in the library.
struct Edge {
    int u = -1;
    int v = -1;

    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

    bool touches(int x) const { return u == x || v == x; }
    int other(int x) const { return u == x ? v : u; }

    friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator!=(const Edge& a, const Edge& b) { return !(a == b); }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

using EdgeList = std::vector<Edge>;

// Edge-coloured simple graph on vertex ids 0..n-1. Colour storage is an n x n
// symmetric matrix with -1 for non-edges: complete-graph workloads dominate
// and colour lookup must be O(1). Vertices can be deactivated to model
// induced subgraphs without disturbing ids; order() counts active vertices.
class ColouredGraph {
  public:
    ColouredGraph() = default;

    ColouredGraph(int n, int colours) : n_(n), colours_(colours) {
        if (n < 0 || colours < 0) throw InputError("ColouredGraph: negative size");
        matrix_.assign(static_cast<size_t>(n) * n, -1);
        degree_.assign(n, 0);
        active_.assign(n, true);
        class_size_.assign(colours, 0);
        active_count_ = n;
    }

    int n() const { return n_; }
    int colour_count() const { return colours_; }
    long edge_count() const { return edge_count_; }
    int order() const { return active_count_; }

    bool active(int v) const { return active_[v]; }
    int degree(int v) const { return degree_[v]; }

    bool has_edge(int u, int v) const { return u != v && matrix_[idx(u, v)] >= 0; }

    // -1 when the edge is absent.
    int colour(int u, int v) const { return u == v ? -1 : matrix_[idx(u, v)]; }
    int colour(const Edge& e) const { return colour(e.u, e.v); }

    int class_size(int c) const { return class_size_[c]; }

    void add_edge(int u, int v, int c) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InputError("add_edge: loop");
        if (!active_[u] || !active_[v]) throw InputError("add_edge: inactive endpoint");
        if (c < 0 || c >= colours_) throw InputError("add_edge: colour out of range");
        if (matrix_[idx(u, v)] >= 0) throw InputError("add_edge: multi-edge");
        matrix_[idx(u, v)] = matrix_[idx(v, u)] = c;
        ++degree_[u];
        ++degree_[v];
        ++class_size_[c];
        ++edge_count_;
        proper_cache_.reset();
    }

    void remove_edge(int u, int v) {
        int c = colour(u, v);
        if (c < 0) return;
        matrix_[idx(u, v)] = matrix_[idx(v, u)] = -1;
        --degree_[u];
        --degree_[v];
        --class_size_[c];
        --edge_count_;
        proper_cache_.reset();
    }

    void remove_edges(const EdgeList& edges) {
        for (const Edge& e : edges) remove_edge(e.u, e.v);
    }

    // Removes the vertex and all its edges from the working graph; ids of the
    // remaining vertices are unchanged.
    void deactivate_vertex(int v) {
        check_vertex(v);
        if (!active_[v]) return;
        for (int u = 0; u < n_; ++u)
            if (matrix_[idx(v, u)] >= 0) remove_edge(v, u);
        active_[v] = false;
        --active_count_;
    }

    // Drops every edge of the given colour.
    void remove_colour_class(int c) {
        for (const Edge& e : colour_class(c)) remove_edge(e.u, e.v);
    }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(active_count_);
        for (int v = 0; v < n_; ++v)
            if (active_[v]) out.push_back(v);
        return out;
    }

    std::vector<int> neighbours(int v) const {
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (matrix_[idx(v, u)] >= 0) out.push_back(u);
        return out;
    }

    // All edges in lexicographic order.
    EdgeList edges() const {
        EdgeList out;
        out.reserve(edge_count_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (matrix_[idx(u, v)] >= 0) out.emplace_back(u, v);
        return out;
    }

    // Edges of one colour, lexicographic. Proper colourings make this a matching.
    EdgeList colour_class(int c) const {
        EdgeList out;
        if (class_size_[c] == 0) return out;
        out.reserve(class_size_[c]);
        for (int u = 0; u < n_; ++u) {
            if (!active_[u]) continue;
            for (int v = u + 1; v < n_; ++v)
                if (matrix_[idx(u, v)] == c) out.emplace_back(u, v);
        }
        return out;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v)
            if (active_[v]) d = std::max(d, degree_[v]);
        return d;
    }

    int min_degree() const {
        int d = -1;
        for (int v = 0; v < n_; ++v)
            if (active_[v]) d = d < 0 ? degree_[v] : std::min(d, degree_[v]);
        return std::max(d, 0);
    }

    int max_class_size() const {
        int b = 0;
        for (int c : class_size_) b = std::max(b, c);
        return b;
    }

    // True iff no two edges sharing a vertex share a colour. Recomputed in
    // Theta(sum of degrees) and cached until the next mutation.
    bool is_proper() const {
        if (proper_cache_) return *proper_cache_;
        bool ok = true;
        std::vector<int> seen(colours_, -1);
        for (int v = 0; v < n_ && ok; ++v) {
            if (!active_[v]) continue;
            for (int u = 0; u < n_; ++u) {
                int c = matrix_[idx(v, u)];
                if (c < 0) continue;
                if (seen[c] == v) {
                    ok = false;
                    break;
                }
                seen[c] = v;
            }
        }
        proper_cache_ = ok;
        return ok;
    }

    bool complete() const {
        return edge_count_ == static_cast<long>(active_count_) * (active_count_ - 1) / 2;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw InputError("vertex id out of range");
    }

  private:
    size_t idx(int u, int v) const { return static_cast<size_t>(u) * n_ + v; }

    int n_ = 0;
    int colours_ = 0;
    long edge_count_ = 0;
    int active_count_ = 0;
    std::vector<int32_t> matrix_;
    std::vector<int> degree_;
    std::vector<bool> active_;
    std::vector<int> class_size_;
    mutable std::optional<bool> proper_cache_;
};

// True iff all edges in E have pairwise distinct colours. Edges must exist.
inline bool is_rainbow(const ColouredGraph& g, const EdgeList& edges) {
    std::vector<bool> seen(g.colour_count(), false);
    for (const Edge& e : edges) {
        int c = g.colour(e);
        if (c < 0) throw InputError("is_rainbow: edge not in graph");
        if (seen[c]) return false;
        seen[c] = true;
    }
    return true;
}

}  // namespace rainbow
