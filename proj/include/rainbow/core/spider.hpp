#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "rainbow/core/coloured_graph.hpp"
#include "rainbow/core/errors.hpp"

namespace rainbow {

// A t-spider in normal form: a star at `root` with t of its edges subdivided
// once. A leg is the pair (joint, foot) where root-joint and joint-foot are
// edges; ordinary leaves hang directly off the root. A star is a 0-spider.
struct Spider {
    int root = -1;
    std::vector<std::pair<int, int>> legs;  // (joint, foot), sorted by joint
    std::vector<int> ordinary_leaves;       // sorted

    int t() const { return static_cast<int>(legs.size()); }
    int order() const { return 1 + 2 * t() + static_cast<int>(ordinary_leaves.size()); }

    EdgeList edges() const {
        EdgeList out;
        out.reserve(order() - 1);
        for (auto [j, f] : legs) {
            out.emplace_back(root, j);
            out.emplace_back(j, f);
        }
        for (int y : ordinary_leaves) out.emplace_back(root, y);
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(order());
        out.push_back(root);
        for (auto [j, f] : legs) {
            out.push_back(j);
            out.push_back(f);
        }
        for (int y : ordinary_leaves) out.push_back(y);
        std::sort(out.begin(), out.end());
        return out;
    }

    bool contains_vertex(int v) const {
        if (v == root) return true;
        for (auto [j, f] : legs)
            if (j == v || f == v) return true;
        return std::binary_search(ordinary_leaves.begin(), ordinary_leaves.end(), v);
    }

    void normalize() {
        std::sort(legs.begin(), legs.end());
        std::sort(ordinary_leaves.begin(), ordinary_leaves.end());
    }

    // The star formed by the root and its ordinary leaves.
    Spider ordinary_star() const {
        Spider s;
        s.root = root;
        s.ordinary_leaves = ordinary_leaves;
        return s;
    }

    // The spider minus its ordinary leaves (root, joints, feet only).
    Spider core() const {
        Spider s;
        s.root = root;
        s.legs = legs;
        return s;
    }
};

// Two spiders sharing only their root combine into a (d1+d2)-spider.
inline Spider compose_spiders(const Spider& a, const Spider& b) {
    if (a.root != b.root) throw InputError("compose_spiders: different roots");
    Spider out = a;
    out.legs.insert(out.legs.end(), b.legs.begin(), b.legs.end());
    out.ordinary_leaves.insert(out.ordinary_leaves.end(), b.ordinary_leaves.begin(),
                               b.ordinary_leaves.end());
    out.normalize();
    std::set<int> seen;
    for (int v : out.vertices())
        if (v != out.root && !seen.insert(v).second)
            throw InvariantBreachError("compose_spiders: spiders share a non-root vertex");
    return out;
}

// Normal form of a tree rooted at r, when the tree is a spider: every vertex
// at distance <= 2 from r and every distance-1 vertex with at most one child.
// Throws ShapeError when E is not a tree containing r.
inline Spider classify_spider(const ColouredGraph& g, const EdgeList& edges, int r) {
    g.check_vertex(r);
    std::map<int, std::vector<int>> adj;
    for (const Edge& e : edges) {
        if (!g.has_edge(e.u, e.v)) throw InputError("classify_spider: edge not in graph");
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    if (edges.empty()) {
        Spider s;
        s.root = r;
        return s;
    }
    if (!adj.count(r)) throw ShapeError("classify_spider: root not covered by edge list");
    if (adj.size() != edges.size() + 1) throw ShapeError("classify_spider: not a tree");
    // Connectivity: BFS from r must reach every vertex (acyclicity then follows
    // from the vertex/edge count).
    std::set<int> seen{r};
    std::vector<int> queue{r};
    for (size_t i = 0; i < queue.size(); ++i)
        for (int u : adj[queue[i]])
            if (seen.insert(u).second) queue.push_back(u);
    if (seen.size() != adj.size()) throw ShapeError("classify_spider: not a tree");

    Spider s;
    s.root = r;
    for (int child : adj[r]) {
        std::vector<int> grandchildren;
        for (int gc : adj[child])
            if (gc != r) grandchildren.push_back(gc);
        if (grandchildren.empty()) {
            s.ordinary_leaves.push_back(child);
            continue;
        }
        if (grandchildren.size() > 1)
            throw ShapeError("classify_spider: joint with two or more feet");
        int foot = grandchildren[0];
        if (adj[foot].size() != 1)
            throw ShapeError("classify_spider: vertex at distance three from root");
        s.legs.emplace_back(child, foot);
    }
    s.normalize();
    return s;
}

}  // namespace rainbow
