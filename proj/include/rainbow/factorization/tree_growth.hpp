#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rainbow/core/coloured_graph.hpp"
#include "rainbow/core/errors.hpp"
#include "rainbow/core/spider.hpp"

namespace rainbow {

struct GrowthParams {
    double delta = 1.0 / 3.0;
    double alpha = 1.0 / 9.0;
};

// One induction step of the tree growing: vertex `added` joins the tree via
// the swap T_i = T_{i-1} + x y + added z - x w, where c(x y) = colour and
// c(added z) = c(x w).
struct GrowthStep {
    int added = -1;
    int x = -1, y = -1, z = -1, w = -1;
    int colour = -1;
};

// Enough to rebuild every intermediate tree bit-exactly: the starting spider
// trimmed to its working order, the leaves trimmed away, and the step list.
struct GrowthTrace {
    EdgeList initial_tree;
    std::vector<int> trimmed_leaves;
    std::vector<GrowthStep> steps;

    std::string to_string() const {
        std::ostringstream os;
        os << "initial " << initial_tree.size() << '\n';
        for (const Edge& e : initial_tree) os << e.u << ' ' << e.v << '\n';
        os << "trimmed " << trimmed_leaves.size();
        for (int v : trimmed_leaves) os << ' ' << v;
        os << '\n' << "steps " << steps.size() << '\n';
        for (const GrowthStep& s : steps)
            os << s.added << ' ' << s.x << ' ' << s.y << ' ' << s.z << ' ' << s.w << ' '
               << s.colour << '\n';
        return os.str();
    }
};

namespace detail {

// Mutable tree with O(1) degree/leaf bookkeeping for the growth loop.
struct WorkTree {
    int n;
    std::vector<std::vector<int>> adj;
    std::vector<bool> present;
    std::vector<bool> colour_used;
    int vertex_count = 0;

    WorkTree(int n_, int colours) : n(n_), adj(n_), present(n_, false), colour_used(colours, false) {}

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool is_leaf(int v) const { return present[v] && adj[v].size() == 1; }

    void add_vertex(int v) {
        if (!present[v]) {
            present[v] = true;
            ++vertex_count;
        }
    }

    void add_edge(int u, int v, int c) {
        add_vertex(u);
        add_vertex(v);
        adj[u].push_back(v);
        adj[v].push_back(u);
        colour_used[c] = true;
    }

    void remove_edge(int u, int v, int c) {
        auto drop = [](std::vector<int>& list, int x) {
            list.erase(std::find(list.begin(), list.end(), x));
        };
        drop(adj[u], v);
        drop(adj[v], u);
        colour_used[c] = false;
        for (int w : {u, v})
            if (adj[w].empty()) {
                present[w] = false;
                --vertex_count;
            }
    }

    EdgeList edges() const {
        EdgeList out;
        for (int u = 0; u < n; ++u)
            for (int v : adj[u])
                if (u < v) out.emplace_back(u, v);
        std::sort(out.begin(), out.end());
        return out;
    }
};

}  // namespace detail

// Grows a rainbow spider into a spanning rainbow tree with degree <= 3 off
// the root. The spider is first trimmed (ordinary leaves, highest ids first)
// to order ceil((1 - alpha/2) n); each missing vertex i, ascending, gets a
// distinct unused colour c_i, and joins via the first colour c present both
// among {c(x w_x) : x leaf endpoint of a colour-c_i leaf-leaf edge} and
// {c(i z) : z a tree neighbour of i with degree <= 2}.
//
// Every counting step is checked concretely; a step with no admissible
// colour throws GrowthError carrying |V(P)| and |Z| for that step.
inline std::pair<EdgeList, GrowthTrace> grow_spanning_tree(const ColouredGraph& g,
                                                           const Spider& spider,
                                                           const GrowthParams& params = {}) {
    int n = g.order();
    GrowthTrace trace;

    if (params.delta + 5.5 * params.alpha >= 1.0)
        throw FeasibilityError("grow_spanning_tree: delta + 5.5*alpha must be < 1 (got " +
                               std::to_string(params.delta + 5.5 * params.alpha) + ")");

    Spider d = spider;
    if (d.order() == n) {
        trace.initial_tree = d.edges();
        return {d.edges(), trace};
    }

    // "Order exactly (1 - alpha/2) n", realized by trimming ordinary leaves.
    int target_order = static_cast<int>(std::ceil((1.0 - params.alpha / 2.0) * n));
    while (d.order() > target_order && !d.ordinary_leaves.empty()) {
        trace.trimmed_leaves.push_back(d.ordinary_leaves.back());
        d.ordinary_leaves.pop_back();
    }

    for (const Edge& e : d.edges())
        if (g.colour(e) < 0)
            throw InputError("grow_spanning_tree: spider edge missing from graph");
    if (!is_rainbow(g, d.edges())) throw InputError("grow_spanning_tree: spider not rainbow");

    detail::WorkTree tree(g.n(), g.colour_count());
    tree.add_vertex(d.root);
    for (const Edge& e : d.edges()) tree.add_edge(e.u, e.v, g.colour(e));
    trace.initial_tree = d.edges();

    std::vector<int> missing;
    for (int v : g.vertices())
        if (!tree.present[v]) missing.push_back(v);

    std::vector<int> free_colours;
    for (int c = 0; c < g.colour_count(); ++c)
        if (!tree.colour_used[c]) free_colours.push_back(c);
    if (free_colours.size() < missing.size())
        throw FeasibilityError("grow_spanning_tree: fewer unused colours (" +
                               std::to_string(free_colours.size()) + ") than missing vertices (" +
                               std::to_string(missing.size()) + ")");

    for (size_t step = 0; step < missing.size(); ++step) {
        int i = missing[step];
        int ci = free_colours[step];

        // P: colour-c_i edges with both endpoints leaves; per leaf endpoint x,
        // record its unique tree neighbour's colour. Colours are distinct
        // across x because the tree is rainbow.
        std::vector<int> x_of_colour(g.colour_count(), -1);
        long p_vertices = 0;
        for (const Edge& e : g.colour_class(ci)) {
            if (!tree.is_leaf(e.u) || !tree.is_leaf(e.v)) continue;
            p_vertices += 2;
            for (int x : {e.u, e.v}) {
                int w = tree.adj[x][0];
                x_of_colour[g.colour(x, w)] = x;
            }
        }

        // Z: tree neighbours of i with tree degree <= 2, keyed by c(i z).
        std::vector<int> z_of_colour(g.colour_count(), -1);
        long z_count = 0;
        for (int z = 0; z < g.n(); ++z) {
            int c = g.colour(i, z);
            if (c < 0 || !tree.present[z] || tree.degree(z) > 2) continue;
            z_of_colour[c] = z;
            ++z_count;
        }

        int hit = -1;
        for (int c = 0; c < g.colour_count(); ++c)
            if (x_of_colour[c] >= 0 && z_of_colour[c] >= 0) {
                hit = c;
                break;
            }
        if (hit < 0)
            throw GrowthError("grow_spanning_tree: no common colour at step " +
                                  std::to_string(step) + " (vertex " + std::to_string(i) +
                                  "): |V(P)|=" + std::to_string(p_vertices) +
                                  ", |Z|=" + std::to_string(z_count),
                              static_cast<int>(step), p_vertices, z_count);

        int x = x_of_colour[hit];
        int z = z_of_colour[hit];
        int w = tree.adj[x][0];
        // y: the colour-c_i partner of x.
        int y = -1;
        for (int u = 0; u < g.n(); ++u)
            if (g.colour(x, u) == ci) {
                y = u;
                break;
            }

        tree.remove_edge(x, w, g.colour(x, w));
        tree.add_edge(x, y, ci);
        tree.add_edge(i, z, g.colour(i, z));
        trace.steps.push_back({i, x, y, z, w, ci});
    }

    return {tree.edges(), trace};
}

// Replays a trace from its recorded starting tree; used to validate that the
// mutation log reconstructs the final tree bit-exactly.
inline EdgeList replay_growth_trace(const GrowthTrace& trace, int n) {
    std::set<Edge> edges(trace.initial_tree.begin(), trace.initial_tree.end());
    for (const GrowthStep& s : trace.steps) {
        edges.erase(Edge(s.x, s.w));
        edges.insert(Edge(s.x, s.y));
        edges.insert(Edge(s.added, s.z));
    }
    (void)n;
    return EdgeList(edges.begin(), edges.end());
}

}  // namespace rainbow
