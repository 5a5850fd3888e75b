#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rainbow/core/coloured_graph.hpp"
#include "rainbow/core/errors.hpp"
#include "rainbow/core/spider.hpp"
#include "rainbow/iso/rainbow_cycle.hpp"
#include "rainbow/iso/total_digraph.hpp"
#include "rainbow/matchings/rainbow_matching.hpp"

namespace rainbow {

struct ReshapeParams {
    double delta = 0.0006;
    bool strict = false;
};

struct ReshapeResult {
    Spider spider;
    char branch = '-';  // 'A' (direct matching) or 'B' (rainbow cycle)
};

// Lemma-4.8 spider surgery: turns a spanning rainbow t-spider into a
// spanning rainbow (t+s)-spider with the same root. Work happens in H, the
// ordinary-leaf star graph minus the low-degree set B and the core's
// colours. Branch A swaps in s edges of a maximal off-star rainbow matching;
// when that matching is smaller than s, Branch B finds a rainbow s-cycle in
// the auxiliary totally coloured digraph and converts it into the matching
// m_i, each m_i sharing the colour of the star edge r x_i it replaces.
inline ReshapeResult change_spider_parameter(const ColouredGraph& g, const Spider& d0, int s,
                                             const ReshapeParams& params = {}) {
    int n = g.order();
    int r = d0.root;
    if (d0.order() != n) throw InputError("change_spider_parameter: spider must be spanning");
    if (!is_rainbow(g, d0.edges()))
        throw InputError("change_spider_parameter: spider not rainbow");
    if (s < 3) throw InputError("change_spider_parameter: needs s >= 3");

    if (params.strict) {
        std::ostringstream slack;
        bool ok = true;
        long low = 0;
        for (int v : g.vertices())
            if (g.degree(v) < (1.0 - params.delta) * n) ++low;
        if (low > params.delta * n) {
            slack << low << " low-degree vertices, cap " << params.delta * n << "; ";
            ok = false;
        }
        if (d0.t() > params.delta * n) {
            slack << "t = " << d0.t() << " > delta|G|; ";
            ok = false;
        }
        if (s > (0.001 - 8.0 * params.delta) * n) {
            slack << "s = " << s << " > (0.001-8delta)|G| = " << (0.001 - 8.0 * params.delta) * n;
            ok = false;
        }
        if (!ok) throw FeasibilityError("change_spider_parameter: " + slack.str());
    }

    Spider star = d0.ordinary_star();
    Spider hat = d0.core();

    // B: the low-degree vertices ("set of at most delta|G| vertices of degree
    // less than (1-delta)|G|"), computed exactly.
    std::set<int> low_degree;
    for (int v : g.vertices())
        if (g.degree(v) < (1.0 - params.delta) * n) low_degree.insert(v);
    if (low_degree.count(r))
        throw InputError("change_spider_parameter: root is in the low-degree set");

    // H: star vertices minus B, colours of the core removed.
    ColouredGraph h = g;
    std::set<int> hat_colours;
    for (const Edge& e : hat.edges()) hat_colours.insert(g.colour(e));
    for (int c : hat_colours) h.remove_colour_class(c);
    std::vector<bool> in_h(g.n(), false);
    in_h[r] = true;
    std::vector<int> kept_leaves, dropped_leaves;
    for (int leaf : star.ordinary_leaves) {
        if (low_degree.count(leaf) || hat.contains_vertex(leaf))
            dropped_leaves.push_back(leaf);
        else {
            in_h[leaf] = true;
            kept_leaves.push_back(leaf);
        }
    }
    for (int v : g.vertices())
        if (!in_h[v]) h.deactivate_vertex(v);

    Spider star_h;
    star_h.root = r;
    star_h.ordinary_leaves = kept_leaves;

    // Maximal rainbow matching on colours off the star (greedy, lex order).
    ColouredGraph off_star = h;
    std::set<int> star_colours;
    for (int leaf : star.ordinary_leaves) star_colours.insert(g.colour(r, leaf));
    for (int c : star_colours) off_star.remove_colour_class(c);
    off_star.deactivate_vertex(r);
    EdgeList matching = greedy_rainbow_matching(off_star, off_star.max_class_size());

    auto finish = [&](const Spider& s_spider, char branch) {
        Spider out = compose_spiders(s_spider, hat);
        for (int leaf : dropped_leaves)
            if (!hat.contains_vertex(leaf)) out.ordinary_leaves.push_back(leaf);
        out.normalize();
        if (out.order() != n)
            throw InvariantBreachError("change_spider_parameter: result not spanning");
        if (!is_rainbow(g, out.edges()))
            throw InvariantBreachError("change_spider_parameter: result not rainbow");
        if (out.t() != d0.t() + s)
            throw InvariantBreachError("change_spider_parameter: wrong leg count " +
                                       std::to_string(out.t()) + ", expected " +
                                       std::to_string(d0.t() + s));
        return ReshapeResult{out, branch};
    };

    std::string branch_a_note;
    if (static_cast<int>(matching.size()) >= s) {
        // Branch A: swap the first s matching edges in, feet at the lower ids.
        Spider sp;
        sp.root = r;
        std::set<int> in_legs;
        for (int i = 0; i < s; ++i) {
            const Edge& e = matching[i];
            sp.legs.emplace_back(e.v, e.u);  // joint keeps its r-edge, foot e.u loses it
            in_legs.insert(e.u);
            in_legs.insert(e.v);
        }
        for (int leaf : kept_leaves)
            if (!in_legs.count(leaf)) sp.ordinary_leaves.push_back(leaf);
        sp.normalize();
        return finish(sp, 'A');
    }
    branch_a_note = "branch A matching has " + std::to_string(matching.size()) + " < s = " +
                    std::to_string(s) + " edges";

    // Branch B. J: H minus V(M) and r, minus M's colours.
    ColouredGraph jg = h;
    std::set<int> m_colours;
    std::set<int> m_vertices;
    for (const Edge& e : matching) {
        m_colours.insert(g.colour(e));
        m_vertices.insert(e.u);
        m_vertices.insert(e.v);
    }
    for (int c : m_colours) jg.remove_colour_class(c);
    std::vector<int> j_set;
    for (int leaf : kept_leaves)
        if (!m_vertices.count(leaf)) j_set.push_back(leaf);

    try {
        TotallyColouredDigraph digraph = build_auxiliary_digraph(jg, star_h, r, j_set);
        std::vector<int> cycle = find_rainbow_cycle(digraph, s, params.strict);

        // Convert: arc x_i -> x_{i+1} with colour z gives the edge z x_{i+1},
        // sharing the colour of r x_i; the cycle's feet lose their star edge.
        Spider sp;
        sp.root = r;
        std::set<int> cycle_feet;
        std::set<Edge> m_prime;
        for (size_t i = 0; i < cycle.size(); ++i) {
            int x = digraph.vertex_id(cycle[i]);
            int x_next = digraph.vertex_id(cycle[(i + 1) % cycle.size()]);
            int z = digraph.arc_colour(cycle[i], cycle[(i + 1) % cycle.size()]);
            if (g.colour(z, x_next) != g.colour(r, x))
                throw InvariantBreachError("change_spider_parameter: branch-B colour identity");
            sp.legs.emplace_back(z, x_next);
            cycle_feet.insert(x);
            if (!m_prime.insert(Edge(z, x_next)).second)
                throw InvariantBreachError("change_spider_parameter: branch-B M' not a matching");
        }
        // M' is a rainbow matching: in-degree 1 forces vertex-disjointness,
        // out-degree 1 forces colour-distinctness. Asserted post hoc.
        {
            std::set<int> touched, cols;
            for (const Edge& e : m_prime) {
                if (!touched.insert(e.u).second || !touched.insert(e.v).second)
                    throw InvariantBreachError("change_spider_parameter: branch-B M' overlaps");
                if (!cols.insert(g.colour(e)).second)
                    throw InvariantBreachError("change_spider_parameter: branch-B M' not rainbow");
            }
        }
        for (int leaf : kept_leaves) {
            bool is_joint = false;
            for (auto [j, f] : sp.legs)
                if (j == leaf) is_joint = true;
            if (!is_joint && !cycle_feet.count(leaf)) sp.ordinary_leaves.push_back(leaf);
        }
        sp.normalize();
        return finish(sp, 'B');
    } catch (const CycleError& err) {
        throw SurgeryError("change_spider_parameter: both branches failed: " + branch_a_note +
                           "; branch B: " + err.what());
    } catch (const FeasibilityError& err) {
        throw SurgeryError("change_spider_parameter: both branches failed: " + branch_a_note +
                           "; branch B strict bound: " + err.what());
    } catch (const InputError& err) {
        throw SurgeryError("change_spider_parameter: both branches failed: " + branch_a_note +
                           "; branch B digraph: " + err.what());
    }
}

}  // namespace rainbow
