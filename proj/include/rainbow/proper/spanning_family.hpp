#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rainbow/core/coloured_graph.hpp"
#include "rainbow/core/errors.hpp"
#include "rainbow/core/spider.hpp"
#include "rainbow/proper/free_graph.hpp"
#include "rainbow/proper/star_extension.hpp"

namespace rainbow {

struct SpanningFamilyParams {
    double alpha = 0.0;
    double gamma = 0.0;
    double tau = 0.0;
    double epsilon = 0.0;
    double phi = 0.0;
    bool strict = false;
};

namespace detail {

// Lemma-4.6 split: ordinary leaves that are other spiders' roots move into
// the kept part, so the working graph can drop them as vertices.
inline void split_for_spanning(const Spider& d, const std::set<int>& other_roots, Spider& star,
                               Spider& hat) {
    star = Spider{};
    hat = Spider{};
    star.root = hat.root = d.root;
    hat.legs = d.legs;
    for (int leaf : d.ordinary_leaves)
        (other_roots.count(leaf) ? hat : star).ordinary_leaves.push_back(leaf);
    star.normalize();
    hat.normalize();
}

}  // namespace detail

// Lemma-4.6 driver: turns a root-covering family of large edge-disjoint
// rainbow spiders into spanning ones, in index order. For spider i the
// working graph is K_n restricted to (V \ V(hat D_i)) + r_i, minus the other
// spiders' edges and every colour of hat D_i; the ordinary-leaf star grows to
// span it via extend_star_many and hat D_i is reattached at the root.
inline SpiderFamilyState make_spanning_spiders(const ColouredGraph& k,
                                               const SpiderFamilyState& family_in,
                                               ColourMode mode,
                                               const SpanningFamilyParams& params) {
    int n = k.n();
    SpiderFamilyState family = family_in;
    size_t m = family.spiders.size();

    if (params.strict) {
        std::ostringstream slack;
        bool ok = true;
        if (mode == ColourMode::FatOutside) {
            if (params.epsilon < 9 * params.alpha + 8 * params.gamma + 25 * params.tau) {
                slack << "epsilon < 9alpha+8gamma+25tau; ";
                ok = false;
            }
        } else {
            if (!(0.03 >= params.epsilon / 2 - 0.001 &&
                  params.epsilon / 2 - 0.001 >= params.phi &&
                  params.phi >= 80 * params.alpha + 50 * params.gamma + 340 * params.tau)) {
                slack << "0.03 >= eps/2-0.001 >= phi >= 80alpha+50gamma+340tau fails; ";
                ok = false;
            }
        }
        for (const Spider& d : family.spiders) {
            if (d.t() > params.gamma * n) {
                slack << "a spider has t=" << d.t() << " > gamma*n; ";
                ok = false;
                break;
            }
            if (d.order() < (1.0 - params.tau) * n) {
                slack << "a spider has order " << d.order() << " < (1-tau)n; ";
                ok = false;
                break;
            }
        }
        if (!family.root_covering()) {
            slack << "family is not root-covering; ";
            ok = false;
        }
        if (!ok) throw FeasibilityError("make_spanning_spiders: " + slack.str());
    }

    double delta = 5 * params.alpha + 4 * params.gamma + 2 * params.tau;

    for (size_t i = 0; i < m; ++i) {
        std::set<int> other_roots;
        for (size_t j = 0; j < m; ++j)
            if (j != i) other_roots.insert(family.spiders[j].root);

        Spider star, hat;
        detail::split_for_spanning(family.spiders[i], other_roots, star, hat);

        ColouredGraph work = k;
        std::set<int> hat_colours;
        for (const Edge& e : hat.edges()) hat_colours.insert(k.colour(e));
        for (int c : hat_colours) work.remove_colour_class(c);
        for (size_t j = 0; j < m; ++j)
            if (j != i) work.remove_edges(family.spiders[j].edges());
        for (int u : hat.vertices())
            if (u != hat.root) work.deactivate_vertex(u);

        long t = work.order() - star.order();
        double tau_here = static_cast<double>(t) / work.order();
        ExtendManyParams ext;
        ext.delta = delta;
        ext.strict = params.strict;
        if (mode == ColourMode::FatOutside) {
            ext.epsilon = params.epsilon - 4 * params.alpha - 2 * params.gamma - params.tau;
            ext.phi = 0.0;
        } else {
            ext.epsilon = params.epsilon / (1.0 - 2 * params.gamma) + tau_here;
            ext.phi = 1.0 - (1.0 - params.phi) /
                                ((1.0 - params.tau) * (1.0 - 2 * params.gamma - params.alpha));
        }

        Spider grown;
        try {
            grown = extend_star_many(work, star, mode, ext);
        } catch (const Error& err) {
            throw ExtensionError("make_spanning_spiders: spider " + std::to_string(i) + ": " +
                                 err.what());
        }
        family.spiders[i] = compose_spiders(grown, hat);

        // Observation 2.2 as an executable check: the swap must keep the
        // family rainbow, edge-disjoint and root-covering.
        if (!is_rainbow(k, family.spiders[i].edges()))
            throw InvariantBreachError("make_spanning_spiders: replacement spider not rainbow");
        if (family.spiders[i].order() != n)
            throw InvariantBreachError("make_spanning_spiders: replacement spider not spanning");
        if (!family.edge_disjoint())
            throw InvariantBreachError("make_spanning_spiders: family lost edge-disjointness");
        if (!family.root_covering())
            throw InvariantBreachError("make_spanning_spiders: family lost root coverage");
    }
    return family;
}

}  // namespace rainbow
