#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rainbow/core/coloured_graph.hpp"
#include "rainbow/core/errors.hpp"
#include "rainbow/core/spider.hpp"
#include "rainbow/matchings/rainbow_matching.hpp"

namespace rainbow {

struct StarOneParams {
    double delta = 0.0;
    double mu = 0.0;
};

struct StarExtensionResult {
    Spider spider;
    int case_used = 0;  // 1..4, the proof's case cascade
};

// Lemma-4.4 star extension: the star S spans all of g except one vertex v;
// the matching M shares no colours with S. Produces a spanning rainbow
// (<= 3)-spider rooted at the star's root via the first applicable case:
//   1. r v is an edge: S + rv.
//   2. some vx has a colour off S: S + vx.
//   3. a swap through f(v,y), the leaf s with c(rs) = c(vy): either the
//      matching edge z f(v,y) in M (z != y), or a fresh-coloured z f(v,y).
//   4. the double swap through f(v,y) and f(f(v,y),z).
// Every quantifier takes its lowest-id witness. When `strict` is given, the
// lemma's parameter inequalities are checked eagerly; the concrete searches
// are always the real gate and failures name the first failed count.
inline StarExtensionResult extend_star_one_vertex(const ColouredGraph& g, const Spider& star,
                                                  const EdgeList& matching,
                                                  const StarOneParams* strict = nullptr) {
    if (star.t() != 0) throw InputError("extend_star_one_vertex: S must be a star");
    int r = star.root;
    int n = g.order();
    if (star.order() != n - 1)
        throw InputError("extend_star_one_vertex: star must miss exactly one vertex");

    std::vector<bool> star_colour(g.colour_count(), false);
    std::vector<int> leaf_of_colour(g.colour_count(), -1);
    std::vector<bool> in_star(g.n(), false);
    in_star[r] = true;
    for (int s : star.ordinary_leaves) {
        int c = g.colour(r, s);
        if (c < 0) throw InputError("extend_star_one_vertex: star edge missing from graph");
        star_colour[c] = true;
        leaf_of_colour[c] = s;
        in_star[s] = true;
    }

    int v = -1;
    for (int u : g.vertices())
        if (!in_star[u]) v = v < 0 ? u : v;
    if (v < 0) throw InputError("extend_star_one_vertex: no missing vertex");

    std::vector<int> partner(g.n(), -1);
    for (const Edge& e : matching) {
        int c = g.colour(e);
        if (c < 0) throw InputError("extend_star_one_vertex: matching edge missing from graph");
        if (star_colour[c])
            throw InputError("extend_star_one_vertex: matching shares a colour with the star");
        if (partner[e.u] >= 0 || partner[e.v] >= 0)
            throw InputError("extend_star_one_vertex: M is not a matching");
        partner[e.u] = e.v;
        partner[e.v] = e.u;
    }

    if (strict) {
        std::ostringstream slack;
        bool ok = true;
        if (2.0 * strict->mu * n <= 2.0 * strict->delta * n + 5) {
            slack << "2mu|G| <= 2delta|G|+5 (" << 2.0 * strict->mu * n << " vs "
                  << 2.0 * strict->delta * n + 5 << "); ";
            ok = false;
        }
        if (1.0 - strict->delta <= 4.0 * strict->mu) {
            slack << "1-delta <= 4mu; ";
            ok = false;
        }
        if (g.min_degree() < (1.0 - strict->delta) * n) {
            slack << "min degree " << g.min_degree() << " < (1-delta)|G| = "
                  << (1.0 - strict->delta) * n << "; ";
            ok = false;
        }
        if (static_cast<double>(matching.size()) < strict->mu * n) {
            slack << "|M| = " << matching.size() << " < mu|G| = " << strict->mu * n;
            ok = false;
        }
        if (!ok) throw FeasibilityError("extend_star_one_vertex: " + slack.str());
    }

    auto leaves_without = [&star](std::initializer_list<int> removed) {
        std::vector<int> out;
        out.reserve(star.ordinary_leaves.size());
        for (int s : star.ordinary_leaves) {
            bool drop = false;
            for (int x : removed)
                if (s == x) drop = true;
            if (!drop) out.push_back(s);
        }
        return out;
    };

    // Case 1: v adjacent to the root.
    if (g.has_edge(r, v)) {
        Spider out = star;
        out.ordinary_leaves.push_back(v);
        out.normalize();
        return {out, 1};
    }

    // Case 2: some v-edge with a colour off S.
    for (int x = 0; x < g.n(); ++x) {
        int c = g.colour(v, x);
        if (c < 0 || x == r || star_colour[c]) continue;
        Spider out;
        out.root = r;
        out.legs.emplace_back(x, v);
        out.ordinary_leaves = leaves_without({x});
        out.normalize();
        return {out, 2};
    }

    // From here every v-edge colour is on S, so f(v,y) is total on N(v).
    auto f = [&](int x, int y) {
        int c = g.colour(x, y);
        return c < 0 || !star_colour[c] ? -1 : leaf_of_colour[c];
    };

    auto commit_two_legs = [&](int y, int fv, int z) {
        // Swap-edge disjointness and colour distinctness, asserted before
        // committing (the proof's conditions).
        int cz = g.colour(z, fv);
        if (z == y || z == v || z == r || z == fv || y == fv || cz < 0 ||
            cz == g.colour(v, y))
            throw InvariantBreachError("extend_star_one_vertex: case-3 swap ill-formed");
        Spider out;
        out.root = r;
        out.legs.emplace_back(y, v);
        out.legs.emplace_back(z, fv);
        out.ordinary_leaves = leaves_without({y, fv, z});
        out.normalize();
        return out;
    };

    // Case 3, matching form: z f(v,y) in M with z != y.
    for (int y = 0; y < g.n(); ++y) {
        if (g.colour(v, y) < 0) continue;
        int fv = f(v, y);
        if (fv < 0 || partner[fv] < 0) continue;
        int z = partner[fv];
        if (z == y) continue;
        return {commit_two_legs(y, fv, z), 3};
    }

    // Case 3, fresh-colour form: some z f(v,y) with a colour off S.
    for (int y = 0; y < g.n(); ++y) {
        if (g.colour(v, y) < 0) continue;
        int fv = f(v, y);
        if (fv < 0) continue;
        for (int z = 0; z < g.n(); ++z) {
            int c = g.colour(z, fv);
            if (c < 0 || star_colour[c]) continue;
            if (z == y || z == v || z == r || z == fv) continue;
            return {commit_two_legs(y, fv, z), 3};
        }
    }

    // Case 4. First y with both y and f(v,y) off V(M).
    int y4 = -1, f4 = -1;
    for (int y = 0; y < g.n() && y4 < 0; ++y) {
        if (g.colour(v, y) < 0) continue;
        int fv = f(v, y);
        if (fv < 0 || partner[y] >= 0 || partner[fv] >= 0) continue;
        y4 = y;
        f4 = fv;
    }
    if (y4 < 0)
        throw ExtensionError(
            "extend_star_one_vertex: case 4 found no y in N(v) with y and f(v,y) outside V(M) "
            "(|V(M)| = " +
            std::to_string(2 * matching.size()) + ", d(v) = " + std::to_string(g.degree(v)) +
            ")");

    // T = image of f(v, .): maps f(v,y') back to y'.
    std::vector<int> t_preimage(g.n(), -1);
    for (int y = 0; y < g.n(); ++y) {
        if (g.colour(v, y) < 0) continue;
        int fv = f(v, y);
        if (fv >= 0) t_preimage[fv] = y;
    }

    for (int z = 0; z < g.n(); ++z) {
        int c = g.colour(z, f4);
        if (c < 0 || !star_colour[c]) continue;
        if (z == v || z == r || z == y4) continue;
        int g2 = leaf_of_colour[c];  // f(f(v,y), z)
        if (g2 < 0 || partner[g2] < 0 || t_preimage[g2] < 0) continue;
        int y_prime = t_preimage[g2];
        if (partner[g2] != y_prime)
            throw InvariantBreachError(
                "extend_star_one_vertex: case-4 matching edge violates the case-3 exhaustion");
        // Disjointness and colour distinctness of the three swap edges.
        std::set<int> distinct{v, y4, f4, z, g2, y_prime};
        std::set<int> colours{g.colour(v, y4), g.colour(f4, z), g.colour(g2, y_prime)};
        if (distinct.size() != 6 || colours.size() != 3)
            throw InvariantBreachError("extend_star_one_vertex: case-4 swap ill-formed");
        Spider out;
        out.root = r;
        out.legs.emplace_back(y4, v);
        out.legs.emplace_back(z, f4);
        out.legs.emplace_back(y_prime, g2);
        out.ordinary_leaves = leaves_without({y4, f4, z, g2, y_prime});
        out.normalize();
        return {out, 4};
    }
    throw ExtensionError(
        "extend_star_one_vertex: case 4 found no z in N_S(f(v,y)) with f(f(v,y),z) in V(M) and T "
        "(y = " +
        std::to_string(y4) + ", f(v,y) = " + std::to_string(f4) + ")");
}

enum class ColourMode {
    FatOutside,  // mode (i): many heavy colours outside the star
    FewColours,  // mode (ii): few colours overall, heavy classes bounded
};

struct ExtendManyParams {
    double delta = 0.0;
    double epsilon = 0.0;
    double phi = 0.0;
    bool strict = false;
};

// Lemma-4.5 iteration: peel one missing vertex v and the heaviest colour c+
// outside S, solve the smaller instance, then fold v back in with one
// Lemma-4.4 call on the ordinary-leaf star of the smaller solution. Mode (i)
// uses the colour-c+ class as the matching; mode (ii) extracts a greedy
// rainbow matching from the off-star-coloured edges.
inline Spider extend_star_many(const ColouredGraph& g, const Spider& star, ColourMode mode,
                               const ExtendManyParams& params, int depth = 0) {
    if (star.t() != 0) throw InputError("extend_star_many: S must be a star");
    int r = star.root;
    long t = g.order() - star.order();
    if (t < 0) throw InputError("extend_star_many: star larger than graph");
    double tau = static_cast<double>(t) / g.order();

    if (params.strict) {
        std::ostringstream slack;
        bool ok = true;
        if (g.min_degree() < (1.0 - params.delta) * g.order() + 2.0 * t) {
            slack << "min degree " << g.min_degree() << " < (1-delta)|G|+2t = "
                  << (1.0 - params.delta) * g.order() + 2.0 * t << "; ";
            ok = false;
        }
        if (mode == ColourMode::FatOutside) {
            if (params.epsilon < params.delta + 19.0 * tau) {
                slack << "epsilon < delta + 19tau; ";
                ok = false;
            }
            std::vector<bool> star_colour(g.colour_count(), false);
            for (int s : star.ordinary_leaves) star_colour[g.colour(r, s)] = true;
            long outside = 0;
            for (int c = 0; c < g.colour_count(); ++c)
                if (!star_colour[c] &&
                    g.class_size(c) >= params.epsilon * g.order() + t)
                    ++outside;
            if (outside < t) {
                slack << "only " << outside << " heavy colours outside S, need " << t;
                ok = false;
            }
        } else {
            if (!(0.1 >= params.epsilon && params.epsilon >= params.phi &&
                  params.phi >= 13.0 * params.delta + 200.0 * tau)) {
                slack << "0.1 >= epsilon >= phi >= 13delta+200tau fails; ";
                ok = false;
            }
            long heavy = 0;
            for (int c = 0; c < g.colour_count(); ++c)
                if (g.class_size(c) >= params.epsilon * (g.order() - t)) ++heavy;
            if (heavy > (1.0 - params.phi) * (g.order() - t)) {
                slack << heavy << " heavy colours, cap " << (1.0 - params.phi) * (g.order() - t);
                ok = false;
            }
        }
        if (!ok) throw FeasibilityError("extend_star_many: " + slack.str());
    }

    if (t == 0) return star;

    std::vector<bool> star_colour(g.colour_count(), false);
    std::vector<bool> in_star(g.n(), false);
    in_star[r] = true;
    for (int s : star.ordinary_leaves) {
        star_colour[g.colour(r, s)] = true;
        in_star[s] = true;
    }

    int v = -1;
    for (int u : g.vertices())
        if (!in_star[u]) {
            v = u;
            break;
        }

    // Heaviest colour outside S, ties to the lowest id; may be absent.
    int cplus = -1;
    for (int c = 0; c < g.colour_count(); ++c) {
        if (star_colour[c] || g.class_size(c) == 0) continue;
        if (cplus < 0 || g.class_size(c) > g.class_size(cplus)) cplus = c;
    }

    ColouredGraph h = g;
    h.deactivate_vertex(v);
    if (cplus >= 0) h.remove_colour_class(cplus);

    Spider inner = extend_star_many(h, star, mode, params, depth + 1);
    Spider core = inner.core();
    Spider sprime = inner.ordinary_star();

    // G': the graph on V(S') + v, colours of the core removed.
    ColouredGraph gp = g;
    std::set<int> core_colours;
    for (const Edge& e : core.edges()) core_colours.insert(g.colour(e));
    for (int c : core_colours) gp.remove_colour_class(c);
    std::vector<bool> keep(g.n(), false);
    keep[v] = true;
    for (int u : sprime.vertices()) keep[u] = true;
    for (int u : g.vertices())
        if (!keep[u]) gp.deactivate_vertex(u);

    EdgeList m;
    if (mode == ColourMode::FatOutside) {
        if (cplus >= 0) m = gp.colour_class(cplus);
    } else {
        ColouredGraph off_star = gp;
        std::set<int> sprime_colours;
        for (int s : sprime.ordinary_leaves) sprime_colours.insert(g.colour(r, s));
        for (int c : sprime_colours) off_star.remove_colour_class(c);
        off_star.deactivate_vertex(r);
        off_star.deactivate_vertex(v);
        m = greedy_rainbow_matching(off_star, off_star.max_class_size());
    }

    StarExtensionResult extended;
    try {
        StarOneParams strict_params{params.delta + 12.0 * tau, params.delta + 13.0 * tau};
        extended = extend_star_one_vertex(gp, sprime, m,
                                          params.strict ? &strict_params : nullptr);
    } catch (const ExtensionError& err) {
        throw ExtensionError("extend_star_many: level " + std::to_string(depth) +
                             " (vertex " + std::to_string(v) + "): " + err.what());
    }

    return compose_spiders(core, extended.spider);
}

}  // namespace rainbow
