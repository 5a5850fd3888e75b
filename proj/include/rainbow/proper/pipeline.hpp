#pragma once

#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rainbow/core/certificate.hpp"
#include "rainbow/core/coloured_graph.hpp"
#include "rainbow/core/errors.hpp"
#include "rainbow/iso/reshape.hpp"
#include "rainbow/matchings/matching_family.hpp"
#include "rainbow/proper/bipartite_cover.hpp"
#include "rainbow/proper/spanning_family.hpp"

namespace rainbow {

// Dimensionless fractions of n used across the proper-colouring track.
// Defaults are the paper constants; gamma and tau are derived per branch
// when left negative. strict=false keeps only the concrete per-step counts,
// which is what makes desk-scale runs possible.
struct PipelineParams {
    double alpha = 0.000001;
    double phi = 0.0005;
    double epsilon = 0.06;
    double gamma = -1.0;
    double tau = -1.0;
    double delta = 0.0006;  // reshape degree slack (Lemma 4.8)
    double mu = -1.0;       // derived inside the star extension when needed
    bool strict = true;
};

struct Theorem1Result {
    ForestCertificate certificate;
    char branch = '-';  // 'a': few light colours; 'b': few colours overall
    std::vector<char> reshape_branches;
    SpiderFamilyState family;
    std::string stage_log;
};

namespace detail {

// Shared driver; window_lo is the per-track lower bound on t_i / n (0.0007
// for the equal-shape theorem, 0.003 for the shape-list theorem).
inline Theorem1Result run_proper_pipeline(const ColouredGraph& k, const std::vector<int>& shapes,
                                          const PipelineParams& params, double window_lo) {
    int n = k.n();
    if (!k.complete() || k.order() != n)
        throw InputError("proper pipeline: input must be a complete K_n");
    if (!k.is_proper()) throw InputError("proper pipeline: colouring is not proper");

    Theorem1Result result;
    std::ostringstream log;

    long capacity = static_cast<long>(std::floor(params.alpha * n));
    int m = static_cast<int>(shapes.size());
    if (capacity < 1) {
        result.certificate.claims = {true, true, true, true, true};
        result.certificate.stage_report =
            "scale: floor(alpha*n) = 0 at n=" + std::to_string(n) +
            ", alpha=" + std::to_string(params.alpha) +
            "; the paper constants need n >= 10^6 for one spider";
        result.stage_log = result.certificate.stage_report;
        return result;
    }
    if (m == 0) {
        result.certificate.claims = {true, true, true, true, true};
        log << "empty shape list: empty certificate\n";
        result.stage_log = log.str();
        return result;
    }
    if (m > capacity)
        throw InputError("proper pipeline: " + std::to_string(m) +
                         " shapes but floor(alpha*n) = " + std::to_string(capacity));
    if (params.strict)
        for (int t : shapes)
            if (t < window_lo * n || t > 0.2 * n)
                throw FeasibilityError("proper pipeline: t_i = " + std::to_string(t) +
                                       " outside [" + std::to_string(window_lo) + "n, 0.2n]");

    // Fat colours: at least epsilon*n edges each.
    std::vector<bool> fat(k.colour_count(), false);
    long fat_count = 0;
    for (int c = 0; c < k.colour_count(); ++c)
        if (k.class_size(c) >= params.epsilon * n) {
            fat[c] = true;
            ++fat_count;
        }
    bool case_a = params.phi * n >= n - fat_count;
    result.branch = case_a ? 'a' : 'b';
    log << "branch (" << result.branch << "): |C_F| = " << fat_count << " of "
        << k.colour_count() << " colours\n";

    // Stage 1: roots, and in case (a) the Lemma-4.2 matchings.
    std::vector<int> roots;
    std::vector<EdgeList> matchings(m);
    if (case_a) {
        ColouredGraph h = k;
        for (int c = 0; c < k.colour_count(); ++c)
            if (fat[c]) h.remove_colour_class(c);
        long delta_h = std::max<long>(0, n - fat_count - 1);
        int b_h = h.max_class_size();
        MatchingFamily fam = many_rainbow_matchings(h, delta_h, b_h, m);
        roots = fam.roots;
        matchings = fam.matchings;
        log << "stage 1 (a): " << m << " matchings of size " << delta_h << ", b=" << b_h << "\n";
    } else {
        roots.resize(m);
        std::iota(roots.begin(), roots.end(), 0);
        log << "stage 1 (b): roots are vertices 0.." << m - 1 << "\n";
    }

    // Stage 2: bipartite cover on K[A, B].
    std::set<int> root_set(roots.begin(), roots.end());
    std::vector<int> b_side;
    for (int v = 0; v < n; ++v)
        if (!root_set.count(v)) b_side.push_back(v);
    ColouredGraph kab(n, k.colour_count());
    for (int r : roots)
        for (int v : b_side) kab.add_edge(r, v, k.colour(r, v));

    double delta_cover = case_a ? 4.0 * params.phi : 0.0;
    std::vector<std::set<int>> forbidden(m);
    if (case_a)
        for (int i = 0; i < m; ++i)
            for (const Edge& e : matchings[i]) {
                forbidden[i].insert(k.colour(e));
                forbidden[i].insert(k.colour(roots[i], e.u));
                forbidden[i].insert(k.colour(roots[i], e.v));
            }

    std::vector<Spider> covers = cover_bipartite(kab, roots, b_side, forbidden, delta_cover);
    log << "stage 2: " << covers.size() << " bipartite spiders, orders";
    for (const Spider& s : covers) log << ' ' << s.order();
    log << "\n";

    // Case (a) assembly: D_i^1 = D_i + M_i + {r_i x_m}, x_m the first
    // endpoint of m with c(r_i x_m) off M_i's colours.
    SpiderFamilyState family;
    for (int i = 0; i < m; ++i) {
        Spider d = covers[i];
        if (case_a && !matchings[i].empty()) {
            std::set<int> m_colours;
            for (const Edge& e : matchings[i]) m_colours.insert(k.colour(e));
            for (const Edge& e : matchings[i]) {
                int xm = -1;
                for (int p : {e.u, e.v}) {
                    int c = k.colour(roots[i], p);
                    if (xm < 0 && c >= 0 && !m_colours.count(c)) xm = p;
                }
                if (xm < 0)
                    throw InvariantBreachError(
                        "proper pipeline: matching edge without an attachable endpoint");
                d.legs.emplace_back(xm, e.other(xm));
            }
            d.normalize();
            if (!is_rainbow(k, d.edges()))
                throw InvariantBreachError("proper pipeline: D_i^1 not rainbow");
        }
        family.spiders.push_back(d);
    }
    if (!family.edge_disjoint() || !family.root_covering())
        throw InvariantBreachError("proper pipeline: stage-2 family invariants fail");

    // Stage 3: grow the family spanning.
    SpanningFamilyParams sfp;
    sfp.alpha = params.alpha;
    sfp.gamma = params.gamma >= 0 ? params.gamma
                                  : (case_a ? params.alpha + params.phi : params.alpha);
    sfp.tau = params.tau >= 0 ? params.tau
                              : (case_a ? 4.0 * params.phi + 2.0 * params.alpha
                                        : 2.0 * params.alpha);
    sfp.epsilon = params.epsilon;
    sfp.phi = params.phi;
    sfp.strict = params.strict;
    ColourMode mode = case_a ? ColourMode::FatOutside : ColourMode::FewColours;

    try {
        family = make_spanning_spiders(k, family, mode, sfp);
    } catch (const Error& err) {
        result.certificate.stage_report = std::string("stage 3 (spanning): ") + err.what();
        for (int i = 0; i < m; ++i)
            result.certificate.trees.push_back(
                {family.spiders[i].edges(), family.spiders[i].root, family.spiders[i].t()});
        result.certificate.claims = {true, true, true, true, true};
        result.family = family;
        log << result.certificate.stage_report << "\n";
        result.stage_log = log.str();
        return result;
    }
    log << "stage 3: family spanning, legs";
    for (const Spider& s : family.spiders) log << ' ' << s.t();
    log << "\n";

    // Stage 4: per-spider surgery to the requested leg counts.
    ReshapeParams rp{params.delta, params.strict};
    for (int i = 0; i < m; ++i) {
        int s_extra = shapes[i] - family.spiders[i].t();
        if (s_extra == 0) {
            result.reshape_branches.push_back('-');
            continue;
        }
        ColouredGraph residual = k;
        for (int j = 0; j < m; ++j)
            if (j != i) residual.remove_edges(family.spiders[j].edges());
        try {
            if (s_extra < 3)
                throw SurgeryError("reshape needs s >= 3 extra legs, spider has " +
                                   std::to_string(family.spiders[i].t()) + " of " +
                                   std::to_string(shapes[i]));
            ReshapeResult rr = change_spider_parameter(residual, family.spiders[i], s_extra, rp);
            family.spiders[i] = rr.spider;
            result.reshape_branches.push_back(rr.branch);
        } catch (const Error& err) {
            result.certificate.stage_report =
                "stage 4 (reshape, spider " + std::to_string(i) + "): " + err.what();
            break;
        }
    }

    result.certificate.claims = {true, true, true, true, true};
    for (int i = 0; i < m; ++i)
        result.certificate.trees.push_back(
            {family.spiders[i].edges(), family.spiders[i].root, family.spiders[i].t()});
    result.family = family;
    if (!result.certificate.stage_report.empty()) log << result.certificate.stage_report << "\n";
    log << "stage 4: reshape branches";
    for (char c : result.reshape_branches) log << ' ' << c;
    log << "\n";
    result.stage_log = log.str();
    return result;
}

}  // namespace detail

// The concluding-remarks theorem: tree i reshaped to exactly shapes[i] legs,
// window 0.003n <= t_i <= 0.2n at paper constants.
inline Theorem1Result multi_shape_pipeline(const ColouredGraph& k, const std::vector<int>& shapes,
                                           const PipelineParams& params) {
    return detail::run_proper_pipeline(k, shapes, params, 0.003);
}

// Theorem-1.4 track proper: floor(alpha*n) spiders, all with exactly t legs,
// window 0.0007n <= t <= 0.2n at paper constants.
inline Theorem1Result theorem1_pipeline(const ColouredGraph& k, int t,
                                        const PipelineParams& params) {
    long capacity = static_cast<long>(std::floor(params.alpha * k.n()));
    std::vector<int> shapes(std::max<long>(capacity, 0), t);
    return detail::run_proper_pipeline(k, shapes, params, 0.0007);
}

}  // namespace rainbow
