#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rainbow/core/coloured_graph.hpp"
#include "rainbow/core/errors.hpp"
#include "rainbow/core/spider.hpp"

namespace rainbow {

// Lemma-4.3 bipartite spider cover. kab must contain exactly the A-B edges of
// a properly coloured complete bipartite graph on roots x B. Produces one
// (a-1)-spider per root r_i: the legs run r_i - b_{i,j} - r_j, so every
// spider covers all of A; S_i avoids the colour set F_i entirely and has
// order at least (1-delta)|B| - a + 1.
//
// The b_{i,j} are chosen lexicographically under a colour-avoidance rule that
// keeps the colour pair of every chosen (i,j) disjoint from the colour pairs
// of all earlier pairs sharing an index; that forces the vertex distinctness
// the proof needs (b_{i,j}, b_{i,k}, b_{j,i}, b_{k,j} all distinct) and makes
// each S_i^2 rainbow.
inline std::vector<Spider> cover_bipartite(const ColouredGraph& kab,
                                           const std::vector<int>& roots,
                                           const std::vector<int>& b_side,
                                           const std::vector<std::set<int>>& forbidden,
                                           double delta) {
    int a = static_cast<int>(roots.size());
    long b = static_cast<long>(b_side.size());
    if (forbidden.size() != static_cast<size_t>(a))
        throw InputError("cover_bipartite: need one colour set per root");
    {
        std::ostringstream slack;
        bool ok = true;
        if ((1.0 - 2.0 * delta) * b < 8.0 * a) {
            slack << "(1-2delta)|B| = " << (1.0 - 2.0 * delta) * b << " < 8a = " << 8 * a << "; ";
            ok = false;
        }
        for (int i = 0; i < a; ++i)
            if (forbidden[i].size() > delta * b) {
                slack << "|F_" << i << "| = " << forbidden[i].size() << " > delta*|B| = "
                      << delta * b;
                ok = false;
                break;
            }
        if (!ok) throw FeasibilityError("cover_bipartite: " + slack.str());
    }

    // used_colours[r]: colours of every chosen pair involving r.
    std::map<int, std::set<int>> used_colours;
    std::map<std::pair<int, int>, int> chosen;  // (i,j) -> b_{i,j}

    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < a; ++j) {
            if (i == j) continue;
            int ri = roots[i], rj = roots[j];
            int pick = -1;
            for (int cand : b_side) {
                int ci = kab.colour(ri, cand);
                int cj = kab.colour(rj, cand);
                if (ci < 0 || cj < 0) continue;
                if (forbidden[i].count(ci) || forbidden[i].count(cj)) continue;
                bool clash = false;
                for (int c : {ci, cj})
                    if (used_colours[i].count(c) || used_colours[j].count(c)) clash = true;
                if (clash) continue;
                pick = cand;
                break;
            }
            if (pick < 0)
                throw InvariantBreachError("cover_bipartite: no admissible b_{i,j} for (" +
                                           std::to_string(i) + "," + std::to_string(j) + ")");
            chosen[{i, j}] = pick;
            int ci = kab.colour(ri, pick);
            int cj = kab.colour(rj, pick);
            for (int idx : {i, j}) {
                used_colours[idx].insert(ci);
                used_colours[idx].insert(cj);
            }
        }
    }

    std::vector<Spider> out;
    out.reserve(a);
    for (int i = 0; i < a; ++i) {
        Spider s;
        s.root = roots[i];
        std::set<int> reserved;  // b_{i,*} and b_{*,i}: never ordinary leaves of S_i
        std::set<int> s2_colours;
        for (int j = 0; j < a; ++j) {
            if (i == j) continue;
            int bij = chosen[{i, j}];
            s.legs.emplace_back(bij, roots[j]);
            reserved.insert(bij);
            reserved.insert(chosen[{j, i}]);
            s2_colours.insert(kab.colour(roots[j], bij));
        }
        for (int cand : b_side) {
            int c = kab.colour(roots[i], cand);
            if (c < 0 || reserved.count(cand)) continue;
            if (forbidden[i].count(c)) continue;
            if (s2_colours.count(c)) continue;  // the hat-S_i^3 deletion
            s.ordinary_leaves.push_back(cand);
        }
        s.normalize();
        out.push_back(s);
    }
    return out;
}

}  // namespace rainbow
