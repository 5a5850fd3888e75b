#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rainbow/core/coloured_graph.hpp"
#include "rainbow/core/errors.hpp"
#include "rainbow/gen/steiner.hpp"

namespace rainbow {

// Assignment of a host vertex b(x,y,z) in B to every oriented triple, with
// the colour realizing it. The three rotations of one triple share one
// colour: c(x b(x,y,z)) = c(y b(y,z,x)) = c(z b(z,x,y)).
struct TripleAssignment {
    std::map<Triple, int> vertex_of;  // oriented triple -> b(x,y,z)
    std::map<Triple, int> colour_of;  // oriented triple -> shared colour

    int b(int x, int y, int z) const {
        auto it = vertex_of.find({x, y, z});
        return it == vertex_of.end() ? -1 : it->second;
    }
};

// Builds the assignment by scanning triples in lexicographic order and taking
// the least colour c whose three vertices v(x,c), v(y,c), v(z,c) all land in
// B and avoid every previously assigned value at the constrained positions:
// b(x,y,z) must differ from all earlier b(x,*,*), b(*,x,*), b(y,*,*), b(*,y,*).
//
// Preconditions: every edge at every vertex of A exists, colouring proper
// with n-1 colours (so v(x,c) is total on A), and n > 9m.
inline TripleAssignment assign_triple_vertices(const ColouredGraph& g,
                                               const std::vector<int>& a_set,
                                               const OrientedSTS& osts) {
    int n = g.n();
    int m = static_cast<int>(a_set.size());
    if (osts.base.m != m)
        throw InputError("assign_triple_vertices: STS point count differs from |A|");
    if (n <= 9 * m)
        throw FeasibilityError("assign_triple_vertices: needs n > 9m, got n=" +
                               std::to_string(n) + ", m=" + std::to_string(m));
    if (g.colour_count() != n - 1)
        throw InputError("assign_triple_vertices: expects exactly n-1 colours");

    std::set<int> a_lookup(a_set.begin(), a_set.end());

    // v(x, c): unique neighbour of x along colour c; total at vertices of A.
    std::map<int, std::vector<int>> v_of;
    for (int x : a_set) {
        std::vector<int> row(g.colour_count(), -1);
        for (int u = 0; u < n; ++u) {
            int c = g.colour(x, u);
            if (c >= 0) row[c] = u;
        }
        for (int c = 0; c < g.colour_count(); ++c)
            if (row[c] < 0)
                throw InputError("assign_triple_vertices: colour " + std::to_string(c) +
                                 " missing at vertex " + std::to_string(x));
        v_of[x] = std::move(row);
    }

    // first_pos[w] / mid_pos[w]: previously assigned b-values of triples with
    // w in first / middle position; the exclusion sets of Claim 3.2 (iii).
    std::map<int, std::set<int>> first_pos, mid_pos;

    TripleAssignment out;
    std::vector<Triple> reps;
    for (const Triple& base : osts.base.triples) {
        Triple rep{base[0], base[1], base[2]};
        if (!osts.contains(rep[0], rep[1], rep[2])) rep = {base[0], base[2], base[1]};
        if (!osts.contains(rep[0], rep[1], rep[2]))
            throw InputError("assign_triple_vertices: orientation missing a triple");
        reps.push_back(rep);
    }
    std::sort(reps.begin(), reps.end());

    for (const Triple& rep : reps) {
        std::array<Triple, 3> rotations = {Triple{rep[0], rep[1], rep[2]},
                                           Triple{rep[1], rep[2], rep[0]},
                                           Triple{rep[2], rep[0], rep[1]}};
        int chosen = -1;
        for (int c = 0; c < g.colour_count() && chosen < 0; ++c) {
            bool ok = true;
            for (const Triple& rot : rotations) {
                int cand = v_of[rot[0]][c];
                if (a_lookup.count(cand)) {
                    ok = false;  // (ii): must land in B
                    break;
                }
                // (iii): avoid first/middle-position values of both the first
                // and the second element of the rotation.
                for (int w : {rot[0], rot[1]}) {
                    if (first_pos[w].count(cand) || mid_pos[w].count(cand)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
            }
            if (ok) chosen = c;
        }
        if (chosen < 0)
            throw InvariantBreachError("assign_triple_vertices: no admissible colour for triple " +
                                       std::to_string(rep[0]) + "," + std::to_string(rep[1]) +
                                       "," + std::to_string(rep[2]));
        for (const Triple& rot : rotations) {
            int cand = v_of[rot[0]][chosen];
            out.vertex_of[rot] = cand;
            out.colour_of[rot] = chosen;
            first_pos[rot[0]].insert(cand);
            mid_pos[rot[1]].insert(cand);
        }
    }
    return out;
}

// Claim 3.2 (i)-(iii) rechecked from scratch.
inline bool check_triple_assignment(const ColouredGraph& g, const std::vector<int>& a_set,
                                    const OrientedSTS& osts, const TripleAssignment& ta) {
    std::set<int> a_lookup(a_set.begin(), a_set.end());
    for (const Triple& t : osts.oriented) {
        int b1 = ta.b(t[0], t[1], t[2]);
        int b2 = ta.b(t[1], t[2], t[0]);
        int b3 = ta.b(t[2], t[0], t[1]);
        if (b1 < 0 || b2 < 0 || b3 < 0) return false;
        if (a_lookup.count(b1)) return false;
        int c1 = g.colour(t[0], b1);
        if (c1 < 0 || c1 != g.colour(t[1], b2) || c1 != g.colour(t[2], b3)) return false;
        for (const Triple& u : osts.oriented) {
            if (u == t) continue;
            int bu = ta.b(u[0], u[1], u[2]);
            if ((u[0] == t[0] || u[1] == t[0] || u[0] == t[1] || u[1] == t[1]) && bu == b1)
                return false;
        }
    }
    return true;
}

}  // namespace rainbow
