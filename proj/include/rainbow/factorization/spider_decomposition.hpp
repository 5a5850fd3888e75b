#pragma once

#include <set>
#include <vector>

#include "rainbow/core/spider.hpp"
#include "rainbow/factorization/triple_assignment.hpp"

namespace rainbow {

// Lemma-3.1 spider decomposition. Input graph carries every edge of K_n
// except those inside B = V \ A; the colouring is proper with n-1 colours.
// For each x in A the spider D_x is
//   D_x^1 = { z b(z,x,y) : (z,x,y) oriented }        (legs: joint b, foot z)
//   D_x^2 = { x y       : (x,y,z) oriented }         (ordinary leaves in A)
//   D_x^3 = { x b       : b in B, b != b(x,*,*) }    (ordinary leaves in B)
// giving m edge-disjoint rainbow ((m-1)/2)-spiders of order n-(m-1)/2 that
// cover A and partition E(G).
inline std::vector<Spider> spider_decomposition(const ColouredGraph& g,
                                                const std::vector<int>& a_set,
                                                const OrientedSTS& osts,
                                                TripleAssignment* assignment_out = nullptr) {
    TripleAssignment ta = assign_triple_vertices(g, a_set, osts);
    if (assignment_out) *assignment_out = ta;

    std::set<int> a_lookup(a_set.begin(), a_set.end());
    std::vector<Spider> spiders;
    spiders.reserve(a_set.size());

    for (int x : a_set) {
        Spider d;
        d.root = x;
        std::set<int> first_pos_values;  // b(x,*,*): excluded from D_x^3
        std::set<int> joints;            // b(z,x,y): carry the leg edges
        for (const Triple& t : osts.oriented) {
            if (t[0] == x) {
                first_pos_values.insert(ta.b(t[0], t[1], t[2]));
                d.ordinary_leaves.push_back(t[1]);  // D_x^2 edge x t[1]
            } else if (t[1] == x) {
                int joint = ta.b(t[0], t[1], t[2]);
                joints.insert(joint);
                d.legs.emplace_back(joint, t[0]);  // D_x^1 edge t[0]-joint
            }
        }
        for (int b = 0; b < g.n(); ++b) {
            if (a_lookup.count(b) || first_pos_values.count(b) || joints.count(b)) continue;
            d.ordinary_leaves.push_back(b);  // D_x^3 edge x-b, b not a joint
        }
        d.normalize();
        spiders.push_back(d);
    }
    return spiders;
}

}  // namespace rainbow
