#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "rainbow/core/errors.hpp"
#include "rainbow/gen/prng.hpp"

namespace rainbow {

using Triple = std::array<int, 3>;

// Steiner triple system: every pair of the m points lies in exactly one
// triple. Exists iff m = 1 or 3 (mod 6).
struct SteinerTripleSystem {
    int m = 0;
    std::vector<Triple> triples;  // each sorted ascending, list sorted

    bool covers_every_pair_once() const {
        std::set<std::pair<int, int>> seen;
        for (const Triple& t : triples)
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    if (!seen.insert({t[i], t[j]}).second) return false;
        return seen.size() == static_cast<size_t>(m) * (m - 1) / 2;
    }
};

// One cyclic orientation chosen per triple: either the orbit of (x,y,z) or
// of (x,z,y), never both.
struct OrientedSTS {
    SteinerTripleSystem base;
    std::vector<Triple> oriented;  // all 3 rotations of the chosen orbit, per triple

    bool contains(int x, int y, int z) const {
        for (const Triple& t : oriented)
            if (t[0] == x && t[1] == y && t[2] == z) return true;
        return false;
    }
};

namespace detail {

// Idempotent commutative quasigroup on Z_{2k+1}: x*y = (x+y)(k+1) mod 2k+1.
inline int bose_quasigroup(int x, int y, int k) {
    return static_cast<int>((static_cast<long>(x + y) * (k + 1)) % (2 * k + 1));
}

// Half-idempotent commutative quasigroup on Z_{2k}: relabel the group table
// of Z_{2k} so the diagonal becomes x mod k. sigma maps evens to 0..k-1 and
// odds to k..2k-1.
inline int skolem_quasigroup(int x, int y, int k) {
    int s = (x + y) % (2 * k);
    return s % 2 == 0 ? s / 2 : k + (s - 1) / 2;
}

}  // namespace detail

// Bose construction for m = 3 (mod 6), Skolem construction for m = 1 (mod 6).
// Point (i, level) has id 3*i + level; the Skolem infinity point is m - 1.
inline SteinerTripleSystem steiner_triple_system(int m) {
    if (m < 1 || (m % 6 != 1 && m % 6 != 3))
        throw ExistenceError("steiner_triple_system: requires m = 1 or 3 (mod 6), got m=" +
                             std::to_string(m));
    SteinerTripleSystem sts;
    sts.m = m;
    auto add = [&sts](int a, int b, int c) {
        Triple t{a, b, c};
        std::sort(t.begin(), t.end());
        sts.triples.push_back(t);
    };

    if (m == 1) return sts;

    if (m % 6 == 3) {
        int k = (m - 3) / 6;
        int q = 2 * k + 1;
        auto id = [](int i, int level) { return 3 * i + level; };
        for (int i = 0; i < q; ++i) add(id(i, 0), id(i, 1), id(i, 2));
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j)
                for (int level = 0; level < 3; ++level)
                    add(id(i, level), id(j, level),
                        id(detail::bose_quasigroup(i, j, k), (level + 1) % 3));
    } else {
        int k = (m - 1) / 6;
        int q = 2 * k;
        int infinity = m - 1;
        auto id = [](int i, int level) { return 3 * i + level; };
        for (int i = 0; i < k; ++i) add(id(i, 0), id(i, 1), id(i, 2));
        for (int i = 0; i < k; ++i)
            for (int level = 0; level < 3; ++level)
                add(infinity, id(k + i, level), id(i, (level + 1) % 3));
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j)
                for (int level = 0; level < 3; ++level)
                    add(id(i, level), id(j, level),
                        id(detail::skolem_quasigroup(i, j, k), (level + 1) % 3));
    }
    std::sort(sts.triples.begin(), sts.triples.end());
    return sts;
}

// Chooses one cyclic orbit per triple by seeded coin and materializes all
// three rotations of it.
inline OrientedSTS orient_sts(const SteinerTripleSystem& sts, uint64_t seed) {
    OrientedSTS out;
    out.base = sts;
    SplitMix64 rng(seed);
    for (const Triple& t : sts.triples) {
        Triple rep = rng.next_bool() ? Triple{t[0], t[1], t[2]} : Triple{t[0], t[2], t[1]};
        out.oriented.push_back(rep);
        out.oriented.push_back({rep[1], rep[2], rep[0]});
        out.oriented.push_back({rep[2], rep[0], rep[1]});
    }
    return out;
}

}  // namespace rainbow
