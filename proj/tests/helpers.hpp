#pragma once

#include <numeric>
#include <vector>

#include "unimap/map.hpp"

namespace unimap::test {

inline CombinatorialMap loop_map() { return CombinatorialMap::build({1, 0}, {1, 0}, 0); }

// Path v1 - r - v2: edge 0 = darts 0 (r->v1), 1; edge 1 = darts 2 (r->v2), 3.
inline CombinatorialMap path_map() { return CombinatorialMap::build({1, 0, 3, 2}, {2, 1, 0, 3}, 0); }

// Conjugates alpha and sigma by a permutation of the darts.
inline CombinatorialMap relabelled(const CombinatorialMap& m, const std::vector<Dart>& p) {
    const int n = m.n_darts();
    std::vector<Dart> a(n), s(n);
    for (Dart d = 0; d < n; ++d) {
        a[p[d]] = p[m.alpha(d)];
        s[p[d]] = p[m.sigma(d)];
    }
    return CombinatorialMap::build(a, s, p[m.root()]);
}

}  // namespace unimap::test
