#include "unimap/brute_force.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

namespace unimap {

Budget::Budget() : start_(std::chrono::steady_clock::now()) {
    if (const char* env = std::getenv("UNIMAP_BUDGET_MS")) limit_ms_ = std::strtol(env, nullptr, 10);
}

Budget::Budget(std::optional<long> limit_ms) : start_(std::chrono::steady_clock::now()), limit_ms_(limit_ms) {}

void Budget::check() const {
    if (!limit_ms_) return;
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    if (elapsed > *limit_ms_)
        throw BudgetExceeded("brute force exceeded " + std::to_string(*limit_ms_) + " ms");
}

namespace {

int count_cycles(const std::vector<Dart>& perm, std::vector<char>& seen) {
    std::fill(seen.begin(), seen.end(), 0);
    int c = 0;
    for (std::size_t d = 0; d < perm.size(); ++d) {
        if (seen[d]) continue;
        ++c;
        for (Dart x = static_cast<Dart>(d); !seen[x]; x = perm[x]) seen[x] = 1;
    }
    return c;
}

// Keeps one rooted map per class, trying every root of every unrooted map.
void add_all_rootings(const CombinatorialMap& m, std::set<std::string>& seen, std::vector<CombinatorialMap>& out) {
    for (Dart r = 0; r < m.n_darts(); ++r) {
        CombinatorialMap rooted = m.rerooted(r);
        if (seen.insert(canonical_code(rooted)).second) out.push_back(std::move(rooted));
    }
}

}  // namespace

std::vector<CombinatorialMap> brute_force_rooted_maps(int n_edges, int n_faces, const Budget& budget) {
    if (n_edges < 1 || n_edges > 5) throw BudgetExceeded("rotation enumeration is limited to 1..5 edges");
    const int n = 2 * n_edges;
    std::vector<Dart> alpha(n), sigma(n), phi(n);
    for (int d = 0; d < n; ++d) alpha[d] = d ^ 1;
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<char> scratch(n);
    std::set<std::string> seen;
    std::vector<CombinatorialMap> out;
    long iter = 0;
    do {
        if ((iter++ & 0xffff) == 0) budget.check();
        const int v = count_cycles(sigma, scratch);
        for (int d = 0; d < n; ++d) phi[d] = sigma[alpha[d]];
        const int f = count_cycles(phi, scratch);
        if (f != n_faces || v - n_edges + f != 2) continue;
        try {
            add_all_rootings(CombinatorialMap::build(alpha, sigma, 0), seen, out);
        } catch (const MapError&) {
            // disconnected
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

namespace {

void glue_sides(std::vector<Dart>& alpha, int n, const Budget& budget, long& iter, std::set<std::string>& seen,
                std::vector<CombinatorialMap>& out) {
    const auto free = std::find(alpha.begin(), alpha.end(), -1);
    if (free == alpha.end()) {
        if ((iter++ & 0xfff) == 0) budget.check();
        std::vector<Dart> sigma(n);
        for (int d = 0; d < n; ++d) {
            const Dart a = alpha[d];
            sigma[d] = (a & ~3) | ((a + 1) & 3);
        }
        std::vector<char> scratch(n);
        const int v = count_cycles(sigma, scratch);
        if (v - n / 2 + n / 4 != 2) return;
        try {
            add_all_rootings(CombinatorialMap::build(alpha, std::move(sigma), 0), seen, out);
        } catch (const MapError&) {
        }
        return;
    }
    const Dart d = static_cast<Dart>(free - alpha.begin());
    for (Dart e = d + 1; e < n; ++e) {
        if (alpha[e] != -1) continue;
        alpha[d] = e;
        alpha[e] = d;
        glue_sides(alpha, n, budget, iter, seen, out);
        alpha[d] = alpha[e] = -1;
    }
}

}  // namespace

std::vector<CombinatorialMap> brute_force_quadrangulations(int n_faces, const Budget& budget) {
    if (n_faces < 1 || n_faces > 4) throw BudgetExceeded("square gluing is limited to 1..4 faces");
    const int n = 4 * n_faces;
    std::vector<Dart> alpha(n, -1);
    std::set<std::string> seen;
    std::vector<CombinatorialMap> out;
    long iter = 0;
    glue_sides(alpha, n, budget, iter, seen, out);
    return out;
}

std::vector<std::vector<int>> well_labellings(const CombinatorialMap& map) {
    const int nv = map.n_vertices();
    std::vector<Vertex> order{map.root_vertex()};
    std::vector<Vertex> parent(nv, -1);
    std::vector<char> seen(nv, 0);
    seen[order[0]] = 1;
    for (std::size_t h = 0; h < order.size(); ++h) {
        for (Dart d : map.vertex_darts(order[h])) {
            const Vertex w = map.target(d);
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = order[h];
                order.push_back(w);
            }
        }
    }
    std::vector<std::vector<int>> out;
    std::vector<int> lab(nv, 0);
    std::vector<int> step(nv, -1);
    // Odometer over the steps of the non-root vertices in breadth-first order.
    while (true) {
        for (int i = 1; i < nv; ++i) lab[order[i]] = lab[parent[order[i]]] + step[order[i]];
        bool ok = true;
        for (Dart d = 0; d < map.n_darts() && ok; ++d)
            ok = std::abs(lab[map.origin(d)] - lab[map.target(d)]) <= 1;
        if (ok) out.push_back(lab);
        int i = nv - 1;
        while (i >= 1 && step[order[i]] == 1) step[order[i--]] = -1;
        if (i < 1) break;
        ++step[order[i]];
    }
    return out;
}

std::vector<LabelledUnicycle> brute_force_unicycles(int n, const Budget& budget) {
    std::vector<LabelledUnicycle> out;
    for (const CombinatorialMap& m : brute_force_rooted_maps(n, 2, budget)) {
        for (const auto& lab : well_labellings(m)) {
            for (Face f : {0, 1}) out.push_back(LabelledUnicycle::make(m, lab, f));
        }
    }
    return out;
}

std::vector<MarkedUnicycle> brute_force_marked_unicycles(int n, const Budget& budget) {
    std::set<std::string> seen;
    std::vector<MarkedUnicycle> out;
    for (const LabelledUnicycle& u : brute_force_unicycles(n, budget)) {
        for (Dart d = 0; d < u.map.n_darts(); ++d) {
            if (!u.on_cycle(d) || u.map.face_of(d) != u.external_face()) continue;
            MarkedUnicycle m = MarkedUnicycle::mark(u, d);
            if (seen.insert(canonical_code(m.unicycle)).second) out.push_back(std::move(m));
        }
    }
    return out;
}

std::vector<Vertebrate> brute_force_vertebrates(int n, const Budget& budget) {
    std::set<std::string> seen;
    std::vector<Vertebrate> out;
    for (const CombinatorialMap& t : brute_force_rooted_maps(n, 1, budget)) {
        const int nv = t.n_vertices();
        for (Vertex rho = 0; rho < nv; ++rho) {
            const CombinatorialMap rooted = t.rerooted(t.vertex_darts(rho).front());
            for (const auto& lab : well_labellings(rooted)) {
                for (Vertex rb = 0; rb < nv; ++rb) {
                    if (rb == rho || lab[rb] != 0) continue;
                    Vertebrate v = Vertebrate::make(t, lab, rho, rb);
                    if (seen.insert(canonical_code(v)).second) out.push_back(std::move(v));
                }
            }
        }
    }
    return out;
}

std::vector<DelayedQuadrangulation> brute_force_delayed_quadrangulations(int n, const Budget& budget) {
    std::set<std::string> seen;
    std::vector<DelayedQuadrangulation> out;
    for (const CombinatorialMap& q : brute_force_quadrangulations(n, budget)) {
        for (Vertex a = 0; a < q.n_vertices(); ++a) {
            const std::vector<int> dist = bfs_distances(q, a);
            for (Vertex b = 0; b < q.n_vertices(); ++b) {
                if (b == a) continue;
                for (int delay : admissible_delays(dist[b])) {
                    DelayedQuadrangulation dq = DelayedQuadrangulation::make(q, a, b, delay);
                    if (seen.insert(canonical_code(dq)).second) out.push_back(std::move(dq));
                }
            }
        }
    }
    return out;
}

}  // namespace unimap
