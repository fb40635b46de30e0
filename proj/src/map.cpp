#include "unimap/map.hpp"

#include <algorithm>
#include <deque>

namespace unimap {

namespace {

void check_permutation(const std::vector<Dart>& p, const char* name) {
    std::vector<char> seen(p.size(), 0);
    for (Dart x : p) {
        if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[x])
            throw MapError(MapErrorKind::NotPermutation, std::string(name) + " is not a permutation of the darts");
        seen[x] = 1;
    }
}

// Numbers the cycles of perm by first appearance and lays them out in CSR form.
int cycles_csr(const std::vector<Dart>& perm, std::vector<int>& id_of, std::vector<int>& start,
               std::vector<Dart>& members) {
    const int n = static_cast<int>(perm.size());
    id_of.assign(n, -1);
    start.clear();
    members.clear();
    members.reserve(n);
    int count = 0;
    for (Dart d = 0; d < n; ++d) {
        if (id_of[d] >= 0) continue;
        start.push_back(static_cast<int>(members.size()));
        Dart x = d;
        do {
            id_of[x] = count;
            members.push_back(x);
            x = perm[x];
        } while (x != d);
        ++count;
    }
    start.push_back(static_cast<int>(members.size()));
    return count;
}

}  // namespace

CombinatorialMap CombinatorialMap::build(std::vector<Dart> alpha, std::vector<Dart> sigma, Dart root) {
    if (alpha.size() != sigma.size())
        throw MapError(MapErrorKind::NotPermutation, "alpha and sigma have different sizes");
    if (alpha.empty() || alpha.size() % 2 != 0)
        throw MapError(MapErrorKind::NotInvolution, "dart count must be even and positive");
    check_permutation(alpha, "alpha");
    check_permutation(sigma, "sigma");
    const int n = static_cast<int>(alpha.size());
    for (Dart d = 0; d < n; ++d) {
        if (alpha[d] == d || alpha[alpha[d]] != d)
            throw MapError(MapErrorKind::NotInvolution,
                           "alpha is not a fixed-point-free involution at dart " + std::to_string(d));
    }
    if (root < 0 || root >= n) throw MapError(MapErrorKind::BadRoot, "root dart out of range");

    {
        std::vector<char> seen(n, 0);
        std::vector<Dart> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            Dart d = stack.back();
            stack.pop_back();
            for (Dart e : {alpha[d], sigma[d]}) {
                if (!seen[e]) {
                    seen[e] = 1;
                    ++reached;
                    stack.push_back(e);
                }
            }
        }
        if (reached != n) throw MapError(MapErrorKind::NotConnected, "alpha and sigma do not act transitively");
    }

    CombinatorialMap m;
    m.alpha_ = std::move(alpha);
    m.sigma_ = std::move(sigma);
    m.root_ = root;
    m.sigma_inv_.resize(n);
    for (Dart d = 0; d < n; ++d) m.sigma_inv_[m.sigma_[d]] = d;

    const int v = cycles_csr(m.sigma_, m.vertex_of_, m.vertex_start_, m.vertex_darts_);
    std::vector<Dart> phi(n);
    for (Dart d = 0; d < n; ++d) phi[d] = m.sigma_[m.alpha_[d]];
    const int f = cycles_csr(phi, m.face_of_, m.face_start_, m.face_darts_);
    if (v - n / 2 + f != 2)
        throw MapError(MapErrorKind::NotGenusZero,
                       "V - E + F = " + std::to_string(v - n / 2 + f) + ", expected 2");
    return m;
}

std::span<const Dart> CombinatorialMap::vertex_darts(Vertex v) const {
    return {vertex_darts_.data() + vertex_start_[v],
            static_cast<std::size_t>(vertex_start_[v + 1] - vertex_start_[v])};
}

std::span<const Dart> CombinatorialMap::face_darts(Face f) const {
    return {face_darts_.data() + face_start_[f], static_cast<std::size_t>(face_start_[f + 1] - face_start_[f])};
}

CombinatorialMap CombinatorialMap::rerooted(Dart root) const {
    if (root < 0 || root >= n_darts()) throw MapError(MapErrorKind::BadRoot, "root dart out of range");
    CombinatorialMap m = *this;
    m.root_ = root;
    return m;
}

std::vector<std::vector<Dart>> faces(const CombinatorialMap& map) {
    std::vector<std::vector<Dart>> out;
    out.reserve(map.n_faces());
    for (Face f = 0; f < map.n_faces(); ++f) {
        auto darts = map.face_darts(f);
        out.emplace_back(darts.begin(), darts.end());
    }
    return out;
}

CombinatorialMap map_from_rotations(int n_edges, const std::vector<std::vector<Dart>>& rotations, Dart root) {
    std::vector<Dart> alpha(2 * n_edges), sigma(2 * n_edges, -1);
    for (int e = 0; e < n_edges; ++e) {
        alpha[2 * e] = 2 * e + 1;
        alpha[2 * e + 1] = 2 * e;
    }
    for (const auto& rot : rotations) {
        for (std::size_t i = 0; i < rot.size(); ++i) sigma[rot[i]] = rot[(i + 1) % rot.size()];
    }
    return CombinatorialMap::build(std::move(alpha), std::move(sigma), root);
}

std::vector<int> bfs_distances(const CombinatorialMap& map, Vertex source) {
    std::vector<int> dist(map.n_vertices(), -1);
    std::vector<Vertex> queue;
    queue.reserve(map.n_vertices());
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex v = queue[head];
        for (Dart d : map.vertex_darts(v)) {
            const Vertex w = map.target(d);
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

CanonicalLabelling canonical_labelling(const CombinatorialMap& map) {
    const int n = map.n_darts();
    CanonicalLabelling lab;
    lab.order.reserve(n);
    lab.rank.assign(n, -1);
    lab.rank[map.root()] = 0;
    lab.order.push_back(map.root());
    for (std::size_t head = 0; head < lab.order.size(); ++head) {
        const Dart d = lab.order[head];
        for (Dart e : {map.alpha(d), map.sigma(d)}) {
            if (lab.rank[e] < 0) {
                lab.rank[e] = static_cast<int>(lab.order.size());
                lab.order.push_back(e);
            }
        }
    }
    lab.vertex_rank.assign(map.n_vertices(), -1);
    lab.face_rank.assign(map.n_faces(), -1);
    int nv = 0, nf = 0;
    for (Dart d : lab.order) {
        if (lab.vertex_rank[map.origin(d)] < 0) lab.vertex_rank[map.origin(d)] = nv++;
        if (lab.face_rank[map.face_of(d)] < 0) lab.face_rank[map.face_of(d)] = nf++;
    }
    return lab;
}

void CodeWriter::put(std::int64_t value) {
    auto z = static_cast<std::uint64_t>((value << 1) ^ (value >> 63));
    while (z >= 0x80) {
        bytes_.push_back(static_cast<char>((z & 0x7f) | 0x80));
        z >>= 7;
    }
    bytes_.push_back(static_cast<char>(z));
}

void write_map_code(const CombinatorialMap& map, const CanonicalLabelling& lab, CodeWriter& w) {
    w.put(map.n_darts());
    for (Dart d : lab.order) {
        w.put(lab.rank[map.alpha(d)]);
        w.put(lab.rank[map.sigma(d)]);
    }
}

std::string canonical_code(const CombinatorialMap& map) {
    CodeWriter w;
    write_map_code(map, canonical_labelling(map), w);
    return w.take();
}

}  // namespace unimap
