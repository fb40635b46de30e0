#include "unimap/bijections.hpp"

#include <algorithm>
#include <cstdlib>

namespace unimap {

std::vector<int> admissible_delays(int dist) {
    std::vector<int> out;
    for (int d = -dist + 1; d < dist; ++d) {
        if (is_admissible_delay(d, dist)) out.push_back(d);
    }
    return out;
}

bool is_quadrangulation(const CombinatorialMap& map) {
    for (Face f = 0; f < map.n_faces(); ++f) {
        if (map.face_degree(f) != 4) return false;
    }
    return true;
}

DelayedQuadrangulation DelayedQuadrangulation::make(CombinatorialMap map, Vertex v0, Vertex v1, int delay) {
    if (!is_quadrangulation(map)) throw BijectionError("not a quadrangulation");
    if (v0 == v1) throw BijectionError("marked vertices must be distinct");
    const int dist = bfs_distances(map, v0)[v1];
    if (!is_admissible_delay(delay, dist))
        throw BijectionError("delay " + std::to_string(delay) + " not admissible at distance " + std::to_string(dist));
    return DelayedQuadrangulation{std::move(map), v0, v1, delay};
}

std::string canonical_code(const DelayedQuadrangulation& q) {
    const CanonicalLabelling lab = canonical_labelling(q.map);
    CodeWriter w;
    write_map_code(q.map, lab, w);
    w.put(lab.vertex_rank[q.v0]);
    w.put(lab.vertex_rank[q.v1]);
    w.put(q.delay);
    return w.take();
}

namespace {

// Collects new edges and the counterclockwise dart lists around new vertices
// and inside old corners. Darts 2i and 2i+1 form edge i; the first dart of an
// arc sits on the corner side.
struct ArcBuilder {
    int n_edges = 0;
    std::vector<int> label_of_dart;

    std::pair<Dart, Dart> edge(int tail_label, int head_label) {
        const Dart t = 2 * n_edges++;
        label_of_dart.push_back(tail_label);
        label_of_dart.push_back(head_label);
        return {t, t + 1};
    }
};

// Positions of the successor of each corner of a cyclic sequence (first later
// corner, cyclically, with label one less), or -1 if none.
std::vector<int> cyclic_successors(const std::vector<int>& lab) {
    const int m = static_cast<int>(lab.size());
    const auto [lo, hi] = std::minmax_element(lab.begin(), lab.end());
    const int base = *lo;
    std::vector<int> next(*hi - base + 1, -1);
    std::vector<int> succ(m, -1);
    for (int p = 2 * m - 1; p >= 0; --p) {
        const int i = p % m;
        if (p < m && lab[i] > base) succ[i] = next[lab[i] - 1 - base] % m;
        next[lab[i] - base] = p;
    }
    return succ;
}

std::vector<int> linear_successors(const std::vector<int>& lab) {
    const int m = static_cast<int>(lab.size());
    const auto [lo, hi] = std::minmax_element(lab.begin(), lab.end());
    const int base = *lo;
    std::vector<int> next(*hi - base + 1, -1);
    std::vector<int> succ(m, -1);
    for (int i = m - 1; i >= 0; --i) {
        if (lab[i] > base) succ[i] = next[lab[i] - 1 - base];
        next[lab[i] - base] = i;
    }
    return succ;
}

// One face of a unicycle: arcs to successors, or to a new sink vertex.
// Appends the arcs of corner c to slots[c] and returns the sink rotation.
std::vector<Dart> build_cyclic_face(const LabelledUnicycle& u, Dart start, ArcBuilder& b,
                                    std::vector<std::vector<Dart>>& slots, std::vector<Dart>& tail_of) {
    std::vector<Dart> corners;
    for (Dart c = start;;) {
        corners.push_back(c);
        c = u.map.next_corner(c);
        if (c == start) break;
    }
    const int m = static_cast<int>(corners.size());
    std::vector<int> lab(m);
    for (int i = 0; i < m; ++i) lab[i] = u.corner_label(corners[i]);
    const int sink_label = *std::min_element(lab.begin(), lab.end()) - 1;
    const std::vector<int> succ = cyclic_successors(lab);

    std::vector<std::vector<std::pair<int, Dart>>> incoming(m);
    std::vector<Dart> sink;
    std::vector<Dart> tails(m);
    for (int i = 0; i < m; ++i) {
        const int head_label = succ[i] >= 0 ? lab[succ[i]] : sink_label;
        const auto [t, h] = b.edge(lab[i], head_label);
        tails[i] = t;
        tail_of[corners[i]] = t;
        if (succ[i] >= 0)
            incoming[succ[i]].emplace_back((succ[i] - i + m) % m, h);
        else
            sink.push_back(h);
    }
    for (int j = 0; j < m; ++j) {
        auto& in = incoming[j];
        std::sort(in.begin(), in.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
        auto& slot = slots[corners[j]];
        slot.push_back(tails[j]);
        for (const auto& [dist, h] : in) slot.push_back(h);
    }
    return sink;
}

}  // namespace

DelayedQuadrangulation cvs_unicycle(const LabelledUnicycle& u, int orientation) {
    return cvs_unicycle_traced(u, orientation).quad;
}

CvsTrace cvs_unicycle_traced(const LabelledUnicycle& u, int orientation) {
    if (orientation != 0 && orientation != 1) throw BijectionError("orientation must be 0 or 1");
    if (u.map.n_faces() != 2) throw BijectionError("InvalidUnicycle: two faces required");
    const CombinatorialMap& m = u.map;
    const Dart root = m.root();
    const Face root_face = m.corner_face(root);

    ArcBuilder b;
    std::vector<std::vector<Dart>> slots(m.n_darts());
    std::vector<Dart> tail_of(m.n_darts(), -1);

    // External face walk starts at the root corner when the root corner lies
    // there; the internal walk starts at its first cycle corner in sigma order.
    auto face_start = [&](Face f) -> Dart {
        if (root_face == f) return root;
        for (Dart d : m.vertex_darts(m.root_vertex())) {
            if (m.corner_face(d) == f && u.on_cycle(d)) return d;
        }
        for (Dart c = 0; c < m.n_darts(); ++c) {
            if (m.corner_face(c) == f) return c;
        }
        return 0;
    };
    const Face ext = u.external_face();
    const Face in = u.internal_face;
    std::vector<Dart> sink_ext = build_cyclic_face(u, face_start(ext), b, slots, tail_of);
    std::vector<Dart> sink_in = build_cyclic_face(u, face_start(in), b, slots, tail_of);

    std::vector<std::vector<Dart>> rotations;
    rotations.reserve(m.n_vertices() + 2);
    for (Vertex v = 0; v < m.n_vertices(); ++v) {
        std::vector<Dart> rot;
        for (Dart c : m.vertex_darts(v)) rot.insert(rot.end(), slots[c].begin(), slots[c].end());
        rotations.push_back(std::move(rot));
    }
    rotations.push_back(sink_ext);
    rotations.push_back(sink_in);

    const Dart arc = tail_of[root];
    const Dart new_root = orientation == 0 ? arc : arc + 1;
    CombinatorialMap q = map_from_rotations(b.n_edges, rotations, new_root);
    const Vertex v0 = q.origin(sink_ext.front());
    const Vertex v1 = q.origin(sink_in.front());
    const int delay = b.label_of_dart[sink_in.front()] - b.label_of_dart[sink_ext.front()];
    CvsTrace t;
    t.labels = labels_from_darts(q, b.label_of_dart);
    for (Vertex v = 0; v < m.n_vertices(); ++v) t.image.push_back(q.origin(rotations[v].front()));
    t.quad = DelayedQuadrangulation::make(std::move(q), v0, v1, delay);
    return t;
}

namespace {

// One half of a vertebrate: corners run from start to end (linear), arcs go
// to successors or to the shuttle chain hanging at the end corner.
struct HalfResult {
    std::vector<std::vector<Dart>> corner_arcs;  // per position, ccw
    std::vector<std::vector<Dart>> shuttle_rot;  // xi_1..xi_K rotations
    Dart shuttle_base = -1;                      // dart xi_0 -> xi_1
    std::vector<Dart> shuttle_darts;             // xi_i -> xi_{i+1}
    std::vector<Dart> geodesic_darts;            // leftmost geodesic from position 0
    std::vector<int> geodesic_positions;
    std::vector<Dart> tails;                     // per position, -1 at the end
    int min_label = 0;                           // l_*
};

HalfResult build_half(const std::vector<int>& lab, ArcBuilder& b) {
    const int last = static_cast<int>(lab.size()) - 1;
    HalfResult r;
    r.min_label = *std::min_element(lab.begin(), lab.end()) - 1;
    const int end_label = lab[last];
    const int k = end_label - r.min_label;

    // Shuttle chain xi_0 (= end vertex) ... xi_k (= v_star), xi_i labelled end_label - i.
    std::vector<Dart> up(k), down(k + 1, -1);
    for (int i = 0; i < k; ++i) {
        const auto [t, h] = b.edge(end_label - i, end_label - i - 1);
        up[i] = t;
        down[i + 1] = h;
    }
    r.shuttle_darts = up;
    r.shuttle_base = up[0];

    const std::vector<int> succ = linear_successors(lab);
    std::vector<std::vector<Dart>> incoming(last + 1);
    std::vector<std::vector<Dart>> into_shuttle(k + 1);
    r.tails.assign(last + 1, -1);
    for (int i = 0; i < last; ++i) {
        if (succ[i] >= 0) {
            const auto [t, h] = b.edge(lab[i], lab[succ[i]]);
            r.tails[i] = t;
            incoming[succ[i]].push_back(h);
        } else {
            const int idx = end_label - lab[i] + 1;
            const auto [t, h] = b.edge(lab[i], lab[i] - 1);
            r.tails[i] = t;
            into_shuttle[idx].push_back(h);
        }
    }
    r.corner_arcs.resize(last + 1);
    for (int j = 0; j <= last; ++j) {
        auto& slot = r.corner_arcs[j];
        slot.push_back(j < last ? r.tails[j] : up[0]);
        slot.insert(slot.end(), incoming[j].begin(), incoming[j].end());
    }
    r.shuttle_rot.resize(k);
    for (int i = 1; i <= k; ++i) {
        auto& rot = r.shuttle_rot[i - 1];
        if (i < k) rot.push_back(up[i]);
        rot.insert(rot.end(), into_shuttle[i].begin(), into_shuttle[i].end());
        rot.push_back(down[i]);
    }

    // Leftmost geodesic: successor chain from position 0 until the shuttle.
    int p = 0;
    while (true) {
        r.geodesic_positions.push_back(p);
        r.geodesic_darts.push_back(r.tails[p]);
        if (succ[p] < 0) break;
        p = succ[p];
    }
    return r;
}

}  // namespace

QuadrilateralGS cvs_vertebrate(const Vertebrate& v) {
    if (v.tilt() != 0) throw StructureError(StructureErrorKind::TiltNonZero, "cvs_vertebrate requires tilt 0");
    const CombinatorialMap& t = v.tree;
    const std::vector<Dart> up_c = v.upper_corners();
    const std::vector<Dart> lo_c = v.lower_corners();
    auto labels_of = [&](const std::vector<Dart>& cs) {
        std::vector<int> l(cs.size());
        for (std::size_t i = 0; i < cs.size(); ++i) l[i] = v.labels[t.origin(cs[i])];
        return l;
    };

    ArcBuilder b;
    HalfResult upper = build_half(labels_of(up_c), b);
    HalfResult lower = build_half(labels_of(lo_c), b);

    std::vector<std::vector<Dart>> upper_slot(t.n_darts()), lower_slot(t.n_darts());
    for (std::size_t i = 0; i < up_c.size(); ++i) {
        auto& s = upper_slot[up_c[i]];
        s.insert(s.end(), upper.corner_arcs[i].begin(), upper.corner_arcs[i].end());
    }
    for (std::size_t i = 0; i < lo_c.size(); ++i) {
        auto& s = lower_slot[lo_c[i]];
        s.insert(s.end(), lower.corner_arcs[i].begin(), lower.corner_arcs[i].end());
    }

    const Dart rho_bar_outer = v.rho_bar_outer_corner();
    std::vector<std::vector<Dart>> rotations;
    for (Vertex x = 0; x < t.n_vertices(); ++x) {
        std::vector<Dart> rot;
        for (Dart c : t.vertex_darts(x)) {
            const auto& first = c == rho_bar_outer ? lower_slot[c] : upper_slot[c];
            const auto& second = c == rho_bar_outer ? upper_slot[c] : lower_slot[c];
            rot.insert(rot.end(), first.begin(), first.end());
            rot.insert(rot.end(), second.begin(), second.end());
        }
        rotations.push_back(std::move(rot));
    }
    for (auto& rot : upper.shuttle_rot) rotations.push_back(rot);
    for (auto& rot : lower.shuttle_rot) rotations.push_back(rot);

    // Root: the arc leaving the corner of the first spine dart, upper side.
    const auto it = std::find(up_c.begin(), up_c.end(), v.spine.front());
    const Dart root = upper.tails[it - up_c.begin()];

    QuadrilateralGS qd;
    qd.map = map_from_rotations(b.n_edges, rotations, root);
    const CombinatorialMap& q = qd.map;
    qd.labels = labels_from_darts(q, b.label_of_dart);
    qd.width = v.width();
    qd.upper_area = v.upper_area;
    qd.lower_area = v.lower_area;

    auto path_of = [&](const std::vector<Dart>& darts) {
        std::vector<Vertex> path;
        for (Dart d : darts) path.push_back(q.origin(d));
        path.push_back(q.target(darts.back()));
        return path;
    };
    qd.gamma_darts = upper.geodesic_darts;
    qd.xi_darts = upper.shuttle_darts;
    qd.gamma_bar_darts = lower.geodesic_darts;
    qd.xi_bar_darts = lower.shuttle_darts;
    qd.gamma = path_of(qd.gamma_darts);
    qd.xi = path_of(qd.xi_darts);
    qd.gamma_bar = path_of(qd.gamma_bar_darts);
    qd.xi_bar = path_of(qd.xi_bar_darts);
    qd.rho = qd.gamma.front();
    qd.rho_bar = qd.xi.front();
    qd.v_star = qd.xi.back();
    qd.v_bar_star = qd.xi_bar.back();

    std::vector<char> on_shuttle(q.n_vertices(), 0);
    for (Vertex x : qd.xi) on_shuttle[x] = 1;
    for (Vertex x : qd.xi_bar) on_shuttle[x] = 1;
    for (Vertex x = 0; x < q.n_vertices(); ++x) {
        if (!on_shuttle[x]) qd.measure_support.push_back(x);
    }
    return qd;
}

namespace {

// Mutable rotation system used for zipping boundary geodesics.
struct Surgery {
    std::vector<Dart> alpha, sigma, sigma_inv;
    std::vector<char> dead;

    explicit Surgery(const CombinatorialMap& m)
        : alpha(m.alpha_perm()), sigma(m.sigma_perm()), sigma_inv(m.n_darts()), dead(m.n_darts(), 0) {
        for (Dart d = 0; d < m.n_darts(); ++d) sigma_inv[sigma[d]] = d;
    }

    void link(Dart x, Dart y) {
        sigma[x] = y;
        sigma_inv[y] = x;
    }

    void unlink(Dart d) {
        if (sigma[d] != d) link(sigma_inv[d], sigma[d]);
        sigma[d] = sigma_inv[d] = d;
        dead[d] = 1;
    }

    bool same_vertex(Dart a, Dart b) const {
        for (Dart x = sigma[a];; x = sigma[x]) {
            if (x == b) return true;
            if (x == a) return false;
        }
    }

    // Folds edge b onto edge a; both point to the same vertex w where the
    // sector from alpha(b) to alpha(a) is a boundary corner.
    void zip(Dart a, Dart b) {
        if (sigma[alpha[b]] != alpha[a]) throw BijectionError("glue: geodesics are not adjacent on the boundary");
        const bool merged = same_vertex(a, b);
        const Dart p_first = sigma[b];
        const Dart p_last = sigma_inv[b];
        unlink(alpha[b]);
        if (merged || p_first == b) {
            unlink(b);
            return;
        }
        // Detach b from its rotation, then splice the rest right after a.
        unlink(b);
        const Dart after_a = sigma[a];
        link(a, p_first);
        link(p_last, after_a);
    }
};

}  // namespace

DelayedQuadrangulation glue(const QuadrilateralGS& qd) {
    if (qd.gamma_darts.size() != qd.xi_darts.size() || qd.gamma_bar_darts.size() != qd.xi_bar_darts.size())
        throw BijectionError("LengthMismatch: geodesic sides of different lengths");
    const CombinatorialMap& q = qd.map;
    Surgery s(q);
    for (std::size_t i = qd.gamma_darts.size(); i-- > 0;) s.zip(qd.gamma_darts[i], qd.xi_darts[i]);
    for (std::size_t i = qd.gamma_bar_darts.size(); i-- > 0;) s.zip(qd.gamma_bar_darts[i], qd.xi_bar_darts[i]);

    std::vector<Dart> new_id(q.n_darts(), -1);
    int n = 0;
    for (Dart d = 0; d < q.n_darts(); ++d) {
        if (!s.dead[d]) new_id[d] = n++;
    }
    std::vector<Dart> alpha(n), sigma(n);
    for (Dart d = 0; d < q.n_darts(); ++d) {
        if (s.dead[d]) continue;
        alpha[new_id[d]] = new_id[s.alpha[d]];
        sigma[new_id[d]] = new_id[s.sigma[d]];
    }
    CombinatorialMap m = CombinatorialMap::build(std::move(alpha), std::move(sigma), new_id[q.root()]);
    const Dart at_v_star = new_id[q.alpha(qd.gamma_darts.back())];
    const Dart at_v_bar_star = new_id[q.alpha(qd.gamma_bar_darts.back())];
    const int delay = qd.labels[qd.v_star] - qd.labels[qd.v_bar_star];
    return DelayedQuadrangulation::make(m, m.origin(at_v_bar_star), m.origin(at_v_star), delay);
}

bool consistency_check(const MarkedUnicycle& u, int injected_delay_error) {
    const DelayedQuadrangulation direct = cvs_unicycle(u.unicycle, 0);
    DelayedQuadrangulation glued = glue(cvs_vertebrate(phi(u)));
    glued.delay += injected_delay_error;
    return canonical_code(direct) == canonical_code(glued);
}

}  // namespace unimap
