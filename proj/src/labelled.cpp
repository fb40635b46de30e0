#include "unimap/labelled.hpp"

#include <algorithm>
#include <cstdlib>

namespace unimap {

std::vector<int> labels_by_dart(const CombinatorialMap& map, const std::vector<int>& labels) {
    std::vector<int> out(map.n_darts());
    for (Dart d = 0; d < map.n_darts(); ++d) out[d] = labels[map.origin(d)];
    return out;
}

std::vector<int> labels_from_darts(const CombinatorialMap& map, const std::vector<int>& by_dart) {
    std::vector<int> out(map.n_vertices());
    for (Vertex v = 0; v < map.n_vertices(); ++v) out[v] = by_dart[map.vertex_darts(v).front()];
    return out;
}

void check_well_labelled(const CombinatorialMap& map, const std::vector<int>& labels) {
    if (static_cast<int>(labels.size()) != map.n_vertices())
        throw StructureError(StructureErrorKind::NotWellLabelled, "one label per vertex required");
    for (Dart d = 0; d < map.n_darts(); ++d) {
        if (std::abs(labels[map.origin(d)] - labels[map.target(d)]) > 1)
            throw StructureError(StructureErrorKind::NotWellLabelled,
                                 "labels differ by more than one along dart " + std::to_string(d));
    }
}

LabelledUnicycle LabelledUnicycle::make(CombinatorialMap map, std::vector<int> labels, Face internal_face) {
    if (map.n_faces() != 2)
        throw StructureError(StructureErrorKind::NotUnicycle,
                             "a unicycle has two faces, got " + std::to_string(map.n_faces()));
    if (internal_face != 0 && internal_face != 1)
        throw StructureError(StructureErrorKind::NotUnicycle, "internal face must be 0 or 1");
    check_well_labelled(map, labels);
    if (labels[map.root_vertex()] != 0)
        throw StructureError(StructureErrorKind::RootLabelNonZero, "root vertex must have label 0");
    return LabelledUnicycle{std::move(map), std::move(labels), internal_face};
}

MarkedUnicycle MarkedUnicycle::make(LabelledUnicycle u) {
    const Dart d = u.map.root();
    if (!u.on_cycle(d)) throw StructureError(StructureErrorKind::MarkNotOnCycle, "marked dart is not on the cycle");
    if (u.map.face_of(d) != u.external_face())
        throw StructureError(StructureErrorKind::MarkOrientation,
                             "marked dart must have the external face on its right");
    return MarkedUnicycle{std::move(u)};
}

MarkedUnicycle MarkedUnicycle::mark(const LabelledUnicycle& u, Dart cycle_dart) {
    if (!u.on_cycle(cycle_dart))
        throw StructureError(StructureErrorKind::MarkNotOnCycle, "marked dart is not on the cycle");
    Dart d = cycle_dart;
    if (u.map.face_of(d) != u.external_face()) d = u.map.alpha(d);
    const int shift = u.labels[u.map.origin(d)];
    std::vector<int> labels = u.labels;
    for (int& l : labels) l -= shift;
    return make(LabelledUnicycle{u.map.rerooted(d), std::move(labels), u.internal_face});
}

CycleStats cycle_stats(const LabelledUnicycle& u) {
    CycleStats s;
    const Face ext = u.external_face();
    for (Dart d = 0; d < u.map.n_darts(); d += 1) {
        const Dart e = u.map.alpha(d);
        if (e < d) continue;
        if (u.on_cycle(d))
            ++s.length;
        else if (u.map.face_of(d) == ext)
            ++s.external;
        else
            ++s.internal;
    }
    return s;
}

namespace {

std::vector<Dart> corner_run(const CombinatorialMap& t, Dart from, Dart to) {
    std::vector<Dart> out{from};
    for (Dart c = from; c != to;) {
        c = t.next_corner(c);
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::vector<Dart> Vertebrate::upper_corners() const {
    return corner_run(tree, rho_outer_corner(), rho_bar_outer_corner());
}

std::vector<Dart> Vertebrate::lower_corners() const {
    return corner_run(tree, rho_bar_outer_corner(), rho_outer_corner());
}

Vertebrate Vertebrate::make(const CombinatorialMap& tree, std::vector<int> labels, Vertex rho, Vertex rho_bar) {
    if (tree.n_faces() != 1) throw StructureError(StructureErrorKind::NotTree, "a vertebrate is a plane tree");
    if (rho == rho_bar) throw StructureError(StructureErrorKind::SameEndpoints, "rho and rho_bar must differ");
    check_well_labelled(tree, labels);
    if (labels[rho] != 0) throw StructureError(StructureErrorKind::RootLabelNonZero, "rho must have label 0");

    // Spine by breadth-first search from rho.
    std::vector<Dart> via(tree.n_vertices(), -1);
    std::vector<Vertex> queue{rho};
    std::vector<char> seen(tree.n_vertices(), 0);
    seen[rho] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Dart d : tree.vertex_darts(queue[head])) {
            const Vertex w = tree.target(d);
            if (!seen[w]) {
                seen[w] = 1;
                via[w] = d;
                queue.push_back(w);
            }
        }
    }
    std::vector<Dart> spine;
    for (Vertex x = rho_bar; x != rho; x = tree.origin(via[x])) spine.push_back(via[x]);
    std::reverse(spine.begin(), spine.end());

    Vertebrate v;
    v.tree = tree.rerooted(spine.front());
    v.labels = std::move(labels);
    v.rho = rho;
    v.rho_bar = rho_bar;
    v.spine = std::move(spine);
    const int h = v.width();
    v.upper_area = (static_cast<int>(v.upper_corners().size()) - 1 - h) / 2;
    v.lower_area = v.tree.n_edges() - h - v.upper_area;
    return v;
}

Vertebrate phi(const MarkedUnicycle& mu) {
    const LabelledUnicycle& u = mu.unicycle;
    const CombinatorialMap& m = u.map;
    const Dart d0 = mu.marked_dart();
    const Vertex v0 = m.origin(d0);
    Dart e = -1;
    for (Dart d : m.vertex_darts(v0)) {
        if (d != d0 && u.on_cycle(d)) e = d;
    }
    std::vector<Dart> sigma = m.sigma_perm();
    sigma[m.sigma_inv(e)] = d0;
    sigma[m.sigma_inv(d0)] = e;
    CombinatorialMap tree = CombinatorialMap::build(m.alpha_perm(), std::move(sigma), d0);
    std::vector<int> labels = labels_from_darts(tree, labels_by_dart(m, u.labels));
    return Vertebrate::make(tree, std::move(labels), tree.origin(d0), tree.origin(e));
}

MarkedUnicycle phi_inv(const Vertebrate& v) {
    if (v.tilt() != 0) throw StructureError(StructureErrorKind::TiltNonZero, "phi_inv requires tilt 0");
    const CombinatorialMap& t = v.tree;
    const Dart d1 = v.spine.front();
    const Dart e = t.alpha(v.spine.back());
    std::vector<Dart> sigma = t.sigma_perm();
    sigma[t.sigma_inv(d1)] = e;
    sigma[t.sigma_inv(e)] = d1;
    CombinatorialMap m = CombinatorialMap::build(t.alpha_perm(), std::move(sigma), d1);
    std::vector<int> labels = labels_from_darts(m, labels_by_dart(t, v.labels));
    return MarkedUnicycle::make(LabelledUnicycle::make(m, std::move(labels), m.corner_face(d1)));
}

std::string canonical_code(const LabelledUnicycle& u) {
    const CanonicalLabelling lab = canonical_labelling(u.map);
    CodeWriter w;
    write_map_code(u.map, lab, w);
    w.put(lab.face_rank[u.internal_face]);
    std::vector<int> by_rank(u.map.n_vertices());
    for (Vertex x = 0; x < u.map.n_vertices(); ++x) by_rank[lab.vertex_rank[x]] = u.labels[x];
    for (int l : by_rank) w.put(l);
    return w.take();
}

std::string canonical_code(const Vertebrate& v) {
    const CanonicalLabelling lab = canonical_labelling(v.tree);
    CodeWriter w;
    write_map_code(v.tree, lab, w);
    w.put(lab.vertex_rank[v.rho_bar]);
    std::vector<int> by_rank(v.tree.n_vertices());
    for (Vertex x = 0; x < v.tree.n_vertices(); ++x) by_rank[lab.vertex_rank[x]] = v.labels[x];
    for (int l : by_rank) w.put(l);
    return w.take();
}

}  // namespace unimap
