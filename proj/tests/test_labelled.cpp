#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "unimap/brute_force.hpp"
#include "unimap/labelled.hpp"
#include "unimap/sampling.hpp"

using namespace unimap;

namespace {

MarkedUnicycle loop_unicycle() {
    const CombinatorialMap m = test::loop_map();
    const LabelledUnicycle u = LabelledUnicycle::make(m, {0}, 0);
    return MarkedUnicycle::mark(u, 0);
}

}  // namespace

TEST_CASE("loop unicycle statistics") {
    const MarkedUnicycle u = loop_unicycle();
    const CycleStats s = cycle_stats(u);
    CHECK(s.length == 1);
    CHECK(s.external == 0);
    CHECK(s.internal == 0);
}

TEST_CASE("cutting the loop gives a one-edge spine") {
    const Vertebrate v = phi(loop_unicycle());
    CHECK(v.width() == 1);
    CHECK(v.upper_area == 0);
    CHECK(v.lower_area == 0);
    CHECK(v.labels[v.rho] == 0);
    CHECK(v.labels[v.rho_bar] == 0);
    const MarkedUnicycle back = phi_inv(v);
    CHECK(back.unicycle.map.n_edges() == 1);
    CHECK(back.unicycle.map.n_faces() == 2);
    CHECK(canonical_code(back.unicycle) == canonical_code(loop_unicycle().unicycle));
}

TEST_CASE("structure errors") {
    const CombinatorialMap path = test::path_map();
    CHECK_THROWS_AS(LabelledUnicycle::make(path, {0, 0, 0}, 0), StructureError);
    const CombinatorialMap loop = test::loop_map();
    try {
        LabelledUnicycle::make(loop, {1}, 0);
        FAIL("accepted a nonzero root label");
    } catch (const StructureError& e) {
        CHECK(e.kind() == StructureErrorKind::RootLabelNonZero);
    }
    const Vertex v1 = path.target(0), v2 = path.target(2);
    std::vector<int> labels(3, 0);
    labels[v2] = -1;
    const Vertebrate tilted = Vertebrate::make(path, labels, v1, v2);
    CHECK(tilted.tilt() == 1);
    try {
        phi_inv(tilted);
        FAIL("glued a tilted vertebrate");
    } catch (const StructureError& e) {
        CHECK(e.kind() == StructureErrorKind::TiltNonZero);
    }
    labels[v2] = 2;
    CHECK_THROWS_AS(Vertebrate::make(path, labels, v1, v2), StructureError);
}

TEST_CASE("cut and glue are inverse bijections up to three edges") {
    for (int n = 1; n <= 3; ++n) {
        const auto marked = brute_force_marked_unicycles(n);
        const auto verts = brute_force_vertebrates(n);
        CHECK(marked.size() == verts.size());
        std::set<std::string> all, image;
        for (const auto& v : verts) all.insert(canonical_code(v));
        for (const auto& u : marked) {
            const Vertebrate v = phi(u);
            CHECK(v.tilt() == 0);
            CHECK(v.width() == cycle_stats(u).length);
            CHECK(v.upper_area == cycle_stats(u).internal);
            CHECK(v.lower_area == cycle_stats(u).external);
            CHECK(v.width() + v.upper_area + v.lower_area == n);
            image.insert(canonical_code(v));
            CHECK(canonical_code(phi_inv(v).unicycle) == canonical_code(u.unicycle));
        }
        CHECK(image == all);
    }
}

TEST_CASE("cycle statistics add up on samples") {
    for (int i = 0; i < 20; ++i) {
        RngStream rng(11, i);
        const MarkedUnicycle u = sample_marked_unicycle(1000, rng);
        const CycleStats s = cycle_stats(u);
        CHECK(s.length + s.external + s.internal == 1000);
    }
}

TEST_CASE("cut and glue round trip on large samples") {
    for (int i = 0; i < 5; ++i) {
        RngStream rng(12, i);
        const MarkedUnicycle u = sample_marked_unicycle(200, rng);
        CHECK(canonical_code(phi_inv(phi(u)).unicycle) == canonical_code(u.unicycle));
    }
}

TEST_CASE("labels move by at most one along face walks") {
    for (const auto& u : brute_force_unicycles(3)) {
        for (Dart c = 0; c < u.map.n_darts(); ++c) {
            const int step = u.corner_label(u.map.next_corner(c)) - u.corner_label(c);
            CHECK(std::abs(step) <= 1);
        }
    }
}
