#pragma once

#include <string>
#include <vector>

#include "unimap/labelled.hpp"
#include "unimap/map.hpp"

namespace unimap {

class BijectionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Admissible delays for a pair at distance dist: |d| < dist, d = dist mod 2.
std::vector<int> admissible_delays(int dist);

inline bool is_admissible_delay(int delay, int dist) {
    return (delay < 0 ? -delay : delay) < dist && ((delay - dist) % 2 == 0);
}

/// Rooted quadrangulation with two marked vertices and an admissible delay.
struct DelayedQuadrangulation {
    CombinatorialMap map;
    Vertex v0 = 0;
    Vertex v1 = 0;
    int delay = 0;

    /// Validates face degrees, distinct marked vertices and delay admissibility.
    static DelayedQuadrangulation make(CombinatorialMap map, Vertex v0, Vertex v1, int delay);
};

bool is_quadrangulation(const CombinatorialMap& map);

std::string canonical_code(const DelayedQuadrangulation& q);

/// Successor construction on both faces of a rooted unicycle. v0 is the
/// vertex added in the external face, v1 the one in the internal face and the
/// delay is label(v1) - label(v0). The root is the arc leaving the root corner
/// (orientation 0) or the same arc reversed (orientation 1).
DelayedQuadrangulation cvs_unicycle(const LabelledUnicycle& u, int orientation);

/// cvs_unicycle with the labels of the image and the image of every
/// unicycle vertex.
struct CvsTrace {
    DelayedQuadrangulation quad;
    std::vector<int> labels;   // per vertex of quad
    std::vector<Vertex> image; // per vertex of the unicycle
};
CvsTrace cvs_unicycle_traced(const LabelledUnicycle& u, int orientation);

/// Quadrilateral with geodesic sides built from a tilt-0 vertebrate.
///
/// Paths run from their first named endpoint: gamma rho -> v_star,
/// xi rho_bar -> v_star, gamma_bar rho_bar -> v_bar_star, xi_bar rho ->
/// v_bar_star. The *_darts vectors hold the dart from path[i] to path[i+1].
struct QuadrilateralGS {
    CombinatorialMap map;
    std::vector<int> labels;
    Vertex rho = 0, rho_bar = 0;
    Vertex v_star = 0, v_bar_star = 0;
    std::vector<Vertex> gamma, xi, gamma_bar, xi_bar;
    std::vector<Dart> gamma_darts, xi_darts, gamma_bar_darts, xi_bar_darts;
    std::vector<Vertex> measure_support;  // vertices off xi and xi_bar
    int width = 0, upper_area = 0, lower_area = 0;

    /// The face bounded by the four geodesics.
    Face boundary_face() const { return map.face_of(map.alpha(gamma_darts.front())); }
};

QuadrilateralGS cvs_vertebrate(const Vertebrate& v);

/// Identifies gamma with xi and gamma_bar with xi_bar. The result has
/// v0 = v_bar_star, v1 = v_star and delay label(v_star) - label(v_bar_star).
DelayedQuadrangulation glue(const QuadrilateralGS& qd);

/// True iff the unicycle side and the glued quadrilateral side agree as
/// rooted bi-pointed delayed maps. A nonzero injected_delay_error perturbs
/// the glued side's delay (negative control).
bool consistency_check(const MarkedUnicycle& u, int injected_delay_error = 0);

}  // namespace unimap
