#pragma once

#include <vector>

#include "unimap/map.hpp"

namespace unimap {

/// Delayed Voronoi cells of (x, y): theta holds z with d(x,z) <= d(y,z) + delta,
/// theta_bar those with d(x,z) >= d(y,z) + delta. Ties belong to both.
struct VoronoiPartition {
    std::vector<Vertex> theta;
    std::vector<Vertex> theta_bar;
    std::vector<Vertex> boundary;
    int delta = 0;
};

VoronoiPartition voronoi_cells(const CombinatorialMap& map, Vertex x, Vertex y, int delta);

/// Admissible delays between two vertices; empty when equal or adjacent.
std::vector<int> admissible_delays(const CombinatorialMap& map, Vertex v0, Vertex v1);

}  // namespace unimap
