#include "unimap/geometry.hpp"

#include "unimap/bijections.hpp"

namespace unimap {

VoronoiPartition voronoi_cells(const CombinatorialMap& map, Vertex x, Vertex y, int delta) {
    const std::vector<int> dx = bfs_distances(map, x);
    const std::vector<int> dy = bfs_distances(map, y);
    VoronoiPartition p;
    p.delta = delta;
    for (Vertex z = 0; z < map.n_vertices(); ++z) {
        const int gap = dx[z] - dy[z] - delta;
        if (gap <= 0) p.theta.push_back(z);
        if (gap >= 0) p.theta_bar.push_back(z);
        if (gap == 0) p.boundary.push_back(z);
    }
    return p;
}

std::vector<int> admissible_delays(const CombinatorialMap& map, Vertex v0, Vertex v1) {
    if (v0 == v1) return {};
    return admissible_delays(bfs_distances(map, v0)[v1]);
}

}  // namespace unimap
