#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace unimap {

using Dart = std::int32_t;
using Vertex = std::int32_t;
using Face = std::int32_t;

enum class MapErrorKind { NotPermutation, NotInvolution, NotConnected, NotGenusZero, BadRoot };

class MapError : public std::runtime_error {
public:
    MapError(MapErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    MapErrorKind kind() const noexcept { return kind_; }

private:
    MapErrorKind kind_;
};

/**
 * Rooted planar map stored as a rotation system over darts 0..2E-1.
 *
 * alpha pairs the two darts of an edge, sigma turns counterclockwise around
 * the origin vertex of a dart. Faces are the cycles of phi = sigma o alpha;
 * the face of a phi-cycle lies on the right of each of its darts. The corner
 * indexed by dart c is the angular sector from c to sigma(c), which lies on
 * the left of c.
 *
 * Vertices and faces are numbered in order of first appearance when darts
 * are scanned 0, 1, 2, ...; the map is immutable once built.
 */
class CombinatorialMap {
public:
    CombinatorialMap() = default;

    /// Validates and builds. Throws MapError naming the violated invariant.
    static CombinatorialMap build(std::vector<Dart> alpha, std::vector<Dart> sigma, Dart root);

    int n_darts() const noexcept { return static_cast<int>(alpha_.size()); }
    int n_edges() const noexcept { return n_darts() / 2; }
    int n_vertices() const noexcept { return static_cast<int>(vertex_start_.size()) - 1; }
    int n_faces() const noexcept { return static_cast<int>(face_start_.size()) - 1; }

    Dart root() const noexcept { return root_; }
    Dart alpha(Dart d) const { return alpha_[d]; }
    Dart sigma(Dart d) const { return sigma_[d]; }
    Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
    Dart phi(Dart d) const { return sigma_[alpha_[d]]; }

    /// Next corner when walking around the face on the left of c.
    Dart next_corner(Dart c) const { return sigma_inv_[alpha_[c]]; }

    Vertex origin(Dart d) const { return vertex_of_[d]; }
    Vertex target(Dart d) const { return vertex_of_[alpha_[d]]; }
    Vertex root_vertex() const { return vertex_of_[root_]; }

    /// Face on the right of d (its sigma o alpha cycle).
    Face face_of(Dart d) const { return face_of_[d]; }
    /// Face containing corner c, i.e. the face on the left of dart c.
    Face corner_face(Dart c) const { return face_of_[alpha_[c]]; }

    /// Darts around v in counterclockwise order, starting with its lowest dart.
    std::span<const Dart> vertex_darts(Vertex v) const;
    /// Darts of f in sigma o alpha order, starting with its lowest dart.
    std::span<const Dart> face_darts(Face f) const;

    int degree(Vertex v) const { return vertex_start_[v + 1] - vertex_start_[v]; }
    int face_degree(Face f) const { return face_start_[f + 1] - face_start_[f]; }

    /// Same map with another root dart.
    CombinatorialMap rerooted(Dart root) const;

    const std::vector<Dart>& alpha_perm() const noexcept { return alpha_; }
    const std::vector<Dart>& sigma_perm() const noexcept { return sigma_; }

private:
    std::vector<Dart> alpha_;
    std::vector<Dart> sigma_;
    std::vector<Dart> sigma_inv_;
    Dart root_ = 0;

    std::vector<Vertex> vertex_of_;
    std::vector<int> vertex_start_;
    std::vector<Dart> vertex_darts_;

    std::vector<Face> face_of_;
    std::vector<int> face_start_;
    std::vector<Dart> face_darts_;
};

/// Faces as dart cycles of sigma o alpha; face degrees are the cycle lengths.
std::vector<std::vector<Dart>> faces(const CombinatorialMap& map);

/// Builds a map from per-vertex counterclockwise dart lists. Darts 2i and
/// 2i+1 form edge i.
CombinatorialMap map_from_rotations(int n_edges, const std::vector<std::vector<Dart>>& rotations,
                                    Dart root);

/// Exact graph distances from source; unreachable entries never occur.
std::vector<int> bfs_distances(const CombinatorialMap& map, Vertex source);

/// Root-first breadth-first relabelling of the darts.
struct CanonicalLabelling {
    std::vector<Dart> order;       // darts in discovery order
    std::vector<int> rank;         // rank[d] = position of d in order
    std::vector<int> vertex_rank;  // vertices in order of first discovery
    std::vector<int> face_rank;    // faces in order of first discovery
};

CanonicalLabelling canonical_labelling(const CombinatorialMap& map);

/// Appends integers to a byte string with a zigzag varint encoding.
class CodeWriter {
public:
    void put(std::int64_t value);
    std::string take() { return std::move(bytes_); }
    const std::string& bytes() const noexcept { return bytes_; }

private:
    std::string bytes_;
};

/// Writes the code of the bare rooted map into w.
void write_map_code(const CombinatorialMap& map, const CanonicalLabelling& lab, CodeWriter& w);

/// Two rooted maps have equal codes iff they are isomorphic by a root- and
/// orientation-preserving bijection.
std::string canonical_code(const CombinatorialMap& map);

}  // namespace unimap
