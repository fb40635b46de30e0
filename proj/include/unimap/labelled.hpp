#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "unimap/map.hpp"

namespace unimap {

enum class StructureErrorKind {
    NotUnicycle,
    NotWellLabelled,
    RootLabelNonZero,
    MarkNotOnCycle,
    MarkOrientation,
    NotTree,
    SameEndpoints,
    TiltNonZero,
};

class StructureError : public std::runtime_error {
public:
    StructureError(StructureErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    StructureErrorKind kind() const noexcept { return kind_; }

private:
    StructureErrorKind kind_;
};

/// Label of the origin of every dart; survives vertex renumbering.
std::vector<int> labels_by_dart(const CombinatorialMap& map, const std::vector<int>& labels);
std::vector<int> labels_from_darts(const CombinatorialMap& map, const std::vector<int>& by_dart);

/// Throws NotWellLabelled if some edge changes the label by more than one.
void check_well_labelled(const CombinatorialMap& map, const std::vector<int>& labels);

/**
 * Rooted well-labelled unicycle: a planar map with two faces, one of them
 * designated internal, and integer vertex labels that move by at most one
 * along edges, with label 0 at the root vertex.
 *
 * When v1 is the extra vertex in the external face, its label is the minimum
 * over the vertices incident to that face, minus one.
 */
struct LabelledUnicycle {
    CombinatorialMap map;
    std::vector<int> labels;  // per vertex
    Face internal_face = 0;

    Face external_face() const { return 1 - internal_face; }
    int label(Vertex v) const { return labels[v]; }
    int corner_label(Dart c) const { return labels[map.origin(c)]; }

    /// A dart is on the cycle iff its two sides are different faces.
    bool on_cycle(Dart d) const { return map.face_of(d) != map.face_of(map.alpha(d)); }

    static LabelledUnicycle make(CombinatorialMap map, std::vector<int> labels, Face internal_face);
};

/// Unicycle rooted at a dart of its cycle having the external face on its
/// right. Labels are normalised to 0 at the marked vertex.
struct MarkedUnicycle {
    LabelledUnicycle unicycle;

    Dart marked_dart() const { return unicycle.map.root(); }

    static MarkedUnicycle make(LabelledUnicycle u);
    /// Marks the given cycle dart (or its reverse, whichever has the external
    /// face on its right) and shifts labels to 0 at its origin.
    static MarkedUnicycle mark(const LabelledUnicycle& u, Dart cycle_dart);
};

struct CycleStats {
    int length = 0;     // L
    int external = 0;   // A: edges only incident to the external face
    int internal = 0;   // Abar: edges only incident to the internal face
};

CycleStats cycle_stats(const LabelledUnicycle& u);
inline CycleStats cycle_stats(const MarkedUnicycle& u) { return cycle_stats(u.unicycle); }

/**
 * Plane tree with two distinct distinguished vertices rho and rho_bar, rooted
 * at the first dart of the spine (the path from rho to rho_bar). The upper
 * part is the side on the left of the spine walked from rho to rho_bar.
 */
struct Vertebrate {
    CombinatorialMap tree;
    std::vector<int> labels;
    Vertex rho = 0;
    Vertex rho_bar = 0;
    std::vector<Dart> spine;  // darts from rho to rho_bar
    int upper_area = 0;
    int lower_area = 0;

    int width() const { return static_cast<int>(spine.size()); }
    int tilt() const { return -labels[rho_bar]; }

    /// Corner of rho shared by both halves, and the same for rho_bar.
    Dart rho_outer_corner() const { return tree.sigma_inv(spine.front()); }
    Dart rho_bar_outer_corner() const { return tree.sigma_inv(tree.alpha(spine.back())); }

    /// Corners of the upper half from rho to rho_bar (2a + h + 1 entries) and
    /// of the lower half from rho_bar to rho (2abar + h + 1 entries).
    std::vector<Dart> upper_corners() const;
    std::vector<Dart> lower_corners() const;

    static Vertebrate make(const CombinatorialMap& tree, std::vector<int> labels, Vertex rho, Vertex rho_bar);
};

/// Cuts the unicycle at its marked vertex.
Vertebrate phi(const MarkedUnicycle& u);

/// Glues rho and rho_bar back together; throws TiltNonZero.
MarkedUnicycle phi_inv(const Vertebrate& v);

/// Code of a rooted labelled unicycle (map, face designation, labels).
std::string canonical_code(const LabelledUnicycle& u);
std::string canonical_code(const Vertebrate& v);

}  // namespace unimap
