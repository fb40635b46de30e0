#pragma once

#include <vector>

#include "unimap/bijections.hpp"
#include "unimap/enumeration.hpp"
#include "unimap/labelled.hpp"
#include "unimap/rng.hpp"

namespace unimap {

/// Cycle length of a uniform marked (or rooted) unicycle with n edges.
int sample_cycle_length(int n, bool marked, RngStream& rng);

/// Steps in {-1,0,+1} of a uniform bridge of length k.
std::vector<int> sample_label_bridge(int k, RngStream& rng);

/// Plane forest coded by its contour word: +1 goes down to a new child, -1
/// goes back to the parent, or ends the current tree when at its root.
struct PlaneForest {
    int trees = 0;
    int edges = 0;
    std::vector<signed char> word;
};

PlaneForest sample_plane_forest(int a, int b, RngStream& rng);

MarkedUnicycle sample_marked_unicycle(int n, RngStream& rng);
LabelledUnicycle sample_unicycle(int n, RngStream& rng);

/// Marked unicycle with a prescribed cycle length, uniform given k.
MarkedUnicycle sample_marked_unicycle_given_length(int n, int k, RngStream& rng);

DelayedQuadrangulation sample_delayed_quadrangulation(int n, RngStream& rng);

/// Uniform delayed quadrangulation together with the unicycle it came from.
struct DelayedSample {
    LabelledUnicycle unicycle;
    DelayedQuadrangulation quad;
};
DelayedSample sample_delayed_with_unicycle(int n, RngStream& rng);

}  // namespace unimap
