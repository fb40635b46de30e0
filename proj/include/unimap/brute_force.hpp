#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

#include "unimap/bijections.hpp"
#include "unimap/labelled.hpp"
#include "unimap/map.hpp"

namespace unimap {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Wall-clock cap read from UNIMAP_BUDGET_MS (no cap when unset).
class Budget {
public:
    Budget();
    explicit Budget(std::optional<long> limit_ms);
    void check() const;

private:
    std::chrono::steady_clock::time_point start_;
    std::optional<long> limit_ms_;
};

/// All rooted planar maps with the given numbers of edges and faces, one per
/// isomorphism class, found by running over every vertex rotation.
std::vector<CombinatorialMap> brute_force_rooted_maps(int n_edges, int n_faces, const Budget& budget = {});

/// All rooted quadrangulations with n faces, found by gluing n squares.
std::vector<CombinatorialMap> brute_force_quadrangulations(int n_faces, const Budget& budget = {});

/// Every labelling with label 0 at the root vertex and steps in {-1,0,+1}.
std::vector<std::vector<int>> well_labellings(const CombinatorialMap& map);

std::vector<LabelledUnicycle> brute_force_unicycles(int n, const Budget& budget = {});
std::vector<MarkedUnicycle> brute_force_marked_unicycles(int n, const Budget& budget = {});
/// Tilt-0 well-labelled vertebrates with n edges.
std::vector<Vertebrate> brute_force_vertebrates(int n, const Budget& budget = {});
std::vector<DelayedQuadrangulation> brute_force_delayed_quadrangulations(int n, const Budget& budget = {});

}  // namespace unimap
