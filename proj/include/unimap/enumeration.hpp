#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace unimap {

/// Exact nonnegative integer.
using Count = mpz_class;

/// Number of {-1,0,+1} walks of length k from 0 to 0.
Count central_trinomial(int k);
/// Central trinomials T(0..k).
std::vector<Count> central_trinomials(int k);

/// Number of plane forests with a trees and b edges.
Count forest_count(int a, int b);

/// Marked unicycles with n edges and cycle length k. Throws std::logic_error if
/// the product form and the probabilistic form disagree.
Count count_marked(int n, int k);

Count count_unicycles(int n);
Count count_marked_total(int n);

/// Per-k weights: marked ones, or (2n/k) times them for rooted unicycles.
std::vector<Count> cycle_length_weights(int n, bool marked);

struct AsymptoticReport {
    int n = 0;
    double ratio_U = 0;
    double ratio_Umarked = 0;
    double ratio_bias = 0;
};

/// Limits of the three ratios.
double limit_ratio_U();
double limit_ratio_Umarked();
double limit_ratio_bias();

AsymptoticReport asymptotic_diagnostics(int n);
std::vector<AsymptoticReport> asymptotic_diagnostics(const std::vector<int>& ns);

}  // namespace unimap
