#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace unimap {

class OutOfSupport : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum class DensityKind { MarkedLA, BiasedLA, BiasedLAVolume, BetaQuarter };

/// Limit laws of (rescaled length, area). BetaQuarter is one-dimensional and
/// reads only y; BiasedLAVolume uses the total volume a.
struct LimitDensity {
    DensityKind kind = DensityKind::MarkedLA;
    double a = 1.0;
};

double density_eval(const LimitDensity& d, double x, double y);
/// One-dimensional form for BetaQuarter.
double density_eval(const LimitDensity& d, double y);

enum class Axis { X, Y };

/// Marginal CDF by adaptive quadrature of the density.
double cdf_numeric(const LimitDensity& d, Axis axis, double value);
/// Integral of the density over its support.
double total_mass(const LimitDensity& d);
/// Mean of one coordinate by quadrature.
double marginal_mean(const LimitDensity& d, Axis axis);

/// Closed-form marginals used for goodness of fit.
double marked_length_cdf(double x);   // x-marginal of MarkedLA
double marked_length_mean();
double biased_length_mean();
double beta_cdf(double alpha, double beta, double y);

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);
/// Asymptotic Kolmogorov tail P(sqrt(n) D > sqrt(n) d).
double ks_pvalue(double d, std::size_t n);

struct ChiSquared {
    double statistic = 0;
    int dof = 0;
    double p_value = 1;
};

/// Goodness of fit of observed counts against equal cell probabilities.
ChiSquared chi_squared_uniform(const std::vector<long>& observed);

}  // namespace unimap
