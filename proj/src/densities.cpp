#include "unimap/densities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/constants/constants.hpp>
#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace unimap {

namespace {

using boost::math::tgamma;
constexpr double kPi = boost::math::double_constants::pi;
constexpr double kTol = 1e-10;

// x^power s^(-3/2) exp(-x^2 / 2s), in log form so that tiny s does not overflow.
double la_core(double x, double s, double power) {
    if (x <= 0 || s <= 0) return 0.0;
    return std::exp(power * std::log(x) - 1.5 * std::log(s) - x * x / (2 * s));
}

double y_max(const LimitDensity& d) { return d.kind == DensityKind::BiasedLAVolume ? d.a : 1.0; }

double prefactor(const LimitDensity& d) {
    switch (d.kind) {
        case DensityKind::MarkedLA:
            return std::pow(2.0, 0.25) / (tgamma(0.75) * std::sqrt(kPi));
        case DensityKind::BiasedLA:
            return 1.0 / (std::pow(2.0, 0.25) * tgamma(0.25) * std::sqrt(kPi));
        case DensityKind::BiasedLAVolume:
            return std::pow(d.a, -0.25) / (std::pow(2.0, 0.25) * tgamma(0.25) * std::sqrt(kPi));
        default:
            return 0.0;
    }
}

double x_power(const LimitDensity& d) { return d.kind == DensityKind::MarkedLA ? 1.5 : 0.5; }

double spread(const LimitDensity& d, double y) {
    const double top = y_max(d);
    return y * (top - y) / top;
}

// Integral of x^m times the density over x in [0, x_hi], at spread s. The
// x-integral of a Gaussian times a power is an incomplete gamma function.
double x_integral(const LimitDensity& d, double s, double m, double x_hi) {
    if (s <= 0 || x_hi <= 0) return 0.0;
    const double q = (x_power(d) + m + 1) / 2;
    const double full = std::exp(std::log(prefactor(d)) - 1.5 * std::log(s) + q * std::log(2 * s) +
                                 std::lgamma(q) - std::log(2.0));
    return std::isinf(x_hi) ? full : full * boost::math::gamma_p(q, x_hi * x_hi / (2 * s));
}

// Integral of f(y, spread(y)) over [lo, hi]. The upper half is integrated in
// t = top - y so that the spread keeps full precision near both ends.
template <class F>
double over_y(const LimitDensity& d, F&& f, double lo, double hi) {
    boost::math::quadrature::tanh_sinh<double> ts;
    const double top = y_max(d), mid = top / 2;
    double total = 0;
    if (lo < mid) {
        const double b = std::min(hi, mid);
        total += ts.integrate([&](double y) { return f(y, y * (top - y) / top); }, lo, b, kTol);
    }
    if (hi > mid) {
        const double a = std::max(lo, mid);
        total += ts.integrate([&](double t) { return f(top - t, t * (top - t) / top); }, top - hi, top - a, kTol);
    }
    return total;
}

}  // namespace

double density_eval(const LimitDensity& d, double x, double y) {
    if (d.kind == DensityKind::BetaQuarter) return density_eval(d, y);
    const double top = y_max(d);
    if (x < 0 || y < 0 || y > top || !std::isfinite(x)) throw OutOfSupport("point outside the density's support");
    if (y <= 0 || y >= top || x == 0) return 0.0;
    return prefactor(d) * la_core(x, spread(d, y), x_power(d));
}

double density_eval(const LimitDensity& d, double y) {
    if (d.kind != DensityKind::BetaQuarter) throw OutOfSupport("one-dimensional evaluation needs beta_quarter");
    if (y <= 0 || y >= 1) throw OutOfSupport("beta_quarter lives on (0, 1)");
    return std::pow(y * (1 - y), -0.75) / boost::math::beta(0.25, 0.25);
}

double cdf_numeric(const LimitDensity& d, Axis axis, double value) {
    if (d.kind == DensityKind::BetaQuarter) {
        if (value <= 0) return 0.0;
        if (value >= 1) return 1.0;
        boost::math::quadrature::tanh_sinh<double> ts;
        return ts.integrate([&](double y) { return density_eval(d, y); }, 0.0, value, kTol);
    }
    const double inf = std::numeric_limits<double>::infinity();
    if (value <= 0) return 0.0;
    if (axis == Axis::X)
        return over_y(d, [&](double, double s) { return x_integral(d, s, 0, value); }, 0.0, y_max(d));
    return over_y(d, [&](double, double s) { return x_integral(d, s, 0, inf); }, 0.0, std::min(value, y_max(d)));
}

double total_mass(const LimitDensity& d) {
    if (d.kind == DensityKind::BetaQuarter) return cdf_numeric(d, Axis::Y, 0.5) * 2;
    return cdf_numeric(d, Axis::Y, y_max(d));
}

double marginal_mean(const LimitDensity& d, Axis axis) {
    if (d.kind == DensityKind::BetaQuarter) return 0.5;
    const double inf = std::numeric_limits<double>::infinity();
    if (axis == Axis::X) return over_y(d, [&](double, double s) { return x_integral(d, s, 1, inf); }, 0.0, y_max(d));
    return over_y(d, [&](double y, double s) { return y * x_integral(d, s, 0, inf); }, 0.0, y_max(d));
}

double marked_length_cdf(double x) {
    if (x <= 0) return 0.0;
    return boost::math::gamma_p(0.75, 2 * x * x);
}

double marked_length_mean() { return tgamma(1.25) / (std::sqrt(2.0) * tgamma(0.75)); }

double biased_length_mean() {
    // x-marginal 2 sqrt(2 pi) c x^(-1/2) exp(-2x^2) with c the prefactor.
    const double c = 1.0 / (std::pow(2.0, 0.25) * tgamma(0.25) * std::sqrt(kPi));
    return 2 * std::sqrt(2 * kPi) * c * tgamma(0.75) / std::pow(2.0, 1.75);
}

double beta_cdf(double alpha, double beta, double y) {
    if (y <= 0) return 0.0;
    if (y >= 1) return 1.0;
    return boost::math::ibeta(alpha, beta, y);
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.size() < 2) throw std::invalid_argument("ks_statistic needs at least two samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0;
    std::size_t i = 0;
    while (i < samples.size()) {
        std::size_t j = i;
        while (j < samples.size() && samples[j] == samples[i]) ++j;
        const double f = cdf(samples[i]);
        d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(j) / n - f});
        i = j;
    }
    return d;
}

double ks_pvalue(double d, std::size_t n) {
    const double sn = std::sqrt(static_cast<double>(n));
    const double lambda = (sn + 0.12 + 0.11 / sn) * d;
    if (lambda < 0.2) return 1.0;
    double sum = 0;
    for (int k = 1; k <= 100; ++k) {
        const double term = std::exp(-2.0 * k * k * lambda * lambda);
        sum += (k % 2 ? 2.0 : -2.0) * term;
        if (term < 1e-16) break;
    }
    return std::clamp(sum, 0.0, 1.0);
}

ChiSquared chi_squared_uniform(const std::vector<long>& observed) {
    ChiSquared r;
    if (observed.size() < 2) return r;
    double total = 0;
    for (long o : observed) total += static_cast<double>(o);
    const double expected = total / static_cast<double>(observed.size());
    for (long o : observed) r.statistic += (o - expected) * (o - expected) / expected;
    r.dof = static_cast<int>(observed.size()) - 1;
    r.p_value = boost::math::cdf(complement(boost::math::chi_squared(r.dof), r.statistic));
    return r;
}

}  // namespace unimap
