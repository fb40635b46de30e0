#include <doctest.h>

#include <random>

#include <boost/math/distributions/beta.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>

#include "unimap/densities.hpp"

using namespace unimap;

TEST_CASE("point values") {
    CHECK(density_eval({DensityKind::BetaQuarter, 1.0}, 0.5) == doctest::Approx(0.38139).epsilon(1e-4));
    CHECK(density_eval({DensityKind::BiasedLA, 1.0}, 1.0, 0.5) == doctest::Approx(0.14167).epsilon(1e-4));
    CHECK_THROWS_AS(density_eval({DensityKind::BetaQuarter, 1.0}, 1.5), OutOfSupport);
    CHECK_THROWS_AS(density_eval({DensityKind::MarkedLA, 1.0}, -1.0, 0.5), OutOfSupport);
}

TEST_CASE("densities are normalised") {
    for (auto kind : {DensityKind::MarkedLA, DensityKind::BiasedLA, DensityKind::BetaQuarter})
        CHECK(std::abs(total_mass({kind, 1.0}) - 1.0) < 1e-6);
    for (double a : {0.5, 1.0, 2.0}) CHECK(std::abs(total_mass({DensityKind::BiasedLAVolume, a}) - 1.0) < 1e-6);
}

TEST_CASE("length means") {
    CHECK(marginal_mean({DensityKind::MarkedLA, 1.0}, Axis::X) == doctest::Approx(0.52303).epsilon(1e-4));
    CHECK(marginal_mean({DensityKind::BiasedLA, 1.0}, Axis::X) == doctest::Approx(0.23900).epsilon(1e-4));
    CHECK(marked_length_mean() == doctest::Approx(marginal_mean({DensityKind::MarkedLA, 1.0}, Axis::X)).epsilon(1e-6));
    CHECK(biased_length_mean() == doctest::Approx(marginal_mean({DensityKind::BiasedLA, 1.0}, Axis::X)).epsilon(1e-6));
    CHECK(marginal_mean({DensityKind::MarkedLA, 1.0}, Axis::Y) == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("closed-form marginals match quadrature") {
    const LimitDensity m{DensityKind::MarkedLA, 1.0};
    for (double x : {0.2, 0.5, 1.0, 1.7}) CHECK(cdf_numeric(m, Axis::X, x) == doctest::Approx(marked_length_cdf(x)).epsilon(1e-6));
    for (double y : {0.1, 0.3, 0.5}) CHECK(cdf_numeric(m, Axis::Y, y) == doctest::Approx(beta_cdf(0.75, 0.75, y)).epsilon(1e-6));
    const LimitDensity b{DensityKind::BetaQuarter, 1.0};
    for (double y : {0.1, 0.3, 0.5, 0.9}) CHECK(cdf_numeric(b, Axis::Y, y) == doctest::Approx(beta_cdf(0.25, 0.25, y)).epsilon(1e-6));
}

TEST_CASE("ks statistic") {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<double> s(10000);
    for (double& x : s) x = u(gen);
    const auto cdf = [](double x) { return std::clamp(x, 0.0, 1.0); };
    CHECK(ks_statistic(s, cdf) < 0.025);
    CHECK(ks_statistic(std::vector<double>(100, 0.5), cdf) >= 0.5);
    std::vector<double> shifted = s;
    for (double& x : shifted) x = 0.1 + 0.9 * x;
    CHECK(ks_statistic(shifted, cdf) == doctest::Approx(0.1).epsilon(0.1));
    CHECK(ks_pvalue(0.01, 10000) > 0.2);
    CHECK(ks_pvalue(0.05, 10000) < 1e-10);
}

TEST_CASE("chi squared") {
    const ChiSquared flat = chi_squared_uniform({100, 100, 100});
    CHECK(flat.statistic == 0);
    CHECK(flat.dof == 2);
    CHECK(flat.p_value == doctest::Approx(1.0));
    CHECK(chi_squared_uniform({200, 100, 0}).p_value < 1e-10);
}

TEST_CASE("pointwise density integrates to its area marginal") {
    boost::math::quadrature::exp_sinh<double> es;
    const double y = 0.3;
    const double marked = es.integrate([&](double x) { return density_eval({DensityKind::MarkedLA, 1.0}, x, y); });
    const double biased = es.integrate([&](double x) { return density_eval({DensityKind::BiasedLA, 1.0}, x, y); });
    CHECK(marked == doctest::Approx(boost::math::pdf(boost::math::beta_distribution<>(0.75, 0.75), y)).epsilon(1e-8));
    CHECK(biased == doctest::Approx(density_eval({DensityKind::BetaQuarter, 1.0}, y)).epsilon(1e-8));
}
