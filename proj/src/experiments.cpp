#include "unimap/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <set>

#include "unimap/densities.hpp"
#include "unimap/geometry.hpp"
#include "unimap/sampling.hpp"

namespace unimap {

double mean(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

double variance(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double m = mean(v);
    double s = 0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size() - 1);
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t h = v.size() / 2;
    return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

double EmpiricalSummary::get(const std::string& key) const {
    for (const auto& [k, v] : summary) {
        if (k == key) return v;
    }
    throw std::out_of_range("no summary entry " + key);
}

void EmpiricalSummary::write_csv(std::ostream& out) const {
    out << std::setprecision(10);
    out << "replica";
    for (const auto& c : columns) out << ',' << c;
    out << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << i;
        for (double x : rows[i]) out << ',' << x;
        out << '\n';
    }
    out << "# summary experiment=" << name << " n=" << n << " replicas=" << replicas << " seed=" << seed << '\n';
    out << "key,value\n";
    for (const auto& [k, v] : summary) out << k << ',' << v << '\n';
}

double area_law_ks(int n, bool marked, double alpha) {
    const int h_max = std::min(n, static_cast<int>(40 * std::sqrt(double(n))) + 10);
    std::vector<double> lg(2 * n + 3);
    for (std::size_t m = 1; m < lg.size(); ++m) lg[m] = std::lgamma(double(m));
    auto log_forest = [&](int a, int b) {
        return std::log(double(a)) - std::log(double(2 * b + a)) + lg[2 * b + a + 1] - lg[b + 1] - lg[b + a + 1];
    };
    // tau_k = T(k) / 3^k
    std::vector<double> log_w;
    std::vector<int> area;
    double tau_prev = 1, tau = 1.0 / 3;
    double top = -1e300;
    for (int h = 1; h <= h_max; ++h) {
        if (h >= 2) {
            const double next = ((2 * h - 1) * tau / 3 + (h - 1) * tau_prev / 3) / h;
            tau_prev = tau;
            tau = next;
        }
        const double base = std::log(tau) - (marked ? 0.0 : std::log(double(h)));
        for (int i = 0; i <= n - h; ++i) {
            const double w = base + log_forest(h, i) + log_forest(h, n - h - i);
            log_w.push_back(w);
            area.push_back(i);
            top = std::max(top, w);
        }
    }
    std::vector<double> p(n + 1, 0.0);
    double total = 0;
    for (std::size_t j = 0; j < log_w.size(); ++j) {
        const double w = std::exp(log_w[j] - top);
        p[area[j]] += w;
        total += w;
    }
    double cum = 0, d = 0;
    for (int i = 0; i <= n; ++i) {
        const double f = beta_cdf(alpha, alpha, double(i) / n);
        d = std::max(d, std::fabs(cum - f));
        cum += p[i] / total;
        d = std::max(d, std::fabs(cum - f));
    }
    return d;
}

double discrete_delay_ks_floor(const std::vector<int>& distances) {
    std::map<int, long> by_d;
    for (int d : distances) ++by_d[d];
    std::set<double> atoms;
    for (const auto& [d, c] : by_d) {
        for (int j = 0; j + 2 <= d; ++j) atoms.insert(double(-d + 2 + 2 * j) / d);
    }
    const double total = static_cast<double>(distances.size());
    double ks = 0;
    for (double t : atoms) {
        double below = 0, at = 0;
        for (const auto& [d, c] : by_d) {
            const double w = c / total / (d - 1);
            for (int j = 0; j + 2 <= d; ++j) {
                const double x = double(-d + 2 + 2 * j) / d;
                if (x < t) below += w;
                else if (x == t) at += w;
            }
        }
        const double u = (t + 1) / 2;
        ks = std::max({ks, std::fabs(below - u), std::fabs(below + at - u)});
    }
    return ks;
}

std::vector<std::string> experiment_names() {
    return {"length_area", "beta_volume", "voronoi_consistency", "delay_uniform", "mean_distance"};
}

namespace {

std::vector<double> column(const EmpiricalSummary& s, std::size_t c) {
    std::vector<double> v;
    v.reserve(s.rows.size());
    for (const auto& r : s.rows) v.push_back(r[c]);
    return v;
}

void add_moments(EmpiricalSummary& s, const std::string& prefix, const std::vector<double>& v) {
    const double var = variance(v);
    s.summary.emplace_back(prefix + "_mean", mean(v));
    s.summary.emplace_back(prefix + "_se", std::sqrt(var / static_cast<double>(v.size())));
    s.summary.emplace_back(prefix + "_var", var);
}

}  // namespace

EmpiricalSummary run_experiment(const std::string& name, int n, int replicas, std::uint64_t seed, int workers) {
    const auto names = experiment_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) throw UnknownExperiment("unknown experiment " + name);
    if (n < 1 || replicas < 2) throw std::invalid_argument("need n >= 1 and at least two replicas");

    EmpiricalSummary s;
    s.name = name;
    s.n = n;
    s.replicas = replicas;
    s.seed = seed;
    s.rows.resize(replicas);
    const double dn = n;

    if (name == "length_area") {
        s.columns = {"L", "A", "Abar", "x", "y"};
        parallel_for(replicas, workers, [&](int i) {
            RngStream rng(seed, static_cast<std::uint64_t>(i));
            const CycleStats c = cycle_stats(sample_marked_unicycle(n, rng));
            s.rows[i] = {double(c.length), double(c.external), double(c.internal), c.length / std::sqrt(2 * dn),
                         c.external / dn};
        });
        const auto x = column(s, 3), y = column(s, 4);
        add_moments(s, "x", x);
        s.summary.emplace_back("x_ks", ks_statistic(x, marked_length_cdf));
        s.summary.emplace_back("x_limit_mean", marked_length_mean());
        add_moments(s, "y", y);
        s.summary.emplace_back("y_ks", ks_statistic(y, [](double t) { return beta_cdf(0.75, 0.75, t); }));
        s.summary.emplace_back("y_ks_exact_law", area_law_ks(n, true, 0.75));
    } else if (name == "beta_volume") {
        s.columns = {"L", "A", "Abar", "y"};
        parallel_for(replicas, workers, [&](int i) {
            RngStream rng(seed, static_cast<std::uint64_t>(i));
            const CycleStats c = cycle_stats(sample_unicycle(n, rng));
            s.rows[i] = {double(c.length), double(c.external), double(c.internal), c.external / dn};
        });
        const auto y = column(s, 3);
        add_moments(s, "y", y);
        s.summary.emplace_back("y_ks", ks_statistic(y, [](double t) { return beta_cdf(0.25, 0.25, t); }));
        s.summary.emplace_back("y_limit_var", 1.0 / 6.0);
        s.summary.emplace_back("y_ks_exact_law", area_law_ks(n, false, 0.25));
    } else if (name == "voronoi_consistency") {
        s.columns = {"vol_theta", "boundary", "external_side", "diff"};
        parallel_for(replicas, workers, [&](int i) {
            RngStream rng(seed, static_cast<std::uint64_t>(i));
            const DelayedSample ds = sample_delayed_with_unicycle(n, rng);
            const VoronoiPartition p = voronoi_cells(ds.quad.map, ds.quad.v0, ds.quad.v1, ds.quad.delay);
            const CycleStats c = cycle_stats(ds.unicycle);
            const double side = c.external + c.length;
            const double vol = static_cast<double>(p.theta.size());
            s.rows[i] = {vol, double(p.boundary.size()), side, (vol - side) / dn};
        });
        std::vector<double> absdiff;
        for (double d : column(s, 3)) absdiff.push_back(std::fabs(d));
        s.summary.emplace_back("median_abs_diff", median(absdiff));
        s.summary.emplace_back("max_abs_diff", *std::max_element(absdiff.begin(), absdiff.end()));
        const auto vol = column(s, 0), side = column(s, 2);
        const double mv = mean(vol), ms = mean(side);
        double cov = 0, vv = 0, vs = 0;
        for (int i = 0; i < replicas; ++i) {
            cov += (vol[i] - mv) * (side[i] - ms);
            vv += (vol[i] - mv) * (vol[i] - mv);
            vs += (side[i] - ms) * (side[i] - ms);
        }
        s.summary.emplace_back("correlation", vv > 0 && vs > 0 ? cov / std::sqrt(vv * vs) : 0.0);
    } else if (name == "delay_uniform") {
        s.columns = {"delay", "dist", "ratio"};
        parallel_for(replicas, workers, [&](int i) {
            RngStream rng(seed, static_cast<std::uint64_t>(i));
            const DelayedQuadrangulation q = sample_delayed_quadrangulation(n, rng);
            const int d = bfs_distances(q.map, q.v0)[q.v1];
            s.rows[i] = {double(q.delay), double(d), double(q.delay) / d};
        });
        const auto r = column(s, 2);
        add_moments(s, "ratio", r);
        s.summary.emplace_back("ratio_ks", ks_statistic(r, [](double t) { return std::clamp((t + 1) / 2, 0.0, 1.0); }));
        std::vector<int> dist;
        for (const auto& row : s.rows) dist.push_back(static_cast<int>(row[1]));
        s.summary.emplace_back("ratio_ks_discrete_floor", discrete_delay_ks_floor(dist));
    } else {
        const double scale = std::pow(9.0 / (8.0 * dn), 0.25);
        s.columns = {"dist", "scaled"};
        parallel_for(replicas, workers, [&](int i) {
            RngStream rng(seed, static_cast<std::uint64_t>(i));
            const DelayedQuadrangulation q = sample_delayed_quadrangulation(n, rng);
            const int d = bfs_distances(q.map, q.v0)[q.v1];
            s.rows[i] = {double(d), scale * d};
        });
        const auto sc = column(s, 1), d = column(s, 0);
        std::vector<double> inv;
        for (double x : sc) inv.push_back(1.0 / x);
        const double m = mean(inv);
        const double se = std::sqrt(variance(inv) / replicas);
        s.summary.emplace_back("biased_mean", mean(sc));
        s.summary.emplace_back("estimate", 1.0 / m);
        s.summary.emplace_back("estimate_se", se / (m * m));
        // Exact reweighting: a pair at distance d carries d - 1 delays.
        double num = 0, den = 0;
        for (std::size_t i = 0; i < d.size(); ++i) {
            num += sc[i] / (d[i] - 1);
            den += 1.0 / (d[i] - 1);
        }
        s.summary.emplace_back("estimate_exact_weights", num / den);
        s.summary.emplace_back("limit", 3 * std::pow(2.0, 0.25) * std::tgamma(1.25) / std::sqrt(M_PI));
    }
    return s;
}

}  // namespace unimap
