// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "unimap/bijections.hpp"
#include "unimap/brute_force.hpp"
#include "unimap/densities.hpp"
#include "unimap/enumeration.hpp"
#include "unimap/experiments.hpp"
#include "unimap/geometry.hpp"
#include "unimap/json_io.hpp"
#include "unimap/sampling.hpp"

using namespace unimap;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

const int kWorkers = std::max(1u, std::thread::hardware_concurrency());

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

unsigned long size_of(const Count& c) { return c.get_ui(); }

Outcome exact_counts() {
    bool ok = true;
    std::string d;
    for (int n = 1; n <= 4; ++n) {
        const auto u = brute_force_unicycles(n).size();
        const auto m = brute_force_marked_unicycles(n).size();
        ok = ok && u == size_of(count_unicycles(n)) && m == size_of(count_marked_total(n));
        d += fmt("n=%d U=%zu/%lu U*=%zu/%lu; ", n, u, size_of(count_unicycles(n)), m, size_of(count_marked_total(n)));
    }
    return {ok, d + "(oracle/formula)"};
}

Outcome bijection_validity() {
    long checked = 0, bad = 0;
    for (int n = 1; n <= 3; ++n) {
        for (const auto& u : brute_force_unicycles(n)) {
            for (int o : {0, 1}) {
                const DelayedQuadrangulation q = cvs_unicycle(u, o);
                const int dist = bfs_distances(q.map, q.v0)[q.v1];
                bad += !(is_quadrangulation(q.map) && q.map.n_faces() == n && is_admissible_delay(q.delay, dist));
                ++checked;
            }
            for (Dart d = 0; d < u.map.n_darts(); ++d) {
                if (!u.on_cycle(d)) continue;
                bad += !consistency_check(MarkedUnicycle::mark(u, d));
                ++checked;
            }
        }
    }
    long random_bad = 0, control_caught = 0;
    const int random = 200;
    std::vector<char> ok(random), caught(random);
    parallel_for(random, kWorkers, [&](int i) {
        RngStream rng(2024, 2, i);
        const MarkedUnicycle u = sample_marked_unicycle(500, rng);
        ok[i] = consistency_check(u);
        caught[i] = !consistency_check(u, 2);
    });
    for (int i = 0; i < random; ++i) {
        random_bad += !ok[i];
        control_caught += caught[i];
    }
    return {bad == 0 && random_bad == 0,
            fmt("small: %ld checks, %ld failures; n=500: %d instances, %ld failures; shifted-delay control rejected %ld/%d",
                checked, bad, random, random_bad, control_caught, random)};
}

Outcome cardinality() {
    bool ok = true;
    std::string d;
    for (int n = 1; n <= 3; ++n) {
        std::set<std::string> q;
        for (const auto& x : brute_force_delayed_quadrangulations(n)) q.insert(canonical_code(x));
        std::set<std::string> image;
        long outputs = 0, outside = 0;
        for (const auto& u : brute_force_unicycles(n)) {
            for (int o : {0, 1}) {
                const std::string c = canonical_code(cvs_unicycle(u, o));
                image.insert(c);
                outside += q.count(c) == 0;
                ++outputs;
            }
        }
        const unsigned long twice = 2 * size_of(count_unicycles(n));
        ok = ok && q.size() == twice && static_cast<long>(image.size()) == outputs && outside == 0;
        d += fmt("n=%d #Q=%zu 2#U=%lu images=%zu/%ld distinct; ", n, q.size(), twice, image.size(), outputs);
    }
    return {ok, d};
}

Outcome length_area() {
    const EmpiricalSummary s = run_experiment("length_area", 5000, 100000, 4, kWorkers);
    const double ks = s.get("x_ks"), m = s.get("x_mean");
    const double rel = std::abs(m - 0.52303) / 0.52303;
    return {ks < 0.02 && rel < 0.02,
            fmt("KS=%.4f (<0.02), mean=%.5f vs 0.52303 (%.2f%%, <2%%); area KS vs Beta(3/4,3/4)=%.4f", ks, m, 100 * rel,
                s.get("y_ks"))};
}

Outcome beta_volume() {
    const EmpiricalSummary s = run_experiment("beta_volume", 10000, 10000, 5, kWorkers);
    const double ks = s.get("y_ks"), m = s.get("y_mean"), se = s.get("y_se"), v = s.get("y_var");
    const bool ks_ok = ks < 0.03, mean_ok = std::abs(m - 0.5) < 3 * se, var_ok = std::abs(v - 1.0 / 6) < 0.05 / 6;
    return {ks_ok && mean_ok && var_ok,
            fmt("KS=%.4f (<0.03 %s), mean=%.4f se=%.4f (%s), var=%.4f vs 0.1667 (%.1f%%, <5%% %s); exact finite-n law KS=%.4f",
                ks, ks_ok ? "ok" : "fail", m, se, mean_ok ? "ok" : "fail", v, 100 * std::abs(v * 6 - 1),
                var_ok ? "ok" : "fail", s.get("y_ks_exact_law"))};
}

Outcome delay_uniform() {
    const EmpiricalSummary s = run_experiment("delay_uniform", 5000, 10000, 6, kWorkers);
    const double ks = s.get("ratio_ks");
    return {ks < 0.03, fmt("KS=%.4f (<0.03); lattice floor for these distances=%.4f; mean=%.4f var=%.4f (1/3)", ks,
                           s.get("ratio_ks_discrete_floor"), s.get("ratio_mean"), s.get("ratio_var"))};
}

Outcome mean_distance() {
    const EmpiricalSummary s = run_experiment("mean_distance", 10000, 10000, 7, kWorkers);
    const double e = s.get("estimate");
    const double rel = std::abs(e - 1.82434) / 1.82434;
    return {rel < 0.05, fmt("estimate=%.4f se=%.4f vs 1.82434 (%.2f%%, <5%%); limit constant=%.5f; 1/(d-1) weights=%.4f",
                            e, s.get("estimate_se"), 100 * rel, s.get("limit"), s.get("estimate_exact_weights"))};
}

Outcome asymptotics() {
    const std::vector<int> ns{100, 400, 1600, 6400};
    const auto rs = asymptotic_diagnostics(ns);
    const double cu = 0.99940, cb = 4.18405;
    bool mono = true;
    std::string d;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (i > 0) {
            mono = mono && std::abs(rs[i].ratio_U - cu) < std::abs(rs[i - 1].ratio_U - cu);
            mono = mono && std::abs(rs[i].ratio_bias - cb) < std::abs(rs[i - 1].ratio_bias - cb);
        }
        d += fmt("n=%d U=%.4f bias=%.4f; ", rs[i].n, rs[i].ratio_U, rs[i].ratio_bias);
    }
    const double eu = std::abs(rs.back().ratio_U - cu) / cu, eb = std::abs(rs.back().ratio_bias - cb) / cb;
    return {mono && eu < 0.1 && eb < 0.1,
            d + fmt("monotone=%s; at 6400: %.1f%% and %.1f%% off (<10%%)", mono ? "yes" : "no", 100 * eu, 100 * eb)};
}

std::string invariant_failure(int n, std::uint64_t i) {
    RngStream rng(9, 1, i);
    const DelayedSample s = sample_delayed_with_unicycle(n, rng);
    const LabelledUnicycle& u = s.unicycle;
    const DelayedQuadrangulation& q = s.quad;
    if (u.map.n_faces() != 2 || u.map.n_edges() != n) return "unicycle shape";
    const CycleStats st = cycle_stats(u);
    if (st.length + st.external + st.internal != n) return "cycle stats";
    try {
        check_well_labelled(u.map, u.labels);
    } catch (const StructureError&) {
        return "labels";
    }
    if (q.map.n_vertices() - q.map.n_edges() + q.map.n_faces() != 2) return "euler";
    if (q.map.n_faces() != n || q.map.n_vertices() != n + 2 || !is_quadrangulation(q.map)) return "quadrangulation";
    int deg = 0;
    for (Face f = 0; f < q.map.n_faces(); ++f) deg += q.map.face_degree(f);
    if (deg != 4 * n) return "face degrees";
    const auto d = admissible_delays(q.map, q.v0, q.v1);
    if (std::find(d.begin(), d.end(), q.delay) == d.end()) return "delay";
    const VoronoiPartition c = voronoi_cells(q.map, q.v0, q.v1, q.delay);
    if (c.theta.size() + c.theta_bar.size() - c.boundary.size() != static_cast<std::size_t>(q.map.n_vertices()))
        return "partition";
    return {};
}

template <class Draw>
ChiSquared frequencies(const std::set<std::string>& support, int draws, Draw&& draw, bool& in_support) {
    std::map<std::string, long> hits;
    for (const auto& c : support) hits[c] = 0;
    for (int i = 0; i < draws; ++i) {
        auto it = hits.find(draw(i));
        if (it == hits.end()) {
            in_support = false;
            continue;
        }
        ++it->second;
    }
    std::vector<long> obs;
    for (const auto& [c, h] : hits) obs.push_back(h);
    return chi_squared_uniform(obs);
}

std::string steps_code(const std::vector<int>& s) { return std::string(s.begin(), s.end()); }

Outcome properties() {
    // Invariants.
    const std::vector<int> sizes{1, 2, 3, 5, 10, 30, 100, 300, 1000, 3000};
    const int samples = 10000;
    std::vector<std::string> fail(samples);
    parallel_for(samples, kWorkers, [&](int i) { fail[i] = invariant_failure(sizes[i % sizes.size()], i); });
    const long broken = std::count_if(fail.begin(), fail.end(), [](const std::string& s) { return !s.empty(); });
    std::string d = fmt("invariants: %ld/%d broken; ", broken, samples);
    bool ok = broken == 0;

    // Uniformity against enumeration.
    const int draws = 300000;
    bool in_support = true;
    double worst = 1;
    auto record = [&](const char* name, const ChiSquared& t) {
        worst = std::min(worst, t.p_value);
        d += fmt("%s p=%.3g; ", name, t.p_value);
    };
    for (int n = 1; n <= 3; ++n) {
        std::set<std::string> su, sm, sq;
        for (const auto& u : brute_force_unicycles(n)) su.insert(canonical_code(u));
        for (const auto& u : brute_force_marked_unicycles(n)) sm.insert(canonical_code(u.unicycle));
        for (const auto& q : brute_force_delayed_quadrangulations(n)) sq.insert(canonical_code(q));
        record(fmt("U_%d", n).c_str(), frequencies(su, draws, [&](int i) {
                   RngStream r(10, n, i);
                   return canonical_code(sample_unicycle(n, r));
               }, in_support));
        record(fmt("U*_%d", n).c_str(), frequencies(sm, draws, [&](int i) {
                   RngStream r(11, n, i);
                   return canonical_code(sample_marked_unicycle(n, r).unicycle);
               }, in_support));
        record(fmt("Q_%d", n).c_str(), frequencies(sq, draws, [&](int i) {
                   RngStream r(12, n, i);
                   return canonical_code(sample_delayed_quadrangulation(n, r));
               }, in_support));
        std::set<std::string> bridges;
        for (int i = 0; i < 20000; ++i) {
            RngStream r(13, n, i);
            bridges.insert(steps_code(sample_label_bridge(n, r)));
        }
        ok = ok && bridges.size() == size_of(central_trinomial(n));
        record(fmt("bridge_%d", n).c_str(), frequencies(bridges, draws, [&](int i) {
                   RngStream r(14, n, i);
                   return steps_code(sample_label_bridge(n, r));
               }, in_support));
        std::set<std::string> forests;
        for (int i = 0; i < 20000; ++i) {
            RngStream r(15, n, i);
            const auto w = sample_plane_forest(2 * n, n, r).word;
            forests.insert(std::string(w.begin(), w.end()));
        }
        ok = ok && forests.size() == size_of(forest_count(2 * n, n));
        record(fmt("forest_%d", n).c_str(), frequencies(forests, draws, [&](int i) {
                   RngStream r(16, n, i);
                   const auto w = sample_plane_forest(2 * n, n, r).word;
                   return std::string(w.begin(), w.end());
               }, in_support));
    }
    ok = ok && in_support && worst > 0.001;

    // Determinism across worker counts.
    bool same = true;
    for (const auto& name : experiment_names()) {
        std::ostringstream a, b;
        run_experiment(name, 500, 40, 17, 1).write_csv(a);
        run_experiment(name, 500, 40, 17, 5).write_csv(b);
        same = same && a.str() == b.str();
    }
    std::vector<std::string> one(40), many(40);
    auto draw = [](std::vector<std::string>& out, int workers) {
        parallel_for(40, workers, [&](int i) {
            RngStream r(18, 0, i);
            out[i] = to_json(sample_delayed_quadrangulation(400, r)).dump();
        });
    };
    draw(one, 1);
    draw(many, 6);
    same = same && one == many;
    ok = ok && same;
    return {ok, d + fmt("min p=%.3g (>0.001); support ok=%s; byte-identical across workers=%s", worst,
                        in_support ? "yes" : "no", same ? "yes" : "no")};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"exact counts vs exhaustive oracle, n<=4", exact_counts},
        {"bijection validity and cut/glue identity", bijection_validity},
        {"delayed quadrangulations are twice the unicycles", cardinality},
        {"cycle length limit law, n=5000, 1e5 samples", length_area},
        {"Beta(1/4,1/4) cell volume, n=1e4, 1e4 samples", beta_volume},
        {"delay uniform on [-d,d], n=5000, 1e4 samples", delay_uniform},
        {"mean two-point distance, n=1e4, 1e4 samples", mean_distance},
        {"asymptotic count ratios", asymptotics},
        {"property suites", properties},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failed += !o.pass;
        std::printf("criterion %zu: %s  %s  [%.1fs]  %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, secs,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
