// unimap: counting, sampling and bijection checks for well-labelled unicycles.
#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

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

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Output {
    std::unique_ptr<std::ofstream> file;
    std::ostream* out = &std::cout;

    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") return;
        file = std::make_unique<std::ofstream>(path);
        if (!*file) throw ValidationError("--out: cannot open " + path);
        out = file.get();
    }
    std::ostream& operator*() { return *out; }
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw ValidationError(msg);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), "--in: cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError("--in: " + std::string(e.what()));
    }
}

struct CountOpts {
    int n = 0;
    int k = 0;
    bool marked = false;
};

int run_count(const CountOpts& o) {
    require(o.n >= 1, "--n must be at least 1");
    if (o.k != 0) {
        require(o.k >= 1 && o.k <= o.n, "--k must lie in 1..n");
        std::cout << (o.marked ? count_marked(o.n, o.k) : 2 * o.n * count_marked(o.n, o.k) / o.k) << '\n';
    } else {
        std::cout << (o.marked ? count_marked_total(o.n) : count_unicycles(o.n)) << '\n';
    }
    return 0;
}

int run_diagnostics(const std::vector<int>& ns) {
    for (int n : ns) require(n >= 1, "--n values must be positive");
    std::cout << std::setprecision(10) << "n,ratio_U,ratio_Umarked,ratio_bias\n";
    for (const auto& r : asymptotic_diagnostics(ns))
        std::cout << r.n << ',' << r.ratio_U << ',' << r.ratio_Umarked << ',' << r.ratio_bias << '\n';
    std::cout << "limit," << limit_ratio_U() << ',' << limit_ratio_Umarked() << ',' << limit_ratio_bias() << '\n';
    return 0;
}

struct SampleOpts {
    int n = 0;
    int count = 1;
    std::uint64_t seed = 0;
    std::string kind = "delayed-quad";
    std::string out;
    bool stats_only = false;
    int workers = 1;
};

int run_sample(const SampleOpts& o) {
    require(o.n >= 1, "--n must be at least 1");
    require(o.count >= 0, "--count must be nonnegative");
    require(o.workers >= 1, "--workers must be at least 1");
    std::vector<std::string> lines(o.count);
    parallel_for(o.count, o.workers, [&](int i) {
        RngStream rng(o.seed, static_cast<std::uint64_t>(i));
        std::ostringstream row;
        if (o.kind == "marked-unicycle") {
            const MarkedUnicycle u = sample_marked_unicycle(o.n, rng);
            const CycleStats c = cycle_stats(u);
            if (o.stats_only)
                row << o.n << ',' << c.length << ',' << c.external << ',' << c.internal << ",,";
            else
                row << to_json(u).dump();
        } else if (o.kind == "unicycle") {
            const LabelledUnicycle u = sample_unicycle(o.n, rng);
            const CycleStats c = cycle_stats(u);
            if (o.stats_only)
                row << o.n << ',' << c.length << ',' << c.external << ',' << c.internal << ",,";
            else
                row << to_json(u).dump();
        } else {
            const DelayedSample s = sample_delayed_with_unicycle(o.n, rng);
            const CycleStats c = cycle_stats(s.unicycle);
            if (o.stats_only)
                row << o.n << ',' << c.length << ',' << c.external << ',' << c.internal << ',' << s.quad.delay << ','
                    << bfs_distances(s.quad.map, s.quad.v0)[s.quad.v1];
            else
                row << to_json(s.quad).dump();
        }
        lines[i] = row.str();
    });
    Output out(o.out);
    if (o.stats_only) *out << "n,k,A,Abar,delay,dist_v0_v1\n";
    for (const auto& l : lines) *out << l << '\n';
    return 0;
}

struct BijectionOpts {
    int n = 3;
    int random = 0;
    int size = 500;
    std::uint64_t seed = 0;
    std::string in;
};

int run_bijection_check(const BijectionOpts& o) {
    long checked = 0, failed = 0;
    auto check = [&](const MarkedUnicycle& u) {
        ++checked;
        if (!consistency_check(u)) ++failed;
    };
    if (!o.in.empty()) {
        std::ifstream in(o.in);
        require(static_cast<bool>(in), "--in: cannot open " + o.in);
        for (std::string line; std::getline(in, line);) {
            if (line.empty()) continue;
            try {
                check(marked_unicycle_from_json(json::parse(line)));
            } catch (const json::exception& e) {
                throw ValidationError("--in: " + std::string(e.what()));
            }
        }
    } else if (o.random > 0) {
        require(o.size >= 1, "--size must be at least 1");
        for (int i = 0; i < o.random; ++i) {
            RngStream rng(o.seed, static_cast<std::uint64_t>(i));
            check(sample_marked_unicycle(o.size, rng));
        }
    } else {
        require(o.n >= 1 && o.n <= 4, "--n must lie in 1..4");
        for (const MarkedUnicycle& u : brute_force_marked_unicycles(o.n)) check(u);
        std::set<std::string> image;
        long unicycles = 0, not_quad = 0;
        for (const LabelledUnicycle& u : brute_force_unicycles(o.n)) {
            ++unicycles;
            for (int orient : {0, 1}) {
                const DelayedQuadrangulation q = cvs_unicycle(u, orient);
                if (q.map.n_faces() != o.n || !is_quadrangulation(q.map)) ++not_quad;
                image.insert(canonical_code(q));
            }
        }
        std::cout << "unicycles," << unicycles << "\nimage_codes," << image.size() << "\nnot_quadrangulation,"
                  << not_quad << '\n';
        if (o.n <= 3)
            std::cout << "delayed_quadrangulations," << brute_force_delayed_quadrangulations(o.n).size() << '\n';
    }
    std::cout << "checked," << checked << "\nfailed," << failed << '\n';
    return failed == 0 ? 0 : 1;
}

struct VoronoiOpts {
    std::string in;
    std::optional<int> delta;
};

int run_voronoi(const VoronoiOpts& o) {
    require(!o.in.empty(), "--in is required");
    DelayedQuadrangulation q = [&] {
        try {
            return delayed_quad_from_json(read_json_file(o.in));
        } catch (const FormatError& e) {
            throw ValidationError(std::string("--in: ") + e.what());
        }
    }();
    const int delta = o.delta.value_or(q.delay);
    const VoronoiPartition p = voronoi_cells(q.map, q.v0, q.v1, delta);
    json j = {{"delta", delta},
              {"distance", bfs_distances(q.map, q.v0)[q.v1]},
              {"vertices", q.map.n_vertices()},
              {"theta", p.theta},
              {"theta_bar", p.theta_bar},
              {"boundary", p.boundary}};
    std::cout << j.dump() << '\n';
    return 0;
}

struct StatsOpts {
    std::string experiment;
    int n = 0;
    int replicas = 0;
    std::uint64_t seed = 0;
    std::string out;
    int workers = 1;
};

int run_stats(const StatsOpts& o) {
    require(o.n >= 1, "--n must be at least 1");
    require(o.replicas >= 2, "--replicas must be at least 2");
    require(o.workers >= 1, "--workers must be at least 1");
    EmpiricalSummary s;
    try {
        s = run_experiment(o.experiment, o.n, o.replicas, o.seed, o.workers);
    } catch (const UnknownExperiment& e) {
        throw ValidationError(std::string("--experiment: ") + e.what());
    }
    Output out(o.out);
    s.write_csv(*out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Well-labelled unicycles, delayed quadrangulations and their limit laws"};
    app.require_subcommand(1);

    CountOpts count;
    auto* c = app.add_subcommand("count", "Exact number of rooted well-labelled unicycles with n edges (or marked ones with --marked); --k restricts the cycle length.");
    c->add_option("--n", count.n, "number of edges")->required();
    c->add_option("--k", count.k, "cycle length");
    c->add_flag("--marked", count.marked, "count unicycles marked on their cycle instead of rooted ones");

    std::vector<int> diag_n;
    auto* d = app.add_subcommand("diagnostics", "Exact-count ratios against the asymptotic constants for #U_n, #U*_n and their quotient, as CSV.");
    d->add_option("--n", diag_n, "one or more sizes")->required();

    SampleOpts sample;
    auto* s = app.add_subcommand("sample", "Exact uniform samples: rooted unicycles, marked unicycles, or delayed quadrangulations through the Miermont bijection.");
    s->add_option("--n", sample.n, "number of edges (faces for delayed-quad)")->required();
    s->add_option("--count", sample.count, "number of samples");
    s->add_option("--seed", sample.seed, "master seed");
    s->add_option("--kind", sample.kind, "unicycle, marked-unicycle or delayed-quad")
        ->check(CLI::IsMember({"unicycle", "marked-unicycle", "delayed-quad"}));
    s->add_option("--out", sample.out, "output file (JSONL or CSV); stdout by default");
    s->add_flag("--stats-only", sample.stats_only, "emit n,k,A,Abar,delay,dist_v0_v1 rows instead of maps");
    s->add_option("--workers", sample.workers, "worker threads");

    BijectionOpts bij;
    auto* b = app.add_subcommand("bijection-check", "Checks that cutting a marked unicycle into a vertebrate, building its quadrilateral with geodesic sides and gluing it back gives the delayed quadrangulation of the unicycle. Runs over all unicycles with --n edges, --random samples of --size edges, or a JSONL file.");
    b->add_option("--n", bij.n, "exhaustive size (1..4)");
    b->add_option("--random", bij.random, "number of random marked unicycles");
    b->add_option("--size", bij.size, "size of the random unicycles");
    b->add_option("--seed", bij.seed, "master seed");
    b->add_option("--in", bij.in, "JSONL file of marked unicycles");

    VoronoiOpts vor;
    auto* v = app.add_subcommand("voronoi", "Delayed Voronoi cells of the two marked vertices of a delayed quadrangulation read from JSON.");
    v->add_option("--in", vor.in, "delayed quadrangulation JSON file")->required();
    v->add_option("--delta", vor.delta, "delay (defaults to the stored one)");

    StatsOpts st;
    auto* x = app.add_subcommand("stats", "Monte Carlo experiments on the limit laws: length_area (cycle length and area of marked unicycles), beta_volume (volume of a delayed Voronoi cell), voronoi_consistency, delay_uniform, mean_distance. CSV: one row per replica, then a summary block.");
    x->add_option("--experiment", st.experiment, "experiment name")->required();
    x->add_option("--n", st.n, "size")->required();
    x->add_option("--replicas", st.replicas, "number of replicas")->required();
    x->add_option("--seed", st.seed, "master seed");
    x->add_option("--out", st.out, "CSV output file; stdout by default");
    x->add_option("--workers", st.workers, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c) return run_count(count);
        if (*d) return run_diagnostics(diag_n);
        if (*s) return run_sample(sample);
        if (*b) return run_bijection_check(bij);
        if (*v) return run_voronoi(vor);
        if (*x) return run_stats(st);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const StructureError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const MapError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const BijectionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
