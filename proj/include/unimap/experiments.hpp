#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace unimap {

class UnknownExperiment : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct EmpiricalSummary {
    std::string name;
    int n = 0;
    int replicas = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;  // one per replica, in replica order
    std::vector<std::pair<std::string, double>> summary;

    double get(const std::string& key) const;
    void write_csv(std::ostream& out) const;
};

std::vector<std::string> experiment_names();

/// Runs replicas 0..replicas-1, replica i drawing from stream (seed, i). The
/// result does not depend on workers.
EmpiricalSummary run_experiment(const std::string& name, int n, int replicas, std::uint64_t seed, int workers = 1);

/// KS distance between the exact law of A/n (external area over size) and
/// Beta(alpha, alpha), for uniform rooted (or marked) unicycles with n edges.
/// Floating-point evaluation of the exact weights.
double area_law_ks(int n, bool marked, double alpha);

/// KS distance between U(-1,1) and the mixture over the given distances d of
/// the uniform laws on {(-d+2)/d, (-d+4)/d, ..., (d-2)/d}.
double discrete_delay_ks_floor(const std::vector<int>& distances);

double mean(const std::vector<double>& v);
double variance(const std::vector<double>& v);  // unbiased
double median(std::vector<double> v);

/// Runs f(i) for i in [0, count) on up to workers threads.
template <class F>
void parallel_for(int count, int workers, F&& f);

}  // namespace unimap

#include <atomic>
#include <exception>
#include <thread>

namespace unimap {

template <class F>
void parallel_for(int count, int workers, F&& f) {
    workers = std::max(1, std::min(workers, count));
    if (workers == 1) {
        for (int i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i; !failed && (i = next++) < count;) {
                try {
                    f(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace unimap
