#pragma once

#include <cstdint>
#include <random>

#include <gmpxx.h>

namespace unimap {

std::uint64_t splitmix64(std::uint64_t& state);

/// Generator for one (master seed, stream, sample) triple. The seed is
/// obtained by feeding the three words through splitmix64.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index, std::uint64_t sample_index = 0);

    std::mt19937_64& engine() noexcept { return engine_; }
    std::uint64_t operator()() { return engine_(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);
    /// Uniform integer in [0, n) for n > 0, by rejection on random bits.
    mpz_class below(const mpz_class& n);
    bool coin() { return (engine_() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

}  // namespace unimap
