#include "unimap/rng.hpp"

#include <stdexcept>
#include <vector>

namespace unimap {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t sample) {
    std::uint64_t s = master;
    std::uint64_t h = splitmix64(s);
    s = h ^ stream;
    h = splitmix64(s);
    s = h ^ sample;
    return splitmix64(s);
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index, std::uint64_t sample_index)
    : engine_(mix_seed(master_seed, stream_index, sample_index)) {}

std::uint64_t RngStream::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("below(0)");
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
}

mpz_class RngStream::below(const mpz_class& n) {
    if (n <= 0) throw std::invalid_argument("below needs a positive bound");
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    std::vector<std::uint64_t> buf(words);
    mpz_class r;
    do {
        for (auto& w : buf) w = engine_();
        if (bits % 64) buf.back() &= (std::uint64_t{1} << (bits % 64)) - 1;
        mpz_import(r.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buf.data());
    } while (r >= n);
    return r;
}

}  // namespace unimap
