#pragma once

#include <cstdint>
#include <random>

namespace quandlekit {

// Seeded generator for every sampling operation. The distribution is done by
// hand so identical seeds give identical streams regardless of the standard
// library's uniform_int_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform-ish draw in [lo, hi]; modulo bias is irrelevant at the ranges
    // used here.
    long long next_in(long long lo, long long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(engine_() % span);
    }

    bool next_bool() { return (engine_() & 1u) != 0; }

private:
    std::mt19937_64 engine_;
};

}  // namespace quandlekit
