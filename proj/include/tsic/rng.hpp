#pragma once

#include <cstdint>
#include <random>

namespace tsic {

// Seeded engine with explicit sampling helpers. mt19937_64 output is fully specified by
// the standard, and the helpers below avoid std::uniform_int_distribution, whose mapping
// is implementation-defined; together this keeps sweeps byte-reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    // Uniform in [0, n) by rejection sampling.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do { v = eng_(); } while (v >= limit);
        return v % n;
    }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (eng_() & 1ull) != 0; }

private:
    std::mt19937_64 eng_;
};

}  // namespace tsic
