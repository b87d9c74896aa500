#pragma once

#include <cstdint>
#include <random>

namespace lapspec {

// SplitMix64 finalizer. Used both to derive independent per-trial seeds from a master
// seed (counter-based splitting, so trial i's stream is the same no matter which worker
// runs it) and to decorrelate user-supplied seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) {
    return mix64(master ^ mix64(counter + 1));
}

// Deterministic uniform sampling on top of std::mt19937_64. The engine's output sequence
// is pinned by the standard; the [0,1) mapping below is ours, so the stream is identical
// on every platform (std::uniform_real_distribution would not guarantee that).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

    // Uniform in [0, 1), 53-bit resolution.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in (lo, hi]; hi is attainable, lo is not.
    double open_closed(double lo, double hi) { return hi - unit() * (hi - lo); }

    // Uniform in [lo, hi).
    double halfopen(double lo, double hi) { return lo + unit() * (hi - lo); }

    // Uniform integer in [lo, hi], inclusive.
    std::int64_t integer_in(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        // Rejection-free modulo is fine here: spans are tiny compared to 2^64, and
        // reproducibility matters more than the ~span/2^64 bias.
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace lapspec
