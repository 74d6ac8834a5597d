#pragma once

#include <cmath>
#include <cstdint>

namespace symmcouple {

/// Deterministic splitmix64 generator. Used instead of std:: distributions so
/// that every report is bit-identical across runs and thread counts.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Log-uniform in [lo, hi]; requires 0 < lo <= hi.
    double log_uniform(double lo, double hi) {
        if (lo >= hi) return lo;
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return n ? next_u64() % n : 0; }

    /// Independent stream for trial #idx under a base seed.
    static Rng for_trial(std::uint64_t seed, std::uint64_t idx) {
        Rng r(seed ^ (0x9e3779b97f4a7c15ull * (idx + 0x632be59bd9b4e019ull)));
        r.next_u64();
        r.next_u64();
        return r;
    }

  private:
    std::uint64_t state_;
};

}  // namespace symmcouple
