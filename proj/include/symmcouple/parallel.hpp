#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <thread>
#include <vector>

namespace symmcouple {

/// Extremes of a trial-indexed ratio stream. Ties break toward the smaller
/// trial index, so the result is independent of the thread count.
struct TrialExtremes {
    double min_ratio = 0.0, max_ratio = 0.0;
    long long min_idx = -1, max_idx = -1;
    long long valid = 0;  // trials that produced a ratio (NaN = skipped)
};

inline int effective_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// fn(idx) -> ratio (NaN to skip the trial). Deterministic for any `threads`.
template <class Fn>
TrialExtremes parallel_trial_extremes(long long trials, int threads, Fn&& fn) {
    threads = effective_threads(threads);
    if (threads > trials) threads = trials > 0 ? static_cast<int>(trials) : 1;

    std::vector<TrialExtremes> local(static_cast<std::size_t>(threads));
    auto run_chunk = [&](int who) {
        TrialExtremes acc;
        acc.min_ratio = std::numeric_limits<double>::infinity();
        acc.max_ratio = -std::numeric_limits<double>::infinity();
        for (long long i = who; i < trials; i += threads) {
            double r = fn(i);
            if (std::isnan(r)) continue;
            ++acc.valid;
            if (r < acc.min_ratio || (r == acc.min_ratio && i < acc.min_idx)) {
                acc.min_ratio = r;
                acc.min_idx = i;
            }
            if (r > acc.max_ratio || (r == acc.max_ratio && i < acc.max_idx)) {
                acc.max_ratio = r;
                acc.max_idx = i;
            }
        }
        local[static_cast<std::size_t>(who)] = acc;
    };

    if (threads == 1) {
        run_chunk(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(run_chunk, t);
        for (auto& th : pool) th.join();
    }

    TrialExtremes out;
    out.min_ratio = std::numeric_limits<double>::infinity();
    out.max_ratio = -std::numeric_limits<double>::infinity();
    for (const auto& acc : local) {
        if (acc.min_idx >= 0 &&
            (acc.min_ratio < out.min_ratio ||
             (acc.min_ratio == out.min_ratio && acc.min_idx < out.min_idx)))
            out.min_ratio = acc.min_ratio, out.min_idx = acc.min_idx;
        if (acc.max_idx >= 0 &&
            (acc.max_ratio > out.max_ratio ||
             (acc.max_ratio == out.max_ratio && acc.max_idx < out.max_idx)))
            out.max_ratio = acc.max_ratio, out.max_idx = acc.max_idx;
        out.valid += acc.valid;
    }
    return out;
}

}  // namespace symmcouple
