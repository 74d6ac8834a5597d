#pragma once

#include "symmcouple/phi.hpp"
#include "symmcouple/step_function.hpp"

#include <string>
#include <vector>

namespace symmcouple {

/// Positive step weight on [0,1] with its dyadic level-set decomposition
/// M_k = {t : w(t) in [2^k, 2^{k+1})} and the sequence (w_r) of level-set
/// measures sorted non-increasingly. Caches are built once; immutable after.
class Weight {
  public:
    struct Level {
        int k = 0;                     // dyadic exponent
        double measure = 0.0;          // m(M_k), exact interval sum
        std::vector<Interval> pieces;  // the set M_k
    };

    explicit Weight(StepFunction base);

    /// 1/t discretized on dyadic breaks to depth J: w = 2^j on (2^-j-1, 2^-j].
    static Weight recip_dyadic(int depth = 30);
    /// Geometric level measures (q-1) q^-N on levels N = 1..J-1, remainder on
    /// level J; w = 2^N on M_N.
    static Weight dyadic_geom(double q, int depth = 30);

    const StepFunction& base() const { return base_; }

    /// Nonempty levels sorted by k ascending; measures sum to 1 exactly.
    const std::vector<Level>& levels() const { return levels_; }

    /// (w_r), r = 1,2,...: level measures sorted non-increasing (full list).
    const std::vector<double>& wr() const { return wr_; }
    /// Level index k backing rank r (ties broken by smaller |k|).
    const std::vector<int>& wr_level() const { return wr_level_; }

    /// M-bar_r: the level set of rank r (1-based) as an interval set.
    const std::vector<Interval>& rearranged_level(std::size_t r) const;

    /// Dynamic-range proxy for the paper's non-triviality (w or 1/w
    /// unbounded): max/min value >= threshold (default 2^20).
    bool is_nontrivial(double threshold = 0x1p20) const;

    std::string describe() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

  private:
    StepFunction base_;
    std::vector<Level> levels_;
    std::vector<double> wr_;
    std::vector<int> wr_level_;
    std::string label_;
};

/// First R entries of (w_r); shorter when fewer levels exist, never padded.
std::vector<double> wr_sequence(const Weight& w, int R);

/// Fast-weight condition: m(M_k) 2^k >= c0 for all present levels k >= k0.
/// Errors when the weight has fewer than k0 nonempty levels; vacuous pass
/// (flagged) when levels exist but none has k >= k0.
struct FastWeightReport {
    bool pass = false;
    bool vacuous = false;
    int worst_k = 0;
    double worst_value = 0.0;
};
FastWeightReport fast_weight_check(const Weight& w, double c0, int k0);

/// Theorem-4.3 weight constructor: m(M_2) = min(tau(2), 1/4),
/// m(M_N) = min(tau(N), m(M_{N-1})/2) for N > 2, M_1 = remainder, w = 2^N on
/// M_N. Truncates (with a flag) if the schedule produces a zero-length
/// interval before N_max.
struct ScheduleWeight {
    Weight weight;
    bool truncated = false;
    int levels_built = 0;
};
ScheduleWeight weight_from_schedule(const Schedule& sched, int N_max);

/// tau(N) = w_N built from the weight's rank sequence.
Schedule schedule_from_weight(const Weight& w);

}  // namespace symmcouple
