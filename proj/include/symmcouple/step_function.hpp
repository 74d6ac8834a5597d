#pragma once

#include <functional>
#include <string>
#include <vector>

namespace symmcouple {

/// Closed-open bookkeeping is irrelevant for measures; intervals are (lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
};

/// Disjoint subintervals of [0,1], total length <= 1.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<Interval> intervals);

    const std::vector<Interval>& intervals() const { return intervals_; }
    std::size_t size() const { return intervals_.size(); }
    const Interval& operator[](std::size_t i) const { return intervals_[i]; }
    double total_length() const;

  private:
    std::vector<Interval> intervals_;  // sorted by lo, pairwise disjoint
};

/// Nonnegative-position piecewise-constant function on [0,1].
///
/// breaks: 0 = b_0 < b_1 < ... < b_n = 1, value v_i on (b_{i-1}, b_i].
/// Values are stored signed; norms and rearrangements take |.| internally.
/// Immutable after construction and safe to share across threads.
class StepFunction {
  public:
    StepFunction(std::vector<double> breaks, std::vector<double> values);

    static StepFunction constant(double v);
    /// Indicator of (a, b] scaled by c.
    static StepFunction indicator(double a, double b, double c = 1.0);

    std::size_t pieces() const { return values_.size(); }
    const std::vector<double>& breaks() const { return breaks_; }
    const std::vector<double>& values() const { return values_; }
    double piece_length(std::size_t i) const { return breaks_[i + 1] - breaks_[i]; }

    /// Value at t in (0,1] (value of the piece whose half-open interval holds t).
    double value_at(double t) const;

    double support_measure() const;
    /// Exact integral of the signed values.
    double integral() const;
    /// Exact integral of |x|.
    double integral_abs() const;

    /// m({t : |x(t)| > lambda}), exact sum of interval lengths.
    double distribution(double lambda) const;

    /// Non-increasing rearrangement of |x| (stable sort of value/length pairs,
    /// ties kept in original interval order; no merging of equal values).
    StepFunction rearrange() const;

    /// True if values are non-increasing and nonnegative.
    bool is_nonincreasing() const;

    /// x**(t) = (1/t) int_0^t x*(s) ds for t in (0,1]. Exact.
    double double_star(double t) const;

    /// int_0^t x*(s) ds, exact (t in [0,1]).
    double rearranged_prefix_integral(double t) const;

    /// sigma_t: s -> x(s/t) restricted to [0,1]; exact break rescaling.
    StepFunction dilate(double t) const;

    /// (sum |v_i|^p len_i)^{1/p}; p = infinity -> max |v_i| on the support.
    double lp_norm(double p) const;

    StepFunction scaled(double c) const;
    StepFunction abs() const;
    /// Merge adjacent pieces with equal values.
    StepFunction simplified() const;

    /// CSV with header "break,value"; rows are right endpoints and values.
    std::string to_csv() const;
    static StepFunction from_csv(const std::string& text);

  private:
    std::vector<double> breaks_;
    std::vector<double> values_;
    void validate() const;
};

/// x and y re-expressed on the union of their breaks.
struct CommonRefinement {
    std::vector<double> breaks;   // size m+1
    std::vector<double> x_values; // size m
    std::vector<double> y_values; // size m
};
CommonRefinement common_refine(const StepFunction& x, const StepFunction& y);

/// Pointwise combination on the common refinement.
StepFunction combine(const StepFunction& x, const StepFunction& y,
                     const std::function<double(double, double)>& f);

/// Shortest round-tripping decimal string for a double.
std::string format_double(double v);
double parse_double(const std::string& s);

}  // namespace symmcouple
