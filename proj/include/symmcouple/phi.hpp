#pragma once

#include "symmcouple/report.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace symmcouple {

/// Quasi-concave function phi on [0,1]: non-decreasing, phi(0) = 0, phi(t)/t
/// non-increasing. Immutable after construction; cheap to copy (shared state).
class PhiFunction {
  public:
    enum class Kind { Power, PowerLog, TLog, Theorem6, PthRoot, Tabulated, Envelope, Tilde };

    /// t^alpha, alpha in (0,1].
    static PhiFunction power(double alpha);
    /// t * log(e/t).
    static PhiFunction tlog();
    /// t^alpha with iterated-log factors; offsets are chosen so the result is
    /// quasi-concave on all of (0,1] and the constructor audits that.
    static PhiFunction power_log(double alpha, std::vector<double> log_exponents);
    /// Piecewise-linear phi with phi'(t) = 2^k on (t_{k+1}, t_k] (t levels
    /// decreasing, t_0 = 1; the last slope extends down to 0).
    static PhiFunction theorem6(std::vector<double> t_levels);
    static PhiFunction pth_root(PhiFunction base, double p);
    /// Piecewise-linear interpolation of samples (prepends (0,0)).
    static PhiFunction tabulated(std::vector<double> ts, std::vector<double> phis);
    /// t / base(t); quasi-concave whenever base is.
    static PhiFunction tilde_of(PhiFunction base);

    double operator()(double t) const;

    /// Exact or quadrature value of int_a^b phi(s)^p ds/s, 0 <= a < b <= 1.
    /// Closed forms for Power and piecewise-linear kinds with integer p.
    double integral_pow_over_s(double a, double b, double p) const;

    /// Dyadic audit grid {2^-j : j = 0..j_max}: phi non-decreasing and
    /// phi(t)/t non-increasing. Throws validation_error on failure.
    void validate_quasi_concave(int j_max = 50) const;
    bool is_quasi_concave(int j_max = 50) const;

    /// Inverse on (0, phi(1)] by bisection (1e-12 absolute on arguments).
    double inverse(double y) const;

    Kind kind() const;
    const std::vector<double>& theorem6_levels() const;  // Theorem6 kind only
    std::string describe() const;

    struct Impl;  // opaque shared state

  private:
    std::shared_ptr<const Impl> impl_;
    explicit PhiFunction(std::shared_ptr<const Impl> impl);
    friend PhiFunction concave_envelope(const PhiFunction&);
};

/// N -> tau(N) in (0,1], non-increasing; closed form or explicit list.
class Schedule {
  public:
    static Schedule pow2();                       // tau(N) = 2^-N
    static Schedule constant(double v);           // tau(N) = min(v, 1)
    static Schedule from_list(std::vector<double> taus);  // tau(1), tau(2), ...

    /// nullopt when the schedule has no entry for N (finite list exhausted).
    std::optional<double> tau(int N) const;
    std::string describe() const;

  private:
    enum class Kind { Pow2, Const, List } kind_;
    double value_ = 1.0;
    std::vector<double> list_;
};

/// Dilation index estimates with the regression window and residuals.
struct DilationIndices {
    double gamma = 0.0;         // lower index (t -> 0)
    double delta = 0.0;         // upper index (t -> infinity)
    double gamma_residual = 0.0;
    double delta_residual = 0.0;
    int j_lo = 0, j_hi = 0;     // regression window, t = 2^{-j} resp. 2^{j}
};

/// phi_bar(t) = sup_s phi(st)/phi(s), approximated on a log grid of s.
double dilation_function(const PhiFunction& phi, double t);

/// Log-log regression estimate of (gamma_phi, delta_phi); clamped so that
/// 0 <= gamma <= delta <= 1.
DilationIndices dilation_indices(const PhiFunction& phi);

/// t -> inf_s (1 + t/s) phi(s) over a log grid of s containing the audit grid;
/// satisfies phi <= envelope <= 2 phi on the audit grid.
PhiFunction concave_envelope(const PhiFunction& phi);

/// Constants (A, kappa) with sup_s phi(st)/phi(s) <= A t^kappa audited on the
/// dyadic grid; kappa = 0.9 * gamma_hat. Throws if gamma_hat <= 0.01.
struct PowerBound {
    double A = 0.0;
    double kappa = 0.0;
};
PowerBound power_bound(const PhiFunction& phi);

/// Ratio envelope of int_0^t phi^p(s)/s ds against phi^p(t) on the dyadic grid.
EquivalenceReport kps_check(const PhiFunction& phi, double p);

/// max over t in {2^-j : j = 10..40, tu <= 1} of phi(tu)/phi(t).
double limsup_ratio(const PhiFunction& phi, double u);

/// Regular-variation test: phi(Nt)/(phi(t) N^{1/p}) for N <= N_max and t in a
/// log grid of (0, tau(N)]. p = infinity reads N^{1/p} = 1. Ns with an empty
/// grid are reported as skipped, not failures.
EquivalenceReport regvar_test(const PhiFunction& phi, double p, const Schedule& sched,
                              double C, int N_max);

}  // namespace symmcouple
