#pragma once

#include "symmcouple/phi.hpp"
#include "symmcouple/report.hpp"

#include <memory>
#include <string>
#include <vector>

namespace symmcouple {

/// Convex increasing F on [0, infinity) with F(0) = 0 (Orlicz function).
/// Immutable after construction; cheap to copy.
class OrliczFunction {
  public:
    enum class Kind { Power, PowerLog1, SinLog, FromPhi, Tabulated };

    static OrliczFunction power(double p);  // u^p
    /// u^p (1 + |ln u|); convex for p >= (3 + sqrt 5)/2.
    static OrliczFunction power_log1(double p);
    /// u^p (1 + c sin(p ln u)); increasing for c < 1/sqrt 2, convex under the
    /// printed p constraint. Constructor audits convexity on a grid.
    static OrliczFunction sin_log(double p, double c);
    /// The F-tilde construction: F(u) = int_0^u Ftilde(t)/t dt with
    /// Ftilde(t) = t/phi^{-1}(1) (t <= 1), 1/phi^{-1}(1/t) (t >= 1).
    static OrliczFunction from_phi(const PhiFunction& phi);
    static OrliczFunction tabulated(std::vector<double> us, std::vector<double> Fs);

    double operator()(double u) const;

    /// Inverse by bisection: 1e-12 absolute for arguments in [0,1],
    /// 1e-10 relative above 1.
    double inverse(double y) const;

    /// sup of F(2u)/F(u) over a log grid of [u0, u_max].
    double delta2_constant(double u0 = 1.0, double u_max = 0x1p40) const;

    /// FromPhi kind: the generating Ftilde; other kinds: F itself.
    double tilde(double u) const;

    /// Numerical Legendre transform F*(v) = sup_u (uv - F(u)); audit helper.
    double conjugate(double v) const;

    Kind kind() const;
    double exponent() const;  // the p parameter where one exists, else 0
    std::string describe() const;

  private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit OrliczFunction(std::shared_ptr<const Impl> impl);
};

/// Lemma-1(b)/Proposition-3 style test. For every u in u_grid searches, on a
/// log grid of thresholds t0 <= t0_cap, for the earliest t0 such that
/// F(tu)/(F(t) u^p) stays within [1/C, C] for all grid t in [t0, t_top];
/// also evaluates the Proposition-3 form F(a)/(F(a N^{-1/p}) N) on the same
/// large-argument grid. details lists per-u t0 (or failure).
EquivalenceReport regvar_orlicz_test(const OrliczFunction& F, double p, double C,
                                     const std::vector<double>& u_grid,
                                     double t0_cap = 0x1p30, double t_top = 0x1p60);

/// Kalton Psi quantity: greedy maximum chain a_1 < ... < a_N from a_grid with
/// a_k/a_{k-1} >= 2 and F(a_k u)/F(a_k) deviating from u^p by the factor C on
/// every link. Lower bound for the true supremum restricted to the grid.
int kalton_psi(const OrliczFunction& F, double p, double u, double C,
               const std::vector<double>& a_grid);

}  // namespace symmcouple
