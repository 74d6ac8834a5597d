#pragma once

#include "symmcouple/spaces.hpp"
#include "symmcouple/step_function.hpp"
#include "symmcouple/weight.hpp"

#include <vector>

namespace symmcouple {

/// K(t, x; L_1, L_infty) = int_0^min(t,1) x*(s) ds, exact.
double k_l1_linf(const StepFunction& x, double t);

/// K_p(t, x) = (int |x|^p min(1, (t w)^p))^{1/p}, the exact p-split value for
/// the couple (L_p, L_p(w)); K_p <= K <= 2^{1-1/p} K_p.
double k_lp_weighted(double p, const Weight& w, const StepFunction& x, double t);

/// Generic K-functional for the lattice couple (X, X(w)) by convex
/// minimization over splits restricted to 0 <= g <= |x| on the common break
/// refinement. The restriction is valid for lattice couples on one measure
/// space: replacing (x0, x1) by sign-aligned pointwise-dominated truncations
/// does not increase either norm. Coordinate descent with golden-section line
/// search per cell, multi-start from g = 0, g = |x| and the best threshold
/// split g = |x| chi_{w <= s}.
struct KGenericResult {
    double value = 0.0;
    int sweeps = 0;          // total sweeps over all starts
    bool converged = true;   // false when the sweep cap was hit
    int starts = 0;
};
KGenericResult k_generic(const SpaceSpec& space, const Weight& w, const StepFunction& x,
                         double t, double tol = 1e-7, int max_sweeps = 500);

/// K-curve over a log-spaced t grid. k non-decreasing, k/t non-increasing.
struct KCurve {
    std::vector<double> t;
    std::vector<double> k;
    int total_sweeps = 0;
    bool converged = true;
};
KCurve k_curve(const SpaceSpec& space, const Weight& w, const StepFunction& x,
               double t_min, double t_max, int points, double tol = 1e-7);

/// Discrete K-method norm: weighted l_q norm of the K-curve on the grid.
double k_method_norm(const SpaceSpec& space, const Weight& w, const StepFunction& x,
                     double q, const std::vector<double>& t_grid,
                     const std::vector<double>& grid_weights, double tol = 1e-7);

}  // namespace symmcouple
