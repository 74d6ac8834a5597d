#pragma once

#include "symmcouple/orlicz.hpp"
#include "symmcouple/phi.hpp"
#include "symmcouple/step_function.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symmcouple {

/// A symmetric-space norm on step functions. Construction validates the
/// parameters (Lorentz requires gamma_hat > 0; Marcinkiewicz requires a
/// quasi-concave phi). Stateless evaluation; safe to share.
class SpaceSpec {
  public:
    enum class Kind { Lorentz, LambdaPhi, Marcinkiewicz, Orlicz, Lp };

    static SpaceSpec lorentz(double p, PhiFunction phi);
    static SpaceSpec lambda_phi(PhiFunction phi);
    static SpaceSpec marcinkiewicz(PhiFunction phi);
    static SpaceSpec orlicz(OrliczFunction F);
    static SpaceSpec lp(double p);

    Kind kind() const { return kind_; }
    double p() const { return p_; }
    const PhiFunction& phi() const;
    const OrliczFunction& F() const;
    const DilationIndices& phi_indices() const;  // Lorentz kind only
    std::string describe() const;

  private:
    SpaceSpec() = default;
    Kind kind_ = Kind::Lp;
    double p_ = 1.0;
    std::optional<PhiFunction> phi_;
    std::optional<OrliczFunction> F_;
    std::optional<DilationIndices> indices_;
};

/// The norm of x in the given space. Exact where the spec promises exactness
/// (Lp, Lambda_phi Stieltjes form, Lorentz with closed-form phi^p integrals);
/// bisection to 1e-12 relative for the Luxemburg norm.
double space_norm(const SpaceSpec& space, const StepFunction& x);

/// ||chi_[0,t]||; the Orlicz kind is cross-checked against 1/F^{-1}(1/t).
double fundamental_function(const SpaceSpec& space, double t);

/// Closed form 1/F^{-1}(1/t) for the Orlicz fundamental function.
double orlicz_fundamental_closed(const OrliczFunction& F, double t);

/// Sharpley-Raynaud equivalent norm (int [x**(t) phi(t)]^p dt/t)^{1/p};
/// requires 0 < gamma_hat <= delta_hat < 1.
double lorentz_norm_doublestar(double p, const PhiFunction& phi, const StepFunction& x);

/// Proposition-4 two-sided identity for x = sum_j b^{-j} chi_{(a_{j-1}, a_j]}.
/// Blocks i = 0..m-1 carry exponent j = j_lo + i and support
/// (a_seq[i], a_seq[i+1]]. Both sides use the same finite truncation.
struct StepLorentzIdentity {
    double lhs_p = 0.0;  // ||x||^p via the Lorentz norm engine
    double rhs = 0.0;    // sum_j b^{-pj} phi^p(a_j - a_{j-1})
    double ratio = 0.0;  // lhs_p / rhs
};
StepLorentzIdentity step_lorentz_identity(double p, const PhiFunction& phi, double b,
                                          const std::vector<double>& a_seq, int j_lo);

/// Remark-1 exact sum for ||x||_{Lambda_phi} of the same step functions;
/// requires a_seq.front() == 0 so the support starts at 0.
double lambda_phi_exact_step(const PhiFunction& phi, double b,
                             const std::vector<double>& a_seq, int j_lo);

}  // namespace symmcouple
