#pragma once

#include "symmcouple/orlicz.hpp"
#include "symmcouple/report.hpp"
#include "symmcouple/spaces.hpp"
#include "symmcouple/weight.hpp"

#include <cstdint>
#include <vector>

namespace symmcouple {

/// Random-family law for the empirical decomposability certifiers.
/// Per trial, one of three strategies is drawn: independent random blocks
/// (1..max_blocks per function, values log-uniform over
/// [2^-level_span, 2^level_span]), a flat indicator family (all functions are
/// indicators of measure w_n with a common value), or single-block functions.
/// The flat strategy is what exposes the designed failure signatures.
struct FamilySpec {
    int n = 8;                 // family size (functions 1..n on M-bar_1..n)
    int max_blocks = 8;
    double level_span = 8.0;   // octaves of the value law
    std::uint64_t seed = 1;
    int threads = 0;           // 0 = auto
};

/// Fundamental-function additivity (Corollary 3.6): ratio
/// phi(sum tau_r) / (sum phi^p(tau_r))^{1/p} over random sequences
/// 0 < tau_r <= w_r (max-form for p = infinity).
EquivalenceReport fundfunc_additivity_test(const PhiFunction& phi, double p,
                                           const std::vector<double>& wr,
                                           long long trials, std::uint64_t seed,
                                           int threads = 0);
/// Replay helper: the ratio of one explicit sequence.
double fundfunc_ratio(const PhiFunction& phi, double p, const std::vector<double>& taus);

/// Theorem 3.3 / Corollary 3.4 empirical test: disjoint random x_i with
/// supp x_i inside M-bar_i; ratio ||sum x_i||_X / (sum ||x_i||_X^p)^{1/p}.
EquivalenceReport decomp_empirical_test(const SpaceSpec& space, const Weight& w,
                                        double p, const FamilySpec& fam,
                                        long long trials);
/// Same test over an explicit disjoint-interval family (Corollary 3.5).
EquivalenceReport decomp_empirical_test_intervals(const SpaceSpec& space,
                                                  const Partition& supports, double p,
                                                  const FamilySpec& fam,
                                                  long long trials);
/// Replay helper for family witnesses.
double family_ratio(const SpaceSpec& space, double p,
                    const std::vector<StepFunction>& xs);

/// Orlicz characteristic criterion (Theorem 5.1, eq. (32)) over scalar
/// multiples of characteristic functions A_k inside M-bar_k.
EquivalenceReport orlicz_char_test(const OrliczFunction& F, const Weight& w, double p,
                                   long long trials, std::uint64_t seed,
                                   int threads = 0, double delta2_cap = 0x1p16);

/// Remark-3 one-sided estimates over arbitrary disjoint interval families.
enum class EstimateMode { UpperP, LowerQ };
EquivalenceReport estimate_test(const OrliczFunction& F, EstimateMode mode, double r,
                                long long trials, std::uint64_t seed, int n = 16,
                                int threads = 0);

/// Theorem 3.8 end-to-end: verify the geometric-gap hypothesis
/// q w_{r+1} <= w_r (final truncation pair excluded, q_min configurable),
/// run regvar_test with tau(N) = w_N, and on success run
/// fundfunc_additivity_test. The implication direction is the assertion.
struct TransferReport {
    double q_found = 0.0;
    bool hypothesis_ok = false;
    EquivalenceReport regvar;
    bool regvar_passed = false;
    EquivalenceReport fundfunc;
};
TransferReport exponent_transfer_check(const PhiFunction& phi, const Weight& w,
                                       double p, double C, long long trials,
                                       std::uint64_t seed, double q_min = 1.25);

/// Koethe duality pairing: ||x||_{M_phitilde} with phitilde = t/phi(t) against
/// sup_s (1/phi(s)) int_0^s x*(u) du. Equal when s_grid holds all breaks of x*.
struct DualityPairReport {
    double m_norm = 0.0;
    double pairing_sup = 0.0;
    double ratio = 0.0;
};
DualityPairReport duality_pair_test(const PhiFunction& phi, const StepFunction& x,
                                    const std::vector<double>& s_grid);

/// Escalation scan: envelopes at n, 2n, 4n, 8n; "escalating" when the
/// envelope at 8n is at least twice the envelope at n.
struct EscalationScan {
    std::vector<int> ns;
    std::vector<double> envelopes;
    bool escalating = false;
};

/// Theorem 4.6 / Corollary 4.7 agreement test: additivity of
/// phitilde = t/phi with p = 1 against the empirical test on M_phi with
/// p = 1/gamma_hat(phi). Requires delta_hat(phi) < 1.
struct DualTransferReport {
    EscalationScan tilde_additivity;
    EscalationScan marcinkiewicz_empirical;
    bool agree = false;
};
DualTransferReport dual_decomp_transfer(const PhiFunction& phi, const Weight& w,
                                        long long trials, std::uint64_t seed);

/// Ratio of norm(space, x) to the Lorentz norm Lambda_{p,phi} over random x.
EquivalenceReport space_vs_lorentz(const SpaceSpec& space, double p,
                                   const PhiFunction& phi, long long trials,
                                   std::uint64_t seed, int threads = 0);

/// Scan of fundfunc_additivity_test over truncation lengths R, 2R, 4R, 8R.
EscalationScan fundfunc_escalation(const PhiFunction& phi, double p,
                                   const std::vector<double>& wr_full, int R0,
                                   long long trials, std::uint64_t seed);
/// Scan of decomp_empirical_test over family sizes n, 2n, 4n, 8n.
EscalationScan family_escalation(const SpaceSpec& space, const Weight& w, double p,
                                 FamilySpec fam, long long trials);

}  // namespace symmcouple
