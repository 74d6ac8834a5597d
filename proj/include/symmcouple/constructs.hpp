#pragma once

#include "symmcouple/decomp.hpp"
#include "symmcouple/orlicz.hpp"
#include "symmcouple/phi.hpp"
#include "symmcouple/weight.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace symmcouple {

/// G(alpha) = sum_r min(alpha, w_r) over the available levels; exact.
double G_function(const Weight& w, double alpha);

/// Theorem-4.4 construction: levels t_0 = 1 > t_1 > ... > t_K with
/// t_k < t_{k-1}/3 and G(t_k) <= 2^{-(k-1)} t_{k-1}; phi'(t) = 2^k on
/// (t_{k+1}, t_k]. The greedy picks the largest admissible dyadic level.
struct Theorem6Build {
    std::vector<double> t_levels;   // size K+1
    std::vector<double> G_at_levels;
    PhiFunction phi;
    int K = 0;
};
Theorem6Build build_phi_theorem6(const Weight& w, int K);

/// Eq.-(28) certificate: samples 0 < d_r <= w_r and reports the ratio
/// sum_r phi_k(d_r) / phi_k(sum_r d_r) over every truncation level k <= K.
/// Bounded by 3 for builds passing the structural audit.
EquivalenceReport ratio_bound_check(const Theorem6Build& build, const Weight& w,
                                    long long trials, std::uint64_t seed,
                                    int threads = 0);

/// Remark 2: psi = phi^{1/p}, p > 1; increasing concave when phi is.
PhiFunction psi_p(const PhiFunction& phi, double p);

/// Theorem-5.2 interval system: disjoint Delta_k packed left to right with
/// m(Delta_k) = min(2^{-k-1}/F(v_k), remaining budget).
struct OrliczIntervals {
    Partition partition;
    bool truncated = false;  // budget exhausted before K intervals
};
OrliczIntervals orlicz_intervals(const OrliczFunction& F,
                                 const std::vector<double>& v_schedule, int K);

/// The section-6 example gallery with audit metadata.
struct GalleryEntry {
    std::string name;
    std::optional<OrliczFunction> F;
    std::optional<PhiFunction> phi;
    nlohmann::json metadata;
};
std::vector<GalleryEntry> example_gallery();

}  // namespace symmcouple
