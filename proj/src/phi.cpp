#include "symmcouple/phi.hpp"

#include "symmcouple/errors.hpp"
#include "symmcouple/quadrature.hpp"
#include "symmcouple/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace symmcouple {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

struct PhiFunction::Impl {
    Kind kind = Kind::Power;
    double alpha = 0.5;                 // Power, PowerLog
    std::vector<double> qs;             // PowerLog
    double log_offset = 1.0;            // PowerLog
    double powerlog_norm = 1.0;         // PowerLog: 1/phi_raw(1)
    double root_p = 2.0;                // PthRoot
    std::shared_ptr<const Impl> base;   // PthRoot, Envelope, Tilde
    std::vector<double> t_levels;       // Theorem6, descending, t_0 = 1
    std::vector<double> phi_at_levels;  // Theorem6
    std::vector<double> tab_t, tab_phi; // Tabulated, ascending, tab_t[0] = 0
    std::vector<double> env_s;          // Envelope minimization grid

    double eval(double t) const;
    double powerlog_raw(double t) const;
};

PhiFunction::PhiFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

double PhiFunction::Impl::powerlog_raw(double t) const {
    // iterated offset logs keep the factors >= 1 on (0,1]
    double v = std::pow(t, alpha);
    double L = log_offset + std::log(1.0 / t);
    for (double q : qs) {
        v *= std::pow(L, q);
        L = 1.0 + std::log(L);
    }
    return v;
}

double PhiFunction::Impl::eval(double t) const {
    if (t <= 0.0) return 0.0;
    switch (kind) {
        case Kind::Power:
            return std::pow(t, alpha);
        case Kind::TLog:
            return t * (1.0 + std::log(1.0 / t));
        case Kind::PowerLog:
            return powerlog_raw(t) * powerlog_norm;
        case Kind::Theorem6: {
            // piece (t_{k+1}, t_k] has slope 2^k; last slope extends to 0
            const auto& lv = t_levels;
            if (t <= lv.back()) return std::ldexp(t, static_cast<int>(lv.size()) - 1);
            // binary search for the piece: lv descending
            std::size_t lo = 0, hi = lv.size() - 1;
            while (hi - lo > 1) {
                std::size_t mid = (lo + hi) / 2;
                if (t <= lv[mid]) lo = mid; else hi = mid;
            }
            // t in (lv[hi], lv[lo]] with slope 2^lo
            return phi_at_levels[hi] + std::ldexp(t - lv[hi], static_cast<int>(lo));
        }
        case Kind::PthRoot:
            return std::pow(base->eval(t), 1.0 / root_p);
        case Kind::Tabulated: {
            if (t >= tab_t.back()) return tab_phi.back();
            auto it = std::upper_bound(tab_t.begin(), tab_t.end(), t);
            std::size_t i = static_cast<std::size_t>(it - tab_t.begin());
            double frac = (t - tab_t[i - 1]) / (tab_t[i] - tab_t[i - 1]);
            return tab_phi[i - 1] + frac * (tab_phi[i] - tab_phi[i - 1]);
        }
        case Kind::Envelope: {
            double best = kInf;
            for (double s : env_s) {
                double v = (1.0 + t / s) * base->eval(s);
                if (v < best) best = v;
            }
            return best;
        }
        case Kind::Tilde:
            return t / base->eval(t);
    }
    return 0.0;
}

double PhiFunction::operator()(double t) const { return impl_->eval(t); }

PhiFunction::Kind PhiFunction::kind() const { return impl_->kind; }

const std::vector<double>& PhiFunction::theorem6_levels() const {
    if (impl_->kind != Kind::Theorem6)
        throw validation_error("theorem6_levels: not a Theorem6 phi");
    return impl_->t_levels;
}

PhiFunction PhiFunction::power(double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw validation_error("power phi needs alpha in (0,1]");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Power;
    impl->alpha = alpha;
    return PhiFunction(impl);
}

PhiFunction PhiFunction::tlog() {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::TLog;
    return PhiFunction(impl);
}

PhiFunction PhiFunction::power_log(double alpha, std::vector<double> log_exponents) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw validation_error("powerlog phi needs alpha in (0,1]");
    if (log_exponents.empty())
        throw validation_error("powerlog phi needs at least one log exponent");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::PowerLog;
    impl->alpha = alpha;
    impl->qs = std::move(log_exponents);
    double sum_q = 0.0;
    for (double q : impl->qs) sum_q += std::fabs(q);
    // offset large enough that the leading log factor cannot break
    // monotonicity of phi or of phi/t (checked by the audit below anyway)
    double c = 1.0;
    c = std::max(c, sum_q / alpha);
    if (alpha < 1.0) c = std::max(c, sum_q / (1.0 - alpha));
    impl->log_offset = c;
    impl->powerlog_norm = 1.0 / impl->powerlog_raw(1.0);
    PhiFunction phi(impl);
    phi.validate_quasi_concave();
    return phi;
}

PhiFunction PhiFunction::theorem6(std::vector<double> t_levels) {
    if (t_levels.empty() || t_levels.front() != 1.0)
        throw validation_error("theorem6 phi needs levels starting at t_0 = 1");
    for (std::size_t i = 1; i < t_levels.size(); ++i)
        if (!(t_levels[i] > 0.0 && t_levels[i] < t_levels[i - 1] / 3.0))
            throw validation_error("theorem6 levels must satisfy t_k < t_{k-1}/3");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Theorem6;
    impl->t_levels = std::move(t_levels);
    const auto& lv = impl->t_levels;
    const int K = static_cast<int>(lv.size()) - 1;
    impl->phi_at_levels.assign(lv.size(), 0.0);
    impl->phi_at_levels[static_cast<std::size_t>(K)] = std::ldexp(lv.back(), K);
    for (int k = K - 1; k >= 0; --k)
        impl->phi_at_levels[static_cast<std::size_t>(k)] =
            impl->phi_at_levels[static_cast<std::size_t>(k) + 1] +
            std::ldexp(lv[static_cast<std::size_t>(k)] - lv[static_cast<std::size_t>(k) + 1], k);
    return PhiFunction(impl);
}

PhiFunction PhiFunction::pth_root(PhiFunction base, double p) {
    if (!(p >= 1.0)) throw validation_error("pth_root needs p >= 1");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::PthRoot;
    impl->root_p = p;
    impl->base = base.impl_;
    return PhiFunction(impl);
}

PhiFunction PhiFunction::tabulated(std::vector<double> ts, std::vector<double> phis) {
    if (ts.size() != phis.size() || ts.size() < 2)
        throw validation_error("tabulated phi needs >= 2 samples");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i > 0 && !(ts[i] > ts[i - 1]))
            throw validation_error("tabulated phi grid must be increasing");
        if (!(phis[i] >= 0.0) || !std::isfinite(phis[i]))
            throw validation_error("tabulated phi values must be finite, >= 0");
    }
    if (ts.back() != 1.0) throw validation_error("tabulated phi grid must end at 1");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Tabulated;
    if (ts.front() > 0.0) {
        impl->tab_t.push_back(0.0);
        impl->tab_phi.push_back(0.0);
    }
    impl->tab_t.insert(impl->tab_t.end(), ts.begin(), ts.end());
    impl->tab_phi.insert(impl->tab_phi.end(), phis.begin(), phis.end());
    return PhiFunction(impl);
}

PhiFunction PhiFunction::tilde_of(PhiFunction base) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Tilde;
    impl->base = base.impl_;
    return PhiFunction(impl);
}

bool PhiFunction::is_quasi_concave(int j_max) const {
    const double slack = 1.0 + 1e-12;
    double prev_phi = impl_->eval(1.0);
    double prev_ratio = prev_phi;  // phi(t)/t at t = 1
    if (!(prev_phi > 0.0) || !std::isfinite(prev_phi)) return false;
    for (int j = 1; j <= j_max; ++j) {
        double t = std::ldexp(1.0, -j);
        double v = impl_->eval(t);
        if (!std::isfinite(v) || v < 0.0) return false;
        if (v > prev_phi * slack) return false;          // phi must not grow as t shrinks
        double ratio = v / t;
        if (ratio * slack < prev_ratio) return false;    // phi/t must not shrink as t shrinks
        prev_phi = v;
        prev_ratio = ratio;
    }
    return true;
}

void PhiFunction::validate_quasi_concave(int j_max) const {
    if (!is_quasi_concave(j_max))
        throw validation_error("phi fails the quasi-concavity audit: " + describe());
}

double PhiFunction::inverse(double y) const {
    double top = impl_->eval(1.0);
    if (!(y > 0.0 && y <= top * (1.0 + 1e-12)))
        throw validation_error("phi inverse: y outside (0, phi(1)]");
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 100 && hi - lo > 1e-15 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        if (impl_->eval(mid) < y) lo = mid; else hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::string PhiFunction::describe() const {
    std::ostringstream os;
    switch (impl_->kind) {
        case Kind::Power: os << "power:alpha=" << impl_->alpha; break;
        case Kind::TLog: os << "tlog"; break;
        case Kind::PowerLog: {
            os << "powerlog:alpha=" << impl_->alpha << ",q=";
            for (std::size_t i = 0; i < impl_->qs.size(); ++i)
                os << (i ? ";" : "") << impl_->qs[i];
            break;
        }
        case Kind::Theorem6:
            os << "theorem6[K=" << impl_->t_levels.size() - 1 << "]";
            break;
        case Kind::PthRoot:
            os << "pthroot[p=" << impl_->root_p << "]("
               << PhiFunction(impl_->base).describe() << ")";
            break;
        case Kind::Tabulated: os << "tabulated[" << impl_->tab_t.size() << "]"; break;
        case Kind::Envelope:
            os << "envelope(" << PhiFunction(impl_->base).describe() << ")";
            break;
        case Kind::Tilde:
            os << "tilde(" << PhiFunction(impl_->base).describe() << ")";
            break;
    }
    return os.str();
}

namespace {

// Linear pieces phi(s) = A + B s of a piecewise-linear phi, lowest first.
struct LinearPiece {
    double lo, hi, A, B;
};

std::vector<LinearPiece> linear_pieces(const PhiFunction::Impl& impl) {
    std::vector<LinearPiece> out;
    if (impl.kind == PhiFunction::Kind::Theorem6) {
        const auto& lv = impl.t_levels;
        const int K = static_cast<int>(lv.size()) - 1;
        out.push_back({0.0, lv.back(), 0.0, std::ldexp(1.0, K)});
        for (int k = K - 1; k >= 0; --k) {
            double slo = lv[static_cast<std::size_t>(k) + 1];
            double shi = lv[static_cast<std::size_t>(k)];
            double B = std::ldexp(1.0, k);
            double A = impl.phi_at_levels[static_cast<std::size_t>(k) + 1] - B * slo;
            out.push_back({slo, shi, A, B});
        }
    } else {  // Tabulated
        for (std::size_t i = 0; i + 1 < impl.tab_t.size(); ++i) {
            double slo = impl.tab_t[i], shi = impl.tab_t[i + 1];
            double B = (impl.tab_phi[i + 1] - impl.tab_phi[i]) / (shi - slo);
            double A = impl.tab_phi[i] - B * slo;
            out.push_back({slo, shi, A, B});
        }
    }
    return out;
}

// exact int_lo^hi (A + B s)^p / s ds for integer p >= 1 (A = 0 whenever lo = 0)
double linear_piece_integral(double lo, double hi, double A, double B, int p) {
    double total = 0.0;
    if (A != 0.0) total += std::pow(A, p) * std::log(hi / lo);
    for (int k = 1; k <= p; ++k)
        total += binom(p, k) * std::pow(A, p - k) * std::pow(B, k) *
                 (std::pow(hi, k) - std::pow(lo, k)) / k;
    return total;
}

std::vector<double> interior_knots(const PhiFunction::Impl& impl, double a, double b) {
    std::vector<double> knots;
    const PhiFunction::Impl* cur = &impl;
    while (cur->kind == PhiFunction::Kind::PthRoot ||
           cur->kind == PhiFunction::Kind::Tilde ||
           cur->kind == PhiFunction::Kind::Envelope)
        cur = cur->base.get();
    if (cur->kind == PhiFunction::Kind::Theorem6)
        for (double t : cur->t_levels) {
            if (t > a && t < b) knots.push_back(t);
        }
    if (cur->kind == PhiFunction::Kind::Tabulated)
        for (double t : cur->tab_t) {
            if (t > a && t < b) knots.push_back(t);
        }
    std::sort(knots.begin(), knots.end());
    return knots;
}

double numeric_segment(const PhiFunction::Impl& impl, double a, double b, double p) {
    auto f = [&](double s) { return std::pow(impl.eval(s), p) / s; };
    auto knots = interior_knots(impl, a, b);
    double total = 0.0;
    double lo = a;
    for (double k : knots) {
        total += adaptive_simpson(f, lo, k, 1e-10);
        lo = k;
    }
    total += adaptive_simpson(f, lo, b, 1e-10);
    return total;
}

}  // namespace

double PhiFunction::integral_pow_over_s(double a, double b, double p) const {
    if (!(a >= 0.0 && b <= 1.0 && b > a))
        throw validation_error("integral_pow_over_s needs 0 <= a < b <= 1");
    if (!(p >= 1.0) || std::isinf(p))
        throw validation_error("integral_pow_over_s needs finite p >= 1");
    const Impl& impl = *impl_;

    if (impl.kind == Kind::Power) {
        double e = impl.alpha * p;
        return (std::pow(b, e) - std::pow(a, e)) / e;
    }
    if (impl.kind == Kind::TLog && p == 1.0) {
        auto anti = [](double s) {  // antiderivative of 1 + log(1/s)
            return s <= 0.0 ? 0.0 : s * (2.0 + std::log(1.0 / s));
        };
        return anti(b) - anti(a);
    }
    double p_round = std::round(p);
    bool integer_p = std::fabs(p - p_round) < 1e-12 && p_round <= 8.0;
    if ((impl.kind == Kind::Theorem6 || impl.kind == Kind::Tabulated) && integer_p) {
        int ip = static_cast<int>(p_round);
        double total = 0.0;
        for (const auto& piece : linear_pieces(impl)) {
            double lo = std::max(a, piece.lo), hi = std::min(b, piece.hi);
            if (hi <= lo) continue;
            if (piece.B == 0.0 && piece.A == 0.0) continue;
            if (lo == 0.0 && piece.A != 0.0)
                throw validation_error("phi^p/s integral diverges at 0");
            if (lo == 0.0) {
                // pure slope piece: int (B s)^p / s = B^p hi^p / p
                total += std::pow(piece.B, ip) * std::pow(hi, ip) / ip;
            } else {
                total += linear_piece_integral(lo, hi, piece.A, piece.B, ip);
            }
        }
        return total;
    }

    // numeric path; the dyadic descent handles the singular endpoint a = 0
    if (a > 0.0) return numeric_segment(impl, a, b, p);
    double total = 0.0;
    double hi = b;
    double prev = kInf;
    for (int j = 0; j < 1400 && hi > 1e-320; ++j) {
        double lo = 0.5 * hi;
        double panel = numeric_segment(impl, lo, hi, p);
        total += panel;
        if (prev < kInf && panel > 0.0) {
            double rho = panel / prev;
            if (rho < 0.95) {
                double tail_bound = panel * rho / (1.0 - rho);
                if (tail_bound < 1e-13 * total) return total;
            }
        } else if (panel == 0.0 && total > 0.0) {
            return total;
        }
        prev = panel;
        hi = lo;
    }
    if (!(total > 0.0) || !std::isfinite(total))
        throw convergence_error("phi^p/s integral did not converge near 0");
    return total;
}

// ---------------------------------------------------------------------------
// Schedules

Schedule Schedule::pow2() {
    Schedule s;
    s.kind_ = Kind::Pow2;
    return s;
}

Schedule Schedule::constant(double v) {
    if (!(v > 0.0)) throw validation_error("schedule constant must be positive");
    Schedule s;
    s.kind_ = Kind::Const;
    s.value_ = std::min(v, 1.0);
    return s;
}

Schedule Schedule::from_list(std::vector<double> taus) {
    if (taus.empty()) throw validation_error("schedule list must be nonempty");
    for (std::size_t i = 0; i < taus.size(); ++i) {
        if (!(taus[i] > 0.0 && taus[i] <= 1.0))
            throw validation_error("schedule values must lie in (0,1]");
        if (i > 0 && taus[i] > taus[i - 1] * (1.0 + 1e-12))
            throw validation_error("schedule must be non-increasing");
    }
    Schedule s;
    s.kind_ = Kind::List;
    s.list_ = std::move(taus);
    return s;
}

std::optional<double> Schedule::tau(int N) const {
    if (N < 1) return std::nullopt;
    switch (kind_) {
        case Kind::Pow2:
            return std::ldexp(1.0, -N);
        case Kind::Const:
            return value_;
        case Kind::List:
            if (static_cast<std::size_t>(N) > list_.size()) return std::nullopt;
            return list_[static_cast<std::size_t>(N) - 1];
    }
    return std::nullopt;
}

std::string Schedule::describe() const {
    switch (kind_) {
        case Kind::Pow2: return "pow2";
        case Kind::Const: return "const:" + format_double(value_);
        case Kind::List: return "list[" + std::to_string(list_.size()) + "]";
    }
    return "";
}

// ---------------------------------------------------------------------------
// Dilation machinery

namespace {

// half-octave grid of s values in (0, 1]
const std::vector<double>& dilation_s_grid() {
    static const std::vector<double> grid = [] {
        std::vector<double> g;
        for (int j = 0; j <= 160; ++j) g.push_back(std::pow(2.0, -0.5 * j));
        return g;
    }();
    return grid;
}

struct LinFit {
    double slope = 0.0;
    double residual = 0.0;
};

LinFit linear_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    LinFit fit;
    fit.slope = sxy / sxx;
    double intercept = my - fit.slope * mx;
    for (std::size_t i = 0; i < xs.size(); ++i)
        fit.residual = std::max(fit.residual,
                                std::fabs(ys[i] - fit.slope * xs[i] - intercept));
    return fit;
}

}  // namespace

double dilation_function(const PhiFunction& phi, double t) {
    if (!(t > 0.0)) throw validation_error("dilation_function: t must be positive");
    double sup = 0.0;
    for (double s : dilation_s_grid()) {
        if (s * t > 1.0) continue;
        double denom = phi(s);
        if (denom <= 0.0) continue;
        sup = std::max(sup, phi(s * t) / denom);
    }
    if (t > 1.0) {
        double s = 1.0 / t;
        double denom = phi(s);
        if (denom > 0.0) sup = std::max(sup, phi(1.0) / denom);
    }
    if (sup == 0.0) throw validation_error("dilation_function: degenerate phi");
    return sup;
}

DilationIndices dilation_indices(const PhiFunction& phi) {
    if (!(phi(1.0) > 0.0) || !(phi(std::ldexp(1.0, -40)) > 0.0))
        throw validation_error("dilation_indices: degenerate phi");
    // The limits converge only logarithmically for log-perturbed powers, so
    // the regression window sits deep: t = 2^{-j} (resp. 2^{j}), j = 20..60.
    const int j_lo = 20, j_hi = 60;
    std::vector<double> xs, ys;
    for (int j = j_lo; j <= j_hi; ++j) {
        double t = std::ldexp(1.0, -j);
        xs.push_back(std::log(t));
        ys.push_back(std::log(dilation_function(phi, t)));
    }
    LinFit gfit = linear_fit(xs, ys);
    xs.clear();
    ys.clear();
    for (int j = j_lo; j <= j_hi; ++j) {
        double t = std::ldexp(1.0, j);
        xs.push_back(std::log(t));
        ys.push_back(std::log(dilation_function(phi, t)));
    }
    LinFit dfit = linear_fit(xs, ys);

    DilationIndices out;
    out.j_lo = j_lo;
    out.j_hi = j_hi;
    out.gamma = std::clamp(gfit.slope, 0.0, 1.0);
    out.delta = std::clamp(dfit.slope, 0.0, 1.0);
    if (out.delta < out.gamma) out.delta = out.gamma;
    out.gamma_residual = gfit.residual;
    out.delta_residual = dfit.residual;
    return out;
}

PhiFunction concave_envelope(const PhiFunction& phi) {
    phi.validate_quasi_concave();
    auto impl = std::make_shared<PhiFunction::Impl>();
    impl->kind = PhiFunction::Kind::Envelope;
    impl->base = phi.impl_;
    impl->env_s = dilation_s_grid();
    return PhiFunction(impl);
}

PowerBound power_bound(const PhiFunction& phi) {
    DilationIndices idx = dilation_indices(phi);
    if (idx.gamma <= 0.01)
        throw validation_error("power_bound: index too small (gamma <= 0.01)");
    PowerBound pb;
    pb.kappa = 0.9 * idx.gamma;
    pb.A = 0.0;
    for (int j = 0; j <= 50; ++j) {
        double t = std::ldexp(1.0, -j);
        pb.A = std::max(pb.A, dilation_function(phi, t) / std::pow(t, pb.kappa));
    }
    return pb;
}

EquivalenceReport kps_check(const PhiFunction& phi, double p) {
    DilationIndices idx = dilation_indices(phi);
    if (idx.gamma <= 0.0)
        throw validation_error("kps_check: integral diverges at 0 (gamma = 0)");
    EquivalenceReport rep;
    rep.p_used = p;
    for (int j = 0; j <= 40; ++j) {
        double t = std::ldexp(1.0, -j);
        double lhs = phi.integral_pow_over_s(0.0, t, p);
        double rhs = std::pow(phi(t), p);
        double ratio = lhs / rhs;
        ++rep.trials;
        if (ratio < rep.min_ratio) {
            rep.min_ratio = ratio;
            rep.min_trial = j;
            rep.witness_min = {{"t", t}};
        }
        if (ratio > rep.max_ratio) {
            rep.max_ratio = ratio;
            rep.max_trial = j;
            rep.witness_max = {{"t", t}};
        }
    }
    rep.details = {{"condition", "kps"}, {"grid", "2^-j, j=0..40"}};
    return rep;
}

double limsup_ratio(const PhiFunction& phi, double u) {
    if (!(u > 0.0)) throw validation_error("limsup_ratio: u must be positive");
    double best = 0.0;
    for (int j = 10; j <= 40; ++j) {
        double t = std::ldexp(1.0, -j);
        if (t * u > 1.0) continue;
        best = std::max(best, phi(t * u) / phi(t));
    }
    return best;
}

EquivalenceReport regvar_test(const PhiFunction& phi, double p, const Schedule& sched,
                              double C, int N_max) {
    if (N_max < 2) throw validation_error("regvar_test: N_max must be >= 2");
    if (!(C > 1.0)) throw validation_error("regvar_test: C must exceed 1");
    EquivalenceReport rep;
    rep.p_used = p;
    std::vector<int> skipped;
    const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
    for (int N = 2; N <= N_max; ++N) {
        auto tau = sched.tau(N);
        if (!tau) {
            skipped.push_back(N);
            continue;
        }
        double top = std::min(*tau, 1.0 / N);
        if (!(top > 0.0)) {
            skipped.push_back(N);
            continue;
        }
        double scale = std::pow(static_cast<double>(N), inv_p);
        for (int i = 0; i <= 48; ++i) {
            double t = top * std::pow(2.0, -0.5 * i);
            double ratio = phi(N * t) / (phi(t) * scale);
            ++rep.trials;
            if (ratio < rep.min_ratio) {
                rep.min_ratio = ratio;
                rep.min_trial = N;
                rep.witness_min = {{"N", N}, {"t", t}};
            }
            if (ratio > rep.max_ratio) {
                rep.max_ratio = ratio;
                rep.max_trial = N;
                rep.witness_max = {{"N", N}, {"t", t}};
            }
        }
    }
    rep.passed_at_C = C;
    rep.details = {{"condition", "regvar"},
                   {"schedule", sched.describe()},
                   {"N_max", N_max},
                   {"skipped_N", skipped},
                   {"passed", rep.trials > 0 && rep.passes(C)}};
    return rep;
}

}  // namespace symmcouple
