#include "symmcouple/step_function.hpp"

#include "symmcouple/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace symmcouple {

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    while (first != last && (*first == ' ' || *first == '\t')) ++first;
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc())
        throw validation_error("cannot parse number: '" + s + "'");
    return v;
}

Partition::Partition(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    std::sort(intervals_.begin(), intervals_.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    double total = 0.0;
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        const auto& iv = intervals_[i];
        if (!(iv.lo >= 0.0 && iv.hi <= 1.0 && iv.hi > iv.lo))
            throw validation_error("partition interval out of range or empty");
        if (i > 0 && iv.lo < intervals_[i - 1].hi - 1e-15)
            throw validation_error("partition intervals overlap");
        total += iv.length();
    }
    if (total > 1.0 + 1e-12)
        throw validation_error("partition total length exceeds 1");
}

double Partition::total_length() const {
    double t = 0.0;
    for (const auto& iv : intervals_) t += iv.length();
    return t;
}

StepFunction::StepFunction(std::vector<double> breaks, std::vector<double> values)
    : breaks_(std::move(breaks)), values_(std::move(values)) {
    validate();
}

void StepFunction::validate() const {
    if (values_.empty() || breaks_.size() != values_.size() + 1)
        throw validation_error("step function needs n>=1 values and n+1 breaks");
    if (breaks_.front() != 0.0 || breaks_.back() != 1.0)
        throw validation_error("breaks must start at 0 and end at 1");
    for (std::size_t i = 1; i < breaks_.size(); ++i)
        if (!(breaks_[i] > breaks_[i - 1]))
            throw validation_error("breaks must be strictly increasing");
    for (double v : values_)
        if (!std::isfinite(v)) throw validation_error("values must be finite");
}

StepFunction StepFunction::constant(double v) {
    return StepFunction({0.0, 1.0}, {v});
}

StepFunction StepFunction::indicator(double a, double b, double c) {
    if (!(a >= 0.0 && b <= 1.0 && b > a))
        throw validation_error("indicator needs 0 <= a < b <= 1");
    std::vector<double> breaks{0.0};
    std::vector<double> values;
    if (a > 0.0) {
        breaks.push_back(a);
        values.push_back(0.0);
    }
    breaks.push_back(b);
    values.push_back(c);
    if (b < 1.0) {
        breaks.push_back(1.0);
        values.push_back(0.0);
    }
    return StepFunction(std::move(breaks), std::move(values));
}

double StepFunction::value_at(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) throw validation_error("value_at: t outside [0,1]");
    // piece i covers (b_i, b_{i+1}]; t = 0 reads the first piece
    auto it = std::lower_bound(breaks_.begin(), breaks_.end(), t);
    std::size_t idx = static_cast<std::size_t>(it - breaks_.begin());
    if (idx == 0) return values_.front();
    return values_[idx - 1];
}

double StepFunction::support_measure() const {
    double m = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] != 0.0) m += piece_length(i);
    return m;
}

double StepFunction::integral() const {
    double s = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) s += values_[i] * piece_length(i);
    return s;
}

double StepFunction::integral_abs() const {
    double s = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        s += std::fabs(values_[i]) * piece_length(i);
    return s;
}

double StepFunction::distribution(double lambda) const {
    if (lambda < 0.0) throw validation_error("distribution: lambda must be >= 0");
    double m = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (std::fabs(values_[i]) > lambda) m += piece_length(i);
    return m;
}

StepFunction StepFunction::rearrange() const {
    std::vector<std::size_t> order(values_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::fabs(values_[a]) > std::fabs(values_[b]);
    });
    std::vector<double> breaks{0.0};
    std::vector<double> values;
    breaks.reserve(breaks_.size());
    values.reserve(values_.size());
    double pos = 0.0;
    for (std::size_t i : order) {
        pos += piece_length(i);
        breaks.push_back(pos);
        values.push_back(std::fabs(values_[i]));
    }
    breaks.back() = 1.0;  // guard against accumulated rounding in the last break
    return StepFunction(std::move(breaks), std::move(values));
}

bool StepFunction::is_nonincreasing() const {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 0.0) return false;
        if (i > 0 && values_[i] > values_[i - 1]) return false;
    }
    return true;
}

double StepFunction::rearranged_prefix_integral(double t) const {
    if (!(t >= 0.0 && t <= 1.0))
        throw validation_error("prefix integral: t outside [0,1]");
    StepFunction star = is_nonincreasing() ? *this : rearrange();
    double acc = 0.0;
    for (std::size_t i = 0; i < star.values_.size(); ++i) {
        double lo = star.breaks_[i], hi = star.breaks_[i + 1];
        if (t <= lo) break;
        double upto = std::min(t, hi);
        acc += star.values_[i] * (upto - lo);
    }
    return acc;
}

double StepFunction::double_star(double t) const {
    if (!(t > 0.0 && t <= 1.0))
        throw validation_error("double_star: t must lie in (0,1]");
    return rearranged_prefix_integral(t) / t;
}

StepFunction StepFunction::dilate(double t) const {
    if (!(t > 0.0)) throw validation_error("dilate: t must be positive");
    std::vector<double> breaks{0.0};
    std::vector<double> values;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        double hi = breaks_[i + 1] * t;
        if (hi >= 1.0) {
            breaks.push_back(1.0);
            values.push_back(values_[i]);
            return StepFunction(std::move(breaks), std::move(values));
        }
        breaks.push_back(hi);
        values.push_back(values_[i]);
    }
    // t < 1: x(s/t) vanishes for s > t (argument leaves [0,1])
    breaks.push_back(1.0);
    values.push_back(0.0);
    return StepFunction(std::move(breaks), std::move(values));
}

double StepFunction::lp_norm(double p) const {
    if (std::isinf(p)) {
        double m = 0.0;
        for (double v : values_) m = std::max(m, std::fabs(v));
        return m;
    }
    if (!(p >= 1.0)) throw validation_error("lp_norm: p must be >= 1 or infinity");
    if (p == 1.0) return integral_abs();
    double s = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        double v = std::fabs(values_[i]);
        if (v > 0.0) s += std::pow(v, p) * piece_length(i);
    }
    return std::pow(s, 1.0 / p);
}

StepFunction StepFunction::scaled(double c) const {
    std::vector<double> values(values_);
    for (double& v : values) v *= c;
    return StepFunction(breaks_, std::move(values));
}

StepFunction StepFunction::abs() const {
    std::vector<double> values(values_);
    for (double& v : values) v = std::fabs(v);
    return StepFunction(breaks_, std::move(values));
}

StepFunction StepFunction::simplified() const {
    std::vector<double> breaks{0.0};
    std::vector<double> values;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!values.empty() && values.back() == values_[i]) {
            breaks.back() = breaks_[i + 1];
        } else {
            values.push_back(values_[i]);
            breaks.push_back(breaks_[i + 1]);
        }
    }
    return StepFunction(std::move(breaks), std::move(values));
}

std::string StepFunction::to_csv() const {
    std::string out = "break,value\n";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        out += format_double(breaks_[i + 1]);
        out += ',';
        out += format_double(values_[i]);
        out += '\n';
    }
    return out;
}

StepFunction StepFunction::from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw validation_error("empty CSV");
    // tolerate a BOM / whitespace around the header
    auto trim = [](std::string s) {
        while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
        std::size_t b = s.find_first_not_of(" \t\xEF\xBB\xBF");
        return b == std::string::npos ? std::string() : s.substr(b);
    };
    if (trim(line) != "break,value")
        throw validation_error("CSV header must be 'break,value'");
    std::vector<double> breaks{0.0};
    std::vector<double> values;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw validation_error("CSV row needs 'break,value': " + line);
        breaks.push_back(parse_double(line.substr(0, comma)));
        values.push_back(parse_double(line.substr(comma + 1)));
    }
    return StepFunction(std::move(breaks), std::move(values));
}

CommonRefinement common_refine(const StepFunction& x, const StepFunction& y) {
    CommonRefinement out;
    const auto& bx = x.breaks();
    const auto& by = y.breaks();
    out.breaks.reserve(bx.size() + by.size());
    std::merge(bx.begin(), bx.end(), by.begin(), by.end(), std::back_inserter(out.breaks));
    out.breaks.erase(std::unique(out.breaks.begin(), out.breaks.end()), out.breaks.end());
    std::size_t ix = 0, iy = 0;
    for (std::size_t i = 0; i + 1 < out.breaks.size(); ++i) {
        double hi = out.breaks[i + 1];
        while (bx[ix + 1] < hi) ++ix;
        while (by[iy + 1] < hi) ++iy;
        out.x_values.push_back(x.values()[ix]);
        out.y_values.push_back(y.values()[iy]);
    }
    return out;
}

StepFunction combine(const StepFunction& x, const StepFunction& y,
                     const std::function<double(double, double)>& f) {
    CommonRefinement r = common_refine(x, y);
    std::vector<double> values(r.x_values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] = f(r.x_values[i], r.y_values[i]);
    return StepFunction(std::move(r.breaks), std::move(values));
}

}  // namespace symmcouple
