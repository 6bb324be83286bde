#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "infl/errors.hpp"
#include "infl/timebase.hpp"

namespace infl {

/// Exponential F(x) = scale * e^(log_slope * x) with first-order contact to
/// an index curve at some anchor point.
struct TangentExponential {
    double scale;      // A > 0
    double log_slope;  // B

    double operator()(double x) const { return scale * std::exp(log_slope * x); }
};

/// Positive, piecewise-differentiable index curve. Evaluators are immutable
/// after construction; the log-derivative follows the right-hand-limit rule
/// at interior knots (left limit at the right domain endpoint).
class CpiModel {
public:
    CpiModel(std::function<double(double)> value, std::function<double(double)> log_derivative,
             double domain_lo, double domain_hi, std::vector<double> knots,
             bool exact_log_accumulation)
        : value_(std::move(value)),
          log_derivative_(std::move(log_derivative)),
          lo_(domain_lo),
          hi_(domain_hi),
          knots_(std::move(knots)),
          exact_(exact_log_accumulation) {
        std::sort(knots_.begin(), knots_.end());
    }

    double operator()(double x) const {
        check_domain(x);
        double v = value_(x);
        if (!(v > 0.0) || !std::isfinite(v))
            throw domain_error("cpi model not positive at x = " + std::to_string(x));
        return v;
    }

    /// (ln o CPI)'(x)
    double log_derivative(double x) const {
        check_domain(x);
        return log_derivative_(x);
    }

    double domain_lo() const { return lo_; }
    double domain_hi() const { return hi_; }
    std::span<const double> knots() const { return knots_; }

    /// True when the integral of the log-derivative telescopes exactly to
    /// ln CPI(t1) - ln CPI(t0) (continuous interpolants).
    bool has_exact_log_accumulation() const { return exact_; }

private:
    void check_domain(double x) const {
        if (x < lo_ || x > hi_)
            throw domain_error("x = " + std::to_string(x) + " outside cpi model domain [" +
                               std::to_string(lo_) + ", " + std::to_string(hi_) + "]");
    }

    std::function<double(double)> value_;
    std::function<double(double)> log_derivative_;
    double lo_, hi_;
    std::vector<double> knots_;
    bool exact_;
};

/// A and B of the exponential matching CPI value and slope at x:
/// B = CPI'(x)/CPI(x), A = CPI(x) * e^(-B x).
inline TangentExponential tangent_exponential(const CpiModel& model, double x) {
    double v = model(x);
    double b = model.log_derivative(x);
    return {v * std::exp(-b * x), b};
}

namespace detail {

/// Index of the segment owning t under the right-continuity convention;
/// t equal to the last knot selects the last segment.
inline std::size_t segment_index(std::span<const double> knots, double t) {
    auto it = std::upper_bound(knots.begin(), knots.end(), t);
    if (it == knots.begin()) throw domain_error("time before first knot");
    std::size_t i = static_cast<std::size_t>(it - knots.begin()) - 1;
    if (i + 1 >= knots.size()) i = knots.size() - 2;  // right endpoint: left limit
    return i;
}

}  // namespace detail

/// Continuous piecewise affine interpolant through all observations.
inline CpiModel piecewise_affine_model(const CpiSeries& series) {
    struct Seg {
        double t0, v0, slope;
    };
    auto segs = std::make_shared<std::vector<Seg>>();
    auto knots = std::make_shared<std::vector<double>>(series.times());
    segs->reserve(series.size() - 1);
    for (std::size_t i = 0; i + 1 < series.size(); ++i) {
        double dt = series[i + 1].time - series[i].time;
        segs->push_back({series[i].time, series[i].value,
                         (series[i + 1].value - series[i].value) / dt});
    }
    auto value = [segs, knots](double t) {
        const Seg& s = (*segs)[detail::segment_index(*knots, t)];
        return s.v0 + s.slope * (t - s.t0);
    };
    auto log_deriv = [segs, knots](double t) {
        const Seg& s = (*segs)[detail::segment_index(*knots, t)];
        return s.slope / (s.v0 + s.slope * (t - s.t0));
    };
    std::vector<double> interior(knots->begin() + 1, knots->end() - 1);
    return CpiModel(value, log_deriv, series.span_start(), series.span_end(),
                    std::move(interior), /*exact_log_accumulation=*/true);
}

/// Interpolant exponential on each interval (affine in log space); its
/// derived rate of inflation is piecewise constant.
inline CpiModel log_linear_model(const CpiSeries& series) {
    struct Seg {
        double t0, log_v0, log_slope;
    };
    auto segs = std::make_shared<std::vector<Seg>>();
    auto knots = std::make_shared<std::vector<double>>(series.times());
    segs->reserve(series.size() - 1);
    for (std::size_t i = 0; i + 1 < series.size(); ++i) {
        double dt = series[i + 1].time - series[i].time;
        segs->push_back({series[i].time, std::log(series[i].value),
                         (std::log(series[i + 1].value) - std::log(series[i].value)) / dt});
    }
    auto value = [segs, knots](double t) {
        const Seg& s = (*segs)[detail::segment_index(*knots, t)];
        return std::exp(s.log_v0 + s.log_slope * (t - s.t0));
    };
    auto log_deriv = [segs, knots](double t) {
        return (*segs)[detail::segment_index(*knots, t)].log_slope;
    };
    std::vector<double> interior(knots->begin() + 1, knots->end() - 1);
    return CpiModel(value, log_deriv, series.span_start(), series.span_end(),
                    std::move(interior), /*exact_log_accumulation=*/true);
}

}  // namespace infl
