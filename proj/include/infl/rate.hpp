#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "infl/basis.hpp"
#include "infl/cpi_model.hpp"
#include "infl/errors.hpp"
#include "infl/quadrature.hpp"

namespace infl {

/// Rate of inflation over an interval together with the growth factor
/// 1 + iota = X(t0)/X(t1).
struct AccumulationResult {
    double rate;
    double growth_factor;
    double objective_ratio;  // X(t0)/X(t1); equal to growth_factor
};

/// Evaluable per-unit-time rate iota(t), tagged by form. Values at knots use
/// the right-hand limit; the right domain endpoint uses the left limit.
class RateFunction {
public:
    struct Constant {
        double value;
    };
    struct PiecewiseConstant {
        std::vector<double> knots;   // n+1, strictly increasing
        std::vector<double> values;  // n
    };
    struct CpiDerived {
        std::shared_ptr<const CpiModel> model;
    };
    struct BasisExpansion {
        std::vector<BasisFunction> basis;
        std::vector<double> coefficients;
        double lo, hi;
    };
    struct Custom {
        std::function<double(double)> fn;
        double lo, hi;
        std::vector<double> knots;
    };

    static RateFunction constant(double value) { return RateFunction(Constant{value}); }

    static RateFunction piecewise_constant(std::vector<double> knots, std::vector<double> values) {
        if (knots.size() < 2 || values.size() + 1 != knots.size())
            throw domain_error("piecewise-constant rate needs n+1 knots for n values");
        for (std::size_t i = 1; i < knots.size(); ++i)
            if (!(knots[i - 1] < knots[i]))
                throw domain_error("piecewise-constant rate knots must be strictly increasing");
        return RateFunction(PiecewiseConstant{std::move(knots), std::move(values)});
    }

    static RateFunction from_cpi(std::shared_ptr<const CpiModel> model) {
        if (!model) throw domain_error("null cpi model");
        return RateFunction(CpiDerived{std::move(model)});
    }

    static RateFunction basis_expansion(std::vector<BasisFunction> basis,
                                        std::vector<double> coefficients,
                                        double lo = -std::numeric_limits<double>::infinity(),
                                        double hi = std::numeric_limits<double>::infinity()) {
        if (basis.size() != coefficients.size() || basis.empty())
            throw domain_error("basis expansion needs one coefficient per basis function");
        return RateFunction(BasisExpansion{std::move(basis), std::move(coefficients), lo, hi});
    }

    static RateFunction from_function(std::function<double(double)> fn,
                                      double lo = -std::numeric_limits<double>::infinity(),
                                      double hi = std::numeric_limits<double>::infinity(),
                                      std::vector<double> knots = {}) {
        std::sort(knots.begin(), knots.end());
        return RateFunction(Custom{std::move(fn), lo, hi, std::move(knots)});
    }

    double operator()(double t) const {
        check_domain(t);
        if (const auto* c = std::get_if<Constant>(&form_)) return c->value;
        if (const auto* p = std::get_if<PiecewiseConstant>(&form_))
            return p->values[detail::segment_index(p->knots, t)];
        if (const auto* d = std::get_if<CpiDerived>(&form_))
            return std::exp(d->model->log_derivative(t)) - 1.0;
        if (const auto* b = std::get_if<BasisExpansion>(&form_)) {
            double v = 0.0;
            for (std::size_t j = 0; j < b->basis.size(); ++j)
                v += b->coefficients[j] * b->basis[j](t);
            return v;
        }
        return std::get<Custom>(form_).fn(t);
    }

    double domain_lo() const {
        if (const auto* p = std::get_if<PiecewiseConstant>(&form_)) return p->knots.front();
        if (const auto* d = std::get_if<CpiDerived>(&form_)) return d->model->domain_lo();
        if (const auto* b = std::get_if<BasisExpansion>(&form_)) return b->lo;
        if (const auto* c = std::get_if<Custom>(&form_)) return c->lo;
        return -std::numeric_limits<double>::infinity();
    }

    double domain_hi() const {
        if (const auto* p = std::get_if<PiecewiseConstant>(&form_)) return p->knots.back();
        if (const auto* d = std::get_if<CpiDerived>(&form_)) return d->model->domain_hi();
        if (const auto* b = std::get_if<BasisExpansion>(&form_)) return b->hi;
        if (const auto* c = std::get_if<Custom>(&form_)) return c->hi;
        return std::numeric_limits<double>::infinity();
    }

    /// Interior breakpoints within (a, b).
    std::vector<double> knots_between(double a, double b) const {
        std::span<const double> all;
        if (const auto* p = std::get_if<PiecewiseConstant>(&form_)) all = p->knots;
        else if (const auto* d = std::get_if<CpiDerived>(&form_)) all = d->model->knots();
        else if (const auto* c = std::get_if<Custom>(&form_)) all = c->knots;
        std::vector<double> out;
        for (double k : all)
            if (k > a && k < b) out.push_back(k);
        return out;
    }

    const char* form_name() const {
        if (std::holds_alternative<Constant>(form_)) return "constant";
        if (std::holds_alternative<PiecewiseConstant>(form_)) return "piecewise-constant";
        if (std::holds_alternative<CpiDerived>(form_)) return "cpi-derived";
        if (std::holds_alternative<BasisExpansion>(form_)) return "basis-expansion";
        return "custom";
    }

    const Constant* as_constant() const { return std::get_if<Constant>(&form_); }
    const PiecewiseConstant* as_piecewise_constant() const {
        return std::get_if<PiecewiseConstant>(&form_);
    }
    const CpiDerived* as_cpi_derived() const { return std::get_if<CpiDerived>(&form_); }
    const BasisExpansion* as_basis_expansion() const { return std::get_if<BasisExpansion>(&form_); }

private:
    using Form = std::variant<Constant, PiecewiseConstant, CpiDerived, BasisExpansion, Custom>;

    explicit RateFunction(Form form) : form_(std::move(form)) {}

    void check_domain(double t) const {
        if (t < domain_lo() || t > domain_hi())
            throw domain_error("t = " + std::to_string(t) + " outside rate function domain");
    }

    Form form_;
};

/// iota(x) = e^((ln o CPI)'(x)) - 1; 1 + iota > 0 holds by construction.
inline RateFunction rate_from_cpi(const CpiModel& model) {
    return RateFunction::from_cpi(std::make_shared<CpiModel>(model));
}

inline RateFunction rate_from_cpi(std::shared_ptr<const CpiModel> model) {
    return RateFunction::from_cpi(std::move(model));
}

/// (1 + I)^t - 1 for a constant rate I over a duration t.
inline double constant_accumulate(double rate, double duration) {
    if (!(rate > -1.0))
        throw rate_domain_error("constant rate must exceed -1, got " + std::to_string(rate));
    return std::expm1(duration * std::log1p(rate));
}

/// prod_i (1 + I_i)^(t_{i+1} - t_i) - 1, evaluated as a direct product.
inline double piecewise_product_accumulate(std::span<const double> knots,
                                           std::span<const double> values) {
    if (knots.size() < 2 || values.size() + 1 != knots.size())
        throw domain_error("piecewise product needs n+1 knots for n values");
    double product = 1.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(knots[i] < knots[i + 1]))
            throw domain_error("piecewise product knots must be strictly increasing");
        if (!(values[i] > -1.0))
            throw rate_domain_error("piecewise rate must exceed -1, got " +
                                    std::to_string(values[i]));
        product *= std::pow(1.0 + values[i], knots[i + 1] - knots[i]);
    }
    return product - 1.0;
}

/// Integral of ln(1 + iota(u)) over [t0, t1]. Constant and piecewise-constant
/// forms and continuous-interpolant CPI models use exact closed forms;
/// everything else goes through adaptive quadrature.
inline double log_accumulation(const RateFunction& rate, double t0, double t1,
                               const QuadratureConfig& quad = {}) {
    if (!(t0 <= t1)) throw domain_error("accumulation interval needs t0 <= t1");
    if (t0 < rate.domain_lo() || t1 > rate.domain_hi())
        throw domain_error("accumulation interval [" + std::to_string(t0) + ", " +
                           std::to_string(t1) + "] outside rate function domain");
    if (t0 == t1) return 0.0;

    if (const auto* c = rate.as_constant()) {
        if (!(c->value > -1.0))
            throw rate_domain_error("rate " + std::to_string(c->value) + " violates 1 + iota > 0");
        return (t1 - t0) * std::log1p(c->value);
    }
    if (const auto* p = rate.as_piecewise_constant()) {
        double sum = 0.0;
        for (std::size_t i = 0; i < p->values.size(); ++i) {
            double lo = std::max(t0, p->knots[i]);
            double hi = std::min(t1, p->knots[i + 1]);
            if (lo >= hi) continue;
            if (!(p->values[i] > -1.0))
                throw rate_domain_error("rate " + std::to_string(p->values[i]) +
                                        " on segment " + std::to_string(i) +
                                        " violates 1 + iota > 0");
            sum += (hi - lo) * std::log1p(p->values[i]);
        }
        return sum;
    }
    if (const auto* d = rate.as_cpi_derived(); d && d->model->has_exact_log_accumulation())
        return std::log((*d->model)(t1)) - std::log((*d->model)(t0));

    for (double t : {t0, t1})
        if (!(1.0 + rate(t) > 0.0))
            throw rate_domain_error("rate violates 1 + iota > 0 at t = " + std::to_string(t));
    std::vector<double> knots = rate.knots_between(t0, t1);
    try {
        return integrate([&rate](double u) { return std::log1p(rate(u)); }, t0, t1, knots, quad)
            .value;
    } catch (const domain_error&) {
        throw rate_domain_error("rate violates 1 + iota > 0 inside [" + std::to_string(t0) +
                                ", " + std::to_string(t1) + "]");
    }
}

/// Growth factor e^(integral of ln(1 + iota)) and the interval rate.
inline AccumulationResult accumulate(const RateFunction& rate, double t0, double t1,
                                     const QuadratureConfig& quad = {}) {
    double growth = std::exp(log_accumulation(rate, t0, t1, quad));
    return {growth - 1.0, growth, growth};
}

/// Real value at t1 of an amount x0 held since t0: x0 / growth factor.
inline double real_value(const RateFunction& rate, double x0, double t0, double t1,
                         const QuadratureConfig& quad = {}) {
    if (!(x0 > 0.0)) throw domain_error("initial value must be positive");
    return x0 / accumulate(rate, t0, t1, quad).growth_factor;
}

}  // namespace infl
