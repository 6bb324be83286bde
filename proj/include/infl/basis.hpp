#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "infl/errors.hpp"

namespace infl {

enum class BasisFamily {
    PowerDecay,  // c^(x-y0), c = i/12
    RootPower,   // (x-y0)^(i/12)
    LogShift,    // ln(x-y0)
    Sin,         // sin(pi*x*num/den)
    Cos,
    XSin,        // x*sin(pi*x*num/den)
    XCos,
    Constant,
};

/// One named scalar function of time with a closed-form derivative.
class BasisFunction {
public:
    static BasisFunction constant() {
        BasisFunction b;
        b.family_ = BasisFamily::Constant;
        b.name_ = "const";
        return b;
    }

    static BasisFunction power_decay(int i, int base_year) {
        if (i < 1) throw domain_error("power-decay basis needs i >= 1");
        BasisFunction b;
        b.family_ = BasisFamily::PowerDecay;
        b.i_ = i;
        b.base_year_ = base_year;
        b.c_ = i / 12.0;
        b.name_ = "(" + reduced_fraction(i, 12) + ")^(x-" + std::to_string(base_year) + ")";
        return b;
    }

    static BasisFunction root_power(int i, int base_year) {
        if (i < 1) throw domain_error("root-power basis needs i >= 1");
        BasisFunction b;
        b.family_ = BasisFamily::RootPower;
        b.i_ = i;
        b.base_year_ = base_year;
        b.c_ = i / 12.0;
        b.name_ = "(x-" + std::to_string(base_year) + ")^(" + reduced_fraction(i, 12) + ")";
        return b;
    }

    static BasisFunction log_shift(int base_year) {
        BasisFunction b;
        b.family_ = BasisFamily::LogShift;
        b.base_year_ = base_year;
        b.name_ = "ln(x-" + std::to_string(base_year) + ")";
        return b;
    }

    /// Pool member sin(pi*x/i) and relatives.
    static BasisFunction trig(BasisFamily family, int i) {
        if (i < 1) throw domain_error("trig basis needs i >= 1");
        BasisFunction b = trig_scaled(family, 1, i);
        b.i_ = i;
        return b;
    }

    /// General frequency: argument pi*x*num/den.
    static BasisFunction trig_scaled(BasisFamily family, int num, int den) {
        if (family != BasisFamily::Sin && family != BasisFamily::Cos &&
            family != BasisFamily::XSin && family != BasisFamily::XCos)
            throw domain_error("trig basis family expected");
        if (num < 1 || den < 1) throw domain_error("trig frequency must be positive");
        BasisFunction b;
        b.family_ = family;
        b.num_ = num;
        b.den_ = den;
        b.omega_ = std::numbers::pi * num / den;
        std::string arg = "pi*x";
        if (num != 1) arg = std::to_string(num) + "*" + arg;
        if (den != 1) arg += "/" + std::to_string(den);
        const char* fn = (family == BasisFamily::Sin || family == BasisFamily::XSin) ? "sin" : "cos";
        const char* pre = (family == BasisFamily::XSin || family == BasisFamily::XCos) ? "x*" : "";
        b.name_ = std::string(pre) + fn + "(" + arg + ")";
        return b;
    }

    BasisFamily family() const { return family_; }
    int index() const { return i_; }
    int base_year() const { return base_year_; }
    const std::string& name() const { return name_; }

    bool is_constant() const { return family_ == BasisFamily::Constant; }

    /// PowerDecay with c = 1 collapses onto the constant column.
    bool is_degenerate_constant() const {
        return family_ == BasisFamily::PowerDecay && c_ == 1.0;
    }

    bool evaluable_at(double x) const {
        switch (family_) {
            case BasisFamily::RootPower: return x >= base_year_;
            case BasisFamily::LogShift: return x > base_year_;
            default: return true;
        }
    }

    double operator()(double x) const {
        switch (family_) {
            case BasisFamily::Constant: return 1.0;
            case BasisFamily::PowerDecay: return std::pow(c_, x - base_year_);
            case BasisFamily::RootPower:
                if (x < base_year_) throw_out_of_domain(x);
                return std::pow(x - base_year_, c_);
            case BasisFamily::LogShift:
                if (x <= base_year_) throw_out_of_domain(x);
                return std::log(x - base_year_);
            case BasisFamily::Sin: return std::sin(omega_ * x);
            case BasisFamily::Cos: return std::cos(omega_ * x);
            case BasisFamily::XSin: return x * std::sin(omega_ * x);
            case BasisFamily::XCos: return x * std::cos(omega_ * x);
        }
        throw domain_error("unknown basis family");
    }

    double derivative(double x) const {
        switch (family_) {
            case BasisFamily::Constant: return 0.0;
            case BasisFamily::PowerDecay: return std::pow(c_, x - base_year_) * std::log(c_);
            case BasisFamily::RootPower:
                if (x < base_year_ || (x == base_year_ && c_ < 1.0)) throw_out_of_domain(x);
                return c_ * std::pow(x - base_year_, c_ - 1.0);
            case BasisFamily::LogShift:
                if (x <= base_year_) throw_out_of_domain(x);
                return 1.0 / (x - base_year_);
            case BasisFamily::Sin: return omega_ * std::cos(omega_ * x);
            case BasisFamily::Cos: return -omega_ * std::sin(omega_ * x);
            case BasisFamily::XSin: return std::sin(omega_ * x) + x * omega_ * std::cos(omega_ * x);
            case BasisFamily::XCos: return std::cos(omega_ * x) - x * omega_ * std::sin(omega_ * x);
        }
        throw domain_error("unknown basis family");
    }

    /// Ordering key for deterministic tie-breaking: families in pool listing
    /// order, then the member index i.
    std::array<int, 3> order_key() const {
        switch (family_) {
            case BasisFamily::PowerDecay: return {0, base_year_, i_};
            case BasisFamily::RootPower: return {1, base_year_, i_};
            case BasisFamily::LogShift:
                return {2, base_year_ == 1992 ? 0 : (base_year_ == 1991 ? 1 : base_year_), 0};
            case BasisFamily::Sin: return {3, 0, i_ != 0 ? i_ : den_};
            case BasisFamily::Cos: return {4, 0, i_ != 0 ? i_ : den_};
            case BasisFamily::XSin: return {5, 0, i_ != 0 ? i_ : den_};
            case BasisFamily::XCos: return {6, 0, i_ != 0 ? i_ : den_};
            case BasisFamily::Constant: return {7, 0, 0};
        }
        return {99, 0, 0};
    }

    friend bool operator==(const BasisFunction& a, const BasisFunction& b) {
        return a.family_ == b.family_ && a.i_ == b.i_ && a.base_year_ == b.base_year_ &&
               a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    static std::string reduced_fraction(int num, int den) {
        int g = std::gcd(num, den);
        num /= g;
        den /= g;
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    [[noreturn]] void throw_out_of_domain(double x) const {
        throw domain_error("basis function " + name_ + " not evaluable at x = " +
                           std::to_string(x));
    }

    BasisFamily family_ = BasisFamily::Constant;
    int i_ = 0;
    int base_year_ = 0;
    int num_ = 0, den_ = 1;
    double c_ = 0.0;
    double omega_ = 0.0;
    std::string name_;
};

/// Trend candidate pool: power-decay and root-power members for base years
/// 1992 and 1993 with i = 1..24, plus the two log shifts. Power-decay i = 12
/// degenerates to the constant column and is skipped.
inline std::vector<BasisFunction> trend_pool() {
    std::vector<BasisFunction> pool;
    for (int y0 : {1992, 1993})
        for (int i = 1; i <= 24; ++i) {
            BasisFunction b = BasisFunction::power_decay(i, y0);
            if (!b.is_degenerate_constant()) pool.push_back(std::move(b));
        }
    for (int y0 : {1992, 1993})
        for (int i = 1; i <= 24; ++i) pool.push_back(BasisFunction::root_power(i, y0));
    pool.push_back(BasisFunction::log_shift(1992));
    pool.push_back(BasisFunction::log_shift(1991));
    return pool;
}

/// Seasonal candidate pool: sin, cos, x*sin, x*cos of pi*x/i for i = 1..max_i.
inline std::vector<BasisFunction> seasonal_pool(int max_i = 5) {
    std::vector<BasisFunction> pool;
    for (BasisFamily fam : {BasisFamily::Sin, BasisFamily::Cos, BasisFamily::XSin, BasisFamily::XCos})
        for (int i = 1; i <= max_i; ++i) pool.push_back(BasisFunction::trig(fam, i));
    return pool;
}

/// Eight-term trigonometric rate basis backing the `paper-eq22` CLI preset.
inline std::vector<BasisFunction> builtin_trig_rate_basis() {
    using F = BasisFamily;
    return {
        BasisFunction::constant(),
        BasisFunction::trig_scaled(F::Cos, 1, 1),
        BasisFunction::trig_scaled(F::Sin, 2, 1),
        BasisFunction::trig_scaled(F::Sin, 4, 1),
        BasisFunction::trig_scaled(F::Sin, 1, 3),
        BasisFunction::trig_scaled(F::Cos, 1, 3),
        BasisFunction::trig_scaled(F::Cos, 1, 4),
        BasisFunction::trig_scaled(F::Sin, 1, 2),
    };
}

inline std::vector<double> builtin_trig_rate_coefficients() {
    return {0.04944210, 0.009094682, 0.01215932, 0.01823419,
            0.05263253, -0.009667420, -0.07212055, 0.02834145};
}

}  // namespace infl
