#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "infl/errors.hpp"

namespace infl {

struct OptimizerConfig {
    int max_evaluations = 2000;
    double initial_step = 0.01;  // absolute coordinate perturbation for the start simplex
    double f_tol = 1e-16;        // relative simplex spread at convergence
};

struct SimplexResult {
    std::vector<double> x;
    double f = std::numeric_limits<double>::infinity();
    int evaluations = 0;
    bool converged = false;
};

/// Derivative-free downhill simplex (reflection 1, expansion 2, contraction
/// 0.5, shrink 0.5). Non-finite objective values are treated as +infinity.
/// Deterministic for a given start point and config.
inline SimplexResult minimize(const std::function<double(std::span<const double>)>& objective,
                              std::vector<double> x0, const OptimizerConfig& cfg = {}) {
    const std::size_t n = x0.size();
    if (n == 0) throw domain_error("simplex needs at least one coordinate");

    auto eval = [&](const std::vector<double>& x, int& budget_used) {
        ++budget_used;
        double v = objective(x);
        return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    };

    int used = 0;
    std::vector<std::vector<double>> pts;
    std::vector<double> fs;
    pts.push_back(x0);
    fs.push_back(eval(x0, used));
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<double> p = x0;
        p[k] += cfg.initial_step;
        pts.push_back(std::move(p));
        fs.push_back(eval(pts.back(), used));
    }

    auto order = [&] {
        std::vector<std::size_t> idx(pts.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return fs[a] < fs[b];
        });
        std::vector<std::vector<double>> p2;
        std::vector<double> f2;
        for (std::size_t i : idx) {
            p2.push_back(pts[i]);
            f2.push_back(fs[i]);
        }
        pts.swap(p2);
        fs.swap(f2);
    };
    order();

    if (!std::isfinite(fs.front()))
        return {pts.front(), fs.front(), used, false};

    bool converged = false;
    while (used < cfg.max_evaluations) {
        if (std::isfinite(fs.back()) &&
            fs.back() - fs.front() <= cfg.f_tol * (1.0 + std::abs(fs.front()))) {
            converged = true;
            break;
        }
        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k] / static_cast<double>(n);

        auto blend = [&](double factor) {
            std::vector<double> p(n);
            for (std::size_t k = 0; k < n; ++k)
                p[k] = centroid[k] + factor * (pts.back()[k] - centroid[k]);
            return p;
        };

        std::vector<double> reflected = blend(-1.0);
        double fr = eval(reflected, used);
        if (fr < fs.front()) {
            std::vector<double> expanded = blend(-2.0);
            double fe = eval(expanded, used);
            if (fe < fr) {
                pts.back() = std::move(expanded);
                fs.back() = fe;
            } else {
                pts.back() = std::move(reflected);
                fs.back() = fr;
            }
        } else if (fr < fs[n - 1]) {
            pts.back() = std::move(reflected);
            fs.back() = fr;
        } else {
            std::vector<double> contracted = blend(fr < fs.back() ? -0.5 : 0.5);
            double fc = eval(contracted, used);
            if (fc < std::min(fr, fs.back())) {
                pts.back() = std::move(contracted);
                fs.back() = fc;
            } else {
                for (std::size_t i = 1; i <= n; ++i) {
                    for (std::size_t k = 0; k < n; ++k)
                        pts[i][k] = pts[0][k] + 0.5 * (pts[i][k] - pts[0][k]);
                    fs[i] = eval(pts[i], used);
                    if (used >= cfg.max_evaluations) break;
                }
            }
        }
        order();
    }

    return {pts.front(), fs.front(), used, converged};
}

}  // namespace infl
