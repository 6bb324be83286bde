#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "infl/errors.hpp"

namespace infl {

struct QuadratureConfig {
    double abs_tol = 1e-10;
    int max_depth = 40;
    int initial_subdivisions = 1;  // per knot-free segment
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::int64_t evaluations = 0;
};

namespace detail {

struct QuadCounter {
    const std::function<double(double)>& f;
    std::int64_t evaluations = 0;

    double operator()(double x) {
        ++evaluations;
        double v = f(x);
        if (!std::isfinite(v))
            throw domain_error("integrand not finite at t = " + std::to_string(x));
        return v;
    }
};

struct QuadSegment {
    double a, fa, m, fm, b, fb;
    double simpson;  // coarse estimate over [a,b]
    double tol;
    int depth;
};

inline double simpson_rule(double a, double fa, double fm, double b, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

}  // namespace detail

/// Adaptive Simpson integration of f over [a,b]. Interior breakpoints in
/// `knots` seed the initial segmentation so subdivision never straddles a
/// kink. Accepts a refinement when |S_fine - S_coarse|/15 is within the local
/// tolerance; the local tolerance is halved on each split, so accepted local
/// errors sum to at most abs_tol.
inline QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                                  std::span<const double> knots, QuadratureConfig cfg = {}) {
    if (!(cfg.abs_tol > 0.0)) throw domain_error("quadrature abs_tol must be positive");
    if (cfg.max_depth < 1) throw domain_error("quadrature max_depth must be >= 1");
    if (cfg.initial_subdivisions < 1)
        throw domain_error("quadrature initial_subdivisions must be >= 1");
    if (!(a <= b)) throw domain_error("quadrature bounds must satisfy a <= b");
    if (a == b) return {};

    std::vector<double> cuts;
    cuts.push_back(a);
    for (double k : knots)
        if (k > a && k < b) cuts.push_back(k);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    detail::QuadCounter fn{f};
    const double total_len = b - a;
    std::vector<detail::QuadSegment> stack;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double lo = cuts[i], hi = cuts[i + 1];
        for (int s = 0; s < cfg.initial_subdivisions; ++s) {
            double sa = lo + (hi - lo) * s / cfg.initial_subdivisions;
            double sb = (s + 1 == cfg.initial_subdivisions)
                            ? hi
                            : lo + (hi - lo) * (s + 1) / cfg.initial_subdivisions;
            if (!(sa < sb)) continue;
            double sm = 0.5 * (sa + sb);
            double fa = fn(sa), fm = fn(sm), fb = fn(sb);
            double S = detail::simpson_rule(sa, fa, fm, sb, fb);
            stack.push_back({sa, fa, sm, fm, sb, fb, S, cfg.abs_tol * (sb - sa) / total_len,
                             cfg.max_depth});
        }
    }

    double value = 0.0;
    double err = 0.0;
    bool depth_exhausted = false;
    while (!stack.empty()) {
        detail::QuadSegment s = stack.back();
        stack.pop_back();
        double lm = 0.5 * (s.a + s.m);
        double rm = 0.5 * (s.m + s.b);
        if (!(s.a < lm && lm < s.m) || !(s.m < rm && rm < s.b)) {
            // interval at floating-point resolution; its width is ~1 ulp
            value += s.simpson;
            continue;
        }
        double flm = fn(lm), frm = fn(rm);
        double Sl = detail::simpson_rule(s.a, s.fa, flm, s.m, s.fm);
        double Sr = detail::simpson_rule(s.m, s.fm, frm, s.b, s.fb);
        double fine = Sl + Sr;
        double local_err = std::abs(fine - s.simpson) / 15.0;
        if (local_err <= s.tol) {
            value += fine + (fine - s.simpson) / 15.0;
            err += local_err;
        } else if (s.depth <= 1) {
            value += fine + (fine - s.simpson) / 15.0;
            err += local_err;
            depth_exhausted = true;
        } else {
            stack.push_back({s.a, s.fa, lm, flm, s.m, s.fm, Sl, s.tol / 2.0, s.depth - 1});
            stack.push_back({s.m, s.fm, rm, frm, s.b, s.fb, Sr, s.tol / 2.0, s.depth - 1});
        }
    }

    if (depth_exhausted)
        throw accuracy_error("quadrature depth exhausted before reaching abs_tol = " +
                                 std::to_string(cfg.abs_tol),
                             value, err);
    return {value, err, fn.evaluations};
}

inline QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                                  QuadratureConfig cfg = {}) {
    return integrate(f, a, b, {}, cfg);
}

}  // namespace infl
