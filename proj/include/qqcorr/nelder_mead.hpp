#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>

namespace qqcorr {

template <std::size_t N>
struct NelderMeadResult {
    std::array<double, N> x{};
    double value = 0.0;
    int evaluations = 0;
};

struct NelderMeadOptions {
    double initial_step = 0.5;
    double f_tol = 1e-14;   // spread of simplex values
    double x_tol = 1e-10;   // simplex diameter
    int max_evaluations = 4000;
    int restarts = 2;       // re-seed the simplex at the incumbent after convergence
};

/// Derivative-free minimization with the standard reflection / expansion /
/// contraction / shrink moves (coefficients 1, 2, 1/2, 1/2).
template <std::size_t N, typename F>
NelderMeadResult<N> nelder_mead(F&& f, std::array<double, N> start, const NelderMeadOptions& opt = {}) {
    using Point = std::array<double, N>;
    int evals = 0;
    auto eval = [&](const Point& p) {
        ++evals;
        return f(p);
    };

    Point best = start;
    double best_value = eval(best);

    for (int round = 0; round <= opt.restarts; ++round) {
        std::array<Point, N + 1> pts;
        std::array<double, N + 1> vals;
        pts[0] = best;
        vals[0] = best_value;
        for (std::size_t i = 0; i < N; ++i) {
            pts[i + 1] = best;
            pts[i + 1][i] += opt.initial_step;
            vals[i + 1] = eval(pts[i + 1]);
        }
        std::array<std::size_t, N + 1> order;

        while (evals < opt.max_evaluations) {
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
            const std::size_t lo = order.front(), hi = order.back(), second = order[N - 1];

            double diameter = 0.0;
            for (std::size_t i = 0; i <= N; ++i)
                for (std::size_t d = 0; d < N; ++d) diameter = std::max(diameter, std::abs(pts[i][d] - pts[lo][d]));
            if (vals[hi] - vals[lo] <= opt.f_tol && diameter <= opt.x_tol) break;
            if (diameter <= opt.x_tol * 1e-3) break;

            Point centroid{};
            for (std::size_t i = 0; i <= N; ++i) {
                if (i == hi) continue;
                for (std::size_t d = 0; d < N; ++d) centroid[d] += pts[i][d] / static_cast<double>(N);
            }
            auto along = [&](double t) {
                Point p;
                for (std::size_t d = 0; d < N; ++d) p[d] = centroid[d] + t * (pts[hi][d] - centroid[d]);
                return p;
            };

            const Point reflected = along(-1.0);
            const double fr = eval(reflected);
            if (fr < vals[lo]) {
                const Point expanded = along(-2.0);
                const double fe = eval(expanded);
                if (fe < fr) {
                    pts[hi] = expanded;
                    vals[hi] = fe;
                } else {
                    pts[hi] = reflected;
                    vals[hi] = fr;
                }
                continue;
            }
            if (fr < vals[second]) {
                pts[hi] = reflected;
                vals[hi] = fr;
                continue;
            }
            const bool outside = fr < vals[hi];
            const Point contracted = along(outside ? -0.5 : 0.5);
            const double fc = eval(contracted);
            if (fc < (outside ? fr : vals[hi])) {
                pts[hi] = contracted;
                vals[hi] = fc;
                continue;
            }
            for (std::size_t i = 0; i <= N; ++i) {
                if (i == lo) continue;
                for (std::size_t d = 0; d < N; ++d) pts[i][d] = pts[lo][d] + 0.5 * (pts[i][d] - pts[lo][d]);
                vals[i] = eval(pts[i]);
            }
        }

        const auto it = std::min_element(vals.begin(), vals.end());
        const std::size_t idx = static_cast<std::size_t>(it - vals.begin());
        const bool improved = *it < best_value - opt.f_tol;
        if (*it <= best_value) {
            best = pts[idx];
            best_value = *it;
        }
        if (round > 0 && !improved) break;
        if (evals >= opt.max_evaluations) break;
    }
    return {best, best_value, evals};
}

}  // namespace qqcorr
