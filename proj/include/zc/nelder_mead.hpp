// Derivative-free simplex minimizer (reflect / expand / contract / shrink).
// The best vertex is never replaced by a worse one, so the running best
// objective is monotone.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

namespace zc {

struct NelderMeadOptions {
    int max_iterations = 400;
    double f_spread_tol = 1e-14;   // stop when max-min objective over simplex is below
    double x_spread_tol = 1e-12;   // stop when simplex diameter is below
    double stop_below = -std::numeric_limits<double>::infinity();  // early exit
};

struct NelderMeadResult {
    std::vector<double> x;
    double fx = 0.0;
    int iterations = 0;
};

inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                    const std::vector<double>& x0, double step,
                                    const NelderMeadOptions& opts = {}) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> x(n + 1, x0);
    for (std::size_t i = 0; i < n; ++i) x[i + 1][i] += step;
    std::vector<double> fx(n + 1);
    for (std::size_t j = 0; j <= n; ++j) fx[j] = f(x[j]);

    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
    int iter = 0;
    for (; iter < opts.max_iterations; ++iter) {
        std::vector<std::size_t> idx(n + 1);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
        {
            std::vector<std::vector<double>> xs(n + 1);
            std::vector<double> fs(n + 1);
            for (std::size_t k = 0; k <= n; ++k) { xs[k] = x[idx[k]]; fs[k] = fx[idx[k]]; }
            x.swap(xs);
            fx.swap(fs);
        }
        if (fx[0] < opts.stop_below) break;
        if (fx[n] - fx[0] <= opts.f_spread_tol) break;
        double diam = 0.0;
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t i = 0; i < n; ++i) diam = std::max(diam, std::abs(x[j][i] - x[0][i]));
        if (diam <= opts.x_spread_tol) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) centroid[i] += x[j][i] / static_cast<double>(n);

        std::vector<double> xr(n);
        for (std::size_t i = 0; i < n; ++i) xr[i] = centroid[i] + alpha * (centroid[i] - x[n][i]);
        const double fr = f(xr);

        if (fr < fx[0]) {
            std::vector<double> xe(n);
            for (std::size_t i = 0; i < n; ++i) xe[i] = centroid[i] + gamma * (xr[i] - centroid[i]);
            const double fe = f(xe);
            if (fe < fr) { x[n] = xe; fx[n] = fe; }
            else { x[n] = xr; fx[n] = fr; }
        } else if (fr < fx[n - 1]) {
            x[n] = xr;
            fx[n] = fr;
        } else {
            const bool outside = fr < fx[n];
            std::vector<double> xc(n);
            if (outside)
                for (std::size_t i = 0; i < n; ++i) xc[i] = centroid[i] + rho * (xr[i] - centroid[i]);
            else
                for (std::size_t i = 0; i < n; ++i) xc[i] = centroid[i] + rho * (x[n][i] - centroid[i]);
            const double fc = f(xc);
            if (fc < (outside ? fr : fx[n])) {
                x[n] = xc;
                fx[n] = fc;
            } else {
                for (std::size_t j = 1; j <= n; ++j) {
                    for (std::size_t i = 0; i < n; ++i)
                        x[j][i] = x[0][i] + sigma * (x[j][i] - x[0][i]);
                    fx[j] = f(x[j]);
                }
            }
        }
    }

    std::size_t best = 0;
    for (std::size_t j = 1; j <= n; ++j)
        if (fx[j] < fx[best]) best = j;
    return NelderMeadResult{x[best], fx[best], iter};
}

}  // namespace zc
