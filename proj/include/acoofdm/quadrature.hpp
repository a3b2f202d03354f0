#pragma once

// Gauss-Legendre / Gauss-Hermite rules and a globally adaptive composite
// Gauss-Legendre integrator.

#include <acoofdm/error.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <queue>
#include <span>
#include <vector>

namespace acoofdm {

/// n-point rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

/// Legendre nodes by Newton iteration on P_n.
inline GaussRule gauss_legendre(std::size_t n) {
    if (n == 0) throw ConfigError("Gauss-Legendre order must be >= 1");
    GaussRule r{std::vector<double>(n), std::vector<double>(n)};
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - static_cast<double>(j) * p2) / (static_cast<double>(j) + 1.0);
            }
            dp = static_cast<double>(n) * (z * p0 - p1) / (z * z - 1.0);
            const double step = p0 / dp;
            z -= step;
            if (std::abs(step) < 1e-16) break;
        }
        r.nodes[i] = -z;
        r.nodes[n - 1 - i] = z;
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    return r;
}

/// Hermite rule for weight exp(-x^2) on the real line (physicists'
/// convention): sum w_i f(x_i) ~ int exp(-x^2) f(x) dx.
inline GaussRule gauss_hermite(std::size_t n) {
    if (n == 0) throw ConfigError("Gauss-Hermite order must be >= 1");
    GaussRule r{std::vector<double>(n), std::vector<double>(n)};
    const double pim4 = std::pow(std::numbers::pi, -0.25);
    const std::size_t m = (n + 1) / 2;
    const double nd = static_cast<double>(n);
    double z = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        // Standard asymptotic starting guesses for the largest roots first.
        if (i == 0)
            z = std::sqrt(2.0 * nd + 1.0) - 1.85575 * std::pow(2.0 * nd + 1.0, -0.16667);
        else if (i == 1)
            z -= 1.14 * std::pow(nd, 0.426) / z;
        else if (i == 2)
            z = 1.86 * z - 0.86 * r.nodes[0];
        else if (i == 3)
            z = 1.91 * z - 0.91 * r.nodes[1];
        else
            z = 2.0 * z - r.nodes[i - 2];
        double pp = 0.0;
        for (int iter = 0; iter < 200; ++iter) {
            double p1 = pim4, p2 = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                const double jd = static_cast<double>(j);
                p1 = z * std::sqrt(2.0 / (jd + 1.0)) * p2 - std::sqrt(jd / (jd + 1.0)) * p3;
            }
            pp = std::sqrt(2.0 * nd) * p2;
            const double step = p1 / pp;
            z -= step;
            if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z))) break;
        }
        r.nodes[i] = z;
        r.nodes[n - 1 - i] = -z;
        r.weights[i] = 2.0 / (pp * pp);
        r.weights[n - 1 - i] = r.weights[i];
    }
    return r;
}

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // sum of local |fine - coarse| estimates
    std::size_t evaluations = 0;
};

struct AdaptiveOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    std::size_t max_intervals = 20000;
};

/// Globally adaptive composite Gauss-Legendre quadrature of f over the
/// panels delimited by `breaks` (sorted). The interval with the largest
/// local error is bisected until the summed error drops below
/// max(abs_tol, rel_tol * |value|).
template <class F>
QuadResult integrate_adaptive(F&& f, std::span<const double> breaks, const GaussRule& rule,
                              const AdaptiveOptions& opt = {}) {
    QuadResult res;
    auto panel = [&](double a, double b) {
        const double c = 0.5 * (a + b), h = 0.5 * (b - a);
        double s = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i) s += rule.weights[i] * f(c + h * rule.nodes[i]);
        res.evaluations += rule.size();
        return s * h;
    };
    struct Piece {
        double a, b, left, right, err;
        bool operator<(const Piece& o) const { return err < o.err; }
    };
    auto make = [&](double a, double b, double coarse) {
        const double m = 0.5 * (a + b);
        const double l = panel(a, m), r = panel(m, b);
        return Piece{a, b, l, r, std::abs(l + r - coarse)};
    };

    std::priority_queue<Piece> heap;
    double total = 0.0, err = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double a = breaks[i], b = breaks[i + 1];
        if (!(b > a)) continue;
        auto p = make(a, b, panel(a, b));
        total += p.left + p.right;
        err += p.err;
        heap.push(p);
    }
    while (!heap.empty() && err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total)) &&
           heap.size() < opt.max_intervals) {
        const Piece p = heap.top();
        heap.pop();
        total -= p.left + p.right;
        err -= p.err;
        const double m = 0.5 * (p.a + p.b);
        auto l = make(p.a, m, p.left);
        auto r = make(m, p.b, p.right);
        total += l.left + l.right + r.left + r.right;
        err += l.err + r.err;
        heap.push(l);
        heap.push(r);
    }
    // Re-sum to shed the drift of the running total.
    res.value = 0.0;
    res.error = 0.0;
    while (!heap.empty()) {
        res.value += heap.top().left + heap.top().right;
        res.error += heap.top().err;
        heap.pop();
    }
    return res;
}

template <class F>
QuadResult integrate_adaptive(F&& f, double a, double b, const GaussRule& rule, const AdaptiveOptions& opt = {}) {
    const double breaks[] = {a, b};
    return integrate_adaptive(std::forward<F>(f), std::span<const double>(breaks), rule, opt);
}

}  // namespace acoofdm
