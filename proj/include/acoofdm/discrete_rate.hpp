#pragma once

// Rates of ACO-OFDM with equiprobable discrete constellations.
//
// The conventional receiver sees N/4 parallel channels Y = X/2 + W with
// W ~ CN(0, sigma^2). With the large-N mean intensity E[S] = sigma_x/sqrt(2 pi)
// and E|X|^2 = 2 sigma_x^2, a unit-energy constellation point c is received as
// sqrt(pi) E c + W.

#include <acoofdm/channel.hpp>
#include <acoofdm/constellation.hpp>
#include <acoofdm/error.hpp>
#include <acoofdm/gaussian_model.hpp>
#include <acoofdm/quadrature.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace acoofdm {

enum class MiMethod { quadrature, monte_carlo };

inline constexpr std::size_t kHermiteOrder = 64;

namespace detail {

/// log2 sum_j exp(-(|d_j + w|^2 - |w|^2) / sigma^2) with d_j = a (c_i - c_j).
inline double log2_sum_exp_metric(std::span<const Complex> diffs, Complex w, double inv_s2) {
    double best = -INFINITY;
    // Two passes keep the exponentials in range at high SNR.
    thread_local std::vector<double> t;
    t.resize(diffs.size());
    for (std::size_t j = 0; j < diffs.size(); ++j) {
        const Complex d = diffs[j];
        t[j] = -(std::norm(d) + 2.0 * (d.real() * w.real() + d.imag() * w.imag())) * inv_s2;
        best = std::max(best, t[j]);
    }
    double s = 0.0;
    for (double v : t) s += std::exp(v - best);
    return (best + std::log(s)) / std::numbers::ln2;
}

inline std::vector<std::vector<Complex>> pairwise_differences(const Constellation& c, double amplitude) {
    const auto pts = c.points();
    std::vector<std::vector<Complex>> d(pts.size(), std::vector<Complex>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) d[i][j] = amplitude * (pts[i] - pts[j]);
    return d;
}

}  // namespace detail

/// I(X; a X + W), X uniform on the constellation, W ~ CN(0, sigma^2), by a
/// 64 x 64 Gauss-Hermite tensor rule. Bits per complex symbol.
inline Estimate symbol_mi_quadrature(const Constellation& c, double amplitude, double sigma) {
    if (!(sigma > 0.0)) throw ConfigError("sigma must be > 0");
    if (amplitude <= 0.0) return {0.0, 0.0};
    static const GaussRule gh = gauss_hermite(kHermiteOrder);
    const auto diffs = detail::pairwise_differences(c, amplitude);
    const double inv_s2 = 1.0 / (sigma * sigma);
    const double m = static_cast<double>(c.order());
    double acc = 0.0;
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        double e = 0.0;
        for (std::size_t u = 0; u < gh.size(); ++u)
            for (std::size_t v = 0; v < gh.size(); ++v) {
                const Complex w(sigma * gh.nodes[u], sigma * gh.nodes[v]);
                e += gh.weights[u] * gh.weights[v] * detail::log2_sum_exp_metric(diffs[i], w, inv_s2);
            }
        acc += e / std::numbers::pi;
    }
    const double mi = std::log2(m) - acc / m;
    return {std::clamp(mi, 0.0, std::log2(m)), 0.0};
}

/// Same quantity by Monte Carlo: one uniformly drawn symbol and one noise
/// sample per draw. Error is the standard error of the mean.
inline Estimate symbol_mi_monte_carlo(const Constellation& c, double amplitude, double sigma, std::size_t samples,
                                      Rng& rng) {
    if (samples < 2) throw ConfigError("Monte-Carlo estimate needs at least 2 samples");
    if (!(sigma > 0.0)) throw ConfigError("sigma must be > 0");
    const auto diffs = detail::pairwise_differences(c, amplitude);
    const double inv_s2 = 1.0 / (sigma * sigma);
    std::normal_distribution<double> n(0.0, sigma / std::numbers::sqrt2);
    std::uniform_int_distribution<std::size_t> pick(0, c.order() - 1);
    double sum = 0.0, sum2 = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
        const std::size_t i = pick(rng);
        const Complex w(n(rng), n(rng));
        const double v = detail::log2_sum_exp_metric(diffs[i], w, inv_s2);
        sum += v;
        sum2 += v * v;
    }
    const double ns = static_cast<double>(samples);
    const double mean = sum / ns;
    const double var = std::max(sum2 / ns - mean * mean, 0.0);
    return {std::log2(static_cast<double>(c.order())) - mean, std::sqrt(var / (ns - 1.0))};
}

/// Received amplitude of a unit-energy point at mean intensity E.
inline double conventional_symbol_amplitude(double mean_intensity) {
    return std::sqrt(std::numbers::pi) * mean_intensity;
}

/// Conventional-receiver rate 1/4 I(X; X/2 + W), bits per channel use.
inline Estimate rate_discrete_conventional(const Constellation& c, double mean_intensity, double sigma,
                                           MiMethod method = MiMethod::quadrature, std::size_t mc_samples = 1000000,
                                           std::uint64_t seed = 1) {
    const double a = conventional_symbol_amplitude(mean_intensity);
    Estimate e;
    if (method == MiMethod::quadrature) {
        e = symbol_mi_quadrature(c, a, sigma);
    } else {
        Rng rng(seed);
        e = symbol_mi_monte_carlo(c, a, sigma, mc_samples, rng);
    }
    return {0.25 * e.value, 0.25 * e.error};
}

/// Large-N upper bound on the best-receiver rate: conventional rate plus
/// Delta evaluated with the Gaussian time-domain statistics of the same
/// mean intensity.
inline Estimate rate_upper_bound_discrete(const Constellation& c, double mean_intensity, double sigma,
                                          const QuadratureSpec& q = {}) {
    const auto conv = rate_discrete_conventional(c, mean_intensity, sigma);
    if (mean_intensity <= 0.0) return conv;
    const auto d = delta_gain(GaussianClipModel::from_mean_intensity(mean_intensity, sigma), q);
    return {conv.value + d.value, conv.error + d.error};
}

/// Genie-receiver rate: the conventional rate at sqrt(2) x optical SNR.
inline Estimate rate_genie_bound(const Constellation& c, double mean_intensity, double sigma) {
    return rate_discrete_conventional(c, std::numbers::sqrt2 * mean_intensity, sigma);
}

/// Smallest optical SNR (dB, sigma = 1) at which `rate_of(E)` reaches
/// `target`, by bisection on [lo_db, hi_db]. `rate_of` must be increasing.
template <class RateFn>
double threshold_snr_db(RateFn&& rate_of, double target, double lo_db = -20.0, double hi_db = 40.0,
                        double tol_db = 1e-4) {
    if (rate_of(db_to_linear(hi_db)) < target)
        throw ConfigError("target rate " + std::to_string(target) + " not reached below " + std::to_string(hi_db) + " dB");
    while (hi_db - lo_db > tol_db) {
        const double mid = 0.5 * (lo_db + hi_db);
        (rate_of(db_to_linear(mid)) < target ? lo_db : hi_db) = mid;
    }
    return 0.5 * (lo_db + hi_db);
}

}  // namespace acoofdm
