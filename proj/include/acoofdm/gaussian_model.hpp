#pragma once

// Information rates of ACO-OFDM under IID complex Gaussian inputs.
//
// Per pair of channel uses the receiver sees
//     Y1 = X + Z1,   Y2 = |X| + Z2,   X ~ N(0, sigma_x^2),  Zi ~ N(0, 2 sigma^2)
// and the rate gain of any receiver that also uses Y2 is
//     Delta = 1/2 I(X; Y2 | Y1) = 1/2 [h(Y2|Y1) - h(Z2)].
//
// Entropies are not integrated directly. For a density p with mean m and
// variance v, h(p) = 1/2 log(2 pi e v) - KL(p || N(m, v)); the variance term
// is closed form and the KL term is small, so differences of entropies such
// as h(Y2|Y1) - h(Z2) keep full relative precision even at -30 dB where they
// are of order 1e-6 bits.

#include <acoofdm/error.hpp>
#include <acoofdm/quadrature.hpp>
#include <acoofdm/snr.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace acoofdm {

inline double normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

inline double log2_of(double v) { return std::log(v) / std::numbers::ln2; }

/// Accuracy knobs for the entropy integrals. Ranges are in multiples of the
/// standard deviation of the variable being integrated over.
struct QuadratureSpec {
    double outer_range = 8.0;  // |y1| <= outer_range * std(Y1)
    double inner_range = 8.0;  // y2 within inner_range * sigma_f of each mixture centre
    std::size_t order = 20;    // Gauss-Legendre nodes per panel
    double abs_tol = 1e-13;    // bits
    double rel_tol = 1e-10;

    void validate() const {
        if (!(abs_tol > 0.0) || abs_tol > 1e-4) throw ConfigError("quadrature abs_tol must be in (0, 1e-4] bits");
        if (!(rel_tol > 0.0)) throw ConfigError("quadrature rel_tol must be > 0");
        if (order < 2) throw ConfigError("quadrature order must be >= 2");
        if (!(outer_range >= 4.0) || !(inner_range >= 4.0)) throw ConfigError("quadrature ranges must be >= 4 std");
    }
};

/// Value with a numerical error estimate, in bits.
struct Estimate {
    double value = 0.0;
    double error = 0.0;
};

struct GaussianClipModel {
    double sigma_x;  // std of the bipolar time-domain sample X
    double sigma;    // channel noise std

    GaussianClipModel(double sx, double s) : sigma_x(sx), sigma(s) {
        if (!(sigma_x > 0.0) || !(sigma > 0.0)) throw ConfigError("GaussianClipModel needs sigma_x > 0 and sigma > 0");
    }

    /// Model whose clipped samples have mean intensity `mean_intensity`.
    static GaussianClipModel from_mean_intensity(double mean_intensity, double sigma) {
        return {sigma_x_from_mean_intensity(mean_intensity), sigma};
    }

    double sigma_z() const { return std::numbers::sqrt2 * sigma; }
    double sigma_y1() const { return std::sqrt(sigma_x * sigma_x + 2.0 * sigma * sigma); }

    double sigma_f() const {
        const double sx2 = sigma_x * sigma_x, s2 = sigma * sigma;
        return 2.0 * std::sqrt(s2 * (sx2 + s2) / (sx2 + 2.0 * s2));
    }

    /// E[X | y1] = shrink * y1.
    double shrink() const {
        const double sx2 = sigma_x * sigma_x;
        return sx2 / (sx2 + 2.0 * sigma * sigma);
    }

    /// Var[X | y1].
    double posterior_variance() const {
        const double sx2 = sigma_x * sigma_x, sz2 = 2.0 * sigma * sigma;
        return sx2 * sz2 / (sx2 + sz2);
    }
};

/// f(y1, y2) of the conditional density.
inline double cond_pdf_f(double y1, double y2, const GaussianClipModel& m) {
    const double sf = m.sigma_f();
    return normal_pdf((y2 + m.shrink() * y1) / sf) / sf;
}

/// g(y1, y2) of the conditional density.
inline double cond_pdf_g(double y1, double y2, const GaussianClipModel& m) {
    const double sx = m.sigma_x, s = m.sigma;
    return normal_cdf(sx * (y2 + y1) / (2.0 * s * std::sqrt(sx * sx + s * s)));
}

/// p(y2 | y1) = f(y1,y2) g(-y1,y2) + f(-y1,y2) g(y1,y2).
inline double cond_pdf_y2_given_y1(double y1, double y2, const GaussianClipModel& m) {
    return cond_pdf_f(y1, y2, m) * cond_pdf_g(-y1, y2, m) + cond_pdf_f(-y1, y2, m) * cond_pdf_g(y1, y2, m);
}

namespace detail {

struct AbsMoments {
    double mean;
    double variance;
};

/// Mean and variance of |X| for X ~ N(a, s^2), written to avoid the
/// cancellation in E[X^2] - E[|X|]^2 when |a| >> s.
inline AbsMoments folded_normal_moments(double a, double s) {
    const double t = std::abs(a) / s;
    const double eps = 2.0 * (s * normal_pdf(t) - std::abs(a) * normal_cdf(-t));
    const double mean = std::abs(a) + eps;
    const double var = s * s - 2.0 * std::abs(a) * eps - eps * eps;
    return {mean, std::max(var, 0.0)};
}

inline double normal_log_pdf(double x, double mean, double var) {
    const double d = x - mean;
    return -0.5 * (d * d / var + std::log(2.0 * std::numbers::pi * var));
}

/// KL(p || N(mean, var)) in nats over the union of the given windows.
template <class LogDensity>
Estimate kl_to_gaussian(LogDensity&& log_p, double mean, double var, std::vector<double> breaks,
                        const GaussRule& rule, const AdaptiveOptions& opt) {
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    auto integrand = [&](double y) {
        const double lp = log_p(y);
        if (!std::isfinite(lp)) return 0.0;
        return std::exp(lp) * (lp - normal_log_pdf(y, mean, var));
    };
    auto r = integrate_adaptive(integrand, std::span<const double>(breaks), rule, opt);
    return {r.value, r.error};
}

/// Breakpoints covering [lo, hi] plus a few interior anchors.
inline std::vector<double> window(double lo, double hi, std::initializer_list<double> anchors) {
    std::vector<double> b{lo, hi};
    for (double a : anchors)
        if (a > lo && a < hi) b.push_back(a);
    return b;
}

}  // namespace detail

/// h(Y2 | Y1 = y1) - h(Z2), bits.
inline Estimate cond_entropy_excess_at(double y1, const GaussianClipModel& m, const QuadratureSpec& q,
                                       const GaussRule& rule) {
    const double sz2 = 2.0 * m.sigma * m.sigma;
    const auto abs_x = detail::folded_normal_moments(m.shrink() * y1, std::sqrt(m.posterior_variance()));
    const double var = sz2 + abs_x.variance;

    const double c = m.shrink() * std::abs(y1);
    const double w = q.inner_range * m.sigma_f();
    std::vector<double> breaks{-c - w, -c, std::min(-c + w, c - w), std::max(-c + w, c - w), c, c + w};
    auto log_p = [&](double y2) { return std::log(cond_pdf_y2_given_y1(y1, y2, m)); };
    const AdaptiveOptions opt{q.abs_tol * std::numbers::ln2 * 1e-2, q.rel_tol * 1e-2};
    const auto kl = detail::kl_to_gaussian(log_p, abs_x.mean, var, breaks, rule, opt);
    const double head = 0.5 * std::log1p(abs_x.variance / sz2);
    return {(head - kl.value) / std::numbers::ln2, kl.error / std::numbers::ln2};
}

/// I(X; Y2 | Y1) = h(Y2|Y1) - h(Z2) in bits, averaged over Y1 ~ N(0, sigma_x^2 + 2 sigma^2).
inline Estimate conditional_information(const GaussianClipModel& m, const QuadratureSpec& q = {}) {
    q.validate();
    const GaussRule rule = gauss_legendre(q.order);
    const double sy = m.sigma_y1();
    const double top = q.outer_range * sy;
    // The integrand is even in y1. Its fine structure lives within a few
    // sigma_z of the origin, so seed the mesh geometrically from there.
    std::vector<double> breaks{0.0};
    for (double b = 0.5 * m.sigma_z(); b < top; b *= 2.0) breaks.push_back(b);
    breaks.push_back(top);
    double inner_err = 0.0;
    auto integrand = [&](double y1) {
        const auto e = cond_entropy_excess_at(y1, m, q, rule);
        inner_err = std::max(inner_err, e.error);
        return 2.0 * normal_pdf(y1 / sy) / sy * e.value;
    };
    const auto r = integrate_adaptive(integrand, std::span<const double>(breaks), rule,
                                      AdaptiveOptions{q.abs_tol, q.rel_tol, 20000});
    return {r.value, r.error + inner_err};
}

/// h(Y2 | Y1) in bits.
inline Estimate cond_entropy_y2_given_y1(const GaussianClipModel& m, const QuadratureSpec& q = {}) {
    const auto info = conditional_information(m, q);
    const double h_z2 = 0.5 * log2_of(2.0 * std::numbers::pi * std::numbers::e * 2.0 * m.sigma * m.sigma);
    return {h_z2 + info.value, info.error};
}

/// Delta = 1/2 I(X; Y2 | Y1), bits per channel use.
inline Estimate delta_gain(const GaussianClipModel& m, const QuadratureSpec& q = {}) {
    const auto info = conditional_information(m, q);
    return {std::max(0.5 * info.value, 0.0), 0.5 * info.error};
}

/// Conventional-receiver rate 1/4 log2(1 + pi E^2 / sigma^2).
inline double rate_conventional_gaussian(double mean_intensity, double sigma) {
    if (!(sigma > 0.0)) throw ConfigError("sigma must be > 0");
    const double snr = mean_intensity / sigma;
    return 0.25 * std::log1p(std::numbers::pi * snr * snr) / std::numbers::ln2;
}

/// Rate achievable with the best receiver: conventional rate plus Delta, with
/// sigma_x = sqrt(2 pi) E.
inline Estimate rate_improved_gaussian(double mean_intensity, double sigma, const QuadratureSpec& q = {}) {
    if (mean_intensity <= 0.0) return {0.0, 0.0};
    const auto d = delta_gain(GaussianClipModel::from_mean_intensity(mean_intensity, sigma), q);
    return {rate_conventional_gaussian(mean_intensity, sigma) + d.value, d.error};
}

/// Optical-SNR factor gamma (in dB) such that the conventional receiver at
/// gamma * SNR_o matches the improved rate at SNR_o. Bisection on the
/// closed-form conventional rate.
inline Estimate optical_gain_db(double mean_intensity, double sigma, const QuadratureSpec& q = {},
                                double tol_db = 1e-9) {
    if (!(mean_intensity > 0.0)) throw ConfigError("optical gain needs a positive mean intensity");
    const auto target = rate_improved_gaussian(mean_intensity, sigma, q);
    auto below = [&](double db) { return rate_conventional_gaussian(mean_intensity * db_to_linear(db), sigma) < target.value; };
    double lo = 0.0, hi = 3.0;
    while (below(hi)) hi *= 2.0;
    while (hi - lo > tol_db) {
        const double mid = 0.5 * (lo + hi);
        (below(mid) ? lo : hi) = mid;
    }
    // Error propagated through d(rate)/d(dB) of the conventional curve.
    const double g = 0.5 * (lo + hi);
    const double h = 1e-3;
    const double slope = (rate_conventional_gaussian(mean_intensity * db_to_linear(g + h), sigma) -
                          rate_conventional_gaussian(mean_intensity * db_to_linear(g - h), sigma)) / (2.0 * h);
    return {g, tol_db + (slope > 0.0 ? target.error / slope : 0.0)};
}

/// Rate of IID PAM with clipped-Gaussian symbols, I(S; S + W).
///
/// With sigma_t^2 = sigma_x^2 + sigma^2 the output density is
///   p_Y(y) = 1/2 phi(y/sigma)/sigma + phi(y/sigma_t)/sigma_t * Phi(sigma_x y / (sigma sigma_t)),
/// the convolution of the half-mass at zero and the half-Gaussian with the noise.
inline double clipped_pam_output_pdf(double y, double sigma_x, double sigma) {
    const double st = std::sqrt(sigma_x * sigma_x + sigma * sigma);
    return 0.5 * normal_pdf(y / sigma) / sigma + normal_pdf(y / st) / st * normal_cdf(sigma_x * y / (sigma * st));
}

inline Estimate rate_clipped_pam(double mean_intensity, double sigma, const QuadratureSpec& q = {}) {
    q.validate();
    if (!(sigma > 0.0)) throw ConfigError("sigma must be > 0");
    if (mean_intensity <= 0.0) return {0.0, 0.0};
    const double sx = sigma_x_from_mean_intensity(mean_intensity);
    const double st = std::sqrt(sx * sx + sigma * sigma);
    const double mean_s = mean_intensity;
    const double var_s = sx * sx * (0.5 - 1.0 / (2.0 * std::numbers::pi));
    const double var_y = sigma * sigma + var_s;
    const double r = q.outer_range;
    const auto rule = gauss_legendre(q.order);
    auto log_p = [&](double y) { return std::log(clipped_pam_output_pdf(y, sx, sigma)); };
    const auto breaks = detail::window(std::min(-r * sigma, mean_s - r * std::sqrt(var_y)),
                                       std::max(r * st, mean_s + r * std::sqrt(var_y)),
                                       {-r * sigma, -sigma, 0.0, sigma, r * sigma, st});
    const AdaptiveOptions opt{q.abs_tol * std::numbers::ln2, q.rel_tol};
    const auto kl = detail::kl_to_gaussian(log_p, mean_s, var_y, breaks, rule, opt);
    const double head = 0.5 * std::log1p(var_s / (sigma * sigma));
    return {(head - kl.value) / std::numbers::ln2, kl.error / std::numbers::ln2};
}

/// High-SNR capacity asymptote 1/2 log2(e E^2 / (2 pi sigma^2)); an
/// asymptote only, negative at low SNR.
inline double capacity_high_snr_asymptote(double mean_intensity, double sigma) {
    const double snr = mean_intensity / sigma;
    return 0.5 * log2_of(std::numbers::e * snr * snr / (2.0 * std::numbers::pi));
}

/// Genie-receiver rate with Gaussian inputs: conventional rate at sqrt(2) x optical SNR.
inline double rate_genie_gaussian(double mean_intensity, double sigma) {
    return rate_conventional_gaussian(std::numbers::sqrt2 * mean_intensity, sigma);
}

/// |[h(X) - h(X_H)] - 1 bit| for X ~ N(0, sigma_x^2) and its half-Gaussian
/// magnitude, using the closed forms
///   h(X)   = 1/2 log2(2 pi e sigma_x^2)
///   h(X_H) = 1/2 log2(pi e sigma_x^2 / 2).
inline double half_gaussian_entropy(double sigma_x) {
    return 0.5 * log2_of(std::numbers::pi * std::numbers::e * sigma_x * sigma_x / 2.0);
}

inline double gaussian_entropy(double sigma_x) {
    return 0.5 * log2_of(2.0 * std::numbers::pi * std::numbers::e * sigma_x * sigma_x);
}

inline double entropy_identity_check(double sigma_x = 1.0) {
    if (!(sigma_x > 0.0)) throw ConfigError("sigma_x must be > 0");
    return std::abs(gaussian_entropy(sigma_x) - half_gaussian_entropy(sigma_x) - 1.0);
}

}  // namespace acoofdm
