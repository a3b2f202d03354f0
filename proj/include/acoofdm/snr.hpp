#pragma once

// Optical / electrical SNR bookkeeping for clipped-Gaussian time samples.
//
//   E[S]   = sigma_x / sqrt(2 pi)
//   E[S^2] = sigma_x^2 / 2
//   SNR_e  = pi * SNR_o^2      (linear)

#include <cmath>
#include <numbers>

namespace acoofdm {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double v) { return 10.0 * std::log10(v); }

inline double electrical_from_optical(double snr_o) { return std::numbers::pi * snr_o * snr_o; }

inline double optical_from_electrical(double snr_e) { return std::sqrt(snr_e / std::numbers::pi); }

/// Std of the bipolar signal that yields mean intensity `mean_intensity`.
inline double sigma_x_from_mean_intensity(double mean_intensity) {
    return std::sqrt(2.0 * std::numbers::pi) * mean_intensity;
}

inline double mean_intensity_from_sigma_x(double sigma_x) {
    return sigma_x / std::sqrt(2.0 * std::numbers::pi);
}

struct SnrOperatingPoint {
    double snr_optical_db = 0.0;
    double snr_electrical_db = 0.0;
    double sigma = 1.0;    // channel noise std
    double sigma_x = 0.0;  // bipolar time-domain std

    double snr_optical() const { return db_to_linear(snr_optical_db); }
    double snr_electrical() const { return db_to_linear(snr_electrical_db); }
    double mean_intensity() const { return mean_intensity_from_sigma_x(sigma_x); }

    static SnrOperatingPoint from_optical_db(double db, double sigma = 1.0) {
        const double o = db_to_linear(db);
        return {db, linear_to_db(electrical_from_optical(o)), sigma, sigma_x_from_mean_intensity(o * sigma)};
    }

    static SnrOperatingPoint from_electrical_db(double db, double sigma = 1.0) {
        const double o = optical_from_electrical(db_to_linear(db));
        return {linear_to_db(o), db, sigma, sigma_x_from_mean_intensity(o * sigma)};
    }

    /// SNR_o == 0 (minus infinity dB).
    static SnrOperatingPoint silent(double sigma = 1.0) {
        return {-INFINITY, -INFINITY, sigma, 0.0};
    }
};

}  // namespace acoofdm
