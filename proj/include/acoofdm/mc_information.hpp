#pragma once

// Monte-Carlo estimate of I(X; Y2 | Y1), independent of the quadrature path:
// average of log2[ p(y2 | y1, x) / p(y2 | y1) ] over sampled (X, Z1, Z2).

#include <acoofdm/channel.hpp>
#include <acoofdm/error.hpp>
#include <acoofdm/gaussian_model.hpp>

#include <cmath>
#include <random>

namespace acoofdm {

inline Estimate mc_mutual_information(const GaussianClipModel& m, std::size_t samples, Rng& rng) {
    if (samples < 2) throw ConfigError("Monte-Carlo estimate needs at least 2 samples");
    std::normal_distribution<double> gx(0.0, m.sigma_x);
    std::normal_distribution<double> gz(0.0, m.sigma_z());
    const double sz = m.sigma_z();
    double sum = 0.0, sum2 = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
        const double x = gx(rng);
        const double y1 = x + gz(rng);
        const double y2 = std::abs(x) + gz(rng);
        const double num = normal_pdf((y2 - std::abs(x)) / sz) / sz;
        const double v = std::log2(num / cond_pdf_y2_given_y1(y1, y2, m));
        sum += v;
        sum2 += v * v;
    }
    const double ns = static_cast<double>(samples);
    const double mean = sum / ns;
    const double var = std::max(sum2 / ns - mean * mean, 0.0);
    return {mean, std::sqrt(var / (ns - 1.0))};
}

}  // namespace acoofdm
