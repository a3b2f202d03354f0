#pragma once

// Independent reference implementations used only by the tests. Nothing here
// shares code with the library beyond the basic types.

#include <acoofdm/fft.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using acoofdm::Complex;

// O(N^2) unitary DFT straight from the definition.
inline std::vector<Complex> brute_dft(const std::vector<Complex>& x, int sign = -1) {
    const std::size_t n = x.size();
    std::vector<Complex> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double ang = sign * 2.0 * std::numbers::pi * static_cast<double>((k * i) % n) / static_cast<double>(n);
            acc += x[i] * Complex(std::cos(ang), std::sin(ang));
        }
        out[k] = acc / std::sqrt(static_cast<double>(n));
    }
    return out;
}

inline double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

inline double gauss(double x, double s) {
    return std::exp(-0.5 * x * x / (s * s)) / (s * std::sqrt(2.0 * std::numbers::pi));
}

// Plain composite Simpson on [a, b] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

// Output density of Y = max(X, 0) + Z, X ~ N(0, sx^2), Z ~ N(0, s^2), by
// direct numerical convolution of the clipped-Gaussian law with the noise.
inline double clipped_output_pdf_by_convolution(double y, double sx, double s) {
    const double atom = 0.5 * gauss(y, s);
    const double hi = 12.0 * sx;
    const double cont = simpson([&](double x) { return 2.0 * gauss(x, sx) * 0.5 * gauss(y - x, s); }, 0.0, hi, 20000);
    return atom + cont;
}

// Differential entropy (bits) of a density by Simpson on a wide window.
inline double entropy_bits(const std::function<double(double)>& p, double a, double b, int n) {
    return simpson(
        [&](double y) {
            const double v = p(y);
            return v > 0.0 ? -v * std::log2(v) : 0.0;
        },
        a, b, n);
}

inline std::vector<std::uint8_t> random_bits(std::size_t n, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(0.5);
    std::vector<std::uint8_t> b(n);
    for (auto& v : b) v = coin(rng) ? 1 : 0;
    return b;
}

}  // namespace oracle
