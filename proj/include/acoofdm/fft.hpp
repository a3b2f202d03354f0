#pragma once

// Unitary radix-2 decimation-in-time FFT.
//
// Both directions are scaled by 1/sqrt(N) so that ||x||^2 == ||X||^2.

#include <acoofdm/error.hpp>

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace acoofdm {

using Complex = std::complex<double>;

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

namespace detail {

inline void require_power_of_two(std::size_t n) {
    if (!is_power_of_two(n))
        throw ConfigError("transform length " + std::to_string(n) + " is not a power of two");
}

// e^{-j 2 pi k / n} for k < n/2, computed directly (no recurrence) so the
// round-off stays at the 1e-16 level; cached per thread for the last length.
inline const std::vector<Complex>& twiddles(std::size_t n) {
    thread_local std::vector<Complex> table;
    thread_local std::size_t cached = 0;
    if (cached != n) {
        table.resize(n / 2);
        for (std::size_t k = 0; k < n / 2; ++k)
            table[k] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
        cached = n;
    }
    return table;
}

// In-place iterative FFT, sign = -1 forward, +1 inverse. Unscaled.
inline void fft_in_place(std::vector<Complex>& a, int sign) {
    const std::size_t n = a.size();
    if (n < 2) return;
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const auto& tw = twiddles(n);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2, stride = n / len;
        for (std::size_t k = 0; k < half; ++k) {
            const Complex w = sign < 0 ? tw[k * stride] : std::conj(tw[k * stride]);
            for (std::size_t i = k; i < n; i += len) {
                const Complex u = a[i];
                const Complex v = a[i + half] * w;
                a[i] = u + v;
                a[i + half] = u - v;
            }
        }
    }
}

inline std::vector<Complex> transform(std::span<const Complex> in, int sign) {
    require_power_of_two(in.size());
    std::vector<Complex> out(in.begin(), in.end());
    fft_in_place(out, sign);
    const double scale = 1.0 / std::sqrt(static_cast<double>(in.size()));
    for (auto& v : out) v *= scale;
    return out;
}

}  // namespace detail

/// Forward unitary DFT: X[k] = N^{-1/2} sum_i x[i] e^{-j 2 pi k i / N}.
inline std::vector<Complex> dft(std::span<const Complex> x) { return detail::transform(x, -1); }

inline std::vector<Complex> dft(std::span<const double> x) {
    std::vector<Complex> c(x.begin(), x.end());
    return detail::transform(c, -1);
}

/// Inverse unitary DFT.
inline std::vector<Complex> idft(std::span<const Complex> spectrum) {
    return detail::transform(spectrum, +1);
}

/// Inverse DFT of a spectrum the caller asserts is Hermitian; the imaginary
/// residue is discarded.
inline std::vector<double> idft_real(std::span<const Complex> spectrum) {
    auto t = detail::transform(spectrum, +1);
    std::vector<double> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = t[i].real();
    return out;
}

}  // namespace acoofdm
