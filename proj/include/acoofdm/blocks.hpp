#pragma once

// Frequency / time / intensity blocks and the ACO-OFDM subcarrier layout.

#include <acoofdm/error.hpp>
#include <acoofdm/fft.hpp>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace acoofdm {

/// N complex subcarrier values.
struct FrequencyBlock {
    std::vector<Complex> bins;

    std::size_t size() const { return bins.size(); }
};

/// N real bipolar samples.
struct TimeBlock {
    std::vector<double> samples;

    std::size_t size() const { return samples.size(); }
};

/// N nonnegative optical intensity samples.
struct IntensityBlock {
    std::vector<double> samples;

    std::size_t size() const { return samples.size(); }
};

/// Validates a block length usable by every scheme: a power of two, N >= 4.
inline void require_block_length(std::size_t n) {
    if (n < 4 || !is_power_of_two(n))
        throw ConfigError("block length must be a power of two >= 4, got " + std::to_string(n));
}

inline FrequencyBlock dft(const TimeBlock& t) { return {dft(std::span<const double>(t.samples))}; }

inline TimeBlock idft(const FrequencyBlock& f) { return {idft_real(f.bins)}; }

/// Largest |bins[k] - conj(bins[N-k])| over the block.
inline double hermitian_residue(const FrequencyBlock& f) {
    const std::size_t n = f.size();
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        worst = std::max(worst, std::abs(f.bins[k] - std::conj(f.bins[(n - k) % n])));
    return worst;
}

/// Places N/4 symbols on the odd subcarriers 1, 3, ..., N/2-1 and their
/// conjugates on N-1, N-3, ..., N/2+1. All even bins, including DC and
/// Nyquist, are zero.
inline FrequencyBlock load_aco_frame(std::span<const Complex> symbols, std::size_t n) {
    require_block_length(n);
    if (symbols.size() != n / 4)
        throw ConfigError("ACO frame of length " + std::to_string(n) + " needs " +
                          std::to_string(n / 4) + " symbols, got " + std::to_string(symbols.size()));
    FrequencyBlock f{std::vector<Complex>(n, Complex{})};
    for (std::size_t m = 0; m < symbols.size(); ++m) {
        const std::size_t k = 2 * m + 1;
        f.bins[k] = symbols[m];
        f.bins[n - k] = std::conj(symbols[m]);
    }
    return f;
}

/// Elementwise max(x, 0).
inline IntensityBlock clip_negative(const TimeBlock& x) {
    IntensityBlock s{std::vector<double>(x.size())};
    std::transform(x.samples.begin(), x.samples.end(), s.samples.begin(),
                   [](double v) { return v > 0.0 ? v : 0.0; });
    return s;
}

}  // namespace acoofdm
