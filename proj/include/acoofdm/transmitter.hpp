#pragma once

// ACO-OFDM, Flip-OFDM and PAM-DMT transmitters.
//
// All three produce a real bipolar block x whose samples have standard
// deviation sigma_x, and send its clipped version(s) over the channel. Each
// scheme also defines a pairing of channel uses (a, b) such that
//     r_a - r_b = x_p + (w_a - w_b),   r_a + r_b = |x_p| + (w_a + w_b),
// which is what the receivers in receiver.hpp work from.

#include <acoofdm/blocks.hpp>
#include <acoofdm/constellation.hpp>
#include <acoofdm/error.hpp>

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace acoofdm {

enum class Scheme { aco, flip, pamdmt };

inline std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::aco: return "aco";
        case Scheme::flip: return "flip";
        case Scheme::pamdmt: return "pamdmt";
    }
    return "?";
}

inline Scheme parse_scheme(const std::string& s) {
    if (s == "aco" || s == "ACO") return Scheme::aco;
    if (s == "flip" || s == "FLIP") return Scheme::flip;
    if (s == "pamdmt" || s == "PAMDMT" || s == "pam-dmt") return Scheme::pamdmt;
    throw ConfigError("unknown scheme '" + s + "'");
}

/// Subcarrier and channel-use bookkeeping of one frame.
class FrameLayout {
public:
    FrameLayout(Scheme scheme, std::size_t n) : scheme_(scheme), n_(n) {
        require_block_length(n);
        switch (scheme) {
            case Scheme::aco:
                for (std::size_t k = 1; k < n / 2; k += 2) data_bins_.push_back(k);
                for (std::size_t i = 0; i < n / 2; ++i) pairs_.emplace_back(i, i + n / 2);
                break;
            case Scheme::flip:
                for (std::size_t k = 1; k < n / 2; ++k) data_bins_.push_back(k);
                for (std::size_t i = 0; i < n; ++i) pairs_.emplace_back(i, n + i);
                break;
            case Scheme::pamdmt:
                for (std::size_t k = 1; k < n / 2; ++k) data_bins_.push_back(k);
                // Samples 0 and N/2 of a sine-only block are zero; pairing
                // them with each other keeps the split one-to-one.
                pairs_.emplace_back(0, n / 2);
                for (std::size_t i = 1; i < n / 2; ++i) pairs_.emplace_back(i, n - i);
                break;
        }
    }

    Scheme scheme() const { return scheme_; }
    std::size_t n() const { return n_; }
    std::size_t symbols_per_frame() const { return data_bins_.size(); }
    std::size_t channel_uses() const { return scheme_ == Scheme::flip ? 2 * n_ : n_; }
    std::span<const std::size_t> data_bins() const { return data_bins_; }
    std::span<const std::pair<std::size_t, std::size_t>> pairs() const { return pairs_; }

    /// Symbol amplitude that gives the bipolar block a per-sample std of
    /// sigma_x when unit-energy symbols are loaded.
    double symbol_scale(double sigma_x) const {
        const double loaded = 2.0 * static_cast<double>(data_bins_.size());
        return sigma_x * std::sqrt(static_cast<double>(n_) / loaded);
    }

    void check_constellation(const Constellation& c) const {
        if (scheme_ == Scheme::pamdmt && !c.is_real())
            throw ConfigError("PAM-DMT requires a PAM constellation, got " + c.name());
    }

    std::size_t bits_per_frame(const Constellation& c) const {
        return symbols_per_frame() * c.bits_per_symbol();
    }

    /// Hermitian spectrum carrying `symbols` (already scaled).
    FrequencyBlock spectrum(std::span<const Complex> symbols) const {
        if (symbols.size() != symbols_per_frame())
            throw ConfigError("frame needs " + std::to_string(symbols_per_frame()) + " symbols, got " +
                              std::to_string(symbols.size()));
        if (scheme_ == Scheme::aco) return load_aco_frame(symbols, n_);
        FrequencyBlock f{std::vector<Complex>(n_, Complex{})};
        for (std::size_t m = 0; m < symbols.size(); ++m) {
            const std::size_t k = data_bins_[m];
            const Complex v = scheme_ == Scheme::pamdmt ? Complex(0.0, symbols[m].real()) : symbols[m];
            f.bins[k] = v;
            f.bins[n_ - k] = std::conj(v);
        }
        return f;
    }

    /// Per-subcarrier observations of the data symbols in the spectrum of a
    /// bipolar block, divided by `scale`. PAM-DMT symbols come back on the
    /// real axis.
    std::vector<Complex> symbols_from(const FrequencyBlock& f, double scale) const {
        std::vector<Complex> out(data_bins_.size());
        for (std::size_t m = 0; m < data_bins_.size(); ++m) {
            const Complex v = f.bins[data_bins_[m]];
            out[m] = (scheme_ == Scheme::pamdmt ? Complex(v.imag(), 0.0) : v) / scale;
        }
        return out;
    }

    /// Rebuilds the full bipolar block from one estimate per pair.
    TimeBlock bipolar_from_pairs(std::span<const double> per_pair) const {
        TimeBlock x{std::vector<double>(n_, 0.0)};
        switch (scheme_) {
            case Scheme::aco:
                for (std::size_t i = 0; i < n_ / 2; ++i) {
                    x.samples[i] = per_pair[i];
                    x.samples[i + n_ / 2] = -per_pair[i];
                }
                break;
            case Scheme::flip:
                for (std::size_t i = 0; i < n_; ++i) x.samples[i] = per_pair[i];
                break;
            case Scheme::pamdmt:
                for (std::size_t i = 1; i < n_ / 2; ++i) {
                    x.samples[i] = per_pair[i];
                    x.samples[n_ - i] = -per_pair[i];
                }
                break;
        }
        return x;
    }

    /// The bipolar value each pair carries.
    std::vector<double> pair_values(const TimeBlock& x) const {
        std::vector<double> v(pairs_.size());
        for (std::size_t p = 0; p < pairs_.size(); ++p) v[p] = x.samples[pairs_[p].first % n_];
        return v;
    }

private:
    Scheme scheme_;
    std::size_t n_;
    std::vector<std::size_t> data_bins_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

struct TxFrame {
    Scheme scheme = Scheme::aco;
    BitVector payload_bits;
    std::vector<unsigned> labels;
    double symbol_scale = 1.0;
    FrequencyBlock freq;
    TimeBlock bipolar;
    /// One block for ACO / PAM-DMT, two consecutive blocks for Flip.
    std::vector<IntensityBlock> intensity;

    /// Intensity blocks concatenated in transmission order.
    std::vector<double> channel_input() const {
        std::vector<double> out;
        for (const auto& b : intensity) out.insert(out.end(), b.samples.begin(), b.samples.end());
        return out;
    }
};

namespace detail {

inline TxFrame modulate(const FrameLayout& layout, std::span<const Bit> bits, const Constellation& c,
                        double sigma_x) {
    layout.check_constellation(c);
    if (!(sigma_x > 0.0)) throw ConfigError("sigma_x must be > 0");
    const std::size_t need = layout.bits_per_frame(c);
    if (bits.size() != need)
        throw ConfigError("frame carries " + std::to_string(need) + " bits, got " + std::to_string(bits.size()));

    TxFrame f;
    f.scheme = layout.scheme();
    f.payload_bits.assign(bits.begin(), bits.end());
    f.symbol_scale = layout.symbol_scale(sigma_x);
    const unsigned k = c.bits_per_symbol();
    std::vector<Complex> symbols(layout.symbols_per_frame());
    f.labels.resize(symbols.size());
    for (std::size_t m = 0; m < symbols.size(); ++m) {
        unsigned label = 0;
        for (unsigned b = 0; b < k; ++b) label = (label << 1) | (bits[m * k + b] & 1u);
        f.labels[m] = label;
        symbols[m] = c.map_label(label) * f.symbol_scale;
    }
    f.freq = layout.spectrum(symbols);
    f.bipolar = idft(f.freq);
    if (layout.scheme() == Scheme::flip) {
        IntensityBlock pos{std::vector<double>(layout.n())};
        IntensityBlock neg{std::vector<double>(layout.n())};
        for (std::size_t i = 0; i < layout.n(); ++i) {
            const double v = f.bipolar.samples[i];
            pos.samples[i] = v > 0.0 ? v : 0.0;
            neg.samples[i] = v < 0.0 ? -v : 0.0;
        }
        f.intensity = {std::move(pos), std::move(neg)};
    } else {
        f.intensity = {clip_negative(f.bipolar)};
    }
    return f;
}

}  // namespace detail

/// ACO-OFDM: N/4 symbols on the odd subcarriers, negative samples clipped.
inline TxFrame tx_aco(std::span<const Bit> bits, const Constellation& c, std::size_t n, double sigma_x) {
    return detail::modulate(FrameLayout(Scheme::aco, n), bits, c, sigma_x);
}

/// Flip-OFDM: N/2-1 symbols on subcarriers 1..N/2-1 (DC and Nyquist null);
/// the positive part is sent first, the flipped negative part second.
inline TxFrame tx_flip(std::span<const Bit> bits, const Constellation& c, std::size_t n, double sigma_x) {
    return detail::modulate(FrameLayout(Scheme::flip, n), bits, c, sigma_x);
}

/// PAM-DMT: real PAM symbols on the imaginary part of subcarriers 1..N/2-1.
inline TxFrame tx_pamdmt(std::span<const Bit> bits, const Constellation& c, std::size_t n, double sigma_x) {
    return detail::modulate(FrameLayout(Scheme::pamdmt, n), bits, c, sigma_x);
}

inline TxFrame transmit(const FrameLayout& layout, std::span<const Bit> bits, const Constellation& c,
                        double sigma_x) {
    return detail::modulate(layout, bits, c, sigma_x);
}

}  // namespace acoofdm
