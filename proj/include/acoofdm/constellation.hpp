#pragma once

// Gray-labelled QAM / PSK / PAM alphabets with unit average energy.
//
// Labelling tables (fixed, MSB first):
//   PAM-L  : label g sits at level index k = gray^{-1}(g), amplitude L-1-2k,
//            so the all-zero label is the most positive level.
//   QAM-M  : square, L = sqrt(M). The first log2(L) bits pick the in-phase
//            PAM-L level, the remaining bits the quadrature level. QAM-4
//            label 00 is therefore (+1+j)/sqrt(2).
//   PSK-M  : label g sits at angle 2*pi*gray^{-1}(g)/M.
// points[g] is the point carrying label g.

#include <acoofdm/error.hpp>
#include <acoofdm/fft.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace acoofdm {

using Bit = std::uint8_t;
using BitVector = std::vector<Bit>;

enum class Modulation { qam, psk, pam };

inline unsigned gray_encode(unsigned k) { return k ^ (k >> 1); }

inline unsigned gray_decode(unsigned g) {
    unsigned k = 0;
    for (; g; g >>= 1) k ^= g;
    return k;
}

class Constellation {
public:
    static Constellation qam(unsigned m) {
        const unsigned bits = log2_exact(m, "QAM");
        if (bits % 2 != 0) throw ConfigError("QAM order must be a square power of two, got " + std::to_string(m));
        const unsigned per_axis = bits / 2;
        const unsigned levels = 1u << per_axis;
        Constellation c(Modulation::qam, m, "QAM-" + std::to_string(m));
        const double norm = std::sqrt(2.0 * (levels * levels - 1.0) / 3.0);
        for (unsigned g = 0; g < m; ++g) {
            const unsigned gi = g >> per_axis;
            const unsigned gq = g & (levels - 1);
            c.points_[g] = Complex(pam_amplitude(gi, levels), pam_amplitude(gq, levels)) / norm;
        }
        return c;
    }

    static Constellation psk(unsigned m) {
        log2_exact(m, "PSK");
        if (m < 2) throw ConfigError("PSK order must be >= 2");
        Constellation c(Modulation::psk, m, "PSK-" + std::to_string(m));
        for (unsigned g = 0; g < m; ++g)
            c.points_[g] = std::polar(1.0, 2.0 * std::numbers::pi * gray_decode(g) / m);
        return c;
    }

    static Constellation pam(unsigned m) {
        log2_exact(m, "PAM");
        if (m < 2) throw ConfigError("PAM order must be >= 2");
        Constellation c(Modulation::pam, m, "PAM-" + std::to_string(m));
        const double norm = std::sqrt((m * m - 1.0) / 3.0);
        for (unsigned g = 0; g < m; ++g) c.points_[g] = Complex(pam_amplitude(g, m) / norm, 0.0);
        return c;
    }

    /// Accepts "qam16", "QAM-16", "psk8", "pam2", ...
    static Constellation parse(const std::string& text) {
        std::string s;
        for (char ch : text)
            if (ch != '-' && ch != '_') s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        if (s.size() < 4) throw ConfigError("unknown constellation '" + text + "'");
        const std::string kind = s.substr(0, 3);
        unsigned long order = 0;
        try {
            std::size_t used = 0;
            order = std::stoul(s.substr(3), &used);
            if (used != s.size() - 3) throw ConfigError("");
        } catch (...) {
            throw ConfigError("unknown constellation '" + text + "'");
        }
        const auto m = static_cast<unsigned>(order);
        if (kind == "qam") return qam(m);
        if (kind == "psk") return psk(m);
        if (kind == "pam") return pam(m);
        throw ConfigError("unknown constellation '" + text + "'");
    }

    Modulation modulation() const { return modulation_; }
    const std::string& name() const { return name_; }
    unsigned order() const { return static_cast<unsigned>(points_.size()); }
    unsigned bits_per_symbol() const { return bits_; }
    std::span<const Complex> points() const { return points_; }
    bool is_real() const { return modulation_ == Modulation::pam; }

    Complex map_label(unsigned label) const { return points_.at(label); }

    Complex map(std::span<const Bit> bits) const {
        if (bits.size() != bits_)
            throw ConfigError(name_ + " maps " + std::to_string(bits_) + " bits per symbol, got " +
                              std::to_string(bits.size()));
        unsigned label = 0;
        for (Bit b : bits) label = (label << 1) | (b & 1u);
        return points_[label];
    }

    /// Label of the nearest point; ties go to the lowest label.
    unsigned demap_label(Complex y) const {
        unsigned best = 0;
        double best_d = std::numeric_limits<double>::infinity();
        for (unsigned g = 0; g < points_.size(); ++g) {
            const double d = std::norm(y - points_[g]);
            if (d < best_d) {
                best_d = d;
                best = g;
            }
        }
        return best;
    }

    BitVector demap_hard(Complex y) const { return label_bits(demap_label(y)); }

    void append_label_bits(unsigned label, BitVector& out) const {
        for (unsigned b = bits_; b-- > 0;) out.push_back(static_cast<Bit>((label >> b) & 1u));
    }

    BitVector label_bits(unsigned label) const {
        BitVector out;
        out.reserve(bits_);
        append_label_bits(label, out);
        return out;
    }

private:
    Constellation(Modulation mod, unsigned m, std::string name)
        : modulation_(mod), bits_(log2_exact(m, name)), name_(std::move(name)), points_(m) {}

    static unsigned log2_exact(unsigned m, const std::string& what) {
        if (m < 2 || (m & (m - 1)) != 0)
            throw ConfigError(what + " order must be a power of two >= 2, got " + std::to_string(m));
        unsigned b = 0;
        while ((1u << b) < m) ++b;
        return b;
    }

    static double pam_amplitude(unsigned label, unsigned levels) {
        const unsigned k = gray_decode(label);
        return static_cast<double>(levels) - 1.0 - 2.0 * k;
    }

    Modulation modulation_;
    unsigned bits_;
    std::string name_;
    std::vector<Complex> points_;
};

}  // namespace acoofdm
