#pragma once

// Quick invariant sweep over every module, used by `aco_ofdm selftest`.

#include <acoofdm/acoofdm.hpp>

#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace acoofdm {

struct SelftestCheck {
    std::string name;
    std::function<bool()> run;
};

inline std::vector<SelftestCheck> selftest_checks() {
    std::vector<SelftestCheck> checks;

    checks.push_back({"dft round trip and Parseval, N = 4..1024", [] {
        Rng rng(11);
        std::normal_distribution<double> g;
        for (std::size_t n = 4; n <= 1024; n *= 2) {
            std::vector<Complex> x(n);
            double e = 0.0;
            for (auto& v : x) {
                v = {g(rng), g(rng)};
                e += std::norm(v);
            }
            const auto f = dft(x);
            const auto back = idft(f);
            double ef = 0.0, err = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                ef += std::norm(f[i]);
                err = std::max(err, std::abs(back[i] - x[i]));
            }
            if (err > 1e-10 || std::abs(ef - e) > 1e-10 * e) return false;
        }
        return true;
    }});

    checks.push_back({"ACO frame: clipping halves the odd bins, antisymmetry, nonnegativity", [] {
        Rng rng(12);
        const auto c = Constellation::qam(16);
        const std::size_t n = 64;
        std::bernoulli_distribution coin(0.5);
        BitVector bits(n / 4 * 4);
        for (int k = 0; k < 50; ++k) {
            for (auto& b : bits) b = coin(rng);
            const auto f = tx_aco(bits, c, n, 1.0);
            const auto s = f.intensity.front();
            std::size_t zeros = 0;
            for (double v : s.samples) {
                if (v < 0.0) return false;
                zeros += v == 0.0;
            }
            if (zeros < n / 2) return false;
            for (std::size_t i = 0; i < n / 2; ++i)
                if (std::abs(f.bipolar.samples[i] + f.bipolar.samples[i + n / 2]) > 1e-12) return false;
            const auto spec = dft(TimeBlock{s.samples});
            for (std::size_t k2 = 1; k2 < n; k2 += 2)
                if (std::abs(spec.bins[k2] - f.freq.bins[k2] / 2.0) > 1e-10) return false;
        }
        return true;
    }});

    checks.push_back({"split_pairs is one-to-one for every scheme", [] {
        Rng rng(13);
        std::normal_distribution<double> g;
        for (auto s : {Scheme::aco, Scheme::flip, Scheme::pamdmt}) {
            const FrameLayout layout(s, 32);
            std::vector<double> r(layout.channel_uses());
            for (auto& v : r) v = g(rng);
            const auto back = reconstruct(split_pairs(r, layout), layout);
            for (std::size_t i = 0; i < r.size(); ++i)
                if (std::abs(back[i] - r[i]) > 1e-14) return false;
        }
        return true;
    }});

    checks.push_back({"every receiver is error-free on noiseless frames", [] {
        Rng rng(14);
        std::bernoulli_distribution coin(0.5);
        for (auto s : {Scheme::aco, Scheme::flip, Scheme::pamdmt}) {
            const FrameLayout layout(s, 64);
            const auto c = s == Scheme::pamdmt ? Constellation::pam(4) : Constellation::qam(16);
            BitVector bits(layout.bits_per_frame(c));
            for (auto& b : bits) b = coin(rng);
            const auto f = transmit(layout, bits, c, 1.0);
            const RxContext ctx{layout, c, f.symbol_scale};
            const auto r = f.channel_input();
            for (auto k : kAllReceivers)
                if (receive(k, ctx, r, true_signs(f, layout)) != bits) return false;
        }
        return true;
    }});

    checks.push_back({"conditional density integrates to one", [] {
        const auto rule = gauss_legendre(20);
        for (double sx : {0.1, 1.0, 30.0}) {
            const GaussianClipModel m(sx, 1.0);
            for (double k : {-3.0, 0.0, 3.0}) {
                const double y1 = k * m.sigma_y1();
                const double c = m.shrink() * std::abs(y1), w = 10.0 * m.sigma_f();
                const double br[] = {-c - w, -c, c, c + w};
                const auto r = integrate_adaptive([&](double y2) { return cond_pdf_y2_given_y1(y1, y2, m); },
                                                  std::span<const double>(br), rule);
                if (std::abs(r.value - 1.0) > 1e-8) return false;
            }
        }
        return true;
    }});

    checks.push_back({"half-Gaussian entropy identity", [] {
        for (double sx : {0.01, 1.0, 100.0})
            if (entropy_identity_check(sx) > 1e-12) return false;
        return true;
    }});

    checks.push_back({"rate ordering: conventional <= improved <= genie, improved <= clipped PAM", [] {
        for (double db : {-20.0, 0.0, 10.0, 25.0}) {
            const double e = db_to_linear(db);
            const double conv = rate_conventional_gaussian(e, 1.0);
            const auto imp = rate_improved_gaussian(e, 1.0);
            if (imp.value < conv) return false;
            if (rate_genie_gaussian(e, 1.0) - imp.value < -1e-4) return false;
            if (rate_clipped_pam(e, 1.0).value < imp.value) return false;
        }
        return true;
    }});

    checks.push_back({"Wilson interval brackets the estimate", [] {
        for (std::uint64_t k : {0u, 1u, 50u, 1000u}) {
            const auto ci = wilson_interval(k, 1000);
            const double p = static_cast<double>(k) / 1000.0;
            if (ci.lo > p || ci.hi < p) return false;
        }
        return true;
    }});

    return checks;
}

/// Runs every check, printing one PASS/FAIL line each. True when all pass.
inline bool run_selftest(std::ostream& os) {
    bool ok = true;
    for (const auto& c : selftest_checks()) {
        bool pass = false;
        try {
            pass = c.run();
        } catch (const std::exception& e) {
            os << "  exception: " << e.what() << '\n';
        }
        os << (pass ? "PASS  " : "FAIL  ") << c.name << '\n';
        ok = ok && pass;
    }
    return ok;
}

}  // namespace acoofdm
