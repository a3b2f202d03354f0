// aco_ofdm: BER and information-rate sweeps for ACO-OFDM, Flip-OFDM and PAM-DMT.
//
//   aco_ofdm ber  --scheme aco --constellation qam16 --receivers conventional,genie_clip --snr-o-db 5:15:1
//   aco_ofdm rate --input gaussian --snr-o-db -30:30:1
//   aco_ofdm gain --snr-o-db -30:30:1
//   aco_ofdm selftest
//
// Exit status: 0 success, 1 usage or configuration error, 2 selftest
// failure, 3 no frames simulated.

#include <acoofdm/acoofdm.hpp>
#include <acoofdm/selftest.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace acoofdm;

constexpr int kExitUsage = 1;
constexpr int kExitSelftest = 2;
constexpr int kExitEmpty = 3;

struct GridArgs {
    std::string optical;
    std::string electrical;

    void attach(CLI::App* cmd) {
        auto* o = cmd->add_option("--snr-o-db", optical, "optical SNR grid in dB: start:stop:step or a,b,c");
        auto* e = cmd->add_option("--snr-e-db", electrical, "electrical SNR grid in dB: start:stop:step or a,b,c");
        o->excludes(e);
    }

    std::pair<std::vector<double>, SnrAxis> resolve() const {
        if (!electrical.empty()) return {parse_grid(electrical), SnrAxis::electrical};
        return {parse_grid(optical), SnrAxis::optical};
    }
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string p; std::getline(ss, p, ',');)
        if (!p.empty()) out.push_back(p);
    return out;
}

void emit(const std::vector<CsvRow>& rows, const std::string& path) {
    if (path.empty() || path == "-") {
        write_csv(std::cout, rows);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file '" + path + "'");
    write_csv(f, rows);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ACO-OFDM improved-receiver simulator and information-rate analyzer"};
    app.require_subcommand(1);

    std::string output;
    unsigned threads = 0;

    // ber
    auto* ber = app.add_subcommand("ber", "Monte-Carlo uncoded BER sweep");
    std::string scheme = "aco", constellation = "qam4", receivers = "conventional";
    std::size_t n = 64;
    std::uint64_t max_frames = 100000, target_errors = 200, seed = 1;
    int iterations = kDefaultDecisionIterations;
    GridArgs ber_grid;
    ber->add_option("--scheme", scheme, "aco | flip | pamdmt")->capture_default_str();
    ber->add_option("--constellation", constellation, "qam4, qam16, qam64, pskM, pamM")->capture_default_str();
    ber->add_option("--receivers,--receiver", receivers,
                    "comma list of: conventional, negative_clipping, noise_filtering, pairwise_clip, "
                    "decision_directed, genie, genie_clip, or 'all'")
        ->capture_default_str();
    ber->add_option("-n,--n", n, "block length (power of two >= 4)")->capture_default_str();
    ber->add_option("--max-frames", max_frames, "frame budget per point")->capture_default_str();
    ber->add_option("--target-errors", target_errors, "stop a point after this many bit errors")->capture_default_str();
    ber->add_option("--seed", seed, "master seed")->capture_default_str();
    ber->add_option("--dd-iterations", iterations, "decision-directed iterations")->capture_default_str();
    ber_grid.attach(ber);

    // rate
    auto* rate = app.add_subcommand("rate", "information-rate sweep");
    std::string input = "gaussian", quantities;
    GridArgs rate_grid;
    rate->add_option("--input", input, "gaussian or a constellation name (qam16, psk8, ...)")->capture_default_str();
    rate->add_option("--quantities", quantities, "comma list restricting the emitted quantities");
    rate_grid.attach(rate);

    // gain
    auto* gain = app.add_subcommand("gain", "maximum achievable SNR gain of improved receivers (Gaussian inputs)");
    GridArgs gain_grid;
    gain_grid.attach(gain);

    app.add_subcommand("selftest", "run the module invariant checks");

    for (auto* cmd : {ber, rate, gain}) {
        cmd->add_option("-o,--output", output, "CSV path, '-' for stdout")->capture_default_str();
        cmd->add_option("--threads", threads, "worker threads (default: ACO_THREADS or 1)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return kExitUsage;
    }

    try {
        if (app.got_subcommand("selftest")) return run_selftest(std::cout) ? 0 : kExitSelftest;

        if (ber->parsed()) {
            SimConfig cfg;
            cfg.scheme = parse_scheme(scheme);
            cfg.constellation = constellation;
            cfg.receivers.clear();
            if (receivers == "all") {
                cfg.receivers.assign(std::begin(kAllReceivers), std::end(kAllReceivers));
            } else {
                for (const auto& r : split_list(receivers)) cfg.receivers.push_back(parse_receiver(r));
            }
            cfg.n = n;
            std::tie(cfg.snr_db, cfg.axis) = ber_grid.resolve();
            if (cfg.snr_db.empty()) throw ConfigError("ber needs a non-empty --snr-o-db or --snr-e-db grid");
            cfg.max_frames = max_frames;
            cfg.target_errors = target_errors;
            cfg.seed = seed;
            cfg.dd_iterations = iterations;
            cfg.threads = threads;
            const auto pts = run_ber_sweep(cfg);
            emit(to_csv_rows(pts, cfg), output);
            return pts.empty() ? kExitEmpty : 0;
        }

        RateSweepConfig cfg;
        cfg.threads = threads;
        if (rate->parsed()) {
            cfg.input = input;
            cfg.quantities = split_list(quantities);
            std::tie(cfg.snr_db, cfg.axis) = rate_grid.resolve();
        } else {
            cfg.input = "gaussian";
            cfg.quantities = {"delta", "relative_gain", "gain_optical_db", "gain_electrical_db"};
            std::tie(cfg.snr_db, cfg.axis) = gain_grid.resolve();
        }
        emit(to_csv_rows(run_rate_sweep(cfg)), output);
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }
}
