// Command-line front end over the benchmark and simulator layers. Analytic
// output is deterministic per seed; wall-clock rows appear only behind
// --timing so default CSV output stays byte-comparable across runs.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "flexisec/bench.hpp"

namespace flexisec {
namespace {

void emit(const std::vector<BenchRow>& rows, const std::string& csv_path) {
    const std::string csv = rows_to_csv(rows);
    if (csv_path.empty()) {
        std::cout << csv;
        return;
    }
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + csv_path);
    out << csv;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"flexisec: configurable link-layer security toolkit"};
    app.require_subcommand(1);

    std::string csv_path;
    std::uint64_t seed = 1;
    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--csv", csv_path, "write CSV to this path instead of standard output");
        cmd->add_option("--seed", seed, "seed for keys, messages, and Monte-Carlo trials");
    };

    bool timing = false;
    CLI::App* ciphers = app.add_subcommand("ciphers", "static cipher facts (table bytes, sizes)");
    add_common(ciphers);
    ciphers->add_flag("--timing", timing, "add wall-clock rows (not run-to-run comparable)");

    std::string mode_cipher = "aes_speed";
    std::vector<std::size_t> blocks = {1, 2, 4, 8};
    CLI::App* modes = app.add_subcommand("modes", "per-mode block-cipher call counts");
    add_common(modes);
    modes->add_option("--cipher", mode_cipher, "cipher under the modes")->capture_default_str();
    modes->add_option("--blocks", blocks, "message lengths in whole blocks")
        ->delimiter(',')
        ->capture_default_str();
    modes->add_flag("--timing", timing, "add wall-clock rows (not run-to-run comparable)");

    std::string scheme = "bloom";
    std::size_t nodes = 10;
    unsigned window = 8;
    std::size_t m_bits = 512;
    std::size_t k_hashes = 8;
    std::size_t fill = 32;
    std::uint64_t trials = 0;
    CLI::App* replay = app.add_subcommand("replay", "replay-state footprints and false-positive rates");
    add_common(replay);
    replay->add_option("--scheme", scheme, "counter | digest | bloom")->capture_default_str();
    replay->add_option("--nodes", nodes, "network size for state accounting")->capture_default_str();
    replay->add_option("--window", window, "per-neighbor window")->capture_default_str();
    replay->add_option("--m", m_bits, "bloom filter bits")->capture_default_str();
    replay->add_option("--k", k_hashes, "bloom hash count")->capture_default_str();
    replay->add_option("--fill", fill, "bloom occupancy for the rate rows")->capture_default_str();
    replay->add_option("--trials", trials, "Monte-Carlo probe count (0 = analytic only)")
        ->capture_default_str();

    std::vector<int> mac_bits = {32, 64};
    double packet_bytes = 68;
    std::vector<double> bandwidths = {19200, 250000};
    CLI::App* policy = app.add_subcommand("policy", "MAC-forgery horizon grid");
    add_common(policy);
    policy->add_option("--mac-bits", mac_bits, "MAC sizes in bits")->delimiter(',')->capture_default_str();
    policy->add_option("--packet-bytes", packet_bytes, "packet size in bytes")->capture_default_str();
    policy->add_option("--bandwidths", bandwidths, "link rates in bits/s")
        ->delimiter(',')
        ->capture_default_str();

    std::string config_path;
    CLI::App* sim = app.add_subcommand("sim", "run a scenario file");
    add_common(sim);
    sim->add_option("--config", config_path, "scenario file (key=value lines)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*ciphers) {
            emit(bench_ciphers(timing, seed), csv_path);
        } else if (*modes) {
            emit(bench_modes(mode_cipher, blocks, timing, seed), csv_path);
        } else if (*replay) {
            emit(bench_replay(scheme, nodes, window, m_bits, k_hashes, fill, trials, seed), csv_path);
        } else if (*policy) {
            emit(bench_policy(mac_bits, packet_bytes, bandwidths), csv_path);
        } else if (*sim) {
            Scenario s = Scenario::from_config(Config::parse_file(config_path));
            if (sim->count("--seed") > 0) s.seed = seed;  // CLI seed overrides the file's
            const SimReport report = run_scenario(s);
            emit(sim_rows(s, report), csv_path);
            std::cerr << sim_summary(s, report);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace flexisec
