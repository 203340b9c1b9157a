#pragma once
// Benchmark and reporting front end. Every product of this module is a list
// of BenchRow records in one long-format CSV schema (subject, metric,
// value, params); analytic rows are exactly reproducible, and only rows
// gated behind the timing flag carry wall-clock noise.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "flexisec/simnet.hpp"

namespace flexisec {

struct BenchRow {
    std::string subject;  // cipher, mode, scheme, or network element
    std::string metric;   // cipher_calls, table_bytes, state_bytes, fp_*, wall_ns_per_block, ...
    double value = 0.0;
    std::string params;   // space-separated key=value context, enough to reproduce the row
};

// Canonical locale-free number rendering: integers without a decimal
// point, everything else via %.9g. Identical inputs render identically, so
// same-seed CSV outputs are byte-comparable.
std::string format_metric_value(double v);

// Header line plus one line per row, in the given order.
std::string rows_to_csv(const std::vector<BenchRow>& rows);

// Static cipher facts (table_bytes, key/block sizes); timing adds
// wall_ns_per_block rows measured on this host.
std::vector<BenchRow> bench_ciphers(bool timing, std::uint64_t seed);

// Per-mode block-cipher call counts for each message length in `blocks`
// (whole blocks); timing adds wall_ns_per_block rows. 64-bit-block ciphers
// skip the 128-bit-only modes.
std::vector<BenchRow> bench_modes(std::string_view cipher, const std::vector<std::size_t>& blocks,
                                  bool timing, std::uint64_t seed);

// Replay-state footprints for any scheme; for the bloom scheme also the
// analytic false-positive rates at occupancy `fill` and, when trials > 0, a
// Monte-Carlo measurement over `trials` fresh probe tags (requires k equal
// to the hash family size).
std::vector<BenchRow> bench_replay(std::string_view scheme, std::size_t nodes, unsigned window,
                                   std::size_t m_bits, std::size_t k, std::size_t fill,
                                   std::uint64_t trials, std::uint64_t seed);

// MAC-forgery horizon grid: one exact row and one rounded-rate row per
// (mac_bits, bandwidth) pair.
std::vector<BenchRow> bench_policy(const std::vector<int>& mac_bits, double packet_bytes,
                                   const std::vector<double>& bandwidths);

// Simulator report in the same CSV schema, plus a human-readable summary.
std::vector<BenchRow> sim_rows(const Scenario& s, const SimReport& r);
std::string sim_summary(const Scenario& s, const SimReport& r);

// Command-line entry point: subcommands ciphers | modes | replay | policy |
// sim, each with --csv/--seed; sim takes --config. Returns the process
// exit code (0 on success, nonzero with a stderr diagnostic on any error).
int run_cli(int argc, char** argv);

}  // namespace flexisec
