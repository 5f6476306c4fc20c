#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "agcd/agcd.hpp"

namespace agcd {

/// One pipeline run on a planted instance, serializable as a single
/// tab-separated line at 15 significant digits.
struct RunRecord {
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t gcd_degree = 0;
    double eta = 0.0;
    std::uint64_t seed = 0;
    double residual = 0.0;        // F(g_tilde, v_tilde)
    double cofactor_error = 0.0;  // ||v - v_tilde||_2 against the planted cofactor
    double distance = 0.0;        // ||g - g_tilde||_2 against the observed g
    double wall_seconds = 0.0;
    std::size_t iterations = 0;
    std::size_t corank = 0;
    bool converged = false;
};

std::string run_record_header();
std::string format_run_record(const RunRecord& r);
RunRecord parse_run_record(const std::string& line);

/// Absolute rank threshold matched to the expected perturbation: noise
/// pivots cluster near the perturbation scale, so two orders of magnitude
/// above eta separates them from the structural pivots.  Zero (for exact
/// data) means "no absolute threshold".
double auto_rank_tol(double eta);

/// Plant the instance, run the pipeline, time it.
RunRecord run_planted(std::size_t n, std::size_t m, std::size_t gcd_degree, double eta,
                      std::uint64_t seed, const AgcdConfig& cfg);

struct BenchRow {
    std::size_t n, m, gcd_degree;
};

/// The experiment grids: table 1 is eta = 1e-5 over sizes (8,7,3), (15,14,5),
/// (22,22,7), (36,36,11); table 2 is eta = 1e-8 over (8,7,3), (28,27,13),
/// (38,37,13), (58,57,23).
std::vector<BenchRow> bench_rows(int table);
double bench_eta(int table);

/// Regenerate one table over the given number of seeds, printing one
/// tab-separated row of medians per size ('#'-prefixed header first).
void run_bench_table(int table, std::size_t seeds, const AgcdConfig& base_cfg,
                     std::optional<double> rank_tol_override, std::ostream& out);

}  // namespace agcd
