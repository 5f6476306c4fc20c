#include "agcd/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "agcd/errors.hpp"
#include "agcd/testkit.hpp"

namespace agcd {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.14e", v);
    return buf;
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t h = v.size() / 2;
    return (v.size() % 2 == 1) ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

}  // namespace

std::string run_record_header() {
    return "# n\tm\tgcd_degree\teta\tseed\tresidual\tcofactor_error\tdistance\twall_seconds\t"
           "iterations\tcorank\tconverged";
}

std::string format_run_record(const RunRecord& r) {
    std::ostringstream os;
    os << r.n << '\t' << r.m << '\t' << r.gcd_degree << '\t' << fmt(r.eta) << '\t' << r.seed
       << '\t' << fmt(r.residual) << '\t' << fmt(r.cofactor_error) << '\t' << fmt(r.distance)
       << '\t' << fmt(r.wall_seconds) << '\t' << r.iterations << '\t' << r.corank << '\t'
       << (r.converged ? 1 : 0);
    return os.str();
}

RunRecord parse_run_record(const std::string& line) {
    std::istringstream is(line);
    RunRecord r;
    int conv = 0;
    if (!(is >> r.n >> r.m >> r.gcd_degree >> r.eta >> r.seed >> r.residual >> r.cofactor_error >>
          r.distance >> r.wall_seconds >> r.iterations >> r.corank >> conv))
        throw ParseError("malformed run record", 1);
    r.converged = conv != 0;
    return r;
}

double auto_rank_tol(double eta) { return eta > 0.0 ? 100.0 * eta : 0.0; }

RunRecord run_planted(std::size_t n, std::size_t m, std::size_t gcd_degree, double eta,
                      std::uint64_t seed, const AgcdConfig& cfg) {
    const testkit::PlantedInstance inst = testkit::plant_instance(n, m, gcd_degree, eta, seed);

    const auto t0 = std::chrono::steady_clock::now();
    const AgcdResult res = approximate_gcd(inst.f, inst.g_observed, cfg);
    const auto t1 = std::chrono::steady_clock::now();

    RunRecord rec;
    rec.n = n;
    rec.m = m;
    rec.gcd_degree = gcd_degree;
    rec.eta = eta;
    rec.seed = seed;
    rec.residual = res.residual;
    rec.cofactor_error = distance(inst.cofactor_exact, res.v_tilde);
    rec.distance = res.distance;
    rec.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    rec.iterations = res.iterations;
    rec.corank = res.rank_report.corank;
    rec.converged = res.converged;
    return rec;
}

std::vector<BenchRow> bench_rows(int table) {
    if (table == 1) return {{8, 7, 3}, {15, 14, 5}, {22, 22, 7}, {36, 36, 11}};
    if (table == 2) return {{8, 7, 3}, {28, 27, 13}, {38, 37, 13}, {58, 57, 23}};
    throw InvalidInputError("bench_rows: table must be 1 or 2");
}

double bench_eta(int table) {
    if (table == 1) return 1e-5;
    if (table == 2) return 1e-8;
    throw InvalidInputError("bench_eta: table must be 1 or 2");
}

void run_bench_table(int table, std::size_t seeds, const AgcdConfig& base_cfg,
                     std::optional<double> rank_tol_override, std::ostream& out) {
    const double eta = bench_eta(table);
    AgcdConfig cfg = base_cfg;
    const double abs_tol = rank_tol_override.value_or(auto_rank_tol(eta));
    if (abs_tol > 0.0) cfg.rank_tol_absolute = abs_tol;

    out << "# n\tm\tgcd_degree\teta\tseeds\tmedian_residual\tmedian_cofactor_error\t"
           "median_distance\tmedian_wall_seconds\n";
    for (const BenchRow& row : bench_rows(table)) {
        std::vector<double> residuals, cof_errors, distances, walls;
        for (std::size_t s = 0; s < seeds; ++s) {
            const RunRecord rec = run_planted(row.n, row.m, row.gcd_degree, eta, s + 1, cfg);
            residuals.push_back(rec.residual);
            cof_errors.push_back(rec.cofactor_error);
            distances.push_back(rec.distance);
            walls.push_back(rec.wall_seconds);
        }
        out << row.n << '\t' << row.m << '\t' << row.gcd_degree << '\t' << fmt(eta) << '\t'
            << seeds << '\t' << fmt(median(residuals)) << '\t' << fmt(median(cof_errors)) << '\t'
            << fmt(median(distances)) << '\t' << fmt(median(walls)) << '\n';
    }
}

}  // namespace agcd
