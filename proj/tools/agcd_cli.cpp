// Command-line front end: approximate and exact gcd computation, rank
// inspection, instance generation and the table benchmark.
//
// Exit codes: 0 success, 1 error (parse failures report file:line), 2 when
// no nontrivial common factor exists at the given tolerance.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "agcd/agcd.hpp"
#include "agcd/errors.hpp"
#include "agcd/harness.hpp"
#include "agcd/testkit.hpp"

namespace {

using namespace agcd;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.14e", v);
    return buf;
}

Polynomial read_poly_checked(const std::string& path) {
    try {
        return read_polynomial_file(path);
    } catch (const ParseError& e) {
        throw Error(path + ":" + std::to_string(e.line) + ": " + e.what());
    }
}

void print_poly_section(const std::string& name, const Polynomial& p) {
    std::cout << "# " << name << " (degree " << p.degree() << ")\n";
    write_polynomial(std::cout, p);
}

void print_rank_report(const RankReport& rep) {
    std::cout << "# rank report\n";
    std::cout << "numerical_rank\t" << rep.numerical_rank << "\n";
    std::cout << "corank\t" << rep.corank << "\n";
    std::cout << "threshold\t" << fmt(rep.threshold_used) << "\n";
    std::cout << "gap_location\t";
    if (rep.gap_location)
        std::cout << *rep.gap_location << "\n";
    else
        std::cout << "none\n";
    std::cout << "pivots";
    for (double p : rep.pivot_magnitudes) std::cout << '\t' << fmt(p);
    std::cout << "\nrow_norms";
    for (double r : rep.row_norms) std::cout << '\t' << fmt(r);
    std::cout << "\n";
}

struct CommonFlags {
    double tol = kDefaultRankTol;
    double tol_abs = 0.0;
    double newton_tol = 1e-12;
    std::size_t max_iters = 50;
    bool dense = false;
};

AgcdConfig make_config(const CommonFlags& flags) {
    AgcdConfig cfg;
    cfg.rank_tol = flags.tol;
    if (flags.tol_abs > 0.0) cfg.rank_tol_absolute = flags.tol_abs;
    cfg.newton_tol = flags.newton_tol;
    cfg.max_iters = flags.max_iters;
    cfg.use_structured_solver = !flags.dense;
    return cfg;
}

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--tol", flags.tol, "relative rank threshold");
    cmd->add_option("--tol-abs", flags.tol_abs,
                    "absolute rank threshold (use ~100x the expected perturbation)");
    cmd->add_option("--newton-tol", flags.newton_tol, "Gauss-Newton stop tolerance");
    cmd->add_option("--max-iters", flags.max_iters, "Gauss-Newton iteration cap");
    cmd->add_flag("--dense", flags.dense, "force the dense reference solver");
}

int cmd_agcd(const std::string& f_path, const std::string& g_path, const CommonFlags& flags,
             const std::string& out_path) {
    const Polynomial f = read_poly_checked(f_path);
    const Polynomial g = read_poly_checked(g_path);
    const AgcdResult res = approximate_gcd(f, g, make_config(flags));

    print_rank_report(res.rank_report);
    print_poly_section("gcd", res.gcd);
    print_poly_section("g_tilde", res.g_tilde);
    print_poly_section("v_tilde", res.v_tilde);
    std::cout << "residual\t" << fmt(res.residual) << "\n";
    std::cout << "distance\t" << fmt(res.distance) << "\n";
    std::cout << "iterations\t" << res.iterations << "\n";
    std::cout << "converged\t" << (res.converged ? 1 : 0) << "\n";
    if (res.diagnostics.imag_drop > 0.0)
        std::cout << "imag_drop\t" << fmt(res.diagnostics.imag_drop) << "\n";

    if (!out_path.empty()) write_polynomial_file(out_path, res.g_tilde);
    return res.gcd.degree() > 0 ? 0 : 2;
}

int cmd_gcd(const std::string& f_path, const std::string& g_path) {
    const Polynomial f = read_poly_checked(f_path);
    const Polynomial g = read_poly_checked(g_path);
    const Polynomial d = exact_gcd(f, g);
    print_poly_section("gcd", d);
    return d.degree() > 0 ? 0 : 2;
}

int cmd_rank(const std::string& f_path, const std::string& g_path, const CommonFlags& flags) {
    const Polynomial f = read_poly_checked(f_path);
    const Polynomial g = read_poly_checked(g_path);
    if (f.degree() < 2) throw Error("rank: deg f must be >= 2");

    const cx theta = default_theta(f.degree(), f.degree());
    const CauchyGenerators cg = toeplitz_to_cauchy(generators_of_mult_matrix(monic(f), g, theta));
    const StructuredLU lu = gko_lu(cg, Pivoting::kGu);
    double tol = flags.tol;
    if (flags.tol_abs > 0.0) {
        double top = 0.0;
        for (double p : lu.pivots) top = std::max(top, p);
        if (top > 0.0) tol = std::max(tol, flags.tol_abs / top);
    }
    print_rank_report(estimate_rank(lu, tol));
    return 0;
}

int cmd_gen(std::size_t n, std::size_t m, std::size_t k, double eta, std::uint64_t seed,
            const std::string& out_dir) {
    const testkit::PlantedInstance inst = testkit::plant_instance(n, m, k, eta, seed);
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);
    write_polynomial_file((dir / "f.txt").string(), inst.f);
    write_polynomial_file((dir / "g.txt").string(), inst.g_observed);
    write_polynomial_file((dir / "g_exact.txt").string(), inst.g_exact);
    std::ofstream meta(dir / "meta.txt");
    if (!meta) throw Error("cannot open meta.txt for writing");
    meta << n << ' ' << m << ' ' << k << ' ' << fmt(eta) << ' ' << seed << '\n';
    return 0;
}

int cmd_bench(int table, std::size_t seeds, const CommonFlags& flags, bool tol_abs_set) {
    AgcdConfig cfg = make_config(flags);
    std::optional<double> tol_override;
    if (tol_abs_set) tol_override = flags.tol_abs;
    run_bench_table(table, seeds, cfg, tol_override, std::cout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"approximate gcd of an exact and a perturbable polynomial"};
    app.require_subcommand(1);

    std::string f_path, g_path, out_path;
    CommonFlags flags;

    auto* agcd_cmd = app.add_subcommand("agcd", "approximate gcd pipeline");
    agcd_cmd->add_option("f", f_path, "exact polynomial file")->required();
    agcd_cmd->add_option("g", g_path, "perturbable polynomial file")->required();
    add_common_flags(agcd_cmd, flags);
    agcd_cmd->add_option("--out", out_path, "write the perturbed polynomial here");

    auto* gcd_cmd = app.add_subcommand("gcd", "exact algebraic gcd");
    gcd_cmd->add_option("f", f_path, "first polynomial file")->required();
    gcd_cmd->add_option("g", g_path, "second polynomial file")->required();

    auto* rank_cmd = app.add_subcommand("rank", "rank report of the multiplication matrix");
    rank_cmd->add_option("f", f_path, "exact polynomial file")->required();
    rank_cmd->add_option("g", g_path, "perturbable polynomial file")->required();
    add_common_flags(rank_cmd, flags);

    std::size_t gen_n = 0, gen_m = 0, gen_k = 0;
    double gen_eta = 0.0;
    std::uint64_t gen_seed = 0;
    std::string gen_dir;
    auto* gen_cmd = app.add_subcommand("gen", "generate a planted instance");
    gen_cmd->add_option("n", gen_n, "degree of f")->required();
    gen_cmd->add_option("m", gen_m, "degree of g")->required();
    gen_cmd->add_option("k", gen_k, "planted gcd degree")->required();
    gen_cmd->add_option("eta", gen_eta, "perturbation size")->required();
    gen_cmd->add_option("seed", gen_seed, "random seed")->required();
    gen_cmd->add_option("out_dir", gen_dir, "output directory")->required();

    int bench_table = 1;
    std::size_t bench_seeds = 20;
    auto* bench_cmd = app.add_subcommand("bench", "regenerate an experiment table");
    bench_cmd->add_option("--table", bench_table, "which table (1: eta=1e-5, 2: eta=1e-8)")
        ->check(CLI::Range(1, 2));
    bench_cmd->add_option("--seeds", bench_seeds, "number of seeds per row");
    add_common_flags(bench_cmd, flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(agcd_cmd)) return cmd_agcd(f_path, g_path, flags, out_path);
        if (app.got_subcommand(gcd_cmd)) return cmd_gcd(f_path, g_path);
        if (app.got_subcommand(rank_cmd)) return cmd_rank(f_path, g_path, flags);
        if (app.got_subcommand(gen_cmd))
            return cmd_gen(gen_n, gen_m, gen_k, gen_eta, gen_seed, gen_dir);
        if (app.got_subcommand(bench_cmd))
            return cmd_bench(bench_table, bench_seeds, flags,
                             bench_cmd->count("--tol-abs") > 0);
    } catch (const agcd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
