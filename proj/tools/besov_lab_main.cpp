// besov-lab: command-line driver for the torus spectral-analysis library.
// Subcommands cover the dyadic-partition self-tests, Besov norm computation
// on both the exact and the DFT path, the lacunary shear-flow gap
// experiments (thm1..thm4), the 1-D and 2-D solver oracles, and a combined
// validation run.
//
// Exit status: 0 = all quantitative checks passed, 1 = a check failed
// (records are still written), 2 = usage or configuration error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "besovlab/advection_diffusion.hpp"
#include "besovlab/besov.hpp"
#include "besovlab/dyadic.hpp"
#include "besovlab/errors.hpp"
#include "besovlab/experiments.hpp"
#include "besovlab/flows.hpp"
#include "besovlab/gridpath.hpp"
#include "besovlab/io.hpp"
#include "besovlab/lacunary.hpp"
#include "besovlab/ns2d.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace besovlab;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct NRange {
    int lo = 6;
    int hi = 12;
};

NRange parse_n_range(const std::string& text) {
    NRange r;
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, dots));
            r.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("--n", "expected an index or a range a..b, got '" + text + "'");
    }
    if (r.hi < r.lo) throw CLI::ValidationError("--n", "empty range " + text);
    return r;
}

double parse_p(const std::string& p_str, long long p_num, long long p_den) {
    if (p_num > 0) {
        if (p_den <= 0) throw CLI::ValidationError("--p-den", "must be a positive integer");
        const double p = static_cast<double>(p_num) / static_cast<double>(p_den);
        if (p < 1.0) throw CLI::ValidationError("--p-num/--p-den", "p must be >= 1");
        return p;
    }
    if (p_str == "1") return 1.0;
    if (p_str == "2") return 2.0;
    if (p_str == "inf") return kInf;
    throw CLI::ValidationError("--p", "admissible values are 1, 2, inf (or --p-num/--p-den)");
}

double parse_r(const std::string& r_str) {
    if (r_str == "inf") return kInf;
    try {
        const double r = std::stod(r_str);
        if (r >= 1.0) return r;
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("--r", "expected a number >= 1 or inf, got '" + r_str + "'");
}

fs::path resolve_out_dir(const std::string& flag_value) {
    if (const char* env = std::getenv("BESOV_LAB_OUT"); env && *env) return fs::path(env);
    return fs::path(flag_value);
}

struct ProfileSpec {
    double s = 2.0;
    int J = 16;
    std::string rule = "uniform";
    double drift = 1.0;
    int d = 2;
};

void add_profile_flags(CLI::App* cmd, ProfileSpec& spec, std::string& descriptor_path) {
    cmd->add_option("--s", spec.s, "profile regularity s (> 0)");
    cmd->add_option("--J", spec.J, "truncation index J (>= 3)");
    cmd->add_option("--rule", spec.rule, "weight rule: uniform | jsq")
        ->check(CLI::IsMember({"uniform", "jsq"}));
    cmd->add_option("--drift", spec.drift, "constant first velocity component");
    cmd->add_option("--d", spec.d, "torus dimension (>= 2)");
    cmd->add_option("--descriptor", descriptor_path,
                    "JSON profile descriptor {s, J, rule, drift, d}; explicit flags win");
}

void load_descriptor(const std::string& path, CLI::App* cmd, ProfileSpec& spec) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot read descriptor " + path);
    json j = json::parse(in);
    if (j.contains("s") && cmd->count("--s") == 0) spec.s = j["s"].get<double>();
    if (j.contains("J") && cmd->count("--J") == 0) spec.J = j["J"].get<int>();
    if (j.contains("rule") && cmd->count("--rule") == 0) spec.rule = j["rule"].get<std::string>();
    if (j.contains("drift") && cmd->count("--drift") == 0) spec.drift = j["drift"].get<double>();
    if (j.contains("d") && cmd->count("--d") == 0) spec.d = j["d"].get<int>();
}

std::string descriptor_json(const ProfileSpec& spec) {
    std::ostringstream out;
    out << "{\"s\": " << format_double(spec.s) << ", \"J\": " << spec.J << ", \"rule\": \""
        << spec.rule << "\", \"drift\": " << format_double(spec.drift) << ", \"d\": " << spec.d
        << "}\n";
    return out.str();
}

void write_records(const fs::path& dir, const std::string& stem,
                   const std::vector<ExperimentResult>& results, const std::string& format,
                   const std::string& params_json, const std::vector<std::string>& notes) {
    if (format == "csv") {
        atomic_write_file(dir / (stem + "_records.csv"), gap_records_csv(results));
    } else {
        std::ostringstream out;
        out << "[\n";
        for (size_t i = 0; i < results.size(); ++i) {
            const auto& r = results[i].record;
            out << "  {\"theorem\": \"" << r.theorem << "\", \"n\": " << r.n
                << ", \"s\": " << format_double(r.s) << ", \"p\": \"" << format_double(r.p)
                << "\", \"r\": \"" << format_double(r.r) << "\", \"d\": " << r.d
                << ", \"block_norm_at_n\": " << format_double(r.block_norm_at_n)
                << ", \"full_norm\": " << format_double(r.full_norm)
                << ", \"paper_bound\": " << format_double(r.paper_bound)
                << ", \"fubini_factor_used\": " << format_double(r.fubini_factor_used)
                << ", \"paper_constant_claimed\": " << format_double(r.paper_constant_claimed)
                << ", \"pass\": " << (r.pass ? "true" : "false")
                << ", \"tail_bound\": " << format_double(r.tail_bound) << "}"
                << (i + 1 < results.size() ? "," : "") << "\n";
        }
        out << "]\n";
        atomic_write_file(dir / (stem + "_records.json"), out.str());
    }
    atomic_write_file(dir / (stem + "_summary.json"),
                      sweep_summary_json(stem, params_json, results, notes));
}

int finish_sweep(const fs::path& dir, const std::string& stem,
                 const std::vector<ExperimentResult>& results, const std::string& format,
                 const std::string& params_json, const std::vector<std::string>& notes,
                 int verbosity) {
    write_records(dir, stem, results, format, params_json, notes);
    int fails = 0;
    double worst_cross = 0.0;
    for (const auto& r : results) {
        if (!r.record.pass) ++fails;
        if (r.cross) worst_cross = std::max(worst_cross, r.cross->rel_err_full);
        if (verbosity > 0)
            std::cout << gap_record_csv_row(r.record) << "\n";
    }
    std::cout << stem << ": " << results.size() - fails << "/" << results.size()
              << " records pass";
    if (worst_cross > 0.0) std::cout << ", worst cross-path rel err " << worst_cross;
    std::cout << "\n";
    return fails == 0 ? 0 : 1;
}

std::string sweep_params_json(double s, double p, double r, int d, int J,
                              std::optional<double> alpha) {
    std::ostringstream out;
    out << "{\"s\": " << format_double(s) << ", \"p\": \"" << format_double(p) << "\", \"r\": \""
        << format_double(r) << "\", \"d\": " << d << ", \"J\": " << J;
    if (alpha) out << ", \"alpha\": " << format_double(*alpha);
    out << "}";
    return out.str();
}

int run_partition_check(int jmax, const fs::path& dir, int verbosity) {
    // Unity over every integer |k| <= (4/3) 2^jmax, evaluated from the
    // continuous cutoffs (no tables).
    const long long k_top = static_cast<long long>(std::floor(4.0 / 3.0 * std::ldexp(1.0, jmax)));
    double worst = 0.0;
    long long worst_k = 0;
    for (long long k = 0; k <= k_top; ++k) {
        const double xi = static_cast<double>(k);
        double sum = DyadicPartition::chi(xi);
        for (int j = 0; j <= jmax; ++j) sum += DyadicPartition::phi_j(j, xi);
        const double dev = std::abs(sum - 1.0);
        if (dev > worst) {
            worst = dev;
            worst_k = k;
        }
    }

    // Lemma-style block selection at the lacunary frequencies.
    double selection = 0.0;
    for (int m = 3; m <= 12; ++m) {
        const double lambda = static_cast<double>(lacunary_frequency(m));
        for (int j = -1; j <= m + 3; ++j) {
            const double w = j == -1 ? DyadicPartition::chi(lambda)
                                     : DyadicPartition::phi_j(j, lambda);
            selection = std::max(selection, std::abs(w - (j == m ? 1.0 : 0.0)));
        }
    }

    const bool pass = worst <= 1e-12 && selection <= 1e-12;
    std::ostringstream out;
    out << "{\"jmax\": " << jmax << ", \"k_top\": " << k_top
        << ", \"max_unity_deviation\": " << format_double(worst) << ", \"worst_k\": " << worst_k
        << ", \"max_selection_deviation\": " << format_double(selection)
        << ", \"pass\": " << (pass ? "true" : "false") << "}\n";
    atomic_write_file(dir / "partition_check.json", out.str());
    std::cout << "partition-check: max unity deviation " << format_double(worst) << " at |k| <= "
              << k_top << ", selection deviation " << format_double(selection) << " -> "
              << (pass ? "pass" : "FAIL") << "\n";
    if (verbosity > 0) std::cout << out.str();
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"besov-lab: Littlewood-Paley analysis and lacunary shear-flow experiments on the torus"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string out_flag = ".";
    std::string format = "csv";
    int verbosity = 0;
    app.add_option("--out", out_flag, "output directory (env BESOV_LAB_OUT overrides)")
        ->default_str(".");
    app.add_option("--format", format, "records format")->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("-v,--verbose", verbosity, "print per-record rows");

    // ---- partition-check ----
    auto* cmd_part = app.add_subcommand("partition-check", "dyadic partition-of-unity self test");
    int jmax = 20;
    cmd_part->add_option("--jmax", jmax, "check all integers |k| <= (4/3) 2^jmax")
        ->check(CLI::Range(4, 24));

    // ---- profile ----
    auto* cmd_profile = app.add_subcommand("profile", "emit a lacunary profile and its descriptor");
    ProfileSpec prof_spec;
    std::string prof_descriptor;
    add_profile_flags(cmd_profile, prof_spec, prof_descriptor);

    // ---- besov ----
    auto* cmd_besov =
        app.add_subcommand("besov", "Besov norm of a profile/shear state on both paths");
    ProfileSpec besov_spec;
    std::string besov_descriptor;
    add_profile_flags(cmd_besov, besov_spec, besov_descriptor);
    std::string besov_p = "2", besov_r = "inf";
    long long besov_p_num = 0, besov_p_den = 1;
    cmd_besov->add_option("--p", besov_p, "integrability: 1 | 2 | inf")
        ->check(CLI::IsMember({"1", "2", "inf"}));
    cmd_besov->add_option("--p-num", besov_p_num, "rational p numerator (>= 1 overall)");
    cmd_besov->add_option("--p-den", besov_p_den, "rational p denominator");
    cmd_besov->add_option("--r", besov_r, "summability: number >= 1 or inf");

    // ---- thm1..thm4 ----
    struct ThmFlags {
        CLI::App* cmd = nullptr;
        double s = 2.0;
        std::string p = "2";
        long long p_num = 0, p_den = 1;
        std::string r = "inf";
        double alpha = 0.5;
        int d = 2;
        std::string n = "6..12";
        int J = 16;
        bool no_grid = false;
    };
    auto add_thm = [&](const char* name, const char* blurb) {
        ThmFlags f;
        f.cmd = app.add_subcommand(name, blurb);
        f.cmd->add_option("--s", f.s, "Besov regularity s");
        f.cmd->add_option("--p", f.p, "integrability: 1 | 2 | inf")
            ->check(CLI::IsMember({"1", "2", "inf"}));
        f.cmd->add_option("--p-num", f.p_num, "rational p numerator");
        f.cmd->add_option("--p-den", f.p_den, "rational p denominator");
        f.cmd->add_option("--d", f.d, "torus dimension (>= 2)");
        f.cmd->add_option("--n", f.n, "block index or range a..b");
        f.cmd->add_option("--J", f.J, "profile truncation (>= n+2)");
        f.cmd->add_flag("--no-grid-check", f.no_grid, "skip the DFT cross-path");
        return f;
    };
    ThmFlags t1 = add_thm("thm1", "traveling-wave gap at t_n = 8 pi / (11 2^n)");
    ThmFlags t2 = add_thm("thm2", "Hoelder ratio blow-up for the j^-2 profile");
    t2.r = "1";
    t2.cmd->add_option("--r", t2.r, "summability: number >= 1 or inf");
    t2.cmd->add_option("--alpha", t2.alpha, "Hoelder exponent in (0, 1)");
    ThmFlags t3 = add_thm("thm3", "two-speed data discontinuity at t_n = 8 n pi / (11 2^n)");
    ThmFlags t4 = add_thm("thm4", "inviscid-limit gap with eps_n = (8/(11 pi)) 2^-n");

    // ---- solve-ad1d ----
    auto* cmd_ad = app.add_subcommand("solve-ad1d", "1-D advection-diffusion integrating-factor solve");
    ProfileSpec ad_spec;
    std::string ad_descriptor;
    add_profile_flags(cmd_ad, ad_spec, ad_descriptor);
    double ad_eps = 1e-3, ad_T = 0.1;
    cmd_ad->add_option("--eps", ad_eps, "viscosity (>= 0)");
    cmd_ad->add_option("--T", ad_T, "final time (>= 0)");

    // ---- solve-ns2d ----
    auto* cmd_ns = app.add_subcommand("solve-ns2d", "2-D pseudo-spectral Navier-Stokes solve");
    std::string ns_config, ns_u0 = "shear", ns_output = "spectrum";
    int ns_N = 128;
    double ns_dt = 1e-3, ns_eps = 0.01, ns_T = 0.1;
    ProfileSpec ns_spec;
    ns_spec.s = 1.0;
    ns_spec.J = 4;
    std::string ns_descriptor;
    cmd_ns->add_option("--config", ns_config, "JSON config {N, dt, eps, T, u0:{...}}");
    cmd_ns->add_option("--N", ns_N, "grid points per axis (power of two in [32, 512])");
    cmd_ns->add_option("--dt", ns_dt, "time step");
    cmd_ns->add_option("--eps", ns_eps, "viscosity");
    cmd_ns->add_option("--T", ns_T, "final time (<= 1)");
    cmd_ns->add_option("--u0", ns_u0, "initial data: shear | taylor-green")
        ->check(CLI::IsMember({"shear", "taylor-green"}));
    cmd_ns->add_option("--output", ns_output, "snapshot format: spectrum | field")
        ->check(CLI::IsMember({"spectrum", "field"}));
    add_profile_flags(cmd_ns, ns_spec, ns_descriptor);

    // ---- validate ----
    auto* cmd_val = app.add_subcommand(
        "validate", "residual certificates and solver-vs-closed-form validation");
    int val_J = 10;
    bool val_quick = false;
    cmd_val->add_option("--J", val_J, "profile truncation for the residual certificates");
    cmd_val->add_flag("--quick", val_quick, "smaller 2-D runs (for smoke tests)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const fs::path out_dir = resolve_out_dir(out_flag);

    try {
        fs::create_directories(out_dir);

        if (cmd_part->parsed()) return run_partition_check(jmax, out_dir, verbosity);

        if (cmd_profile->parsed()) {
            load_descriptor(prof_descriptor, cmd_profile, prof_spec);
            const auto f = build_profile(prof_spec.s, prof_spec.J,
                                         weight_rule_from_string(prof_spec.rule));
            std::ostringstream coeffs;
            coeffs << "k,cos_amp,sin_amp\n";
            for (const auto& [k, ab] : f.poly.terms())
                coeffs << k << ',' << format_double(ab.cos_amp) << ','
                       << format_double(ab.sin_amp) << '\n';
            atomic_write_file(out_dir / "profile_coefficients.csv", coeffs.str());
            atomic_write_file(out_dir / "profile.json", descriptor_json(prof_spec));
            std::cout << "profile: " << f.poly.terms().size() << " terms, k_max = " << f.k_max()
                      << "\n";
            return 0;
        }

        if (cmd_besov->parsed()) {
            load_descriptor(besov_descriptor, cmd_besov, besov_spec);
            const double p = parse_p(besov_p, besov_p_num, besov_p_den);
            const double r = parse_r(besov_r);
            const auto f = build_profile(besov_spec.s, besov_spec.J,
                                         weight_rule_from_string(besov_spec.rule));
            const auto partition = experiment_partition(besov_spec.J);
            const BesovIndex idx{besov_spec.s, p, r};
            const auto state = shear_initial_data(f, besov_spec.d, besov_spec.drift);

            const double exact = besov_norm_shear(state, idx, besov_spec.J, partition);
            const double profile_norm =
                besov_norm_scalar(f.poly, idx, besov_spec.J, besov_spec.d, partition);
            const auto grid = grid_besov_gap(f.poly, besov_spec.drift, idx, besov_spec.J,
                                             besov_spec.d, besov_spec.J, partition, 18, exact);
            const double rel = std::abs(grid.full_norm - exact) / std::max(exact, 1e-300);
            const bool pass = rel <= 1e-8;

            std::ostringstream outj;
            outj << "{\n  \"descriptor\": " << descriptor_json(besov_spec)
                 << ",  \"p\": \"" << format_double(p) << "\", \"r\": \"" << format_double(r)
                 << "\",\n  \"vector_norm\": " << format_double(exact)
                 << ",\n  \"profile_norm\": " << format_double(profile_norm)
                 << ",\n  \"grid_vector_norm\": " << format_double(grid.full_norm)
                 << ",\n  \"cross_path_rel_err\": " << format_double(rel)
                 << ",\n  \"grid_precision\": \"" << grid.precision
                 << "\",\n  \"c0\": " << format_double(c0(p))
                 << ",\n  \"fubini_factor\": " << format_double(fubini_lift(p, besov_spec.d))
                 << ",\n  \"pass\": " << (pass ? "true" : "false") << "\n}\n";
            atomic_write_file(out_dir / "besov.json", outj.str());
            std::cout << "besov: vector norm " << format_double(exact) << ", cross-path rel err "
                      << format_double(rel) << " -> " << (pass ? "pass" : "FAIL") << "\n";
            return pass ? 0 : 1;
        }

        auto run_thm = [&](ThmFlags& f, int which) -> int {
            const double p = parse_p(f.p, f.p_num, f.p_den);
            const NRange range = parse_n_range(f.n);
            ExperimentOptions opt;
            opt.truncation = f.J;
            opt.grid_check = !f.no_grid;
            std::vector<std::string> notes = {
                "pass is judged against the Fubini-exact factor (2*pi)^((d-1)/p); "
                "paper_constant_claimed carries the printed (2*pi)^(d-1) variant",
                "vector Besov norm convention: max over velocity components"};
            switch (which) {
                case 1: {
                    auto res = thm1_sweep(f.s, p, f.d, range.lo, range.hi, opt);
                    atomic_write_file(out_dir / "thm1_plot.csv", plot_csv(res, "n", "full_norm"));
                    return finish_sweep(out_dir, "thm1", res, format,
                                        sweep_params_json(f.s, p, kInf, f.d, f.J, std::nullopt),
                                        notes, verbosity);
                }
                case 2: {
                    const double r = parse_r(f.r);
                    auto res = thm2_sweep(f.s, p, r, f.alpha, f.d, range.lo, range.hi, opt);
                    atomic_write_file(out_dir / "thm2_plot.csv", plot_csv(res, "t_n", "full_norm"));
                    return finish_sweep(out_dir, "thm2", res, format,
                                        sweep_params_json(f.s, p, r, f.d, f.J, f.alpha), notes,
                                        verbosity);
                }
                case 3: {
                    auto res = thm3_sweep(f.s, p, f.d, range.lo, range.hi, opt);
                    std::vector<ExperimentResult> init, sol;
                    for (const auto& e : res)
                        (e.record.theorem == "thm3_init" ? init : sol).push_back(e);
                    atomic_write_file(out_dir / "thm3_initial_plot.csv",
                                      plot_csv(init, "n", "full_norm"));
                    atomic_write_file(out_dir / "thm3_solution_plot.csv",
                                      plot_csv(sol, "n", "full_norm"));
                    notes.push_back(
                        "initial-gap rows report the computed 2^-s (2*pi)^(d/p) / n value; the "
                        "normalization-free bound 1/n sits in paper_constant_claimed");
                    return finish_sweep(out_dir, "thm3", res, format,
                                        sweep_params_json(f.s, p, kInf, f.d, f.J, std::nullopt),
                                        notes, verbosity);
                }
                default: {
                    auto res = thm4_sweep(f.s, p, f.d, range.lo, range.hi, opt);
                    atomic_write_file(out_dir / "thm4_plot.csv",
                                      plot_csv(res, "n", "block_norm_at_n"));
                    notes.push_back(
                        "viscous modulation g_n(t_n) = exp(-1) - 1 from its definition; the bare "
                        "exponential factor exp(-1) enters the block amplitude as 1 - exp(-1)");
                    notes.push_back("full_norm sits at block J (damping 1 - exp(-4^(J-n))) and is "
                                    "truncation-sensitive; see tail_bound");
                    return finish_sweep(out_dir, "thm4", res, format,
                                        sweep_params_json(f.s, p, kInf, f.d, f.J, std::nullopt),
                                        notes, verbosity);
                }
            }
        };
        if (t1.cmd->parsed()) return run_thm(t1, 1);
        if (t2.cmd->parsed()) return run_thm(t2, 2);
        if (t3.cmd->parsed()) return run_thm(t3, 3);
        if (t4.cmd->parsed()) return run_thm(t4, 4);

        if (cmd_ad->parsed()) {
            load_descriptor(ad_descriptor, cmd_ad, ad_spec);
            const auto f =
                build_profile(ad_spec.s, ad_spec.J, weight_rule_from_string(ad_spec.rule));
            const auto solved = solve_advection_diffusion_1d(f.poly, ad_eps, ad_T);
            std::ostringstream coeffs;
            coeffs << "k,cos_amp_0,sin_amp_0,cos_amp_T,sin_amp_T\n";
            for (const auto& [k, ab] : f.poly.terms()) {
                const auto at = solved.at(k);
                coeffs << k << ',' << format_double(ab.cos_amp) << ','
                       << format_double(ab.sin_amp) << ',' << format_double(at.cos_amp) << ','
                       << format_double(at.sin_amp) << '\n';
            }
            atomic_write_file(out_dir / "ad1d_coefficients.csv", coeffs.str());

            double sup_gap = 0.0;
            if (ad_eps > 0.0) {
                const auto closed =
                    ns_damped_wave(shear_initial_data(f, 2, 1.0), ad_eps, ad_T).profile;
                Grid1D probe(4096);
                const auto diff = solved - closed;
                for (int i = 0; i < probe.size(); ++i)
                    sup_gap = std::max(sup_gap, std::abs(diff.eval(probe.node(i))));
            }
            const bool pass = sup_gap <= 1e-12;
            std::ostringstream outj;
            outj << "{\"eps\": " << format_double(ad_eps) << ", \"T\": " << format_double(ad_T)
                 << ", \"sup_gap_vs_closed_form\": " << format_double(sup_gap)
                 << ", \"pass\": " << (pass ? "true" : "false") << "}\n";
            atomic_write_file(out_dir / "ad1d_summary.json", outj.str());
            std::cout << "solve-ad1d: sup gap vs closed form " << format_double(sup_gap) << " -> "
                      << (pass ? "pass" : "FAIL") << "\n";
            return pass ? 0 : 1;
        }

        if (cmd_ns->parsed()) {
            SolverConfig2D cfg;
            cfg.n = ns_N;
            cfg.dt = ns_dt;
            cfg.eps = ns_eps;
            cfg.t_final = ns_T;
            if (!ns_config.empty()) {
                std::ifstream in(ns_config);
                if (!in) throw std::domain_error("cannot read config " + ns_config);
                json j = json::parse(in);
                if (j.contains("N")) cfg.n = j["N"].get<int>();
                if (j.contains("dt")) cfg.dt = j["dt"].get<double>();
                if (j.contains("eps")) cfg.eps = j["eps"].get<double>();
                if (j.contains("T")) cfg.t_final = j["T"].get<double>();
                if (j.contains("output_times"))
                    cfg.output_times = j["output_times"].get<std::vector<double>>();
                if (j.contains("u0")) {
                    const auto& u0 = j["u0"];
                    if (u0.contains("kind")) ns_u0 = u0["kind"].get<std::string>();
                    if (u0.contains("s")) ns_spec.s = u0["s"].get<double>();
                    if (u0.contains("J")) ns_spec.J = u0["J"].get<int>();
                    if (u0.contains("rule")) ns_spec.rule = u0["rule"].get<std::string>();
                    if (u0.contains("drift")) ns_spec.drift = u0["drift"].get<double>();
                }
            } else {
                load_descriptor(ns_descriptor, cmd_ns, ns_spec);
            }
            if (ns_u0 == "taylor_green") ns_u0 = "taylor-green";

            VelocitySampler sampler;
            TrigPolynomial profile;
            double drift = ns_spec.drift;
            if (ns_u0 == "shear") {
                profile = build_profile(ns_spec.s, ns_spec.J,
                                        weight_rule_from_string(ns_spec.rule))
                              .poly;
                sampler = [&profile, drift](double x, double) -> std::array<double, 2> {
                    return {drift, profile.eval(x)};
                };
            } else {
                sampler = [](double x, double y) -> std::array<double, 2> {
                    return {std::sin(x) * std::cos(y), -std::cos(x) * std::sin(y)};
                };
            }

            const auto result = ns2d_solve(sampler, cfg);
            for (const auto& st : result.states) {
                std::ostringstream name;
                name << "ns2d_t" << format_double(st.time) << (ns_output == "field" ? "_field" : "_spectrum")
                     << ".csv";
                atomic_write_file(out_dir / name.str(), ns_output == "field"
                                                            ? sampled_field_csv(st)
                                                            : vorticity_spectrum_csv(st));
            }

            // Closed-form validation where one exists.
            double sup_err = -1.0;
            const auto& last = result.states.back();
            if (ns_u0 == "shear" && drift == 1.0 && cfg.eps > 0.0) {
                auto closed =
                    heat_damp(translate(profile, last.time), cfg.eps, last.time);
                auto uv = velocity_fields(last);
                sup_err = 0.0;
                for (int ix = 0; ix < cfg.n; ++ix) {
                    const double x = kTwoPi * ix / cfg.n;
                    sup_err = std::max(sup_err, std::abs(uv[1][static_cast<size_t>(ix)] -
                                                         closed.eval(x)));
                }
            } else if (ns_u0 == "taylor-green") {
                const double damp = std::exp(-2.0 * cfg.eps * last.time);
                auto uv = velocity_fields(last);
                sup_err = 0.0;
                for (int iy = 0; iy < cfg.n; ++iy) {
                    const double y = kTwoPi * iy / cfg.n;
                    for (int ix = 0; ix < cfg.n; ++ix) {
                        const double x = kTwoPi * ix / cfg.n;
                        const size_t i = static_cast<size_t>(iy) * cfg.n + ix;
                        sup_err = std::max(
                            {sup_err,
                             std::abs(uv[0][i] - damp * std::sin(x) * std::cos(y)),
                             std::abs(uv[1][i] + damp * std::cos(x) * std::sin(y))});
                    }
                }
            }
            const bool pass = sup_err < 0.0 || sup_err <= 1e-6;

            std::ostringstream outj;
            outj << "{\"N\": " << cfg.n << ", \"dt\": " << format_double(cfg.dt)
                 << ", \"eps\": " << format_double(cfg.eps)
                 << ", \"T\": " << format_double(cfg.t_final)
                 << ", \"cfl\": " << format_double(result.cfl_number)
                 << ", \"cfl_warning\": " << (result.cfl_warning ? "true" : "false")
                 << ", \"steps\": " << result.steps
                 << ", \"final_energy\": " << format_double(kinetic_energy(last))
                 << ", \"spectral_divergence\": " << format_double(spectral_divergence(last));
            if (sup_err >= 0.0) outj << ", \"sup_err_vs_closed_form\": " << format_double(sup_err);
            outj << ", \"pass\": " << (pass ? "true" : "false") << "}\n";
            atomic_write_file(out_dir / "ns2d_summary.json", outj.str());
            if (result.cfl_warning)
                std::cerr << "warning: CFL number " << format_double(result.cfl_number)
                          << " exceeds 1\n";
            std::cout << "solve-ns2d: " << result.steps << " steps, CFL "
                      << format_double(result.cfl_number);
            if (sup_err >= 0.0) std::cout << ", sup err vs closed form " << format_double(sup_err);
            std::cout << " -> " << (pass ? "pass" : "FAIL") << "\n";
            return pass ? 0 : 1;
        }

        if (cmd_val->parsed()) {
            struct Row {
                std::string name;
                double value;
                double threshold;
                bool pass;
            };
            std::vector<Row> rows;
            auto add = [&](const std::string& name, double value, double threshold) {
                rows.push_back({name, value, threshold, value <= threshold});
            };

            // Residual certificates at J = val_J on a 4096-point probe.
            const auto f = build_profile(2.0, val_J, WeightRule::uniform);
            const auto u0 = shear_initial_data(f, 2, 1.0);
            Grid1D probe(4096);
            for (int n = 6; n <= 12; ++n) {
                const auto seq = seq_params(n, SequenceKind::viscous);
                add("euler_residual_n" + std::to_string(n),
                    euler_residual(u0, seq.time(), probe), 1e-10);
                auto tagged = u0;
                tagged.viscosity = seq.viscosity();
                add("ad_residual_n" + std::to_string(n),
                    ns_residual(tagged, seq.viscosity(), seq.time(), probe), 1e-10);
            }

            // Two independently coded routes for the viscous profile.
            {
                const double eps = 1e-3, T = 0.1;
                const auto oracle = solve_advection_diffusion_1d(f.poly, eps, T);
                const auto closed = ns_damped_wave(u0, eps, T).profile;
                double sup = 0.0;
                const auto diff = oracle - closed;
                for (int i = 0; i < probe.size(); ++i)
                    sup = std::max(sup, std::abs(diff.eval(probe.node(i))));
                add("ad1d_vs_closed_form", sup, 1e-12);
            }

            // 2-D solver against the shear and Taylor-Green closed forms.
            {
                SolverConfig2D cfg;
                cfg.n = val_quick ? 64 : 128;
                cfg.dt = 1e-3;
                cfg.eps = 0.01;
                cfg.t_final = 0.1;
                const auto fs4 = build_profile(1.0, val_quick ? 3 : 4, WeightRule::uniform);
                auto shear = [&fs4](double x, double) -> std::array<double, 2> {
                    return {1.0, fs4.poly.eval(x)};
                };
                auto res = ns2d_solve(shear, cfg);
                const auto closed =
                    ns_damped_wave(shear_initial_data(fs4, 2, 1.0), cfg.eps, cfg.t_final).profile;
                auto uv = velocity_fields(res.states.back());
                double err = 0.0;
                for (int ix = 0; ix < cfg.n; ++ix)
                    err = std::max(err, std::abs(uv[1][static_cast<size_t>(ix)] -
                                                 closed.eval(kTwoPi * ix / cfg.n)));
                add("ns2d_shear_sup_err", err, 1e-6);

                SolverConfig2D half = cfg;
                half.dt = cfg.dt / 2.0;
                auto res_half = ns2d_solve(shear, half);
                auto uvh = velocity_fields(res_half.states.back());
                double err_half = 0.0;
                for (int ix = 0; ix < cfg.n; ++ix)
                    err_half = std::max(err_half, std::abs(uvh[1][static_cast<size_t>(ix)] -
                                                           closed.eval(kTwoPi * ix / cfg.n)));
                rows.push_back({"ns2d_shear_dt_halving_gain", err / err_half, 12.0,
                                err / err_half >= 12.0});

                auto tg = [](double x, double y) -> std::array<double, 2> {
                    return std::array<double, 2>{std::sin(x) * std::cos(y),
                                                 -std::cos(x) * std::sin(y)};
                };
                auto res_tg = ns2d_solve(tg, cfg);
                const double damp = std::exp(-2.0 * cfg.eps * cfg.t_final);
                auto uvtg = velocity_fields(res_tg.states.back());
                double err_tg = 0.0;
                for (int iy = 0; iy < cfg.n; ++iy) {
                    const double y = kTwoPi * iy / cfg.n;
                    for (int ix = 0; ix < cfg.n; ++ix) {
                        const double x = kTwoPi * ix / cfg.n;
                        const size_t i = static_cast<size_t>(iy) * cfg.n + ix;
                        err_tg = std::max(
                            {err_tg, std::abs(uvtg[0][i] - damp * std::sin(x) * std::cos(y)),
                             std::abs(uvtg[1][i] + damp * std::cos(x) * std::sin(y))});
                    }
                }
                add("ns2d_taylor_green_sup_err", err_tg, 1e-6);
            }

            std::ostringstream csv;
            csv << "check,value,threshold,pass\n";
            bool all = true;
            for (const auto& r : rows) {
                csv << r.name << ',' << format_double(r.value) << ','
                    << format_double(r.threshold) << ',' << (r.pass ? 1 : 0) << '\n';
                all = all && r.pass;
                std::cout << (r.pass ? "pass " : "FAIL ") << r.name << " = "
                          << format_double(r.value) << "\n";
            }
            atomic_write_file(out_dir / "validate.csv", csv.str());
            std::cout << "validate: " << (all ? "all checks pass" : "FAILURES present") << "\n";
            return all ? 0 : 1;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
