#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zstrip/ensemble.hpp"
#include "zstrip/extremal.hpp"
#include "zstrip/lp.hpp"
#include "zstrip/roots.hpp"
#include "zstrip/serialize.hpp"
#include "zstrip/sweep.hpp"

namespace {

using zstrip::Json;

// A value starting with '{' is inline JSON; anything else is a file path.
Json load_json(const std::string& value) {
    const std::size_t first = value.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && value[first] == '{') return Json::parse(value);
    std::ifstream in(value);
    if (!in) throw std::runtime_error("cannot open input file: " + value);
    return Json::parse(in);
}

zstrip::LPDescriptor load_phi(const std::string& value) {
    return zstrip::descriptor_from_json(load_json(value));
}

zstrip::ComplexPolynomial load_poly(const std::string& value) {
    return zstrip::poly_from_json(load_json(value));
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> grid;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
            ++used;
        if (used != item.size())
            throw std::invalid_argument("grid: cannot parse entry \"" + item + "\"");
        grid.push_back(v);
    }
    if (grid.empty()) throw std::invalid_argument("grid: no entries");
    return grid;
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        if (!std::cout) throw std::runtime_error("write to stdout failed");
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + out_path);
}

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "Write output to a file instead of stdout");
}

void emit_json(const OutputOptions& opts, const std::string& command, Json params,
               Json result) {
    if (opts.format != "json")
        throw std::invalid_argument(command + ": only json output is defined");
    write_output(opts.out_path,
                 zstrip::envelope(command, std::move(params), std::move(result)).dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laguerre-Polya operators on strip-rooted polynomials"};
    app.require_subcommand(1);

    try {
        // apply
        auto* apply_cmd =
            app.add_subcommand("apply", "Apply phi(aD) to a polynomial via its Taylor series");
        static std::string apply_phi, apply_poly;
        static double apply_a = 1.0;
        static OutputOptions apply_out;
        apply_cmd->add_option("--phi", apply_phi, "Operator descriptor (file or inline JSON)")
            ->required();
        apply_cmd->add_option("--poly", apply_poly, "Input polynomial (file or inline JSON)")
            ->required();
        apply_cmd->add_option("--a", apply_a, "Frequency scale")->capture_default_str();
        add_output_options(apply_cmd, apply_out);
        apply_cmd->callback([] {
            const zstrip::LPDescriptor phi = load_phi(apply_phi);
            const zstrip::ComplexPolynomial f = load_poly(apply_poly);
            const zstrip::ComplexPolynomial g = zstrip::apply_series(phi.scaled(apply_a), f);
            Json params;
            params["phi"] = zstrip::descriptor_to_json(phi);
            params["poly"] = zstrip::poly_to_json(f);
            params["a"] = apply_a;
            emit_json(apply_out, "apply", std::move(params), zstrip::poly_to_json(g));
        });

        // roots
        auto* roots_cmd = app.add_subcommand("roots", "All roots of a polynomial");
        static std::string roots_poly;
        static zstrip::RootFindOptions roots_opts;
        static OutputOptions roots_out;
        roots_cmd->add_option("--poly", roots_poly, "Input polynomial (file or inline JSON)")
            ->required();
        roots_cmd->add_option("--max-iterations", roots_opts.max_iterations,
                              "Iteration budget for the simultaneous solver")
            ->capture_default_str();
        add_output_options(roots_cmd, roots_out);
        roots_cmd->callback([] {
            const zstrip::ComplexPolynomial f = load_poly(roots_poly);
            const zstrip::RootSet rs = zstrip::find_roots(f, roots_opts);
            Json params;
            params["poly"] = zstrip::poly_to_json(f);
            emit_json(roots_out, "roots", std::move(params), zstrip::rootset_to_json(rs));
        });

        // strip
        auto* strip_cmd =
            app.add_subcommand("strip", "Zero-strip half-width of a polynomial's roots");
        static std::string strip_poly;
        static double strip_tol = 0.0;
        static zstrip::RootFindOptions strip_opts;
        static OutputOptions strip_out;
        strip_cmd->add_option("--poly", strip_poly, "Input polynomial (file or inline JSON)")
            ->required();
        strip_cmd->add_option("--real-tol", strip_tol,
                              "Threshold below which |Im| counts as real (0 = automatic)");
        strip_cmd->add_option("--max-iterations", strip_opts.max_iterations,
                              "Iteration budget for the simultaneous solver")
            ->capture_default_str();
        add_output_options(strip_cmd, strip_out);
        strip_cmd->callback([] {
            const zstrip::ComplexPolynomial f = load_poly(strip_poly);
            const zstrip::StripReport report =
                zstrip::strip_width(zstrip::find_roots(f, strip_opts), strip_tol);
            Json params;
            params["poly"] = zstrip::poly_to_json(f);
            params["real_tol"] = strip_tol;
            emit_json(strip_out, "strip", std::move(params), zstrip::strip_to_json(report));
        });

        // extremal fa|ga|r1curve|quadratic
        auto* ext_cmd = app.add_subcommand("extremal", "Closed-form extremal-family analysis");
        ext_cmd->require_subcommand(1);

        auto* fa_cmd = ext_cmd->add_subcommand(
            "fa", "Even operator on the cosine-cosh family: output strip or real offset");
        static std::string fa_phi;
        static double fa_a = 1.0, fa_r = 1.0;
        static OutputOptions fa_out;
        fa_cmd->add_option("--phi", fa_phi, "Even operator descriptor")->required();
        fa_cmd->add_option("--a", fa_a, "Family frequency")->capture_default_str();
        fa_cmd->add_option("--r", fa_r, "Family strip half-width")->capture_default_str();
        add_output_options(fa_cmd, fa_out);
        fa_cmd->callback([] {
            const zstrip::LPDescriptor phi = load_phi(fa_phi);
            const zstrip::ExtremalFamily fam{zstrip::FamilyKind::FA, fa_a, fa_r, 1};
            const zstrip::R1Result res = zstrip::apply_even_phi_fa(phi, fam);
            Json params;
            params["phi"] = zstrip::descriptor_to_json(phi);
            params["a"] = fa_a;
            params["r"] = fa_r;
            emit_json(fa_out, "extremal fa", std::move(params), zstrip::r1_to_json(res));
        });

        auto* ga_cmd = ext_cmd->add_subcommand(
            "ga", "Operator z^{2m} phi1 on the squared family: negative-branch roots");
        static std::string ga_phi;
        static double ga_a = 1.0, ga_r = 1.0;
        static int ga_m = 1;
        static OutputOptions ga_out;
        ga_cmd->add_option("--phi", ga_phi, "Even cofactor descriptor phi1")->required();
        ga_cmd->add_option("--a", ga_a, "Family frequency")->capture_default_str();
        ga_cmd->add_option("--r", ga_r, "Family strip half-width")->capture_default_str();
        ga_cmd->add_option("--m", ga_m, "Monomial order (phi = z^{2m} phi1)")
            ->capture_default_str();
        add_output_options(ga_cmd, ga_out);
        ga_cmd->callback([] {
            const zstrip::LPDescriptor phi1 = load_phi(ga_phi);
            const zstrip::ExtremalFamily fam{zstrip::FamilyKind::GA, ga_a, ga_r, ga_m};
            const zstrip::R1Result res = zstrip::solve_ga_roots(phi1, ga_m, fam);
            Json params;
            params["phi"] = zstrip::descriptor_to_json(phi1);
            params["a"] = ga_a;
            params["r"] = ga_r;
            params["m"] = ga_m;
            emit_json(ga_out, "extremal ga", std::move(params), zstrip::r1_to_json(res));
        });

        auto* curve_cmd = ext_cmd->add_subcommand(
            "r1curve", "Output strip width across a frequency grid, with lower bounds");
        static std::string curve_phi, curve_grid;
        static double curve_r = 1.0;
        static OutputOptions curve_out;
        curve_cmd->add_option("--phi", curve_phi, "Even operator descriptor")->required();
        curve_cmd->add_option("--r", curve_r, "Family strip half-width")->capture_default_str();
        curve_cmd->add_option("--grid", curve_grid, "Ascending frequencies \"a1,a2,...\"")
            ->required();
        add_output_options(curve_cmd, curve_out);
        curve_cmd->callback([] {
            const zstrip::LPDescriptor phi = load_phi(curve_phi);
            const std::vector<double> grid = parse_grid(curve_grid);
            const auto curve = zstrip::r1_curve(phi, curve_r, grid);
            Json params;
            params["phi"] = zstrip::descriptor_to_json(phi);
            params["r"] = curve_r;
            params["grid"] = grid;
            emit_json(curve_out, "extremal r1curve", std::move(params),
                      zstrip::curve_to_json(curve));
        });

        auto* quad_cmd = ext_cmd->add_subcommand(
            "quadratic", "phi(aD) on z^2 + r^2: measured root strip of the image");
        static std::string quad_phi;
        static double quad_a = 1.0, quad_r = 1.0;
        static OutputOptions quad_out;
        quad_cmd->add_option("--phi", quad_phi, "Operator descriptor with phi(0)=1")->required();
        quad_cmd->add_option("--a", quad_a, "Frequency scale")->capture_default_str();
        quad_cmd->add_option("--r", quad_r, "Strip half-width of the input")
            ->capture_default_str();
        add_output_options(quad_cmd, quad_out);
        quad_cmd->callback([] {
            const zstrip::LPDescriptor phi = load_phi(quad_phi);
            const zstrip::StripReport report =
                zstrip::quadratic_testcase(phi, quad_a, quad_r);
            Json params;
            params["phi"] = zstrip::descriptor_to_json(phi);
            params["a"] = quad_a;
            params["r"] = quad_r;
            emit_json(quad_out, "extremal quadratic", std::move(params),
                      zstrip::strip_to_json(report));
        });

        // sweep
        auto* sweep_cmd = app.add_subcommand(
            "sweep", "Estimate the shrink constant c over a random strip-rooted ensemble");
        static std::string sweep_phi, sweep_grid;
        static double sweep_r = 1.0, sweep_rf = 0.25;
        static int sweep_count = 16, sweep_degree = 8;
        static std::uint64_t sweep_seed = 1;
        static OutputOptions sweep_out;
        sweep_cmd->add_option("--phi", sweep_phi, "Operator descriptor")->required();
        sweep_cmd->add_option("--r", sweep_r, "Input strip half-width")->capture_default_str();
        sweep_cmd->add_option("--grid", sweep_grid, "Frequencies \"a1,a2,...\"")->required();
        sweep_cmd->add_option("--count", sweep_count, "Ensemble size")->capture_default_str();
        sweep_cmd->add_option("--degree", sweep_degree, "Member degree")->capture_default_str();
        sweep_cmd->add_option("--seed", sweep_seed, "Generator seed")->capture_default_str();
        sweep_cmd->add_option("--real-fraction", sweep_rf, "Fraction of real roots")
            ->capture_default_str();
        add_output_options(sweep_cmd, sweep_out);
        sweep_cmd->callback([] {
            const zstrip::LPDescriptor phi = load_phi(sweep_phi);
            const std::vector<double> grid = parse_grid(sweep_grid);
            zstrip::EnsembleSpec spec;
            spec.count = sweep_count;
            spec.degree = sweep_degree;
            spec.r = sweep_r;
            spec.seed = sweep_seed;
            spec.real_fraction = sweep_rf;
            const zstrip::CPhiEstimate estimate =
                zstrip::estimate_c_phi(phi, sweep_r, grid, spec);
            if (sweep_out.format == "csv") {
                write_output(sweep_out.out_path, zstrip::sweep_to_csv(estimate.records));
                return;
            }
            Json params;
            params["phi"] = zstrip::descriptor_to_json(phi);
            params["r"] = sweep_r;
            params["grid"] = grid;
            params["count"] = sweep_count;
            params["degree"] = sweep_degree;
            params["seed"] = sweep_seed;
            params["real_fraction"] = sweep_rf;
            emit_json(sweep_out, "sweep", std::move(params), zstrip::sweep_to_json(estimate));
        });

        // density
        auto* density_cmd = app.add_subcommand(
            "density", "Real-zero counting function of the operator symbol");
        static std::string density_phi;
        static double density_tmax = 100.0;
        static int density_steps = 200;
        static OutputOptions density_out;
        density_cmd->add_option("--phi", density_phi, "Operator descriptor")->required();
        density_cmd->add_option("--tmax", density_tmax, "Largest radius")->capture_default_str();
        density_cmd->add_option("--steps", density_steps, "Grid size")->capture_default_str();
        add_output_options(density_cmd, density_out);
        density_cmd->callback([] {
            const zstrip::LPDescriptor phi = load_phi(density_phi);
            const zstrip::DensityReport report =
                zstrip::density_report(phi, density_tmax, density_steps);
            if (density_out.format == "csv") {
                write_output(density_out.out_path, zstrip::density_to_csv(report));
                return;
            }
            Json params;
            params["phi"] = zstrip::descriptor_to_json(phi);
            params["t_max"] = density_tmax;
            params["steps"] = density_steps;
            emit_json(density_out, "density", std::move(params),
                      zstrip::density_to_json(report));
        });

        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e);
            return code == 0 ? 0 : 2;
        }
    } catch (const zstrip::RootFindFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
