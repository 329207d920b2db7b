// projdecomp: projective decomposition of data matrices from the command line.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "projdecomp/commands.hpp"
#include "projdecomp/result_document.hpp"

namespace pd = projdecomp;
namespace cli = projdecomp::cli;

namespace {

std::optional<pd::MatrixFormat> format_flag(const std::string& text) {
    if (text.empty()) return std::nullopt;
    return pd::parse_matrix_format(text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Projective decomposition A = sigma * D_alpha * W * D_beta of real matrices"};
    app.set_version_flag("--version", std::string(pd::tool_version));
    app.require_subcommand(1);

    const std::vector<std::string> formats{"csv", "matrixmarket"};
    const std::vector<std::string> gauges{"balanced", "unit-concat", "none"};

    cli::DecomposeOptions dec;
    std::string dec_format;
    std::string dec_gauge = "balanced";
    std::string dec_result;
    std::string dec_w;
    auto* decompose = app.add_subcommand("decompose", "Compute sigma, alpha, beta and the scale-invariant form W");
    decompose->add_option("input", dec.input, "Input matrix (CSV or Matrix Market)")->required()->check(CLI::ExistingFile);
    decompose->add_option("--format", dec_format, "Input format; default from the file extension")
        ->check(CLI::IsMember(formats));
    decompose->add_option("--tol", dec.tol, "Max |row/col RMS - 1| accepted")->check(CLI::PositiveNumber);
    decompose->add_option("--max-iter", dec.max_iter, "Iteration cap")->check(CLI::PositiveNumber);
    decompose->add_option("--gauge", dec_gauge, "Gauge policy for alpha/beta")->check(CLI::IsMember(gauges));
    decompose->add_option("--out", dec_result, "Result document (JSON)");
    decompose->add_option("--out-w", dec_w, "W output (.csv or .mtx)");

    cli::CheckOptions chk;
    std::string chk_format;
    std::string chk_mode = "exhaustive";
    auto* check = app.add_subcommand("check", "Check W against the unit-RMS constraints and A's relative ratios");
    check->add_option("input", chk.input, "Original matrix A")->required()->check(CLI::ExistingFile);
    check->add_option("w", chk.w_or_result, "W matrix file or result document (.json)")
        ->required()
        ->check(CLI::ExistingFile);
    check->add_option("--format", chk_format, "Matrix format; default from the file extension")
        ->check(CLI::IsMember(formats));
    check->add_option("--tol", chk.tol, "Tolerance for every reported quantity")->check(CLI::PositiveNumber);
    check->add_option("--ratio-mode", chk_mode, "exhaustive | sampled:<count>:<seed>");

    cli::CompareOptions cmp;
    std::string cmp_format;
    std::string cmp_method = "projective";
    std::string cmp_gauge = "balanced";
    std::string cmp_svg;
    auto* compare = app.add_subcommand("compare", "Normalize with projective decomposition, z or log+z");
    compare->add_option("input", cmp.input, "Input matrix")->required()->check(CLI::ExistingFile);
    compare->add_option("--format", cmp_format, "Input format")->check(CLI::IsMember(formats));
    compare->add_option("--method", cmp_method, "projective | z | logz")
        ->check(CLI::IsMember({"projective", "z", "logz"}));
    compare->add_flag("--polar", cmp.polar, "Also write (angle, radius) before and after");
    compare->add_option("--out", cmp.out, "Normalized CSV output")->required();
    compare->add_option("--svg", cmp_svg, "Scatter plot of the normalized data");
    compare->add_option("--tol", cmp.tol, "Solver tolerance (projective)")->check(CLI::PositiveNumber);
    compare->add_option("--max-iter", cmp.max_iter, "Solver iteration cap (projective)")->check(CLI::PositiveNumber);
    compare->add_option("--gauge", cmp_gauge, "Gauge policy (projective)")->check(CLI::IsMember(gauges));

    cli::GenOptions gen;
    std::string gen_out;
    std::string gen_svg;
    auto* generate = app.add_subcommand("gen", "Generate the synthetic figure datasets as CSV");
    generate->add_option("--figure", gen.figure, "1 (rectangular grid), 3 (radial grid) or 5 (mixed sign)")
        ->required();
    generate->add_option("--seed", gen.seed, "Seed for mt19937_64");
    std::string gen_angles = "random_phase";
    generate->add_option("--angles", gen_angles, "Circle point layout")
        ->check(CLI::IsMember({"random_phase", "seeded_uniform", "even"}));
    generate->add_option("--out", gen_out, "Output CSV; stdout when omitted");
    generate->add_option("--svg", gen_svg, "Scatter plot of the generated data");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::exit_error;
    }

    if (decompose->parsed()) {
        dec.format = format_flag(dec_format);
        dec.gauge = *pd::parse_gauge_policy(dec_gauge);
        if (!dec_result.empty()) dec.out_result = dec_result;
        if (!dec_w.empty()) dec.out_w = dec_w;
        return cli::run_decompose(dec, std::cout, std::cerr);
    }
    if (check->parsed()) {
        chk.format = format_flag(chk_format);
        auto mode = cli::parse_ratio_mode(chk_mode);
        if (!mode) {
            std::cerr << "error: --ratio-mode must be 'exhaustive' or 'sampled:<count>:<seed>', got '" << chk_mode
                      << "'\n";
            return cli::exit_error;
        }
        chk.ratio_mode = *mode;
        return cli::run_check(chk, std::cout, std::cerr);
    }
    if (compare->parsed()) {
        cmp.format = format_flag(cmp_format);
        cmp.method = *cli::parse_compare_method(cmp_method);
        cmp.gauge = *pd::parse_gauge_policy(cmp_gauge);
        if (!cmp_svg.empty()) cmp.svg = cmp_svg;
        return cli::run_compare(cmp, std::cout, std::cerr);
    }
    gen.angles = *pd::parse_angle_layout(gen_angles);
    if (!gen_out.empty()) gen.out = gen_out;
    if (!gen_svg.empty()) gen.svg = gen_svg;
    return cli::run_gen(gen, std::cout, std::cerr);
}
