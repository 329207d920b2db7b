#ifndef PROJDECOMP_COMMANDS_HPP
#define PROJDECOMP_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "projdecomp/datagen.hpp"
#include "projdecomp/equivalence.hpp"
#include "projdecomp/matrix_io.hpp"
#include "projdecomp/solver.hpp"

namespace projdecomp::cli {

// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;       ///< bad input, bad flags, domain errors
inline constexpr int exit_not_met = 2;     ///< ran, but did not converge / did not pass

struct DecomposeOptions {
    std::filesystem::path input;
    std::optional<MatrixFormat> format;  ///< from the extension when absent
    double tol = 1e-10;
    int max_iter = 10000;
    GaugePolicy gauge = GaugePolicy::balanced;
    std::optional<std::filesystem::path> out_result;
    std::optional<std::filesystem::path> out_w;
};

struct CheckOptions {
    std::filesystem::path input;
    /// W as a matrix file, or a result document (".json").
    std::filesystem::path w_or_result;
    std::optional<MatrixFormat> format;
    double tol = 1e-8;
    RatioMode ratio_mode = Exhaustive{};
};

enum class CompareMethod { projective, z, logz };

struct CompareOptions {
    std::filesystem::path input;
    std::optional<MatrixFormat> format;
    CompareMethod method = CompareMethod::projective;
    bool polar = false;
    std::filesystem::path out;
    std::optional<std::filesystem::path> svg;
    double tol = 1e-10;
    int max_iter = 10000;
    GaugePolicy gauge = GaugePolicy::balanced;
};

struct GenOptions {
    int figure = 1;
    std::uint64_t seed = 1;
    AngleLayout angles = AngleLayout::random_phase;
    std::optional<std::filesystem::path> out;  ///< stdout when absent
    std::optional<std::filesystem::path> svg;
};

/// "exhaustive" or "sampled:<count>:<seed>".
std::optional<RatioMode> parse_ratio_mode(const std::string& text);
std::optional<CompareMethod> parse_compare_method(const std::string& text);

/// Companion paths written by `compare` next to its main output.
std::filesystem::path sidecar_path(const std::filesystem::path& out, CompareMethod method);
std::filesystem::path polar_path(const std::filesystem::path& out);

// Each command writes summaries and data to `out`, diagnostics to `err`,
// and returns an exit code.
int run_decompose(const DecomposeOptions& opt, std::ostream& out, std::ostream& err);
int run_check(const CheckOptions& opt, std::ostream& out, std::ostream& err);
int run_compare(const CompareOptions& opt, std::ostream& out, std::ostream& err);
int run_gen(const GenOptions& opt, std::ostream& out, std::ostream& err);

} // namespace projdecomp::cli

#endif
