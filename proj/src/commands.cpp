#include "projdecomp/commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "projdecomp/baselines.hpp"
#include "projdecomp/datagen.hpp"
#include "projdecomp/errors.hpp"
#include "projdecomp/result_document.hpp"
#include "projdecomp/svg.hpp"

namespace projdecomp::cli {

namespace fs = std::filesystem;

std::optional<RatioMode> parse_ratio_mode(const std::string& text) {
    if (text == "exhaustive") {
        return Exhaustive{};
    }
    const std::string prefix = "sampled:";
    if (text.rfind(prefix, 0) != 0) {
        return std::nullopt;
    }
    const std::string rest = text.substr(prefix.size());
    const auto colon = rest.find(':');
    if (colon == std::string::npos) {
        return std::nullopt;
    }
    try {
        std::size_t used = 0;
        const std::string count_text = rest.substr(0, colon);
        const std::string seed_text = rest.substr(colon + 1);
        Sampled s;
        s.count = std::stoull(count_text, &used);
        if (used != count_text.size() || s.count == 0) return std::nullopt;
        s.seed = std::stoull(seed_text, &used);
        if (used != seed_text.size()) return std::nullopt;
        return s;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::optional<CompareMethod> parse_compare_method(const std::string& text) {
    if (text == "projective") return CompareMethod::projective;
    if (text == "z") return CompareMethod::z;
    if (text == "logz") return CompareMethod::logz;
    return std::nullopt;
}

fs::path sidecar_path(const fs::path& out, CompareMethod method) {
    fs::path p = out;
    p.replace_extension(method == CompareMethod::projective ? ".result.json" : ".params.json");
    return p;
}

fs::path polar_path(const fs::path& out) {
    fs::path p = out;
    p.replace_extension(".polar.csv");
    return p;
}

namespace {

Matrix load_input(const fs::path& path, const std::optional<MatrixFormat>& format) {
    return read_matrix(path, format.value_or(format_from_extension(path)));
}

/// Path of `target` as seen from the directory holding `anchor`.
std::string relative_to(const fs::path& target, const fs::path& anchor) {
    const fs::path base = fs::absolute(anchor).parent_path();
    const fs::path rel = fs::absolute(target).lexically_relative(base);
    return rel.empty() ? fs::absolute(target).string() : rel.string();
}

/// Runs `body`, mapping library and IO exceptions to exit_error.
template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_error;
}

std::string summary(const Matrix& a, const Decomposition& d) {
    std::ostringstream s;
    s << a.rows() << "x" << a.cols() << " sigma=" << format_double(d.sigma) << " iterations=" << d.report.iterations
      << " residual=" << format_double(d.report.residual) << " status=" << to_string(d.report.status);
    return s.str();
}

SolverConfig solver_config(double tol, int max_iter, GaugePolicy gauge) {
    SolverConfig cfg;
    cfg.tol = tol;
    cfg.max_iter = max_iter;
    cfg.gauge = gauge;
    return cfg;
}

} // namespace

int run_decompose(const DecomposeOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Matrix a = load_input(opt.input, opt.format);
        const Decomposition d = decompose(a, solver_config(opt.tol, opt.max_iter, opt.gauge));
        if (d.report.gauge_fell_back) {
            err << "warning: unit-concat gauge has no real solution for these factors; used balanced\n";
        }

        if (opt.out_w) {
            write_matrix(*opt.out_w, d.w, format_from_extension(*opt.out_w));
        }
        if (opt.out_result) {
            std::optional<std::string> ref;
            if (opt.out_w) {
                ref = relative_to(*opt.out_w, *opt.out_result);
            }
            write_result_document(*opt.out_result, make_result_document(d, opt.gauge, ref));
        }
        out << summary(a, d) << '\n';
        return d.report.status == SolverStatus::converged ? exit_ok : exit_not_met;
    });
}

int run_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Matrix a = load_input(opt.input, opt.format);
        Matrix w = a;
        if (opt.w_or_result.extension() == ".json") {
            const ResultDocument doc = read_result_document(opt.w_or_result);
            w = load_w(doc, fs::absolute(opt.w_or_result).parent_path());
        } else {
            w = load_input(opt.w_or_result, opt.format);
        }
        if (a.rows() != w.rows() || a.cols() != w.cols()) {
            err << "error: A is " << a.rows() << "x" << a.cols() << " but W is " << w.rows() << "x" << w.cols()
                << '\n';
            return exit_error;
        }

        const double res = residual(w);
        const ScalingVector r = rms_rows(w);
        const ScalingVector c = rms_cols(w);
        double scale_dev = 0.0;
        for (double ri : r)
            for (double cj : c) scale_dev = std::max(scale_dev, std::abs(std::sqrt(ri * cj) - 1.0));

        std::optional<double> ratio;
        if (a.rows() >= 2 && a.cols() >= 2) {
            ratio = relative_ratio_defect(a, w, opt.ratio_mode);
        }

        const bool pass = res <= opt.tol && scale_dev <= opt.tol && (!ratio || *ratio <= opt.tol);
        out << "residual=" << format_double(res)
            << " ratio_defect=" << (ratio ? format_double(*ratio) : std::string("n/a"))
            << " expected_scale_deviation=" << format_double(scale_dev) << " tol=" << format_double(opt.tol)
            << " result=" << (pass ? "pass" : "fail") << '\n';
        return pass ? exit_ok : exit_not_met;
    });
}

int run_compare(const CompareOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Matrix a = load_input(opt.input, opt.format);
        if (opt.polar && a.cols() != 2) {
            err << "error: --polar needs 2-column point data, input has " << a.cols() << " columns\n";
            return exit_error;
        }

        int code = exit_ok;
        Matrix normalized = a;
        if (opt.method == CompareMethod::projective) {
            const Decomposition d = decompose(a, solver_config(opt.tol, opt.max_iter, opt.gauge));
            normalized = d.w;
            write_matrix(opt.out, normalized, MatrixFormat::csv);
            const fs::path sidecar = sidecar_path(opt.out, opt.method);
            write_result_document(sidecar, make_result_document(d, opt.gauge, relative_to(opt.out, sidecar)));
            out << "projective " << summary(a, d) << '\n';
            code = d.report.status == SolverStatus::converged ? exit_ok : exit_not_met;
        } else {
            const ZResult z = opt.method == CompareMethod::z ? z_transform(a) : log_z_transform(a);
            normalized = z.matrix;
            write_matrix(opt.out, normalized, MatrixFormat::csv);
            nlohmann::json params = {{"method", opt.method == CompareMethod::z ? "z" : "logz"},
                                     {"variance", "population"},
                                     {"mu", z.params.mu},
                                     {"sd", z.params.sd}};
            std::ofstream(sidecar_path(opt.out, opt.method)) << params.dump(2) << '\n';
            out << (opt.method == CompareMethod::z ? "z" : "logz") << ' ' << a.rows() << "x" << a.cols() << '\n';
        }

        if (opt.polar) {
            const PolarResult before = to_polar(a);
            const PolarResult after = to_polar(normalized);
            std::vector<double> joined;
            joined.reserve(4 * a.rows());
            for (Index i = 0; i < a.rows(); ++i) {
                joined.push_back(before.coords(i, 0));
                joined.push_back(before.coords(i, 1));
                joined.push_back(after.coords(i, 0));
                joined.push_back(after.coords(i, 1));
            }
            write_matrix(polar_path(opt.out), Matrix::dense(a.rows(), 4, std::move(joined)), MatrixFormat::csv, {},
                         "input_angle,input_radius,angle,radius");
            if (!after.undefined_rows.empty()) {
                err << "warning: " << after.undefined_rows.size() << " rows at the origin have no angle\n";
            }
        }
        if (opt.svg && normalized.cols() == 2) {
            write_svg_scatter(*opt.svg, normalized);
        }
        return code;
    });
}

int run_gen(const GenOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        GridSpec spec = opt.figure == 3 ? radial_defaults() : GridSpec{};
        spec.seed = opt.seed;
        spec.angles = opt.angles;

        Matrix data = Matrix::ones(1, 1);
        std::string comment = "figure=" + std::to_string(opt.figure) + " ";
        switch (opt.figure) {
        case 1:
            data = rect_grid_circles(spec);
            comment += "layout=rectangular " + spec.describe();
            break;
        case 3:
            data = radial_grid_circles(spec);
            comment += "layout=radial " + spec.describe() + " x_to_y_extent=" + format_double(spec.x_to_y_extent);
            break;
        case 5:
            data = z_transform(rect_grid_circles(spec)).matrix;
            comment += "layout=rectangular z-transformed " + spec.describe();
            break;
        default:
            err << "error: unknown figure " << opt.figure << " (expected 1, 3 or 5)\n";
            return exit_error;
        }

        if (opt.out) {
            write_matrix(*opt.out, data, MatrixFormat::csv, comment, "x,y");
        } else {
            write_matrix(out, data, MatrixFormat::csv, comment, "x,y");
        }
        if (opt.svg) {
            write_svg_scatter(*opt.svg, data, "figure " + std::to_string(opt.figure));
        }
        return exit_ok;
    });
}

} // namespace projdecomp::cli
