#include "projdecomp/result_document.hpp"

#include <fstream>

#include <json.hpp>

#include "projdecomp/errors.hpp"
#include "projdecomp/matrix_io.hpp"

namespace projdecomp {

using nlohmann::json;

ResultDocument make_result_document(const Decomposition& d, GaugePolicy gauge, std::optional<std::string> matrix_ref) {
    ResultDocument doc;
    doc.rows = d.w.rows();
    doc.cols = d.w.cols();
    doc.sigma = d.sigma;
    doc.alpha.assign(d.alpha.begin(), d.alpha.end());
    doc.beta.assign(d.beta.begin(), d.beta.end());
    doc.gauge_policy = std::string(to_string(gauge));
    doc.iterations = d.report.iterations;
    doc.residual = d.report.residual;
    doc.status = std::string(to_string(d.report.status));
    if (matrix_ref) {
        doc.matrix_ref = std::move(matrix_ref);
    } else {
        doc.w_inline = d.w;
    }
    return doc;
}

void write_result_document(std::ostream& out, const ResultDocument& doc) {
    json j;
    j["rows"] = doc.rows;
    j["cols"] = doc.cols;
    j["sigma"] = doc.sigma;
    j["alpha"] = doc.alpha;
    j["beta"] = doc.beta;
    j["gauge_policy"] = doc.gauge_policy;
    j["report"] = {{"iterations", doc.iterations}, {"residual", doc.residual}, {"status", doc.status}};
    if (doc.matrix_ref) {
        j["matrix_ref"] = *doc.matrix_ref;
    }
    if (doc.w_inline) {
        j["w"] = {{"rows", doc.w_inline->rows()},
                  {"cols", doc.w_inline->cols()},
                  {"values", doc.w_inline->dense_values()}};
    }
    j["tool_version"] = doc.tool_version;
    out << j.dump(2) << '\n';
}

void write_result_document(const std::filesystem::path& path, const ResultDocument& doc) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write '" + path.string() + "'");
    }
    write_result_document(out, doc);
}

ResultDocument read_result_document(std::istream& in) {
    try {
        const json j = json::parse(in);
        ResultDocument doc;
        doc.rows = j.at("rows").get<Index>();
        doc.cols = j.at("cols").get<Index>();
        doc.sigma = j.at("sigma").get<double>();
        doc.alpha = j.at("alpha").get<std::vector<double>>();
        doc.beta = j.at("beta").get<std::vector<double>>();
        doc.gauge_policy = j.at("gauge_policy").get<std::string>();
        const json& report = j.at("report");
        doc.iterations = report.at("iterations").get<int>();
        doc.residual = report.at("residual").get<double>();
        doc.status = report.at("status").get<std::string>();
        if (j.contains("matrix_ref")) {
            doc.matrix_ref = j["matrix_ref"].get<std::string>();
        }
        if (j.contains("w")) {
            const json& w = j["w"];
            doc.w_inline = Matrix::dense(w.at("rows").get<Index>(), w.at("cols").get<Index>(),
                                         w.at("values").get<std::vector<double>>());
        }
        doc.tool_version = j.at("tool_version").get<std::string>();
        if (doc.alpha.size() != doc.rows || doc.beta.size() != doc.cols) {
            throw ParseError("result document: factor lengths do not match rows/cols", 0);
        }
        if (!doc.matrix_ref && !doc.w_inline) {
            throw ParseError("result document has neither 'matrix_ref' nor 'w'", 0);
        }
        return doc;
    } catch (const json::exception& e) {
        throw ParseError(std::string("result document: ") + e.what(), 0);
    } catch (const DimensionError& e) {
        throw ParseError(std::string("result document: ") + e.what(), 0);
    }
}

ResultDocument read_result_document(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'", 0);
    }
    return read_result_document(in);
}

Matrix load_w(const ResultDocument& doc, const std::filesystem::path& base_dir) {
    if (doc.w_inline) {
        return *doc.w_inline;
    }
    std::filesystem::path ref(*doc.matrix_ref);
    if (ref.is_relative()) {
        ref = base_dir / ref;
    }
    Matrix w = read_matrix(ref);
    if (w.rows() != doc.rows || w.cols() != doc.cols) {
        throw DimensionError("W file '" + ref.string() + "' does not match the result document shape");
    }
    return w;
}

} // namespace projdecomp
