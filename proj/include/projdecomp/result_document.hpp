#ifndef PROJDECOMP_RESULT_DOCUMENT_HPP
#define PROJDECOMP_RESULT_DOCUMENT_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "projdecomp/matrix.hpp"
#include "projdecomp/solver.hpp"

namespace projdecomp {

inline constexpr const char* tool_version = "0.1.0";

/// JSON sidecar describing a decomposition. W is either referenced by path
/// (`matrix_ref`, resolved relative to the JSON file) or embedded
/// (`w_inline`, dense row-major). Floats are written in shortest
/// round-trip form, so write-then-read is lossless.
struct ResultDocument {
    Index rows = 0;
    Index cols = 0;
    double sigma = 0.0;
    std::vector<double> alpha;
    std::vector<double> beta;
    std::string gauge_policy;
    int iterations = 0;
    double residual = 0.0;
    std::string status;
    std::optional<std::string> matrix_ref;
    std::optional<Matrix> w_inline;
    std::string tool_version = projdecomp::tool_version;

    friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

/// Builds the document; W is embedded unless `matrix_ref` is given.
ResultDocument make_result_document(const Decomposition& d, GaugePolicy gauge,
                                    std::optional<std::string> matrix_ref = std::nullopt);

void write_result_document(std::ostream& out, const ResultDocument& doc);
void write_result_document(const std::filesystem::path& path, const ResultDocument& doc);

/// Throws ParseError on malformed JSON or missing fields.
ResultDocument read_result_document(std::istream& in);
ResultDocument read_result_document(const std::filesystem::path& path);

/// W from the document: the inline copy, or the referenced file resolved
/// against `base_dir`.
Matrix load_w(const ResultDocument& doc, const std::filesystem::path& base_dir);

} // namespace projdecomp

#endif
