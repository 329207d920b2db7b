#ifndef PROJDECOMP_SUPPORT_HPP
#define PROJDECOMP_SUPPORT_HPP

#include <optional>
#include <string_view>
#include <utility>

#include "projdecomp/matrix.hpp"

namespace projdecomp {

enum class SupportClass { total_support, support_only, no_support };

std::string_view to_string(SupportClass c);

struct SupportDiagnosis {
    SupportClass classification = SupportClass::no_support;
    /// 0-based (row, col) of a nonzero that lies on no nonzero permuted
    /// diagonal; present iff classification is support_only. The first such
    /// entry in row-major order is reported.
    std::optional<std::pair<Index, Index>> witness;
};

/// Classifies the nonzero pattern of a square matrix.
///
/// A perfect matching in the bipartite row/column graph of nonzeros is a
/// nonzero permuted diagonal. Without one the pattern has no support. With
/// one, a nonzero (i, j) outside the matching lies on some other perfect
/// matching iff it closes an alternating cycle, i.e. iff row i and the row
/// matched to column j share a strongly connected component of the graph
/// with an arc i → match(j) for every such nonzero.
///
/// Throws ShapeError for rectangular input.
SupportDiagnosis check_support(const Matrix& pattern);

} // namespace projdecomp

#endif
