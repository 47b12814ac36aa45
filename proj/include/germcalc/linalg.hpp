#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "germcalc/rational.hpp"

namespace germcalc {

/// Sparse row: (column, coefficient) pairs, columns strictly decreasing, no zeros.
using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

/// Sorts by column (descending), merges duplicates and drops zeros.
void normalize_row(SparseRow& row);

/// Incremental exact row-echelon basis over Q.
///
/// Rows are reduced on their leading (largest) column against stored pivot
/// rows, so pivots always sit on the largest columns reachable and the
/// non-pivot columns form the smallest complement basis of the row space.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t ncols) : pivots_(ncols) {}

    std::size_t ncols() const { return pivots_.size(); }
    std::size_t rank() const { return rank_; }
    bool is_pivot(std::uint32_t col) const { return pivots_.at(col).has_value(); }

    /// Adds a normalized row; returns true when the rank grew.
    bool insert(SparseRow row);

    /// Leading-term reduction; the result is empty iff the row is in the span.
    SparseRow reduce(SparseRow row) const;
    bool in_span(SparseRow row) const { return reduce(std::move(row)).empty(); }

private:
    // Pivot rows are scaled so that their leading coefficient is 1.
    std::vector<std::optional<SparseRow>> pivots_;
    std::size_t rank_ = 0;
};

/// Reference rank of a dense rational matrix by plain Gaussian elimination.
std::size_t dense_rank(std::vector<std::vector<Rational>> rows);

}  // namespace germcalc
