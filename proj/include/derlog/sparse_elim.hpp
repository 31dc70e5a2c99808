#ifndef DERLOG_SPARSE_ELIM_HPP
#define DERLOG_SPARSE_ELIM_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "derlog/rational.hpp"

namespace derlog {

// Sparse integer row: (column, value) pairs, columns strictly ascending,
// values nonzero, content 1 (primitive).
using SparseRow = std::vector<std::pair<int, Integer>>;

void row_make_primitive(SparseRow& r);

// Incremental exact echelon form for large sparse systems over Q.
//
// Rows are scaled to primitive integer vectors; an incoming row is fully
// reduced against the current echelon (fraction-free cross-multiplication,
// content stripped after every combination) and installed with its leftmost
// surviving column as pivot. Insertion order is the only source of pivot
// choice, so results are deterministic for a fixed row sequence.
class SparseEliminator {
public:
    // Returns the pivot column if the row was installed, -1 if it reduced to zero.
    int add_row(SparseRow row);

    int rank() const { return static_cast<int>(rows_.size()); }
    const std::map<int, SparseRow>& echelon() const { return rows_; }
    bool has_pivot(int col) const { return rows_.count(col) != 0; }
    std::vector<int> pivot_columns() const;

    // Canonical kernel vectors of the added system viewed over columns
    // [0, ncols): one per free column (not a pivot, not excluded), unit at
    // that column, zero at other free and excluded columns. Excluded columns
    // must not appear in any added row.
    std::vector<RatVec> kernel_vectors(int ncols, const std::set<int>& excluded = {}) const;

    size_t fill() const;

private:
    std::map<int, SparseRow> rows_;
};

// Scale a rational vector to a primitive integer vector with the first
// nonzero entry positive; returns it as rationals for uniform handling.
RatVec primitive_scaled(const RatVec& v);

} // namespace derlog

#endif
