#ifndef DERLOG_MATRIX_HPP
#define DERLOG_MATRIX_HPP

#include <vector>

#include "derlog/rational.hpp"

namespace derlog {

// Dense exact matrix over Q.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols, Rational(0)) {}
    static RatMatrix from_rows(const std::vector<RatVec>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }
    RatVec row(int r) const;
    void append_row(const RatVec& v);

private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

struct Rref {
    RatMatrix reduced;          // fully reduced nonzero rows
    std::vector<int> pivots;    // pivot column per reduced row, ascending
    int rank = 0;
};

// Fraction-free (Bareiss) forward elimination followed by exact
// back-substitution; pivots are the leftmost possible columns, so the result
// is the canonical RREF.
Rref rref(const RatMatrix& m);

int rank(const RatMatrix& m);

// Canonical basis of the right null space: one vector per free column in
// ascending order, unit at its free column, zero at the other free columns.
std::vector<RatVec> kernel_basis(const RatMatrix& m);

// Rank of the span of a list of vectors (uniform length).
int subspace_dim(const std::vector<RatVec>& vectors);

// Matrix-vector product.
RatVec mat_vec(const RatMatrix& m, const RatVec& v);

} // namespace derlog

#endif
