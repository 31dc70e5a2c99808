#include "derlog/matrix.hpp"

#include <stdexcept>

namespace derlog {

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows) {
    if (rows.empty()) return RatMatrix(0, 0);
    RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows[0].size())
            throw std::invalid_argument("ragged rows");
        for (size_t c = 0; c < rows[r].size(); ++c) m.at(int(r), int(c)) = rows[r][c];
    }
    return m;
}

RatVec RatMatrix::row(int r) const {
    RatVec v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

void RatMatrix::append_row(const RatVec& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(v.size());
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("row length mismatch");
    e_.insert(e_.end(), v.begin(), v.end());
    ++rows_;
}

Rref rref(const RatMatrix& m) {
    int nr = m.rows(), nc = m.cols();
    // scale rows to integers, then run fraction-free (Bareiss) elimination
    std::vector<std::vector<Integer>> a(nr, std::vector<Integer>(nc));
    for (int r = 0; r < nr; ++r) {
        Integer den = 1;
        for (int c = 0; c < nc; ++c) {
            const Rational& x = m.at(r, c);
            den = den / gcd(den, x.get_den()) * x.get_den();
        }
        for (int c = 0; c < nc; ++c) {
            Rational x = m.at(r, c) * Rational(den);
            a[r][c] = x.get_num();
        }
    }

    std::vector<int> pivots;
    Integer prev = 1;
    int row = 0;
    for (int col = 0; col < nc && row < nr; ++col) {
        int sel = -1;
        for (int r = row; r < nr; ++r)
            if (a[r][col] != 0) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(a[row], a[sel]);
        const Integer piv = a[row][col];
        for (int r = row + 1; r < nr; ++r) {
            for (int c = col + 1; c < nc; ++c) {
                Integer t = a[r][c] * piv - a[r][col] * a[row][c];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[r][c] = t;
            }
            a[r][col] = 0;
        }
        prev = piv;
        pivots.push_back(col);
        ++row;
    }
    int rk = row;

    // exact back-substitution to reduced form over Q
    std::vector<RatVec> red(rk, RatVec(nc, Rational(0)));
    for (int i = rk - 1; i >= 0; --i) {
        int pc = pivots[i];
        RatVec v(nc, Rational(0));
        for (int c = pc; c < nc; ++c) v[c] = Rational(a[i][c]);
        for (int j = i + 1; j < rk; ++j) {
            Rational f = v[pivots[j]];
            if (f != 0)
                for (int c = pivots[j]; c < nc; ++c) v[c] -= f * red[j][c];
        }
        Rational inv = Rational(1) / v[pc];
        for (int c = pc; c < nc; ++c) v[c] *= inv;
        red[i] = v;
    }

    Rref out;
    out.reduced = RatMatrix::from_rows(red);
    if (rk == 0) out.reduced = RatMatrix(0, nc);
    out.pivots = pivots;
    out.rank = rk;
    return out;
}

int rank(const RatMatrix& m) { return rref(m).rank; }

std::vector<RatVec> kernel_basis(const RatMatrix& m) {
    Rref r = rref(m);
    int nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (int p : r.pivots) is_pivot[p] = true;
    std::vector<RatVec> basis;
    for (int f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(nc, Rational(0));
        v[f] = 1;
        for (int i = 0; i < r.rank; ++i)
            v[r.pivots[i]] = -r.reduced.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

int subspace_dim(const std::vector<RatVec>& vectors) {
    if (vectors.empty()) return 0;
    return rank(RatMatrix::from_rows(vectors));
}

RatVec mat_vec(const RatMatrix& m, const RatVec& v) {
    if (static_cast<int>(v.size()) != m.cols()) throw std::invalid_argument("size mismatch");
    RatVec out(m.rows(), Rational(0));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0 && v[c] != 0) out[r] += m.at(r, c) * v[c];
    return out;
}

} // namespace derlog
