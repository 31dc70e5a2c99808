#include "derlog/sparse_elim.hpp"

#include <algorithm>
#include <stdexcept>

namespace derlog {

void row_make_primitive(SparseRow& r) {
    if (r.empty()) return;
    Integer g = 0;
    for (const auto& [c, v] : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& [c, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    if (r.front().second < 0)
        for (auto& [c, v] : r) v = -v;
}

namespace {

// row := a*row - b*piv, merged over sorted columns, then content-stripped
SparseRow combine(const SparseRow& row, const SparseRow& piv, const Integer& a, const Integer& b) {
    SparseRow out;
    out.reserve(row.size() + piv.size());
    size_t i = 0, j = 0;
    while (i < row.size() || j < piv.size()) {
        if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
            out.emplace_back(row[i].first, a * row[i].second);
            ++i;
        } else if (i == row.size() || piv[j].first < row[i].first) {
            out.emplace_back(piv[j].first, -b * piv[j].second);
            ++j;
        } else {
            Integer v = a * row[i].second - b * piv[j].second;
            if (v != 0) out.emplace_back(row[i].first, std::move(v));
            ++i; ++j;
        }
    }
    row_make_primitive(out);
    return out;
}

} // namespace

int SparseEliminator::add_row(SparseRow row) {
    row_make_primitive(row);
    while (!row.empty()) {
        int c = row.front().first;
        auto it = rows_.find(c);
        if (it == rows_.end()) {
            rows_.emplace(c, std::move(row));
            return c;
        }
        row = combine(row, it->second, it->second.front().second, row.front().second);
    }
    return -1;
}

std::vector<int> SparseEliminator::pivot_columns() const {
    std::vector<int> out;
    out.reserve(rows_.size());
    for (const auto& [c, r] : rows_) out.push_back(c);
    return out;
}

std::vector<RatVec> SparseEliminator::kernel_vectors(int ncols, const std::set<int>& excluded) const {
    std::vector<int> free_cols;
    for (int c = 0; c < ncols; ++c)
        if (!rows_.count(c) && !excluded.count(c)) free_cols.push_back(c);

    std::vector<RatVec> out;
    out.reserve(free_cols.size());
    for (int f : free_cols) {
        RatVec v(ncols, Rational(0));
        v[f] = 1;
        // rows are echelon (support >= pivot) but not cross-reduced; solve by
        // walking pivots from the right so every non-pivot entry is final
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            int p = it->first;
            if (p > f) continue;
            Rational s(0);
            Integer pv;
            for (const auto& [c, a] : it->second) {
                if (c == p) { pv = a; continue; }
                if (v[c] != 0) s += Rational(a) * v[c];
            }
            if (s != 0) v[p] = -s / Rational(pv);
        }
        out.push_back(std::move(v));
    }
    return out;
}

size_t SparseEliminator::fill() const {
    size_t n = 0;
    for (const auto& [c, r] : rows_) n += r.size();
    return n;
}

RatVec primitive_scaled(const RatVec& v) {
    Integer den = 1;
    for (const auto& x : v) den = den / gcd(den, x.get_den()) * x.get_den();
    Integer g = 0;
    std::vector<Integer> ints(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rational s = v[i] * Rational(den);
        ints[i] = s.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    if (g == 0) return RatVec(v.size(), Rational(0));
    int sign = 0;
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), ints[i].get_mpz_t(), g.get_mpz_t());
        if (sign == 0 && q != 0) sign = (q > 0) ? 1 : -1;
        out[i] = Rational(sign < 0 ? Integer(-q) : q);
    }
    return out;
}

} // namespace derlog
