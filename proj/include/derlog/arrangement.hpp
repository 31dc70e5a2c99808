#ifndef DERLOG_ARRANGEMENT_HPP
#define DERLOG_ARRANGEMENT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "derlog/multipoly.hpp"
#include "derlog/rational.hpp"

namespace derlog {

// A hyperplane through the origin, stored by the coefficients of its defining
// linear form, scaled so the first nonzero coefficient is 1.
class Hyperplane {
public:
    explicit Hyperplane(RatVec coeffs);
    static Hyperplane parse(const std::string& line, int dim);

    int dim() const { return static_cast<int>(coeffs_.size()); }
    const RatVec& coeffs() const { return coeffs_; }
    MultiPoly form() const { return MultiPoly::linear(coeffs_); }

    bool operator==(const Hyperplane& o) const { return coeffs_ == o.coeffs_; }
    bool operator<(const Hyperplane& o) const;

    std::string str() const;

private:
    RatVec coeffs_;
};

// Central arrangement: an ordered list of pairwise distinct hyperplanes in
// K^l. Order matters for output only; equality is set equality.
class Arrangement {
public:
    explicit Arrangement(int ambient_dim) : dim_(ambient_dim) {}
    Arrangement(int ambient_dim, const std::vector<RatVec>& forms);

    int ambient_dim() const { return dim_; }
    int size() const { return static_cast<int>(hs_.size()); }
    const std::vector<Hyperplane>& hyperplanes() const { return hs_; }
    const Hyperplane& operator[](int i) const { return hs_[i]; }

    void add(Hyperplane h);
    bool contains(const Hyperplane& h) const;
    int index_of(const Hyperplane& h) const;  // -1 if absent

    bool same_set(const Arrangement& o) const;

    // rank of the coefficient matrix = codim of the common intersection
    int rank() const;
    bool is_essential() const { return rank() == dim_; }

    MultiPoly defining_poly() const;

    Arrangement deleted(const Hyperplane& h) const;          // throws if h absent
    Arrangement with(const Hyperplane& h) const;             // throws if h present
    Arrangement subset(const std::vector<int>& indices) const;

    // |(A u {h})^h| counting distinct proper intersections h n H' for
    // H' in A \ {h}: partition by rank{alpha_h, alpha', alpha''} == 2.
    int restriction_size(const Hyperplane& h) const;

    // Text format: "dim l" header, then one hyperplane per line as l
    // whitespace-separated rationals; '#' starts a comment.
    static Arrangement parse(std::istream& in);
    static Arrangement parse_file(const std::string& path);
    std::string str() const;

private:
    int dim_;
    std::vector<Hyperplane> hs_;
};

// rank of the stacked coefficient rows of a tuple of hyperplanes
int forms_rank(const std::vector<RatVec>& forms);

} // namespace derlog

#endif
