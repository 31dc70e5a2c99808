#ifndef DERLOG_MULTIPOLY_HPP
#define DERLOG_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "derlog/rational.hpp"

namespace derlog {

// Exponent vector of a monomial; length = number of variables.
using Monomial = std::vector<uint32_t>;

int total_degree(const Monomial& m);
Monomial mono_mul(const Monomial& a, const Monomial& b);

// Graded-lex: compare by total degree, then lexicographically on exponents.
// Larger means later in the map, so rbegin() is the leading term.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Dense-exponent-map multivariate polynomial over Q. Invariant: no zero
// coefficients are stored and every key has length num_vars.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    explicit MultiPoly(int num_vars = 0) : nvars_(num_vars) {}
    static MultiPoly zero(int num_vars) { return MultiPoly(num_vars); }
    static MultiPoly constant(int num_vars, const Rational& c);
    static MultiPoly variable(int num_vars, int index, const Rational& coeff = 1);
    // Linear form sum_i coeffs[i] * x_i.
    static MultiPoly linear(const RatVec& coeffs);

    int num_vars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rational& c);
    Rational coeff(const Monomial& m) const;

    // Total degree of the leading term; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    // Degree-1 homogeneous with at least one term.
    bool is_linear_form() const;
    // Coefficient vector of a linear form.
    RatVec linear_coeffs() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const Rational& c) const;
    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    const Monomial& leading_monomial() const;
    const Rational& leading_coeff() const;
    // Scale so the graded-lex leading coefficient is 1.
    MultiPoly monic() const;

    std::string str(const std::vector<std::string>& var_names = {}) const;

private:
    int nvars_;
    TermMap terms_;
};

// p + q, p * q, p scaled -- free-function spelling used by callers that
// dispatch on an operation tag.
enum class PolyOp { add, mul, scale };
MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op);

// Canonical representative of p in S/(alpha) for a nonzero linear form alpha:
// substitute the pivot variable (largest index with nonzero coefficient).
// Result is zero iff p lies in the ideal (alpha).
MultiPoly reduce_mod_form(const MultiPoly& p, const MultiPoly& alpha);

// Exact single-divisor division: q with p = d*q, or nullopt if d does not
// divide p.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& d);

// GCD in Q[x_1..x_l], normalized monic under graded-lex. Throws on an
// all-zero input list.
MultiPoly poly_gcd(const std::vector<MultiPoly>& ps);

// Determinant of a square polynomial matrix by Laplace expansion with
// column-subset memoization; fine for the small sizes Saito checks need.
MultiPoly poly_matrix_det(const std::vector<std::vector<MultiPoly>>& m);

} // namespace derlog

#endif
