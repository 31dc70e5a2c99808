#ifndef DERLOG_DERIVATIONS_HPP
#define DERLOG_DERIVATIONS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "derlog/arrangement.hpp"
#include "derlog/multipoly.hpp"
#include "derlog/sparse_elim.hpp"

namespace derlog {

// theta = sum_i coeffs[i] d/dx_i, homogeneous: all nonzero entries share one
// total degree.
struct Derivation {
    std::vector<MultiPoly> coeffs;

    static Derivation zero(int l) { return {std::vector<MultiPoly>(l, MultiPoly(l))}; }
    static Derivation euler(int l);

    int num_vars() const { return static_cast<int>(coeffs.size()); }
    bool is_zero() const;
    int degree() const;  // -1 for the zero derivation
    bool is_homogeneous() const;

    // theta(alpha) for a linear form with the given coefficients.
    MultiPoly apply_linear(const RatVec& alpha) const;
    // theta(p) for an arbitrary polynomial.
    MultiPoly apply(const MultiPoly& p) const;

    Derivation operator+(const Derivation& o) const;
    Derivation scaled(const Rational& c) const;
    Derivation times(const MultiPoly& p) const;

    std::string str() const;
};

struct GradedPiece {
    int degree = 0;
    std::vector<Derivation> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

struct DegreeSequence {
    std::vector<int> degrees;            // non-decreasing
    std::vector<Derivation> generators;  // parallel to degrees
    bool truncated = false;
    int cap = 0;

    int count() const { return static_cast<int>(degrees.size()); }
    int max_degree() const;  // d_A; -1 when empty
    // #{ j : d_j <= i }, the n_i of the generator-count bounds
    int n_at_most(int i) const;
    std::string str() const;
};

int default_degree_cap(const Arrangement& a);  // max(|A|, 2l)

// Fixed enumeration of the degree-d monomials in l variables (lex-descending
// exponent vectors); all graded coefficient vectors use the column layout
// col = var * count + monomial_index.
class MonomialTable {
public:
    MonomialTable(int l, int d);
    int count() const { return static_cast<int>(mons_.size()); }
    const Monomial& operator[](int i) const { return mons_[i]; }
    int index(const Monomial& m) const;
    int degree() const { return d_; }
    int vars() const { return l_; }

private:
    int l_, d_;
    std::vector<Monomial> mons_;
    std::map<Monomial, int> index_;
};

// Per-degree record kept by degree_sequence.
struct GradedHistory {
    int degree = 0;
    int dim = 0;        // dim D(A)_d
    int dim_module = 0; // dim of the piece generated below this degree
    int new_generators = 0;
};

// Graded engine for D(A). Each degree is one exact sparse solve: the
// membership constraints reduce_mod_form(theta(alpha_i), alpha_i) = 0
// restricted to a complement of S_1 * D(A)_{d-1}, so the kernel that is
// actually computed has dimension equal to the number of new generators.
class DerivationModule {
public:
    explicit DerivationModule(const Arrangement& a);

    const Arrangement& arrangement() const { return arr_; }

    // dim_K D(A)_d with a full (canonical) kernel basis; builds the whole
    // kernel, so intended for small systems.
    GradedPiece graded_basis(int d);
    int graded_dim(int d);

    DegreeSequence degree_sequence(int max_degree);
    const std::vector<GradedHistory>& history() const { return history_; }

    // dim at degree d of the submodule generated by the given derivations
    int generated_dim(const std::vector<Derivation>& gens, int d);

    // coefficient vector of theta in the degree-d column layout
    RatVec coefficient_vector(const Derivation& th, const MonomialTable& tab) const;
    Derivation from_vector(const RatVec& v, const MonomialTable& tab) const;

    const MonomialTable& table(int d);

private:
    void add_constraint_rows(SparseEliminator& elim, int d, const std::set<int>& excluded);

    Arrangement arr_;
    std::map<int, MonomialTable> tables_;
    std::map<int, int> dim_cache_;
    std::vector<GradedHistory> history_;
};

struct FreenessCertificate {
    bool free = false;
    MultiPoly saito_det;      // determinant of the generator coefficient matrix
    Rational scalar;          // saito_det = scalar * Q(A) when free
    std::vector<int> exponents;
    std::string note;
};

// Saito's criterion. Requires an essential arrangement and an untruncated
// sequence.
FreenessCertificate is_free(const Arrangement& a, const DegreeSequence& seq);

// Terao's b-polynomial for a hyperplane h not in A': the gcd of the nonzero
// images reduce_mod_form(theta(alpha_h), alpha_h) over the generators.
// Checks deg b = |A'| - |(A' u h)^h| and throws if violated or if every
// image vanishes.
MultiPoly terao_b_poly(const Arrangement& aPrime, const Hyperplane& h, const DegreeSequence& seq);

struct AdditionResult {
    std::vector<Derivation> generators;
    std::vector<int> degrees;  // sorted ascending
    std::vector<MultiPoly> b_polys;
    bool verified = false;               // graded dimension match on A' u hs
    std::vector<GradedHistory> verify;   // degree, dim D(A)_d, generated dim
};

// The generalized addition construction: checks conditions (1)-(3), builds
// the constant matrix from the b-polynomial images, row-reduces it mirrored
// on the top-degree generators, and returns the generating set for
// D(A' u hs). Throws std::invalid_argument naming the violated condition.
AdditionResult addition_generators(const Arrangement& aPrime, const std::vector<Hyperplane>& hs,
                                   const DegreeSequence& seq, int verify_cap);

enum class Verdict { not_free, inapplicable };

struct NonfreeReport {
    Verdict verdict = Verdict::inapplicable;
    std::vector<Integer> chi_deleted;          // chi(A', t)
    std::optional<std::vector<Integer>> roots; // its integer roots if any
    int restriction = 0;                       // |A^H|
    Integer bound = 0;                         // sum_{i<l} d_i - 1
    std::string note;
};

// Deletion non-freeness test on a member hyperplane h of a: when chi of
// the deletion factors over Z and |A^H| is at most the sum of all but the
// largest root minus one, the deletion cannot be free.
NonfreeReport check_nonfree_criterion(const Arrangement& a, const Hyperplane& h);

// Lower-bound hypothesis |A^H| <= |A'| - d for h not in aPrime; when it
// holds, every generating set of D(A') needs an element of degree >= d.
bool generator_degree_lower_bound(const Arrangement& aPrime, const Hyperplane& h, int d);

struct NumgenReport {
    int applicable_case = 0;  // 1 (gap equals d) or 2 (gap below d)
    int d = 0;                // max generator degree of A'
    int diff = 0;             // |A'| - |A^H|
    int level = 0;            // the i of n_i in the asserted inequality
    int n_prime = 0, n_full = 0;
    bool holds = false;
};

NumgenReport check_numgen_bounds(const Arrangement& aPrime, const Hyperplane& h);

enum class FourGensVerdict { free_confirmed, hypotheses_unmet };

struct FourGensReport {
    FourGensVerdict verdict = FourGensVerdict::hypotheses_unmet;
    std::vector<int> exponents;
    std::string note;
};

// Four-generator freeness: minimal generators theta_E, d1 <= d2 <= d3 plus a
// hyperplane with |A'| - |A^H| = d3 and 1 + d1 + d2 = |A| force A = A' u {h}
// free with exponents (1, d1, d2).
FourGensReport check_4gens_freeness(const Arrangement& aPrime, const Hyperplane& h);

struct ThreeNonfreeReport {
    Verdict verdict = Verdict::inapplicable;
    std::string note;
};

// Non-freeness from five or more generators: if A' has k >= 5 generators,
// |A'| - |A^H| equals the top degree, and chi(A) = (t-1)(t-a)(t-b) with
// b <= d_k, then A is not free. Quantified over the generators of A'.
ThreeNonfreeReport check_3nonfree(const Arrangement& aPrime, const Hyperplane& h);

} // namespace derlog

#endif
