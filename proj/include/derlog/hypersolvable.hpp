#ifndef DERLOG_HYPERSOLVABLE_HPP
#define DERLOG_HYPERSOLVABLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "derlog/arrangement.hpp"
#include "derlog/derivations.hpp"

namespace derlog {

struct SolvableCheck {
    bool ok = false;
    std::string failed_condition;     // "1", "2", or "3" when !ok
    std::vector<RatVec> witness;      // the violating forms
};

// The three rank conditions of a solvable extension B in A. Condition (3)
// is quantified over the complement, the range on which the pairing f is
// defined.
SolvableCheck is_solvable_in(const Arrangement& b, const Arrangement& a);

struct SolvableFiltration {
    std::vector<std::vector<int>> chain;  // index sets, empty set first, full last
    std::vector<int> steps;               // b_i = |A_i| - |A_{i-1}|
};

enum class FiltrationStatus { found, not_hypersolvable, budget_exhausted };

struct FiltrationResult {
    FiltrationStatus status = FiltrationStatus::not_hypersolvable;
    std::optional<SolvableFiltration> filtration;
    long nodes = 0;
};

// Backtracking search for a solvable filtration, growing chains from below;
// candidate next levels are tried by size descending, then lexicographic
// index order. Only full exhaustion reports not_hypersolvable.
FiltrationResult find_filtration(const Arrangement& a, long node_budget = 1000000);

// Search restricted to chains of length exactly rank(A) (supersolvable).
FiltrationResult find_supersolvable_filtration(const Arrangement& a, long node_budget = 1000000);

struct Hyperexponents {
    std::vector<int> values;  // sorted ascending; sums to |A|
    SolvableFiltration filtration;
    bool independence_checked = false;  // a second filtration gave the same multiset
};

// Throws std::runtime_error when the search exhausts or runs out of budget.
Hyperexponents hyperexponents(const Arrangement& a, long node_budget = 1000000);

enum class QpMethod { filtration, direct };

// Quadratic Poincare polynomial, ascending coefficients. The filtration
// method returns prod (1 + b_i t); the direct method computes the graded
// dimensions of the exterior algebra modulo the rank-2 quadratic relations
// (|A| <= 12).
std::vector<Integer> quadratic_poincare(const Arrangement& a, QpMethod method,
                                        long node_budget = 1000000);

struct SupersolvableReport {
    bool supersolvable = false;
    std::vector<int> exponents;  // the steps, sorted, when supersolvable
    SolvableFiltration filtration;
    bool budget_exhausted = false;
};

SupersolvableReport supersolvable_exponents(const Arrangement& a, long node_budget = 1000000);

struct HypboundReport {
    int rho = 0;                 // max hyperexponent
    int d_full = 0;              // d_A
    int slack_full = 0;
    std::vector<int> d_deleted;  // d_{A'} for each H in the last filtration step
    int min_slack_deleted = 0;
    bool holds = false;
};

// Hyperexponent lower bound: d_A >= rho - 1 and d_{A'} >= rho - 1 for
// A' = A minus a hyperplane of the last filtration step.
HypboundReport check_hypbound(const Arrangement& a, const DegreeSequence& seq,
                              long node_budget = 1000000);

} // namespace derlog

#endif
