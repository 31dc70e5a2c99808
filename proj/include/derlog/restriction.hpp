#ifndef DERLOG_RESTRICTION_HPP
#define DERLOG_RESTRICTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "derlog/arrangement.hpp"
#include "derlog/derivations.hpp"
#include "derlog/lattice.hpp"

namespace derlog {

struct RestrictionReport {
    int t_value = 0;
    Hyperplane witness{RatVec{Rational(1)}};
    int r_value = 0;               // max codim-2 flats one candidate contains (unweighted)
    int weighted_value = 0;        // max sum of (|A_X| - 1) over contained flats
    int candidates_tried = 0;
    std::optional<int> inequality_slack;  // t - (|A| - d_A) when a sequence is supplied
};

// Finite candidate set whose minimum realizes t_A: the unique hyperplane
// through every pair of codim-2 flats whose joint equations have rank 3, one
// pencil representative through each single codim-2 flat, and one generic
// hyperplane. Members of A are excluded.
std::vector<Hyperplane> candidate_hyperplanes(const Arrangement& a);
std::vector<Hyperplane> candidate_hyperplanes(const Arrangement& a, const Lattice& lat);

// t_A = min |(A u H)^H| over hyperplanes H not in A, by candidate search.
RestrictionReport minimal_restriction(const Arrangement& a);

struct UnequalReport {
    int t_value = 0;
    int size = 0;
    int d_max = 0;
    int slack = 0;      // t - (|A| - d)
    bool holds = false; // slack >= 0
    bool equality = false;
};

// The restriction inequality t_A >= |A| - d_A.
UnequalReport check_unequal(const Arrangement& a, const DegreeSequence& seq);

struct TwoPointsReport {
    bool hypothesis = false;  // two codim-2 flats, mu sum = |A|-2, no common member
    std::vector<int> flat1, flat2;  // member lists of a witness pair
    int t_value = 0;
    bool t_is_two = false;
    bool degree_bound_holds = false;  // d_A >= |A| - 2
};

// Two-points criterion for l = 3: two codim-2 flats with Moebius values
// summing to |A| - 2 and no common member force t_A = 2 and d_A >= |A| - 2;
// asserts the conclusions whenever the hypothesis is found, and reports
// rather than hides a violation.
TwoPointsReport check_two_points(const Arrangement& a, const DegreeSequence& seq);

} // namespace derlog

#endif
