#ifndef DERLOG_LATTICE_HPP
#define DERLOG_LATTICE_HPP

#include <vector>

#include "derlog/arrangement.hpp"
#include "derlog/matrix.hpp"

namespace derlog {

// A flat of the intersection lattice: RREF basis of the linear forms
// vanishing on it, the hyperplanes containing it, and its Moebius value.
struct Flat {
    std::vector<RatVec> equations;  // canonical RREF rows
    int codim = 0;
    std::vector<int> members;       // indices into the arrangement, ascending
    Integer moebius = 0;
};

// Intersection lattice L(A), bottom element (K^l) first, flats grouped by
// ascending codimension, deterministic order inside each codimension.
class Lattice {
public:
    explicit Lattice(const Arrangement& a);

    const Arrangement& arrangement() const { return arr_; }
    const std::vector<Flat>& flats() const { return flats_; }
    std::vector<const Flat*> codim_flats(int codim) const;
    std::vector<const Flat*> codim2_flats() const { return codim_flats(2); }

    // X <= Y in L(A) (reverse inclusion of subspaces).
    static bool leq(const Flat& x, const Flat& y);

    // chi(A, t) as integer coefficients, ascending powers, degree = l.
    std::vector<Integer> char_poly() const;

private:
    Arrangement arr_;
    std::vector<Flat> flats_;
};

std::vector<Integer> char_poly(const Arrangement& a);

// Ascending integer roots if p factors completely over Z (leading coeff 1),
// empty optional otherwise.
std::optional<std::vector<Integer>> integer_roots(const std::vector<Integer>& poly);

std::string int_poly_str(const std::vector<Integer>& poly, const std::string& var = "t");

} // namespace derlog

#endif
