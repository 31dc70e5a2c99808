#include "derlog/restriction.hpp"

#include <stdexcept>

#include "derlog/matrix.hpp"

namespace derlog {

namespace {

bool proportional(const RatVec& a, const RatVec& b) {
    return subspace_dim({a, b}) <= 1;
}

// directions of the pencil parameter scan: 1, -1, 2, -2, ...
struct ParamScan {
    long k = 1;
    bool neg = false;
    Rational next() {
        Rational r = neg ? Rational(-k) : Rational(k);
        if (neg) ++k;
        neg = !neg;
        return r;
    }
};

// the 1-dimensional intersection of two 2-dimensional row spaces, if any
std::optional<RatVec> rowspace_line(const std::vector<RatVec>& s1, const std::vector<RatVec>& s2, int l) {
    // solve x*S1 = y*S2: nullspace of the stacked transposed system
    int m1 = static_cast<int>(s1.size()), m2 = static_cast<int>(s2.size());
    RatMatrix m(l, m1 + m2);
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < m1; ++j) m.at(i, j) = s1[j][i];
        for (int j = 0; j < m2; ++j) m.at(i, m1 + j) = -s2[j][i];
    }
    auto kb = kernel_basis(m);
    std::optional<RatVec> line;
    for (const auto& v : kb) {
        RatVec w(l, Rational(0));
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < m1; ++j) w[i] += v[j] * s1[j][i];
        bool nz = false;
        for (const auto& x : w) nz = nz || x != 0;
        if (!nz) continue;
        if (line) return std::nullopt;  // intersection bigger than a line
        line = w;
    }
    return line;
}

} // namespace

std::vector<Hyperplane> candidate_hyperplanes(const Arrangement& a) {
    Lattice lat(a);
    return candidate_hyperplanes(a, lat);
}

std::vector<Hyperplane> candidate_hyperplanes(const Arrangement& a, const Lattice& lat) {
    const int l = a.ambient_dim();
    if (l < 3) throw std::invalid_argument("candidate_hyperplanes: requires l >= 3");
    auto codim2 = lat.codim2_flats();

    std::vector<Hyperplane> cands;
    auto add = [&](const RatVec& v) {
        bool nz = false;
        for (const auto& x : v) nz = nz || x != 0;
        if (!nz) return;
        for (const auto& h : a.hyperplanes())
            if (proportional(v, h.coeffs())) return;
        Hyperplane cand(v);
        for (const auto& c : cands)
            if (c == cand) return;
        cands.push_back(std::move(cand));
    };

    // pairs of codim-2 flats spanning a hyperplane: their joint equations have
    // rank 3, and the common hyperplane's form is the line where the two
    // 2-dimensional equation spaces meet
    for (size_t i = 0; i < codim2.size(); ++i) {
        for (size_t j = i + 1; j < codim2.size(); ++j) {
            std::vector<RatVec> rows = codim2[i]->equations;
            rows.insert(rows.end(), codim2[j]->equations.begin(), codim2[j]->equations.end());
            if (subspace_dim(rows) != 3) continue;
            auto line = rowspace_line(codim2[i]->equations, codim2[j]->equations, l);
            if (line) add(*line);
        }
    }
    // one non-member pencil representative through each single codim-2 flat
    for (const auto* f : codim2) {
        const RatVec& r1 = f->equations[0];
        const RatVec& r2 = f->equations[1];
        ParamScan scan;
        for (int attempt = 0; attempt < 200; ++attempt) {
            Rational t = scan.next();
            RatVec v(l);
            for (int i = 0; i < l; ++i) v[i] = r1[i] + t * r2[i];
            bool in_a = false;
            for (const auto& h : a.hyperplanes()) in_a = in_a || proportional(v, h.coeffs());
            if (!in_a) { add(v); break; }
        }
    }
    // one fully generic hyperplane: misses every codim-2 flat
    for (long k = 1; k < 1000; ++k) {
        RatVec v(l);
        Rational p(1);
        for (int i = 0; i < l; ++i) { v[i] = p; p *= k; }
        bool ok = true;
        for (const auto& h : a.hyperplanes()) ok = ok && !proportional(v, h.coeffs());
        for (const auto* f : codim2) {
            if (!ok) break;
            std::vector<RatVec> rows = f->equations;
            rows.push_back(v);
            if (subspace_dim(rows) == 2) ok = false;  // v contains the flat
        }
        if (ok) { add(v); break; }
    }
    return cands;
}

RestrictionReport minimal_restriction(const Arrangement& a) {
    Lattice lat(a);
    auto codim2 = lat.codim2_flats();
    auto cands = candidate_hyperplanes(a, lat);
    if (cands.empty()) throw std::logic_error("empty candidate set");
    RestrictionReport rep;
    rep.candidates_tried = static_cast<int>(cands.size());
    bool first = true;
    for (const auto& h : cands) {
        int s = a.restriction_size(h);
        int contained = 0, weighted = 0;
        for (const auto* f : codim2) {
            std::vector<RatVec> rows = f->equations;
            rows.push_back(h.coeffs());
            if (subspace_dim(rows) == 2) {
                ++contained;
                weighted += static_cast<int>(f->members.size()) - 1;
            }
        }
        rep.r_value = std::max(rep.r_value, contained);
        rep.weighted_value = std::max(rep.weighted_value, weighted);
        if (first || s < rep.t_value) {
            rep.t_value = s;
            rep.witness = h;
            first = false;
        }
    }
    return rep;
}

UnequalReport check_unequal(const Arrangement& a, const DegreeSequence& seq) {
    if (seq.truncated) throw std::invalid_argument("check_unequal: truncated degree sequence");
    UnequalReport rep;
    rep.t_value = minimal_restriction(a).t_value;
    rep.size = a.size();
    rep.d_max = seq.max_degree();
    rep.slack = rep.t_value - (rep.size - rep.d_max);
    rep.holds = rep.slack >= 0;
    rep.equality = rep.slack == 0;
    return rep;
}

TwoPointsReport check_two_points(const Arrangement& a, const DegreeSequence& seq) {
    if (a.ambient_dim() != 3) throw std::invalid_argument("check_two_points: requires l = 3");
    TwoPointsReport rep;
    Lattice lat(a);
    auto codim2 = lat.codim2_flats();
    for (size_t i = 0; i < codim2.size() && !rep.hypothesis; ++i) {
        for (size_t j = i + 1; j < codim2.size(); ++j) {
            if (codim2[i]->moebius + codim2[j]->moebius != Integer(a.size() - 2)) continue;
            bool share = false;
            for (int m : codim2[i]->members)
                for (int m2 : codim2[j]->members) share = share || m == m2;
            if (share) continue;
            rep.hypothesis = true;
            rep.flat1 = codim2[i]->members;
            rep.flat2 = codim2[j]->members;
            break;
        }
    }
    if (!rep.hypothesis) return rep;
    rep.t_value = minimal_restriction(a).t_value;
    rep.t_is_two = rep.t_value == 2;
    if (!seq.truncated) rep.degree_bound_holds = seq.max_degree() >= a.size() - 2;
    return rep;
}

} // namespace derlog
