#include "derlog/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace derlog {

namespace {

using Signature = std::vector<RatVec>;

Signature rref_signature(const std::vector<RatVec>& rows) {
    Rref r = rref(RatMatrix::from_rows(rows));
    Signature sig;
    sig.reserve(r.rank);
    for (int i = 0; i < r.rank; ++i) sig.push_back(r.reduced.row(i));
    return sig;
}

} // namespace

Lattice::Lattice(const Arrangement& a) : arr_(a) {
    const int n = a.size();
    std::map<Signature, int> seen;  // signature -> codim (value unused beyond dedup)
    std::vector<Signature> work;

    auto visit = [&](const Signature& sig) {
        if (seen.emplace(sig, static_cast<int>(sig.size())).second) work.push_back(sig);
    };

    for (int i = 0; i < n; ++i) visit(rref_signature({a[i].coeffs()}));

    // iterative closure: intersect known flats with hyperplanes until stable
    while (!work.empty()) {
        Signature sig = std::move(work.back());
        work.pop_back();
        for (int i = 0; i < n; ++i) {
            std::vector<RatVec> rows = sig;
            rows.push_back(a[i].coeffs());
            Signature next = rref_signature(rows);
            if (next.size() == sig.size()) continue;  // H_i already contains the flat
            visit(next);
        }
    }

    flats_.push_back(Flat{});  // bottom K^l: no equations, codim 0, no members
    for (const auto& [sig, codim] : seen) {
        Flat f;
        f.equations = sig;
        f.codim = static_cast<int>(sig.size());
        for (int i = 0; i < n; ++i) {
            std::vector<RatVec> rows = sig;
            rows.push_back(a[i].coeffs());
            if (subspace_dim(rows) == f.codim) f.members.push_back(i);
        }
        flats_.push_back(std::move(f));
    }
    std::stable_sort(flats_.begin(), flats_.end(), [](const Flat& x, const Flat& y) {
        if (x.codim != y.codim) return x.codim < y.codim;
        return x.equations < y.equations;
    });

    // Moebius recursion over the order given by member containment
    for (size_t i = 0; i < flats_.size(); ++i) {
        if (flats_[i].codim == 0) {
            flats_[i].moebius = 1;
            continue;
        }
        Integer s = 0;
        for (size_t j = 0; j < i; ++j)
            if (leq(flats_[j], flats_[i])) s += flats_[j].moebius;
        flats_[i].moebius = -s;
    }
}

std::vector<const Flat*> Lattice::codim_flats(int codim) const {
    std::vector<const Flat*> out;
    for (const auto& f : flats_)
        if (f.codim == codim) out.push_back(&f);
    return out;
}

bool Lattice::leq(const Flat& x, const Flat& y) {
    // flats are intersections of their members, so order = member containment
    if (x.codim > y.codim) return false;
    return std::includes(y.members.begin(), y.members.end(), x.members.begin(), x.members.end());
}

std::vector<Integer> Lattice::char_poly() const {
    int l = arr_.ambient_dim();
    std::vector<Integer> cp(l + 1, Integer(0));
    for (const auto& f : flats_) cp[l - f.codim] += f.moebius;
    return cp;
}

std::vector<Integer> char_poly(const Arrangement& a) {
    return Lattice(a).char_poly();
}

std::optional<std::vector<Integer>> integer_roots(const std::vector<Integer>& poly) {
    std::vector<Integer> p = poly;
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.empty() || p.back() != 1) return std::nullopt;
    std::vector<Integer> roots;
    while (p.size() > 1) {
        // candidate roots divide the constant term (try 0 when it vanishes)
        Integer c0 = p[0];
        Integer found;
        bool ok = false;
        if (c0 == 0) {
            found = 0;
            ok = true;
        } else {
            Integer bound = c0 > 0 ? c0 : Integer(-c0);
            for (Integer r = 0; r <= bound && !ok; ++r) {
                if (r != 0 && c0 % r != 0) continue;
                for (Integer cand : {r, Integer(-r)}) {
                    Integer val = 0;
                    for (size_t i = p.size(); i-- > 0;) val = val * cand + p[i];
                    if (val == 0) { found = cand; ok = true; break; }
                }
            }
        }
        if (!ok) return std::nullopt;
        roots.push_back(found);
        // synthetic division by (t - found)
        std::vector<Integer> q(p.size() - 1);
        Integer carry = 0;
        for (size_t i = p.size(); i-- > 1;) {
            carry = p[i] + carry * found;
            q[i - 1] = carry;
        }
        p = q;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string int_poly_str(const std::vector<Integer>& poly, const std::string& var) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = poly.size(); i-- > 0;) {
        if (poly[i] == 0) continue;
        Integer a = poly[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

} // namespace derlog
