#include "derlog/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace derlog {

Rational rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r{Integer(s)};
            r.canonicalize();
            return r;
        }
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + s);
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (...) {
        throw std::invalid_argument("bad rational: " + s);
    }
}

int total_degree(const Monomial& m) {
    int d = 0;
    for (auto e : m) d += static_cast<int>(e);
    return d;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(int num_vars, const Rational& c) {
    MultiPoly p(num_vars);
    p.add_term(Monomial(num_vars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int num_vars, int index, const Rational& coeff) {
    MultiPoly p(num_vars);
    Monomial m(num_vars, 0);
    m[index] = 1;
    p.add_term(m, coeff);
    return p;
}

MultiPoly MultiPoly::linear(const RatVec& coeffs) {
    MultiPoly p(static_cast<int>(coeffs.size()));
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] != 0) {
            Monomial m(coeffs.size(), 0);
            m[i] = 1;
            p.add_term(m, coeffs[i]);
        }
    }
    return p;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    if (static_cast<int>(m.size()) != nvars_)
        throw std::invalid_argument("monomial length != num_vars");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.rbegin()->first);
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    return total_degree(terms_.rbegin()->first) == d;
}

bool MultiPoly::is_linear_form() const {
    return !terms_.empty() && is_homogeneous() && degree() == 1;
}

RatVec MultiPoly::linear_coeffs() const {
    if (!is_linear_form()) throw std::invalid_argument("not a linear form");
    RatVec c(nvars_, Rational(0));
    for (const auto& [m, v] : terms_) {
        for (int i = 0; i < nvars_; ++i)
            if (m[i] == 1) c[i] = v;
    }
    return c;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    return *this + o.scaled(Rational(-1));
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
    MultiPoly r(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading term");
    return terms_.rbegin()->first;
}

const Rational& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw std::invalid_argument("zero polynomial has no leading term");
    return terms_.rbegin()->second;
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    return scaled(Rational(1) / leading_coeff());
}

std::string MultiPoly::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print leading term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (ac == 1);
        bool has_var = total_degree(m) > 0;
        if (!unit || !has_var) os << rat_str(ac);
        if (!unit && has_var) os << "*";
        bool fv = true;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!fv) os << "*";
            fv = false;
            if (i < var_names.size()) os << var_names[i];
            else os << "x" << (i + 1);
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op) {
    switch (op) {
        case PolyOp::add: return a + b;
        case PolyOp::mul: return a * b;
        case PolyOp::scale: {
            // b must be a constant
            if (b.degree() > 0) throw std::invalid_argument("scale needs a constant");
            Rational c = b.is_zero() ? Rational(0) : b.terms().begin()->second;
            return a.scaled(c);
        }
    }
    throw std::logic_error("unreachable");
}

MultiPoly reduce_mod_form(const MultiPoly& p, const MultiPoly& alpha) {
    if (!alpha.is_linear_form())
        throw std::invalid_argument("reduce_mod_form: alpha must be a nonzero linear form");
    int l = p.num_vars();
    if (alpha.num_vars() != l) throw std::invalid_argument("variable count mismatch");
    RatVec c = alpha.linear_coeffs();
    int piv = -1;
    for (int i = 0; i < l; ++i)
        if (c[i] != 0) piv = i;
    // substitution x_piv <- -(1/c_piv) * sum_{k != piv} c_k x_k
    MultiPoly sub(l);
    for (int k = 0; k < l; ++k)
        if (k != piv && c[k] != 0) sub = sub + MultiPoly::variable(l, k, -c[k] / c[piv]);

    MultiPoly out(l);
    // cache powers of sub as needed
    std::vector<MultiPoly> pow = {MultiPoly::constant(l, 1)};
    for (const auto& [m, v] : p.terms()) {
        uint32_t e = m[piv];
        while (pow.size() <= e) pow.push_back(pow.back() * sub);
        Monomial rest = m;
        rest[piv] = 0;
        MultiPoly term(l);
        term.add_term(rest, v);
        out = out + term * pow[e];
    }
    return out;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    int l = p.num_vars();
    MultiPoly q(l), r = p;
    const Monomial& lmd = d.leading_monomial();
    const Rational& lcd = d.leading_coeff();
    while (!r.is_zero()) {
        const Monomial& lmr = r.leading_monomial();
        Monomial diff(l);
        for (int i = 0; i < l; ++i) {
            if (lmr[i] < lmd[i]) return std::nullopt;
            diff[i] = lmr[i] - lmd[i];
        }
        MultiPoly t(l);
        t.add_term(diff, r.leading_coeff() / lcd);
        q = q + t;
        r = r - t * d;
    }
    return q;
}

namespace {

// ---- multivariate gcd by primitive PRS recursion over the last active variable

// view p as univariate in variable v with MultiPoly coefficients
std::vector<MultiPoly> coeffs_in_var(const MultiPoly& p, int v) {
    int l = p.num_vars();
    int dv = 0;
    for (const auto& [m, c] : p.terms()) dv = std::max<int>(dv, m[v]);
    std::vector<MultiPoly> out(dv + 1, MultiPoly(l));
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        int e = rest[v];
        rest[v] = 0;
        out[e].add_term(rest, c);
    }
    return out;
}

MultiPoly from_coeffs_in_var(const std::vector<MultiPoly>& cs, int v, int l) {
    MultiPoly out(l);
    for (size_t e = 0; e < cs.size(); ++e) {
        for (const auto& [m, c] : cs[e].terms()) {
            Monomial mm = m;
            mm[v] = static_cast<uint32_t>(e);
            out.add_term(mm, c);
        }
    }
    return out;
}

int max_var(const MultiPoly& p) {
    int mv = -1;
    for (const auto& [m, c] : p.terms())
        for (int i = 0; i < p.num_vars(); ++i)
            if (m[i] > 0) mv = std::max(mv, i);
    return mv;
}

MultiPoly gcd2(const MultiPoly& a, const MultiPoly& b);

// content of p w.r.t. variable v: gcd of its coefficient polynomials
MultiPoly content_in_var(const std::vector<MultiPoly>& cs) {
    MultiPoly g = cs[0];
    for (size_t i = 1; i < cs.size(); ++i) {
        if (cs[i].is_zero()) continue;
        g = g.is_zero() ? cs[i] : gcd2(g, cs[i]);
        if (g.degree() == 0) break;
    }
    return g;
}

// pseudo-remainder of a by b in variable v (both nonzero, deg_v a >= deg_v b)
MultiPoly pseudo_rem(std::vector<MultiPoly> ac, const std::vector<MultiPoly>& bc, int v, int l) {
    const MultiPoly& lb = bc.back();
    int db = static_cast<int>(bc.size()) - 1;
    while (static_cast<int>(ac.size()) - 1 >= db) {
        while (!ac.empty() && ac.back().is_zero()) ac.pop_back();
        int da = static_cast<int>(ac.size()) - 1;
        if (da < db || ac.empty()) break;
        MultiPoly lead = ac.back();
        // ac = lb*ac - lead * x^{da-db} * bc
        for (auto& c : ac) c = c * lb;
        for (int i = 0; i <= db; ++i)
            ac[da - db + i] = ac[da - db + i] - lead * bc[i];
        while (!ac.empty() && ac.back().is_zero()) ac.pop_back();
        if (static_cast<int>(ac.size()) - 1 == da) throw std::logic_error("pseudo_rem stall");
    }
    return from_coeffs_in_var(ac, v, l);
}

MultiPoly gcd2(const MultiPoly& a, const MultiPoly& b) {
    int l = a.num_vars();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() == 0 || b.degree() == 0) return MultiPoly::constant(l, 1);
    int v = std::max(max_var(a), max_var(b));
    auto ac = coeffs_in_var(a, v);
    auto bc = coeffs_in_var(b, v);
    if (ac.size() == 1 && bc.size() == 1) {
        // v appears in neither: shouldn't happen given max_var, but be safe
        return gcd2(ac[0], bc[0]);
    }
    if (ac.size() == 1) return gcd2(a, content_in_var(bc));
    if (bc.size() == 1) return gcd2(content_in_var(ac), b);

    MultiPoly ca = content_in_var(ac), cb = content_in_var(bc);
    MultiPoly cont = gcd2(ca, cb);
    auto strip = [&](const MultiPoly& p, const MultiPoly& c) {
        auto q = divide_exact(p, c);
        if (!q) throw std::logic_error("content division failed");
        return *q;
    };
    MultiPoly pa = strip(a, ca), pb = strip(b, cb);
    // primitive PRS
    while (true) {
        auto pac = coeffs_in_var(pa, v);
        auto pbc = coeffs_in_var(pb, v);
        if (pbc.size() > pac.size()) { std::swap(pa, pb); std::swap(pac, pbc); }
        MultiPoly r = pseudo_rem(pac, pbc, v, l);
        if (r.is_zero()) {
            // primitive part of pb times the content gcd
            auto rc = coeffs_in_var(pb, v);
            MultiPoly pp = strip(pb, content_in_var(rc));
            return (cont * pp).monic();
        }
        auto rcs = coeffs_in_var(r, v);
        if (rcs.size() == 1) {
            // gcd in v-direction is trivial
            return cont.monic();
        }
        MultiPoly rp = strip(r, content_in_var(rcs));
        pa = pb;
        pb = rp;
    }
}

} // namespace

MultiPoly poly_gcd(const std::vector<MultiPoly>& ps) {
    MultiPoly g(0);
    bool seen = false;
    for (const auto& p : ps) {
        if (p.is_zero()) continue;
        if (!seen) {
            g = p;
            seen = true;
        } else {
            g = gcd2(g, p);
        }
        if (seen && g.degree() == 0) break;
    }
    if (!seen) throw std::invalid_argument("poly_gcd: all inputs zero");
    return g.monic();
}

MultiPoly poly_matrix_det(const std::vector<std::vector<MultiPoly>>& m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("poly_matrix_det: not square");
    if (n == 0) throw std::invalid_argument("poly_matrix_det: empty");
    int l = m[0][0].num_vars();
    // det over column subsets, expanding along rows; memo[mask] = det of the
    // top-|mask| rows restricted to columns in mask
    std::vector<MultiPoly> memo(size_t(1) << n, MultiPoly(l));
    memo[0] = MultiPoly::constant(l, 1);
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        size_t row = static_cast<size_t>(__builtin_popcount(mask)) - 1;
        MultiPoly acc(l);
        int jpos = 0;  // position of the column inside the mask
        for (size_t col = 0; col < n; ++col) {
            if (!(mask & (1u << col))) continue;
            if (!m[row][col].is_zero()) {
                MultiPoly t = m[row][col] * memo[mask ^ (1u << col)];
                acc = ((row + jpos) % 2 == 0) ? acc + t : acc - t;
            }
            ++jpos;
        }
        memo[mask] = acc;
    }
    return memo[(1u << n) - 1];
}

} // namespace derlog
