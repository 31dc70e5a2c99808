#include "derlog/arrangement.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "derlog/matrix.hpp"

namespace derlog {

Hyperplane::Hyperplane(RatVec coeffs) : coeffs_(std::move(coeffs)) {
    int first = -1;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) { first = static_cast<int>(i); break; }
    if (first < 0) throw std::invalid_argument("hyperplane form is zero");
    Rational inv = Rational(1) / coeffs_[first];
    for (auto& c : coeffs_) c *= inv;
}

Hyperplane Hyperplane::parse(const std::string& line, int dim) {
    std::istringstream is(line);
    RatVec c;
    std::string tok;
    while (is >> tok) c.push_back(rat_parse(tok));
    if (static_cast<int>(c.size()) != dim)
        throw std::invalid_argument("expected " + std::to_string(dim) + " coefficients: " + line);
    return Hyperplane(std::move(c));
}

bool Hyperplane::operator<(const Hyperplane& o) const {
    return coeffs_ < o.coeffs_;
}

std::string Hyperplane::str() const {
    return form().str();
}

Arrangement::Arrangement(int ambient_dim, const std::vector<RatVec>& forms) : dim_(ambient_dim) {
    for (const auto& f : forms) add(Hyperplane(f));
}

void Arrangement::add(Hyperplane h) {
    if (h.dim() != dim_) throw std::invalid_argument("hyperplane dimension mismatch");
    if (contains(h)) throw std::invalid_argument("duplicate hyperplane: " + h.str());
    hs_.push_back(std::move(h));
}

bool Arrangement::contains(const Hyperplane& h) const { return index_of(h) >= 0; }

int Arrangement::index_of(const Hyperplane& h) const {
    for (size_t i = 0; i < hs_.size(); ++i)
        if (hs_[i] == h) return static_cast<int>(i);
    return -1;
}

bool Arrangement::same_set(const Arrangement& o) const {
    if (dim_ != o.dim_ || size() != o.size()) return false;
    for (const auto& h : hs_)
        if (!o.contains(h)) return false;
    return true;
}

int Arrangement::rank() const {
    std::vector<RatVec> rows;
    rows.reserve(hs_.size());
    for (const auto& h : hs_) rows.push_back(h.coeffs());
    return forms_rank(rows);
}

MultiPoly Arrangement::defining_poly() const {
    MultiPoly q = MultiPoly::constant(dim_, 1);
    for (const auto& h : hs_) q = q * h.form();
    return q;
}

Arrangement Arrangement::deleted(const Hyperplane& h) const {
    int idx = index_of(h);
    if (idx < 0) throw std::invalid_argument("cannot delete non-member hyperplane " + h.str());
    Arrangement out(dim_);
    for (int i = 0; i < size(); ++i)
        if (i != idx) out.hs_.push_back(hs_[i]);
    return out;
}

Arrangement Arrangement::with(const Hyperplane& h) const {
    Arrangement out = *this;
    out.add(h);
    return out;
}

Arrangement Arrangement::subset(const std::vector<int>& indices) const {
    Arrangement out(dim_);
    for (int i : indices) out.hs_.push_back(hs_.at(i));
    return out;
}

int Arrangement::restriction_size(const Hyperplane& h) const {
    std::vector<const Hyperplane*> others;
    for (const auto& g : hs_)
        if (!(g == h)) others.push_back(&g);
    // classes under: g ~ g' iff rank{h, g, g'} == 2
    std::vector<const Hyperplane*> reps;
    int classes = 0;
    for (const auto* g : others) {
        bool placed = false;
        for (const auto* rep : reps) {
            if (forms_rank({h.coeffs(), rep->coeffs(), g->coeffs()}) == 2) {
                placed = true;
                break;
            }
        }
        if (!placed) {
            reps.push_back(g);
            ++classes;
        }
    }
    return classes;
}

Arrangement Arrangement::parse(std::istream& in) {
    std::string line;
    int dim = -1;
    Arrangement out(0);
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream is(line);
        std::string first;
        if (!(is >> first)) continue;
        if (dim < 0) {
            if (first != "dim")
                throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'dim <l>'");
            if (!(is >> dim) || dim <= 0)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": bad dimension");
            out = Arrangement(dim);
            continue;
        }
        std::string rest;
        std::getline(is, rest);
        try {
            out.add(Hyperplane::parse(first + " " + rest, dim));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (dim < 0) throw std::invalid_argument("missing 'dim' header");
    return out;
}

Arrangement Arrangement::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return parse(in);
}

std::string Arrangement::str() const {
    std::ostringstream os;
    os << "dim " << dim_ << "\n";
    for (const auto& h : hs_) {
        for (int c = 0; c < dim_; ++c) os << (c ? " " : "") << rat_str(h.coeffs()[c]);
        os << "\n";
    }
    return os.str();
}

int forms_rank(const std::vector<RatVec>& forms) {
    return subspace_dim(forms);
}

} // namespace derlog
