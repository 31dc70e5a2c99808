#include "derlog/hypersolvable.hpp"

#include "derlog/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <array>
#include <functional>
#include <map>
#include <stdexcept>

#include "derlog/matrix.hpp"
#include "derlog/sparse_elim.hpp"

namespace derlog {

SolvableCheck is_solvable_in(const Arrangement& b, const Arrangement& a) {
    SolvableCheck out;
    std::vector<int> bidx, comp;
    for (int i = 0; i < a.size(); ++i) {
        if (b.contains(a[i])) bidx.push_back(i);
        else comp.push_back(i);
    }
    if (static_cast<int>(bidx.size()) != b.size())
        throw std::invalid_argument("is_solvable_in: B is not a subarrangement of A");

    auto form = [&](int i) { return a[i].coeffs(); };

    // (1) rank(alpha, beta, a) = 3 for distinct alpha, beta in B, a outside
    for (size_t i = 0; i < bidx.size(); ++i)
        for (size_t j = i + 1; j < bidx.size(); ++j)
            for (int c : comp)
                if (forms_rank({form(bidx[i]), form(bidx[j]), form(c)}) != 3) {
                    out.failed_condition = "1";
                    out.witness = {form(bidx[i]), form(bidx[j]), form(c)};
                    return out;
                }
    // (2) each pair outside has exactly one B-member in its span: f(a,b)
    std::map<std::pair<int, int>, int> f;
    for (size_t i = 0; i < comp.size(); ++i)
        for (size_t j = i + 1; j < comp.size(); ++j) {
            int hit = -1;
            for (int bi : bidx)
                if (forms_rank({form(comp[i]), form(comp[j]), form(bi)}) == 2) {
                    hit = bi;
                    break;  // uniqueness follows from (1)
                }
            if (hit < 0) {
                out.failed_condition = "2";
                out.witness = {form(comp[i]), form(comp[j])};
                return out;
            }
            f[{comp[i], comp[j]}] = hit;
        }
    // (3) rank(f(a,b), f(a,c), f(b,c)) <= 2 over the complement
    for (size_t i = 0; i < comp.size(); ++i)
        for (size_t j = i + 1; j < comp.size(); ++j)
            for (size_t k = j + 1; k < comp.size(); ++k) {
                int ab = f[{comp[i], comp[j]}];
                int ac = f[{comp[i], comp[k]}];
                int bc = f[{comp[j], comp[k]}];
                if (forms_rank({form(ab), form(ac), form(bc)}) > 2) {
                    out.failed_condition = "3";
                    out.witness = {form(comp[i]), form(comp[j]), form(comp[k])};
                    return out;
                }
            }
    out.ok = true;
    return out;
}

namespace {

struct Searcher {
    const Arrangement& a;
    long budget;
    long nodes = 0;
    bool exhausted_budget = false;
    int required_length = -1;  // exact chain length, or -1 for any

    explicit Searcher(const Arrangement& arr, long b) : a(arr), budget(b) {}

    // next-level candidates: nonempty subsets of the remaining indices, size
    // descending, lexicographic within a size
    void combinations(const std::vector<int>& rest, int size, size_t start,
                      std::vector<int>& cur, std::vector<std::vector<int>>& out) const {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (size_t i = start; i < rest.size(); ++i) {
            cur.push_back(rest[i]);
            combinations(rest, size, i + 1, cur, out);
            cur.pop_back();
        }
    }

    std::optional<std::vector<std::vector<int>>> rec(std::vector<std::vector<int>>& chain) {
        if (++nodes > budget) {
            exhausted_budget = true;
            return std::nullopt;
        }
        // copy: deeper recursion reallocates the chain vector
        const std::vector<int> cur = chain.back();
        // chain holds A_1 .. A_m; the filtration length is m
        if (static_cast<int>(cur.size()) == a.size()) {
            if (required_length >= 0 && static_cast<int>(chain.size()) != required_length)
                return std::nullopt;
            return chain;
        }
        if (required_length >= 0 && static_cast<int>(chain.size()) >= required_length)
            return std::nullopt;
        std::vector<int> rest;
        for (int i = 0; i < a.size(); ++i)
            if (std::find(cur.begin(), cur.end(), i) == cur.end()) rest.push_back(i);
        Arrangement b = a.subset(cur);
        for (int size = static_cast<int>(rest.size()); size >= 1; --size) {
            std::vector<std::vector<int>> opts;
            std::vector<int> tmp;
            combinations(rest, size, 0, tmp, opts);
            for (const auto& add : opts) {
                std::vector<int> next = cur;
                next.insert(next.end(), add.begin(), add.end());
                std::sort(next.begin(), next.end());
                Arrangement bs = a.subset(next);
                if (!is_solvable_in(b, bs).ok) continue;
                chain.push_back(next);
                auto r = rec(chain);
                if (r || exhausted_budget) return r;
                chain.pop_back();
            }
        }
        return std::nullopt;
    }

    FiltrationResult run() {
        FiltrationResult res;
        for (int i = 0; i < a.size(); ++i) {
            std::vector<std::vector<int>> chain = {{i}};
            auto r = rec(chain);
            if (r) {
                SolvableFiltration f;
                f.chain.push_back({});
                for (auto& level : *r) f.chain.push_back(level);
                for (size_t j = 1; j < f.chain.size(); ++j)
                    f.steps.push_back(static_cast<int>(f.chain[j].size() - f.chain[j - 1].size()));
                res.status = FiltrationStatus::found;
                res.filtration = std::move(f);
                res.nodes = nodes;
                return res;
            }
            if (exhausted_budget) break;
        }
        res.status = exhausted_budget ? FiltrationStatus::budget_exhausted
                                      : FiltrationStatus::not_hypersolvable;
        res.nodes = nodes;
        return res;
    }
};

std::vector<Integer> poly_from_steps(const std::vector<int>& steps) {
    std::vector<Integer> p = {1};
    for (int b : steps) {
        std::vector<Integer> q(p.size() + 1, Integer(0));
        for (size_t i = 0; i < p.size(); ++i) {
            q[i] += p[i];
            q[i + 1] += Integer(b) * p[i];
        }
        p = std::move(q);
    }
    return p;
}

} // namespace

FiltrationResult find_filtration(const Arrangement& a, long node_budget) {
    if (a.size() == 0) {
        FiltrationResult res;
        res.status = FiltrationStatus::found;
        res.filtration = SolvableFiltration{{{}}, {}};
        return res;
    }
    Searcher s(a, node_budget);
    return s.run();
}

FiltrationResult find_supersolvable_filtration(const Arrangement& a, long node_budget) {
    if (a.size() == 0) {
        FiltrationResult res;
        res.status = FiltrationStatus::found;
        res.filtration = SolvableFiltration{{{}}, {}};
        return res;
    }
    Searcher s(a, node_budget);
    s.required_length = a.rank();
    return s.run();
}

Hyperexponents hyperexponents(const Arrangement& a, long node_budget) {
    FiltrationResult r = find_filtration(a, node_budget);
    if (r.status == FiltrationStatus::budget_exhausted)
        throw std::runtime_error("hyperexponents: filtration search budget exhausted");
    if (r.status == FiltrationStatus::not_hypersolvable)
        throw std::runtime_error("hyperexponents: arrangement is not hypersolvable");
    Hyperexponents out;
    out.filtration = *r.filtration;
    out.values = out.filtration.steps;
    std::sort(out.values.begin(), out.values.end());

    // cheap independence check: a filtration seeded from a different first
    // hyperplane, when one exists, must give the same multiset
    for (int i = 1; i < a.size() && !out.independence_checked; ++i) {
        if (out.filtration.chain.size() > 1 && out.filtration.chain[1] == std::vector<int>{i}) continue;
        Searcher s(a, node_budget);
        std::vector<std::vector<int>> chain = {{i}};
        auto rr = s.rec(chain);
        if (rr) {
            std::vector<int> steps;
            steps.push_back(1);
            for (size_t j = 1; j < rr->size(); ++j)
                steps.push_back(static_cast<int>((*rr)[j].size() - (*rr)[j - 1].size()));
            std::sort(steps.begin(), steps.end());
            if (steps != out.values)
                throw invariant_error("hyperexponents: two filtrations disagree (violates "
                                         "filtration independence)");
            out.independence_checked = true;
        }
    }
    return out;
}

std::vector<Integer> quadratic_poincare(const Arrangement& a, QpMethod method, long node_budget) {
    if (method == QpMethod::filtration) {
        Hyperexponents h = hyperexponents(a, node_budget);
        return poly_from_steps(h.values);
    }
    const int n = a.size();
    if (n > 12) throw std::invalid_argument("quadratic_poincare: direct method limited to |A| <= 12");
    // rank-2 triples generate the quadratic ideal
    std::vector<std::array<int, 3>> trips;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (forms_rank({a[i].coeffs(), a[j].coeffs(), a[k].coeffs()}) == 2)
                    trips.push_back({i, j, k});

    // binomials and lex ranking of p-subsets
    std::vector<std::vector<long>> binom(n + 1, std::vector<long>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (i - 1 >= j ? binom[i - 1][j] : 0);
    }
    auto subset_rank = [&](const std::vector<int>& s) {
        long r = 0;
        int prev = -1;
        int p = static_cast<int>(s.size());
        for (int i = 0; i < p; ++i) {
            for (int v = prev + 1; v < s[i]; ++v) r += binom[n - 1 - v][p - 1 - i];
            prev = s[i];
        }
        return static_cast<int>(r);
    };

    std::vector<Integer> dims = {1};
    for (int p = 1; p <= n; ++p) {
        long total = binom[n][p];
        if (p == 1) {
            dims.push_back(Integer(total));
            continue;
        }
        SparseEliminator elim;
        // wedges (w_i w_j - w_i w_k + w_j w_k) ^ w_rest over all (p-2)-subsets
        std::vector<int> rest(p - 2);
        std::function<void(int, int)> iterate = [&](int start, int pos) {
            if (pos == p - 2) {
                for (const auto& t : trips) {
                    SparseRow row;
                    std::map<int, Integer> entries;
                    const int pairs[3][2] = {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}};
                    const int signs[3] = {1, -1, 1};
                    for (int pi = 0; pi < 3; ++pi) {
                        int x = pairs[pi][0], y = pairs[pi][1];
                        bool clash = false;
                        for (int rv : rest) clash = clash || rv == x || rv == y;
                        if (clash) continue;
                        // sign of sorting (x, y, rest...) ascending
                        std::vector<int> mono = {x, y};
                        mono.insert(mono.end(), rest.begin(), rest.end());
                        int sgn = 1;
                        for (size_t ii = 0; ii < mono.size(); ++ii)
                            for (size_t jj = ii + 1; jj < mono.size(); ++jj)
                                if (mono[ii] > mono[jj]) sgn = -sgn;
                        std::sort(mono.begin(), mono.end());
                        entries[subset_rank(mono)] += Integer(signs[pi] * sgn);
                    }
                    for (const auto& [c, v] : entries)
                        if (v != 0) row.emplace_back(c, v);
                    std::sort(row.begin(), row.end(),
                              [](const auto& x, const auto& y) { return x.first < y.first; });
                    if (!row.empty()) elim.add_row(std::move(row));
                }
                return;
            }
            for (int v = start; v < n; ++v) {
                rest[pos] = v;
                iterate(v + 1, pos + 1);
            }
        };
        iterate(0, 0);
        dims.push_back(Integer(total - elim.rank()));
    }
    while (dims.size() > 1 && dims.back() == 0) dims.pop_back();
    return dims;
}

SupersolvableReport supersolvable_exponents(const Arrangement& a, long node_budget) {
    SupersolvableReport rep;
    FiltrationResult r = find_supersolvable_filtration(a, node_budget);
    rep.budget_exhausted = r.status == FiltrationStatus::budget_exhausted;
    if (r.status != FiltrationStatus::found) return rep;
    rep.supersolvable = true;
    rep.filtration = *r.filtration;
    rep.exponents = rep.filtration.steps;
    std::sort(rep.exponents.begin(), rep.exponents.end());
    return rep;
}

HypboundReport check_hypbound(const Arrangement& a, const DegreeSequence& seq, long node_budget) {
    if (seq.truncated) throw std::invalid_argument("check_hypbound: truncated degree sequence");
    Hyperexponents h = hyperexponents(a, node_budget);
    HypboundReport rep;
    rep.rho = h.values.empty() ? 0 : *std::max_element(h.values.begin(), h.values.end());
    rep.d_full = seq.max_degree();
    rep.slack_full = rep.d_full - (rep.rho - 1);
    rep.holds = rep.slack_full >= 0;

    const auto& chain = h.filtration.chain;
    if (chain.size() < 2) {
        rep.min_slack_deleted = 0;
        return rep;
    }
    const auto& last = chain[chain.size() - 1];
    const auto& prev = chain[chain.size() - 2];
    rep.min_slack_deleted = INT32_MAX;
    for (int idx : last) {
        if (std::find(prev.begin(), prev.end(), idx) != prev.end()) continue;
        Arrangement ap = a.deleted(a[idx]);
        DerivationModule mod(ap);
        DegreeSequence sp = mod.degree_sequence(default_degree_cap(ap));
        if (sp.truncated) throw std::runtime_error("check_hypbound: deleted sequence truncated");
        rep.d_deleted.push_back(sp.max_degree());
        rep.holds = rep.holds && sp.max_degree() >= rep.rho - 1;
        rep.min_slack_deleted = std::min(rep.min_slack_deleted, sp.max_degree() - (rep.rho - 1));
    }
    if (rep.d_deleted.empty()) rep.min_slack_deleted = 0;
    return rep;
}

} // namespace derlog
