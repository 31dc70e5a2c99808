// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line with the values it checked. All arithmetic is exact; comparisons are
// exact equality.

#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "derlog/derivations.hpp"
#include "derlog/graphic.hpp"
#include "derlog/hypersolvable.hpp"
#include "derlog/lattice.hpp"
#include "derlog/restriction.hpp"
#include "test_oracles.hpp"

using namespace derlog;

namespace {

struct Criterion {
    std::string name;
    bool ok = true;
    std::string detail;
    explicit Criterion(std::string n) : name(std::move(n)) {}
    ~Criterion() {
        std::printf("[%s] %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
    }
    void check(bool cond, const std::string& what = "") {
        if (!cond) {
            ok = false;
            if (!what.empty()) detail += (detail.empty() ? "" : "; ") + what;
        }
        CHECK_MESSAGE(cond, what);
    }
};

Arrangement arr3(std::initializer_list<std::vector<long>> rows) {
    Arrangement a(3);
    for (const auto& r : rows) a.add(Hyperplane(RatVec{Rational(r[0]), Rational(r[1]), Rational(r[2])}));
    return a;
}

const Arrangement boolean3 = arr3({{1,0,0},{0,1,0},{0,0,1}});
const Arrangement starplus = arr3({{0,1,0},{0,0,1},{1,0,-1},{1,0,1},{1,-1,0},{1,1,0}});
const Arrangement quad = arr3({{1,0,0},{0,1,0},{1,0,-1},{0,1,-1}});
const Arrangement quad_diag = arr3({{1,0,0},{0,1,0},{1,0,-1},{0,1,-1},{1,-1,0}});
const Arrangement star7 = arr3({{1,0,0},{1,1,0},{1,-1,0},{1,2,0},{1,-2,0},{0,1,-1},{0,0,1}});
const Arrangement braid = arr3({{1,-1,0},{1,1,0},{1,0,-1},{1,0,1},{0,1,-1},{0,1,1}});
const Arrangement gen4 = arr3({{1,0,0},{0,1,0},{0,0,1},{1,1,1}});
const Arrangement gen5 = arr3({{1,0,0},{0,1,0},{0,0,1},{1,1,1},{1,2,3}});
const Arrangement gen6 = arr3({{1,0,0},{0,1,0},{0,0,1},{1,1,1},{1,2,3},{1,5,11}});
const Arrangement ss4 = arr3({{1,-1,0},{1,0,-1},{0,1,-1},{1,0,0}});

Arrangement bn(int n) {
    Arrangement a = arr3({{1,0,0},{0,0,1},{0,1,-1}});
    for (int k = 1; k <= n; ++k) a.add(Hyperplane(RatVec{1, k, 0}));
    return a;
}

Graph k26_graph() {
    std::vector<Edge> e;
    for (int k = 2; k < 8; ++k) { e.push_back({0, k}); e.push_back({1, k}); }
    return Graph(8, e);
}

const Graph fivev_graph(5, {{0,1},{0,2},{0,3},{1,2},{1,3},{2,3},{2,4},{3,4}});

// the small corpus arrangements (ambient dimension 3)
std::vector<std::pair<std::string, Arrangement>> corpus3() {
    std::vector<std::pair<std::string, Arrangement>> v;
    v.emplace_back("boolean", boolean3);
    v.emplace_back("star+", starplus);
    v.emplace_back("quadrime", quad);
    v.emplace_back("quad_diag", quad_diag);
    v.emplace_back("star7", star7);
    v.emplace_back("star8", star7.with(Hyperplane(RatVec{0, 1, 0})));
    v.emplace_back("braid", braid);
    v.emplace_back("generic4", gen4);
    v.emplace_back("generic5", gen5);
    v.emplace_back("generic6", gen6);
    v.emplace_back("supersolvable4", ss4);
    for (int n = 1; n <= 4; ++n) v.emplace_back("B" + std::to_string(n), bn(n));
    return v;
}

struct TimedSeq {
    DegreeSequence seq;
    std::vector<GradedHistory> history;
    double seconds;
};

TimedSeq timed_sequence(const Arrangement& a, int cap) {
    auto t0 = std::chrono::steady_clock::now();
    DerivationModule m(a);
    TimedSeq out{m.degree_sequence(cap), m.history(), 0.0};
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

} // namespace

TEST_CASE("criterion 1: degree sequences reproduce the published values") {
    Criterion c("criterion 1: degree sequences (star+, quad pair, b-family, 8-vertex graphic)");

    TimedSeq sp = timed_sequence(starplus, default_degree_cap(starplus));
    c.check(sp.seq.degrees == std::vector<int>{1, 3, 3, 4}, "star+ degrees " + sp.seq.str());
    c.check(sp.seconds < 60.0, "star+ runtime");

    TimedSeq ep = timed_sequence(quad, default_degree_cap(quad));
    c.check(ep.seq.degrees == std::vector<int>{1, 2, 2, 2}, "quad arrangement " + ep.seq.str());

    TimedSeq ef = timed_sequence(quad_diag, default_degree_cap(quad_diag));
    c.check(ef.seq.degrees == std::vector<int>{1, 2, 2}, "quad plus diagonal " + ef.seq.str());
    FreenessCertificate cert = is_free(quad_diag, ef.seq);
    c.check(cert.free && cert.exponents == std::vector<int>{1, 2, 2},
            "Saito certificate for exp (1,2,2)");
    c.check(divide_exact(cert.saito_det, quad_diag.defining_poly()).has_value(),
            "Saito determinant is a multiple of Q(A)");

    for (int n = 1; n <= 4; ++n) {
        TimedSeq b = timed_sequence(bn(n), default_degree_cap(bn(n)));
        c.check(b.seq.degrees == std::vector<int>{1, 2, n + 1, n + 1},
                "B_" + std::to_string(n) + " degrees " + b.seq.str());
        c.check(b.seconds < 60.0, "B_n runtime");
    }

    // 8-vertex graphic example, computed in the full ambient space: the
    // common center contributes one degree-0 generator and the positive part
    // is the published sequence
    Arrangement ag = graphic_arrangement(k26_graph());
    TimedSeq g = timed_sequence(ag, 8);
    c.check(!g.seq.truncated, "graphic sequence untruncated at cap 8");
    c.check(g.seconds < 60.0,
            "graphic case took " + std::to_string(g.seconds) + "s");
    std::vector<int> positive;
    int zeros = 0;
    for (int d : g.seq.degrees) {
        if (d == 0) ++zeros;
        else positive.push_back(d);
    }
    c.check(positive == std::vector<int>{1, 2, 2, 2, 2, 2, 2, 6},
            "graphic positive degrees " + g.seq.str());
    c.check(zeros == ag.ambient_dim() - ag.rank(), "one degree-0 generator per center dimension");
}

TEST_CASE("criterion 2: characteristic polynomial and the deletion non-freeness verdict") {
    Criterion c("criterion 2: chi(star7) = (t-1)(t-3)^2 and the non-freeness verdict");
    auto cp = char_poly(star7);
    c.check(cp == std::vector<Integer>{-9, 15, -7, 1}, "chi coefficients " + int_poly_str(cp));
    auto roots = integer_roots(cp);
    c.check(roots.has_value() && *roots == std::vector<Integer>{1, 3, 3}, "integer roots (1,3,3)");

    Arrangement star8 = star7.with(Hyperplane(RatVec{0, 1, 0}));
    NonfreeReport rep = check_nonfree_criterion(star8, Hyperplane(RatVec{0, 1, 0}));
    c.check(rep.verdict == Verdict::not_free, "deletion criterion yields not_free for A'");
    c.check(rep.restriction == 2 && rep.bound == 3, "|A^H| = 2 <= 3");
}

TEST_CASE("criterion 3: minimal restriction numbers") {
    Criterion c("criterion 3: t numbers (star+ 2, braid 4, B_n 2, generic n-2)");
    c.check(minimal_restriction(starplus).t_value == 2, "star+");
    c.check(minimal_restriction(braid).t_value == 4, "braid");
    for (int n = 1; n <= 4; ++n)
        c.check(minimal_restriction(bn(n)).t_value == 2, "B_" + std::to_string(n));
    c.check(minimal_restriction(gen4).t_value == 2, "generic 4");
    c.check(minimal_restriction(gen5).t_value == 3, "generic 5");
    c.check(minimal_restriction(gen6).t_value == 4, "generic 6");
}

TEST_CASE("criterion 4: t_A >= |A| - d_A across the corpus and random arrangements") {
    Criterion c("criterion 4: restriction inequality on corpus plus 50 seeded random arrangements");
    for (const auto& [name, a] : corpus3()) {
        DerivationModule m(a);
        DegreeSequence seq = m.degree_sequence(default_degree_cap(a));
        c.check(!seq.truncated, name + " untruncated");
        UnequalReport r = check_unequal(a, seq);
        c.check(r.holds, name + " slack " + std::to_string(r.slack));
    }
    std::mt19937 rng(20240101);
    std::uniform_int_distribution<int> size(3, 8);
    int violations = 0;
    for (int it = 0; it < 50; ++it) {
        Arrangement a = testing_oracles::random_arrangement(rng, 3, size(rng));
        DerivationModule m(a);
        DegreeSequence seq = m.degree_sequence(default_degree_cap(a));
        c.check(!seq.truncated, "random arrangement untruncated");
        if (seq.truncated) continue;
        if (!check_unequal(a, seq).holds) ++violations;
    }
    c.check(violations == 0, std::to_string(violations) + " violations in 50 random cases");
}

TEST_CASE("criterion 5: addition construction on the quad pair") {
    Criterion c("criterion 5: addition gives degrees {1,2,2,3} and generates D(A) up to degree 6");
    DerivationModule m(quad);
    DegreeSequence seq = m.degree_sequence(default_degree_cap(quad));
    AdditionResult res = addition_generators(quad, {Hyperplane(RatVec{1, -1, 0})}, seq, 6);
    c.check(res.degrees == std::vector<int>{1, 2, 2, 3}, "construction degrees");
    c.check(res.verified, "graded dimensions match at every degree <= 6");
    for (const auto& v : res.verify)
        c.check(v.dim == v.dim_module,
                "degree " + std::to_string(v.degree) + ": " + std::to_string(v.dim_module) +
                    " vs " + std::to_string(v.dim));
}

TEST_CASE("criterion 6: graphic formulas") {
    Criterion c("criterion 6: four-case t formula vs general search on 17 graphs; triangle-bound tightness");
    std::vector<std::pair<std::string, Graph>> graphs = {
        {"K3", Graph(3, {{0,1},{0,2},{1,2}})},
        {"P3", Graph(3, {{0,1},{1,2}})},
        {"C4", Graph(4, {{0,1},{1,2},{2,3},{0,3}})},
        {"K4", Graph(4, {{0,1},{0,2},{0,3},{1,2},{1,3},{2,3}})},
        {"5-vertex", fivev_graph},
        {"K23", Graph(5, {{0,2},{0,3},{0,4},{1,2},{1,3},{1,4}})},
        {"K24", Graph(6, {{0,2},{0,3},{0,4},{0,5},{1,2},{1,3},{1,4},{1,5}})},
        {"K25", Graph(7, {{0,2},{0,3},{0,4},{0,5},{0,6},{1,2},{1,3},{1,4},{1,5},{1,6}})},
        {"C5", Graph(5, {{0,1},{1,2},{2,3},{3,4},{0,4}})},
        {"C6", Graph(6, {{0,1},{1,2},{2,3},{3,4},{4,5},{0,5}})},
        {"C7", Graph(7, {{0,1},{1,2},{2,3},{3,4},{4,5},{5,6},{0,6}})},
        {"P4", Graph(4, {{0,1},{1,2},{2,3}})},
        {"P5", Graph(5, {{0,1},{1,2},{2,3},{3,4}})},
        {"tree7", Graph(7, {{0,1},{0,2},{1,3},{1,4},{2,5},{2,6}})},
        {"star4", Graph(5, {{0,1},{0,2},{0,3},{0,4}})},
        {"two-edges", Graph(4, {{0,1},{2,3}})},
        {"single-edge", Graph(3, {{0,1}})},
    };
    for (const auto& [name, g] : graphs) {
        GraphicCrosscheck cc = crosscheck_graphic_t(g);
        // Faithful check of the criterion as stated. K3 is a genuine
        // counterexample to the four-case formula: a hyperplane through the
        // flat of its triangle (e.g. x1 + x2 - 2 x3) collapses all three
        // edges into a single restriction class, so the true minimum is 1
        // while the no-4-cycle case of the formula yields |E| - 1 = 2. The
        // discrepancy is reported, not hidden.
        c.check(cc.agree, name + ": formula " + std::to_string(cc.formula_t) +
                              " vs search " + std::to_string(cc.search_t));
    }

    // triangle-bound tightness: tight on the bipartite-style example, slack 1
    // on the 5-vertex example
    {
        Arrangement ag = graphic_arrangement(k26_graph());
        DerivationModule m(ag);
        DegreeSequence seq = m.degree_sequence(8);
        TriBoundReport tb = check_tri_bound(k26_graph(), seq);
        c.check(tb.holds && tb.tight && tb.tri == 6, "8-vertex example: d = Tri = 6 (tight)");
    }
    {
        Arrangement ag = graphic_arrangement(fivev_graph);
        DerivationModule m(ag);
        DegreeSequence seq = m.degree_sequence(6);
        TriBoundReport tb = check_tri_bound(fivev_graph, seq);
        c.check(tb.holds && !tb.tight && tb.d_max - tb.tri == 1, "5-vertex example: slack 1");
    }
}

TEST_CASE("criterion 7: hypersolvable suite") {
    Criterion c("criterion 7: hyperexponents, QP agreement, restriction identity, bound slack");
    Hyperexponents h = hyperexponents(starplus);
    c.check(h.values == std::vector<int>{1, 1, 2, 2}, "star+ hyperexponents {1,1,2,2}");

    c.check(quadratic_poincare(starplus, QpMethod::filtration) ==
                quadratic_poincare(starplus, QpMethod::direct),
            "QP methods agree on star+");
    c.check(quadratic_poincare(boolean3, QpMethod::filtration) ==
                quadratic_poincare(boolean3, QpMethod::direct),
            "QP methods agree on Boolean");

    // the solvable-step restriction identity at every step of every found
    // filtration
    for (const auto& [name, a] : corpus3()) {
        FiltrationResult r = find_filtration(a);
        if (r.status != FiltrationStatus::found) continue;
        const auto& chain = r.filtration->chain;
        for (size_t i = 0; i + 1 < chain.size(); ++i) {
            Arrangement upper = a.subset(chain[i + 1]);
            for (int idx : chain[i + 1]) {
                if (std::find(chain[i].begin(), chain[i].end(), idx) != chain[i].end()) continue;
                c.check(upper.restriction_size(a[idx]) == static_cast<int>(chain[i].size()),
                        name + ": |A^H| = |B| at step " + std::to_string(i + 1));
            }
        }
    }

    DerivationModule m(starplus);
    DegreeSequence seq = m.degree_sequence(default_degree_cap(starplus));
    HypboundReport hb = check_hypbound(starplus, seq);
    c.check(hb.holds, "hyperexponent lower bound holds on star+");
    c.check(hb.slack_full == 3, "slack 3 on star+ (far from tight)");
}

TEST_CASE("criterion 8: property-based invariants") {
    Criterion c("criterion 8: Terao factorization, deletion monotonicity, membership, oracles");

    // Terao factorization for every Saito-certified free corpus member
    int free_members = 0;
    for (const auto& [name, a] : corpus3()) {
        DerivationModule m(a);
        DegreeSequence seq = m.degree_sequence(default_degree_cap(a));
        if (!a.is_essential() || seq.count() != a.ambient_dim()) continue;
        FreenessCertificate cert = is_free(a, seq);
        if (!cert.free) continue;
        ++free_members;
        auto roots = integer_roots(char_poly(a));
        std::vector<Integer> expect;
        for (int d : cert.exponents) expect.push_back(d);
        std::sort(expect.begin(), expect.end());
        c.check(roots.has_value() && *roots == expect, name + ": chi = prod(t - d_i)");
    }
    c.check(free_members >= 4, "at least four Saito-certified free members");

    // deletion monotonicity on 30 seeded nested pairs
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> size(4, 8);
    int pairs = 0;
    while (pairs < 30) {
        Arrangement a = testing_oracles::random_arrangement(rng, 3, size(rng));
        std::uniform_int_distribution<int> which(0, a.size() - 1);
        Arrangement b = a.deleted(a[which(rng)]);
        if (b.size() < 1) continue;
        DerivationModule ma(a), mb(b);
        DegreeSequence sa = ma.degree_sequence(default_degree_cap(a));
        DegreeSequence sb = mb.degree_sequence(default_degree_cap(b));
        if (sa.truncated || sb.truncated) continue;
        ++pairs;
        c.check(sb.max_degree() <= sa.max_degree(), "d_B <= d_A");
    }

    // theta(Q) in Q*S for 100 sampled (arrangement, degree, basis member)
    int sampled = 0;
    std::uniform_int_distribution<int> degree(1, 3);
    while (sampled < 100) {
        Arrangement a = testing_oracles::random_arrangement(rng, 3, 3 + sampled % 3);
        DerivationModule m(a);
        int d = degree(rng);
        GradedPiece p = m.graded_basis(d);
        MultiPoly q = a.defining_poly();
        for (const auto& th : p.basis) {
            if (sampled >= 100) break;
            ++sampled;
            c.check(divide_exact(th.apply(q), q).has_value(), "theta(Q) divisible by Q");
        }
    }

    // kernel and rank against the naive reference on 200 random matrices
    std::uniform_int_distribution<int> dim(1, 6), coef(-4, 4);
    for (int it = 0; it < 200; ++it) {
        int r = dim(rng), cc = dim(rng);
        std::vector<RatVec> rows(r, RatVec(cc, Rational(0)));
        for (auto& row : rows)
            for (auto& e : row) e = coef(rng);
        RatMatrix mat = RatMatrix::from_rows(rows);
        auto kb = kernel_basis(mat);
        auto nkb = testing_oracles::naive_kernel(rows, cc);
        c.check(rank(mat) == testing_oracles::naive_rank(rows, cc), "rank agreement");
        c.check(kb == nkb, "canonical kernel agreement");
    }
}

TEST_CASE("criterion 9: generator minimality negative control") {
    Criterion c("criterion 9: dropping any generator strictly drops a graded dimension");
    auto run = [&](const std::string& name, const Arrangement& a, int cap) {
        DerivationModule m(a);
        DegreeSequence seq = m.degree_sequence(cap);
        c.check(!seq.truncated, name + " untruncated");
        for (size_t i = 0; i < seq.generators.size(); ++i) {
            std::vector<Derivation> others;
            for (size_t j = 0; j < seq.generators.size(); ++j)
                if (j != i) others.push_back(seq.generators[j]);
            int with = m.graded_dim(seq.degrees[i]);
            int without = m.generated_dim(others, seq.degrees[i]);
            c.check(without < with,
                    name + " generator " + std::to_string(i) + " at degree " +
                        std::to_string(seq.degrees[i]));
        }
    };
    for (const auto& [name, a] : corpus3()) run(name, a, default_degree_cap(a));
    run("graphic-8-vertex", graphic_arrangement(k26_graph()), 8);
    run("graphic-5-vertex", graphic_arrangement(fivev_graph), 6);
}
