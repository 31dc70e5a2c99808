#include <doctest.h>

#include "derlog/lattice.hpp"
#include "test_oracles.hpp"

using namespace derlog;

namespace {

Arrangement arr3(std::initializer_list<std::vector<long>> rows) {
    Arrangement a(3);
    for (const auto& r : rows) a.add(Hyperplane(RatVec{Rational(r[0]), Rational(r[1]), Rational(r[2])}));
    return a;
}

const Arrangement boolean3 = arr3({{1,0,0},{0,1,0},{0,0,1}});
const Arrangement starplus = arr3({{0,1,0},{0,0,1},{1,0,-1},{1,0,1},{1,-1,0},{1,1,0}});

} // namespace

TEST_CASE("lattice sizes") {
    CHECK(Lattice(boolean3).flats().size() == 8);  // one flat per subset
    CHECK(Lattice(arr3({{1,0,0}})).flats().size() == 2);

    // star+ codim-2 flats: two triple points and nine double points
    Lattice lat(starplus);
    auto l2 = lat.codim2_flats();
    CHECK(l2.size() == 11);
    int triples = 0, doubles = 0;
    for (const auto* f : l2) {
        if (f->members.size() == 3) ++triples;
        if (f->members.size() == 2) ++doubles;
    }
    CHECK(triples == 2);
    CHECK(doubles == 9);
    // cross-check against the Moebius sum, which the characteristic
    // polynomial pins exactly
    Integer mu2 = 0;
    for (const auto* f : l2) mu2 += f->moebius;
    CHECK(mu2 == 13);
}

TEST_CASE("moebius values") {
    Lattice lat(starplus);
    for (const auto& f : lat.flats()) {
        if (f.codim == 1) CHECK(f.moebius == -1);
        if (f.codim == 2) CHECK(f.moebius == Integer(static_cast<long>(f.members.size()) - 1));
    }
    // Boolean origin: (-1)^3
    Lattice lb(boolean3);
    for (const auto& f : lb.flats())
        if (f.codim == 3) CHECK(f.moebius == -1);
}

TEST_CASE("char_poly") {
    // star+ section 3 arrangement: chi = (t-1)(t-3)^2
    Arrangement star7 = arr3({{1,0,0},{1,1,0},{1,-1,0},{1,2,0},{1,-2,0},{0,1,-1},{0,0,1}});
    CHECK(char_poly(star7) == std::vector<Integer>{-9, 15, -7, 1});
    auto roots = integer_roots(char_poly(star7));
    REQUIRE(roots.has_value());
    CHECK(*roots == std::vector<Integer>{1, 3, 3});

    CHECK(char_poly(boolean3) == std::vector<Integer>{-1, 3, -3, 1});
    CHECK(char_poly(Arrangement(3)) == std::vector<Integer>{0, 0, 0, 1});

    // degree l, monic, t^{l-1} coefficient -|A|; chi(1) = 0 for nonempty
    std::mt19937 rng(3);
    for (int it = 0; it < 10; ++it) {
        Arrangement a = testing_oracles::random_arrangement(rng, 3, 4 + it % 4);
        auto cp = char_poly(a);
        CHECK(cp.size() == 4);
        CHECK(cp[3] == 1);
        CHECK(cp[2] == Integer(-a.size()));
        Integer at1 = 0;
        for (const auto& c : cp) at1 += c;
        CHECK(at1 == 0);
    }
}

TEST_CASE("codim2 flats") {
    Arrangement gen4 = arr3({{1,0,0},{0,1,0},{0,0,1},{1,1,1}});
    Lattice lat(gen4);
    auto l2 = lat.codim2_flats();
    CHECK(l2.size() == 6);
    for (const auto* f : l2) CHECK(f->members.size() == 2);
    Lattice two(arr3({{1,0,0},{0,1,0}}));
    CHECK(two.codim2_flats().size() == 1);
}

TEST_CASE("lattice rebuild is stable under delete and re-add") {
    Hyperplane h(RatVec{1, -1, 0});
    Arrangement again = starplus.deleted(h).with(h);
    Lattice l1(starplus);
    // same multiset of (codim, member-count, moebius); member indices shift
    auto sig = [](const Lattice& l) {
        std::vector<std::tuple<int, size_t>> s;
        for (const auto& f : l.flats()) s.emplace_back(f.codim, f.members.size());
        std::sort(s.begin(), s.end());
        return s;
    };
    CHECK(sig(l1) == sig(Lattice(again)));
    CHECK(char_poly(starplus) == char_poly(again));
}

TEST_CASE("pairwise intersections of flats are flats") {
    // closure property: stacking the equations of any two flats lands on the
    // signature of some flat of the lattice
    Lattice lat(starplus);
    auto sig_of = [](const std::vector<RatVec>& rows) {
        Rref r = rref(RatMatrix::from_rows(rows));
        std::vector<RatVec> sig;
        for (int i = 0; i < r.rank; ++i) sig.push_back(r.reduced.row(i));
        return sig;
    };
    std::vector<std::vector<RatVec>> known;
    for (const auto& f : lat.flats()) known.push_back(f.equations);
    for (const auto& f : lat.flats()) {
        if (f.codim == 0) continue;
        for (const auto& g : lat.flats()) {
            if (g.codim == 0) continue;
            std::vector<RatVec> rows = f.equations;
            rows.insert(rows.end(), g.equations.begin(), g.equations.end());
            auto sig = sig_of(rows);
            CHECK(std::find(known.begin(), known.end(), sig) != known.end());
        }
    }
    // bottom element present with mu = 1
    CHECK(lat.flats().front().codim == 0);
    CHECK(lat.flats().front().moebius == 1);
}

TEST_CASE("integer_roots") {
    CHECK(integer_roots({-9, 15, -7, 1}) == std::vector<Integer>{1, 3, 3});
    CHECK(!integer_roots({1, 1, 1}).has_value());     // t^2 + t + 1
    CHECK(!integer_roots({-8, 13, -6, 1}).has_value());  // star+ chi is irreducible
    CHECK(integer_roots({0, 0, 1}) == std::vector<Integer>{0, 0});
}
