#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "tolfca/errors.hpp"
#include "tolfca/io.hpp"
#include "tolfca/relation.hpp"

using namespace tolfca;

namespace {

LatticePtr c3() {
    static LatticePtr l = read_lattice_json(fixture("c3.json"));
    return l;
}

Relation sym_pairs(const LatticePtr& l, const std::vector<std::pair<int, int>>& ps) {
    BitMatrix m = BitMatrix::identity(l->n);
    for (auto [x, y] : ps) {
        m.set(x, y);
        m.set(y, x);
    }
    return Relation(l, m);
}

}  // namespace

TEST_CASE("relation basics and factories") {
    LatticePtr l = c3();
    CHECK(Relation::empty_rel(l).bits().count() == 0);
    CHECK(Relation::diagonal(l).bits() == BitMatrix::identity(3));
    CHECK(Relation::all_pairs(l).bits().count() == 9);
    CHECK(Relation::order_of(l).bits() == l->leq);
    Relation d = Relation::diagonal(l);
    CHECK(d.pairs() == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}, {2, 2}});
    CHECK(compose(d, d) == d);
    CHECK(inverse(Relation::order_of(l)).bits() == l->geq);
    CHECK(subset(d, Relation::order_of(l)));

    LatticePtr other = read_lattice_json(fixture("b2.json"));
    CHECK_THROWS_AS(compose(d, Relation::diagonal(other)), HostMismatch);
}

TEST_CASE("classifying small relations") {
    LatticePtr l = c3();
    Relation leq = Relation::order_of(l);
    CHECK(is_reflexive(leq));
    CHECK(!is_symmetric(leq));
    CHECK(is_compatible(leq));
    CHECK(is_weak_ordered(leq));
    CHECK(!is_tolerance(leq));

    Relation empty = Relation::empty_rel(l);
    CHECK(is_weak_ordered(empty));
    CHECK(is_compatible(empty));
    CHECK(!is_weak_ordered(Relation::diagonal(l)));  // stretching the diagonal leaves it

    Relation all = Relation::all_pairs(l);
    CHECK(is_tolerance(all));
    CHECK(is_weak_ordered(all));
}

TEST_CASE("compatibility catches join escapes") {
    LatticePtr l = read_lattice_json(fixture("b2.json"));
    int a = *l->index_of("a"), b = *l->index_of("b");
    BitMatrix m(l->n, l->n);
    m.set(a, b);
    CHECK(is_compatible(Relation(l, m)));  // a single pair squares to itself
    m.set(b, a);
    // now the joins force (1, 1), which is missing
    CHECK(!is_compatible(Relation(l, m)));
}

TEST_CASE("the five tolerances of the three chain") {
    LatticePtr l = c3();
    auto tols = enumerate_tolerances(l);
    CHECK(tols.size() == 5);
    std::set<BitMatrix> got;
    for (const auto& t : tols) {
        CHECK(is_tolerance(t));
        got.insert(t.bits());
    }
    std::set<BitMatrix> expect = {
        Relation::diagonal(l).bits(),           sym_pairs(l, {{0, 1}}).bits(),
        sym_pairs(l, {{1, 2}}).bits(),          sym_pairs(l, {{0, 1}, {1, 2}}).bits(),
        Relation::all_pairs(l).bits(),
    };
    CHECK(got == expect);
}

TEST_CASE("chains count tolerances like balanced brackets") {
    auto chain = [](int k) {
        std::vector<std::string> names;
        std::vector<std::pair<std::string, std::string>> covers;
        for (int i = 0; i < k; ++i) names.push_back("e" + std::to_string(i));
        for (int i = 0; i + 1 < k; ++i) covers.push_back({names[i], names[i + 1]});
        return build_lattice("chain" + std::to_string(k), names, covers);
    };
    CHECK(enumerate_tolerances(chain(2)).size() == 2);
    CHECK(enumerate_tolerances(chain(4)).size() == 14);
    CHECK(enumerate_tolerances(chain(5)).size() == 42);
    CHECK(enumerate_tolerances(chain(6)).size() == 132);
    CHECK_THROWS_AS(enumerate_tolerances(chain(10)), SizeBound);
}

TEST_CASE("enumeration agrees with brute force") {
    for (const char* f : {"c3.json", "b2.json", "m3.json", "n5.json"}) {
        LatticePtr l = read_lattice_json(fixture(f));
        std::set<BitMatrix> got;
        for (const auto& t : enumerate_tolerances(l)) got.insert(t.bits());
        CHECK(got == oracle::brute_tolerances(*l));
    }
}

TEST_CASE("attached relation of the bottom gluing") {
    LatticePtr l = c3();
    Relation t1 = read_relation_json(fixture("t1.json"), l);
    CHECK(is_tolerance(t1));
    Relation r = wor_from_tolerance(t1);
    Relation r1 = read_relation_json(fixture("r1.json"), l);
    CHECK(r == r1);  // the order plus the flipped pair (m, 0)
    CHECK(is_rewor_by_characterization(r1));
    CHECK(tolerance_from_wor(r1) == t1);
    CHECK_THROWS_AS(wor_from_tolerance(r1), NotATolerance);
    CHECK_THROWS_AS(tolerance_from_wor(t1), NotAWor);  // t1 is not weak ordered
}

TEST_CASE("tolerance generation closes under joins and meets") {
    LatticePtr l = c3();
    CHECK(tolerance_generated_by(l, {{0, 2}}) == Relation::all_pairs(l));
    Relation t1 = read_relation_json(fixture("t1.json"), l);
    CHECK(tolerance_generated_by(l, {{0, 1}}) == t1);
    CHECK(tolerance_generated_by(l, {}) == Relation::diagonal(l));
}

TEST_CASE("join preserving maps give weak ordered relations") {
    LatticePtr l = c3();
    JoinEndomorphism up(l, {1, 2, 2});  // send everything one step up
    Relation r = wor_from_join_endomorphism(up);
    CHECK(is_weak_ordered(r));
    CHECK(r.contains(0, 1));
    CHECK(!r.contains(2, 1));
    JoinEndomorphism id(l, {0, 1, 2});
    CHECK(wor_from_join_endomorphism(id) == Relation::order_of(l));
    CHECK_THROWS_AS(JoinEndomorphism(l, {2, 0, 2}), NotAJoinEndomorphism);
}

TEST_CASE("reflexive weak ordered enumeration matches brute force") {
    for (const char* f : {"c3.json", "b2.json"}) {
        LatticePtr l = read_lattice_json(fixture(f));
        auto rewors = enumerate_rewor(l);
        auto tols = enumerate_tolerances(l);
        CHECK(rewors.size() == tols.size());
        std::set<BitMatrix> got;
        for (const auto& r : rewors) {
            CHECK(is_rewor_by_characterization(r));
            got.insert(r.bits());
        }
        CHECK(got == oracle::brute_rewor(*l));
    }
}

TEST_CASE("the two weak order checkers agree pointwise") {
    LatticePtr l = read_lattice_json(fixture("n5.json"));
    // walk every relation on a fixed support sample deterministically
    std::uint64_t state = 99;
    for (int s = 0; s < 500; ++s) {
        BitMatrix m(l->n, l->n);
        for (int i = 0; i < l->n; ++i)
            for (int j = 0; j < l->n; ++j) {
                state = state * 6364136223846793005ull + 1442695040888963407ull;
                if ((state >> 33) % 3 == 0) m.set(i, j);
            }
        Relation r(l, m);
        bool lib = is_weak_ordered(r);
        CHECK(lib == oracle::naive_weak_ordered(*l, m));
        CHECK(is_rewor_by_characterization(r) == (is_reflexive(r) && lib));
    }
}
