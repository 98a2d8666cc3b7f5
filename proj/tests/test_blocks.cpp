#include "doctest.h"
#include "helpers.hpp"
#include "tolfca/blocks.hpp"
#include "tolfca/corpus.hpp"
#include "tolfca/errors.hpp"
#include "tolfca/io.hpp"

using namespace tolfca;

TEST_CASE("gluing the chain at the middle gives two blocks") {
    LatticePtr l = read_lattice_json(fixture("c3.json"));
    Relation glued = read_relation_json(fixture("glued.json"), l);
    auto bs = blocks(glued);
    REQUIRE(bs.size() == 2);
    CHECK(bs[0].bottom == 0);
    CHECK(bs[0].top == 1);
    CHECK(bs[1].bottom == 1);
    CHECK(bs[1].top == 2);
    CHECK(bs[0].members.to_indices() == std::vector<int>{0, 1});
    CHECK(bs[1].members.to_indices() == std::vector<int>{1, 2});
    // ideal of the lower block stops below the top; filter reaches the top
    CHECK(bs[0].ideal.to_indices() == std::vector<int>{0, 1});
    CHECK(bs[0].filter.count() == 3);
    CHECK(bs[1].ideal.count() == 3);

    FactorLattice f = factor_lattice(glued);
    CHECK(f.as_lattice->n == 2);
    CHECK(f.order.test(0, 1));
    CHECK(!f.order.test(1, 0));
    CHECK(f.as_lattice->elem_names[0] == "[0,m]");
    CHECK(f.as_lattice->elem_names[1] == "[m,1]");
    CHECK(are_isomorphic(*f.as_lattice, *named_lattice("C2")));
}

TEST_CASE("identity and full tolerances collapse trivially") {
    LatticePtr l = read_lattice_json(fixture("n5.json"));
    FactorLattice by_diag = factor_lattice(Relation::diagonal(l));
    CHECK(by_diag.as_lattice->n == l->n);
    CHECK(are_isomorphic(*by_diag.as_lattice, *l));
    FactorLattice by_all = factor_lattice(Relation::all_pairs(l));
    CHECK(by_all.as_lattice->n == 1);
    CHECK(by_all.blocks[0].members.count() == 5);
}

TEST_CASE("blocks are intervals that cover") {
    LatticePtr l = read_lattice_json(fixture("hexagon.json"));
    for (const auto& t : enumerate_tolerances(l)) {
        Bits covered(l->n);
        for (const auto& b : blocks(t)) {
            CHECK(b.members == l->interval(b.bottom, b.top));
            CHECK(is_convex_sublattice({l, b.members}));
            covered |= b.members;
        }
        CHECK(covered == Bits::full(l->n));
    }
}

TEST_CASE("membership lookup finds every enclosing block") {
    LatticePtr l = read_lattice_json(fixture("c3.json"));
    Relation glued = read_relation_json(fixture("glued.json"), l);
    auto around_middle = block_of(glued, 1);
    CHECK(around_middle.size() == 2);
    auto around_bottom = block_of(glued, 0);
    CHECK(around_bottom.size() == 1);
    CHECK(around_bottom[0].bottom == 0);
}

TEST_CASE("non tolerances are rejected") {
    LatticePtr l = read_lattice_json(fixture("c3.json"));
    Relation r1 = read_relation_json(fixture("r1.json"), l);
    CHECK_THROWS_AS(blocks(r1), NotATolerance);
    CHECK_THROWS_AS(factor_lattice(r1), NotATolerance);
}

TEST_CASE("factor respects the simple diamond") {
    LatticePtr m3 = read_lattice_json(fixture("m3.json"));
    auto tols = enumerate_tolerances(m3);
    CHECK(tols.size() == 2);  // only the diagonal and everything
    for (const auto& t : tols) {
        FactorLattice f = factor_lattice(t);
        CHECK((f.as_lattice->n == 1 || f.as_lattice->n == m3->n));
    }
}
