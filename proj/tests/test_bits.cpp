#include "doctest.h"
#include "tolfca/bits.hpp"

using namespace tolfca;

TEST_CASE("bit set basics") {
    Bits b(70);
    CHECK(b.size() == 70);
    CHECK(b.none());
    b.set(0);
    b.set(69);
    CHECK(b.test(0));
    CHECK(b.test(69));
    CHECK(!b.test(35));
    CHECK(b.count() == 2);
    b.reset(0);
    CHECK(!b.test(0));
    CHECK(b.any());
}

TEST_CASE("bit set algebra") {
    Bits a(10), b(10);
    a.set(1);
    a.set(3);
    b.set(3);
    b.set(5);
    Bits both = a & b;
    CHECK(both.count() == 1);
    CHECK(both.test(3));
    Bits either = a | b;
    CHECK(either.count() == 3);
    CHECK((a & b).is_subset_of(a));
    CHECK(a.is_subset_of(either));
    CHECK(!a.is_subset_of(b));
    Bits full = Bits::full(10);
    CHECK(full.count() == 10);
    CHECK((~full).none());
    CHECK((~a).count() == 8);
}

TEST_CASE("bit set traversal") {
    Bits a(130);
    a.set(2);
    a.set(64);
    a.set(129);
    CHECK(a.find_first() == 2);
    CHECK(a.to_indices() == std::vector<int>{2, 64, 129});
    int sum = 0;
    a.for_each([&](int i) { sum += i; });
    CHECK(sum == 2 + 64 + 129);
}

TEST_CASE("bit set ordering reads like a binary word") {
    // bit 0 is the most significant position: {0} beats {1,2,...}
    Bits a(5), b(5);
    a.set(0);
    b.set(1);
    b.set(2);
    b.set(3);
    b.set(4);
    CHECK(a > b);
    Bits c = a;
    c.set(4);
    CHECK(c > a);  // same prefix, extra bit later
    CHECK(a == a);
    CHECK(Bits(5) < b);
}

TEST_CASE("matrix transpose and composition") {
    BitMatrix m(2, 3);
    m.set(0, 2);
    m.set(1, 0);
    BitMatrix t = m.transposed();
    CHECK(t.rows() == 3);
    CHECK(t.cols() == 2);
    CHECK(t.test(2, 0));
    CHECK(t.test(0, 1));
    CHECK(t.count() == 2);

    // composition: (0->1) ; (1->2) gives 0->2
    BitMatrix r(3, 3), s(3, 3);
    r.set(0, 1);
    s.set(1, 2);
    BitMatrix rs = composed(r, s);
    CHECK(rs.test(0, 2));
    CHECK(rs.count() == 1);
    CHECK(composed(s, r).count() == 0);

    BitMatrix id = BitMatrix::identity(3);
    CHECK(composed(id, r) == r);
    CHECK(composed(r, id) == r);
}

TEST_CASE("matrix column and subset") {
    BitMatrix m(3, 3);
    m.set(0, 1);
    m.set(2, 1);
    Bits col = m.column(1);
    CHECK(col.test(0));
    CHECK(col.test(2));
    CHECK(col.count() == 2);
    BitMatrix bigger = m;
    bigger.set(1, 1);
    CHECK(m.is_subset_of(bigger));
    CHECK(!bigger.is_subset_of(m));
    CHECK((m & bigger) == m);
    CHECK((m | bigger) == bigger);
}
