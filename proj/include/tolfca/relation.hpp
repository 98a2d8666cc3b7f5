#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "tolfca/lattice.hpp"

namespace tolfca {

// A binary relation on the elements of one lattice.
class Relation {
public:
    Relation(LatticePtr host, BitMatrix bits);

    static Relation empty_rel(LatticePtr host);
    static Relation diagonal(LatticePtr host);
    static Relation all_pairs(LatticePtr host);
    static Relation order_of(LatticePtr host);

    const LatticePtr& host() const { return host_; }
    const BitMatrix& bits() const { return bits_; }
    int n() const { return bits_.rows(); }
    bool contains(int x, int y) const { return bits_.test(x, y); }
    std::vector<std::pair<int, int>> pairs() const;

    bool operator==(const Relation& o) const { return host_ == o.host_ && bits_ == o.bits_; }
    std::strong_ordering operator<=>(const Relation& o) const { return bits_ <=> o.bits_; }

private:
    LatticePtr host_;
    BitMatrix bits_;
};

// Relational product r ; s. Throws HostMismatch when hosts differ.
Relation compose(const Relation& r, const Relation& s);
Relation inverse(const Relation& r);
Relation intersect(const Relation& r, const Relation& s);
Relation unite(const Relation& r, const Relation& s);
bool subset(const Relation& r, const Relation& s);

bool is_reflexive(const Relation& r);
bool is_symmetric(const Relation& r);
// Closed under componentwise join and meet, i.e. a subrelation of the square
// that is a sublattice.
bool is_compatible(const Relation& r);
bool is_tolerance(const Relation& r);

// The inductive definition: <=;r;<= inside r, join closure of each column for
// element pairs, meet closure of each row. The empty relation qualifies.
bool is_weak_ordered(const Relation& r);
// Equivalent test for reflexive weak ordered relations: reflexive, compatible
// and <= ; r ; <= == r.
bool is_rewor_by_characterization(const Relation& r);

// r intersected with its inverse; the tolerance attached to a reflexive weak
// ordered relation. Throws NotAWor.
Relation tolerance_from_wor(const Relation& r);
// <= ; t ; <=, the reflexive weak ordered relation attached to a tolerance.
// Throws NotATolerance.
Relation wor_from_tolerance(const Relation& t);

// A join-preserving self-map; validated at construction.
struct JoinEndomorphism {
    JoinEndomorphism(LatticePtr host, std::vector<int> map);
    LatticePtr host;
    std::vector<int> map;
};

// {(x, y) : f(x) <= y}, always weak ordered.
Relation wor_from_join_endomorphism(const JoinEndomorphism& f);

// Least tolerance containing the given pairs (fixpoint closure).
Relation tolerance_generated_by(LatticePtr host, const std::vector<std::pair<int, int>>& pairs);

// All tolerances of the host, sorted by bit-matrix lexicographic order.
// Throws SizeBound when the lattice exceeds max_elements.
std::vector<Relation> enumerate_tolerances(LatticePtr host, int max_elements = 9);
// All reflexive weak ordered relations, via the attached-tolerance bijection.
std::vector<Relation> enumerate_rewor(LatticePtr host, int max_elements = 9);

}  // namespace tolfca
