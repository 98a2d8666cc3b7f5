#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tolfca/bits.hpp"

namespace tolfca {

// A finite lattice with its order matrix, join/meet tables and Hasse diagram.
// Instances are immutable after construction and shared through LatticePtr.
struct FiniteLattice {
    std::string name;
    int n = 0;
    std::vector<std::string> elem_names;
    BitMatrix leq;  // leq.test(x, y) iff x <= y; row(x) is the up-set of x
    BitMatrix geq;  // transpose of leq; row(x) is the down-set of x
    std::vector<int> join_tab;  // n*n row-major
    std::vector<int> meet_tab;
    std::vector<std::pair<int, int>> covers;  // (lower, upper); transitive reduction of leq
    std::vector<int> heights;                 // longest chain length from bottom
    int bottom = 0, top = 0;

    bool le(int x, int y) const { return leq.test(x, y); }
    int join(int x, int y) const { return join_tab[x * n + y]; }
    int meet(int x, int y) const { return meet_tab[x * n + y]; }
    const Bits& up_set_of(int x) const { return leq.row(x); }
    const Bits& down_set_of(int x) const { return geq.row(x); }
    int height(int x) const { return heights[x]; }
    Bits interval(int lo, int hi) const { return up_set_of(lo) & down_set_of(hi); }
    std::optional<int> index_of(std::string_view label) const;
};

using LatticePtr = std::shared_ptr<const FiniteLattice>;

// Builds a lattice from labels and cover pairs (lower, upper). The order is
// the reflexive-transitive closure of the covers. Throws EmptyInput,
// DuplicateLabel, UnknownLabel, CycleDetected, or NotALattice.
LatticePtr build_lattice(std::string name, std::vector<std::string> elem_names,
                         const std::vector<std::pair<std::string, std::string>>& covers);

// Same, but from an order matrix that must already be reflexive, antisymmetric
// and transitive. Throws NotALattice when some pair lacks a join or meet.
LatticePtr lattice_from_order(std::string name, std::vector<std::string> elem_names,
                              BitMatrix leq);

struct SubsetView {
    LatticePtr host;
    Bits members;
};

struct DownSetResult {
    SubsetView set;
    bool join_closed = false;
};
struct UpSetResult {
    SubsetView set;
    bool meet_closed = false;
};

// Order ideal generated by a nonempty subset, with a flag telling whether the
// result is closed under binary joins. Throws EmptyInput.
DownSetResult down_set(const SubsetView& x);
// Dual: order filter plus meet-closure flag.
UpSetResult up_set(const SubsetView& x);

// Nonempty, closed under binary join and meet, and order-convex.
bool is_convex_sublattice(const SubsetView& x);

// (meet of X, join of X) for nonempty X. When is_convex_sublattice(x) holds,
// X equals the interval between the two.
std::pair<int, int> interval_hull(const SubsetView& x);

// An order isomorphism a -> b as an index map, or nullopt.
std::optional<std::vector<int>> are_isomorphic(const FiniteLattice& a, const FiniteLattice& b);

// Order-matrix helpers shared by the factor and concept constructions.
bool is_partial_order(const BitMatrix& m);
std::vector<std::pair<int, int>> transitive_reduction(const BitMatrix& leq);

}  // namespace tolfca
