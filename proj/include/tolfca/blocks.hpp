#pragma once

#include <vector>

#include "tolfca/relation.hpp"

namespace tolfca {

// A maximal subset whose square lies inside a tolerance. Blocks of a finite
// lattice tolerance are intervals, so each one carries its endpoints, the
// ideal it generates (down-set of top) and the filter (up-set of bottom).
struct Block {
    LatticePtr host;
    Bits members;
    Bits ideal;
    Bits filter;
    int bottom = 0, top = 0;
};

struct FactorLattice {
    LatticePtr source;
    Relation tolerance;
    std::vector<Block> blocks;
    BitMatrix order;  // order.test(i, j) iff block i <= block j, i.e. ideal_i inside ideal_j
    LatticePtr as_lattice;
};

// All blocks of a tolerance, sorted by (bottom, top). Throws NotATolerance.
std::vector<Block> blocks(const Relation& tolerance);

// The lattice of blocks, ordered by inclusion of their ideals. Validates that
// the block order is a lattice and that filters/ideals of joins and meets
// compose by intersection; violations raise FactorNotALattice (they cannot
// occur for a tolerance).
FactorLattice factor_lattice(const Relation& tolerance);

// The blocks containing a given element, in blocks() order.
std::vector<Block> block_of(const Relation& tolerance, int x);

}  // namespace tolfca
