#pragma once

#include <string>
#include <vector>

#include "tolfca/lattice.hpp"

namespace tolfca {

enum class Provenance { enumerated, named, loaded };

struct CorpusEntry {
    LatticePtr lattice;
    Provenance provenance = Provenance::enumerated;
};

struct Corpus {
    std::vector<CorpusEntry> entries;
};

// Stock lattices: chains C2..C5, the squares B2 and cube B3, the pentagon N5,
// the diamond M3 and the hexagon. Throws UnknownLabel for other ids.
LatticePtr named_lattice(const std::string& id);
const std::vector<std::string>& named_lattice_ids();

// All lattices with exactly n elements, one per isomorphism class, in a
// deterministic order.
std::vector<LatticePtr> enumerate_lattices(int n);

// Enumerated lattices of every size up to nmax followed by the named stock.
// Throws SizeBound unless 1 <= nmax <= 8.
Corpus generate_corpus(int nmax);

}  // namespace tolfca
