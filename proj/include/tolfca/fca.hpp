#pragma once

#include <string>
#include <vector>

#include "tolfca/blocks.hpp"

namespace tolfca {

struct FormalContext {
    std::vector<std::string> objects;
    std::vector<std::string> attributes;
    BitMatrix incidence;  // objects x attributes
};

struct Concept {
    Bits extent;
    Bits intent;
    bool operator==(const Concept&) const = default;
};

struct ConceptLattice {
    FormalContext context;
    std::vector<Concept> concepts;  // sorted by extent
    LatticePtr as_lattice;          // ordered by extent inclusion

    // Index of the concept with this extent, or -1.
    int index_of_extent(const Bits& extent) const;
};

// Attributes shared by all objects of a.
Bits derive_intent(const FormalContext& k, const Bits& a);
// Objects having all attributes of b.
Bits derive_extent(const FormalContext& k, const Bits& b);

// All formal concepts, their inclusion order and the order as a lattice.
// Throws SizeBound when |objects| * |attributes| exceeds max_cells.
ConceptLattice concepts(const FormalContext& k, int max_cells = 1 << 16);

// Object concept: the smallest concept whose extent contains the object.
Concept object_concept(const FormalContext& k, int g);
// Attribute concept: the largest concept whose intent contains the attribute.
Concept attribute_concept(const FormalContext& k, int m);

// Dedekind-MacNeille completion as the concept lattice of (P, P, <=). The
// matrix must be a partial order.
ConceptLattice dm_completion(const std::vector<std::string>& names, const BitMatrix& leq);
ConceptLattice dm_completion(const FiniteLattice& l);

// The context (L, L, <= ; T ; <=) of a tolerance. Throws NotATolerance.
FormalContext tolerance_context(const Relation& tolerance);

// The bijection between blocks of T and concepts of tolerance_context(T)
// with nonempty extent-intent intersection. Throws CorrespondenceViolation
// if verification fails (it cannot for a tolerance).
struct BlockConceptCorrespondence {
    FactorLattice factor;
    ConceptLattice concept_lattice;
    std::vector<int> block_to_concept;              // per block, index of its concept
    std::vector<int> concept_to_block;              // -1 for empty-intersection concepts
    std::vector<int> empty_intersection_concepts;   // indices with extent/intent disjoint
};
BlockConceptCorrespondence block_concept_correspondence(const Relation& tolerance);

// Block B -> concept ((B], [B)): injective, order-preserving and -reflecting,
// preserving binary joins and meets. Throws EmbeddingViolation on failure.
struct BlockEmbedding {
    FactorLattice factor;
    ConceptLattice concept_lattice;
    std::vector<int> block_to_concept;
};
BlockEmbedding block_embedding(const Relation& tolerance);

// Factor lattice, its completion and the tolerance's concept lattice are one
// lattice up to isomorphism; the embedded image is join- and meet-dense.
struct FactorConceptIso {
    bool factor_iso_concepts = false;      // L/T vs concept lattice
    bool completion_iso_concepts = false;  // DM(L/T) vs concept lattice
    bool sup_dense = false;
    bool inf_dense = false;
    std::string witness;
    bool ok() const {
        return factor_iso_concepts && completion_iso_concepts && sup_dense && inf_dense;
    }
};
FactorConceptIso verify_factor_concept_iso(const Relation& tolerance);

}  // namespace tolfca
