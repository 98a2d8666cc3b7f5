#include "tolfca/fca.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "tolfca/errors.hpp"

namespace tolfca {

int ConceptLattice::index_of_extent(const Bits& extent) const {
    for (std::size_t i = 0; i < concepts.size(); ++i)
        if (concepts[i].extent == extent) return int(i);
    return -1;
}

Bits derive_intent(const FormalContext& k, const Bits& a) {
    Bits b = Bits::full(int(k.attributes.size()));
    a.for_each([&](int g) { b &= k.incidence.row(g); });
    return b;
}

Bits derive_extent(const FormalContext& k, const Bits& b) {
    Bits a(int(k.objects.size()));
    for (int g = 0; g < int(k.objects.size()); ++g)
        if (b.is_subset_of(k.incidence.row(g))) a.set(g);
    return a;
}

namespace {

std::string set_label(const std::vector<std::string>& names, const Bits& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int i) {
        if (!first) out += ",";
        out += names[i];
        first = false;
    });
    return out + "}";
}

}  // namespace

ConceptLattice concepts(const FormalContext& k, int max_cells) {
    int ng = int(k.objects.size()), nm = int(k.attributes.size());
    if (ng * nm > max_cells)
        throw SizeBound("context has " + std::to_string(ng * nm) + " cells, bound is " +
                        std::to_string(max_cells));

    // Intents are exactly the intersections of object rows (the empty
    // intersection giving the full attribute set), so close under meeting
    // rows one at a time.
    std::set<Bits> intents;
    std::deque<Bits> queue;
    auto push = [&](const Bits& b) {
        if (intents.insert(b).second) queue.push_back(b);
    };
    push(Bits::full(nm));
    while (!queue.empty()) {
        Bits b = std::move(queue.front());
        queue.pop_front();
        for (int g = 0; g < ng; ++g) push(b & k.incidence.row(g));
    }

    ConceptLattice cl;
    cl.context = k;
    for (const Bits& b : intents) cl.concepts.push_back({derive_extent(k, b), b});
    std::sort(cl.concepts.begin(), cl.concepts.end(),
              [](const Concept& a, const Concept& b) { return a.extent < b.extent; });

    int kc = int(cl.concepts.size());
    BitMatrix order(kc, kc);
    for (int i = 0; i < kc; ++i)
        for (int j = 0; j < kc; ++j)
            if (cl.concepts[i].extent.is_subset_of(cl.concepts[j].extent)) order.set(i, j);
    for (int i = 0; i < kc; ++i)
        for (int j = 0; j < kc; ++j)
            if (order.test(i, j) != cl.concepts[j].intent.is_subset_of(cl.concepts[i].intent))
                throw Error("extent and intent orders of concepts disagree");

    std::vector<std::string> labels;
    labels.reserve(kc);
    for (const auto& c : cl.concepts)
        labels.push_back(set_label(k.objects, c.extent) + "|" + set_label(k.attributes, c.intent));
    cl.as_lattice = lattice_from_order("concepts", std::move(labels), order);

    // In any concept lattice the join's intent is the intent intersection and
    // the meet's extent is the extent intersection.
    for (int i = 0; i < kc; ++i)
        for (int j = i; j < kc; ++j) {
            const Concept& join = cl.concepts[cl.as_lattice->join(i, j)];
            const Concept& meet = cl.concepts[cl.as_lattice->meet(i, j)];
            if (join.intent != (cl.concepts[i].intent & cl.concepts[j].intent))
                throw Error("concept join intent is not the intent intersection");
            if (meet.extent != (cl.concepts[i].extent & cl.concepts[j].extent))
                throw Error("concept meet extent is not the extent intersection");
        }
    return cl;
}

Concept object_concept(const FormalContext& k, int g) {
    Bits b = k.incidence.row(g);
    return {derive_extent(k, b), b};
}

Concept attribute_concept(const FormalContext& k, int m) {
    Bits a = k.incidence.column(m);
    return {a, derive_intent(k, a)};
}

ConceptLattice dm_completion(const std::vector<std::string>& names, const BitMatrix& leq) {
    if (names.empty()) throw EmptyInput("completion of empty poset");
    if (!is_partial_order(leq)) throw Error("order matrix is not a partial order");
    return concepts({names, names, leq});
}

ConceptLattice dm_completion(const FiniteLattice& l) {
    return dm_completion(l.elem_names, l.leq);
}

FormalContext tolerance_context(const Relation& tolerance) {
    Relation r = wor_from_tolerance(tolerance);
    const auto& L = *tolerance.host();
    return {L.elem_names, L.elem_names, r.bits()};
}

BlockConceptCorrespondence block_concept_correspondence(const Relation& tolerance) {
    BlockConceptCorrespondence bc{factor_lattice(tolerance), concepts(tolerance_context(tolerance)),
                                  {}, {}, {}};
    const auto& bs = bc.factor.blocks;
    const auto& cs = bc.concept_lattice.concepts;

    bc.block_to_concept.assign(bs.size(), -1);
    for (std::size_t i = 0; i < bs.size(); ++i) {
        for (std::size_t c = 0; c < cs.size(); ++c)
            if (cs[c].extent == bs[i].ideal && cs[c].intent == bs[i].filter) {
                bc.block_to_concept[i] = int(c);
                break;
            }
        if (bc.block_to_concept[i] == -1)
            throw CorrespondenceViolation("block has no concept matching its ideal and filter");
    }

    bc.concept_to_block.assign(cs.size(), -1);
    for (std::size_t c = 0; c < cs.size(); ++c) {
        Bits inter = cs[c].extent & cs[c].intent;
        if (inter.none()) {
            bc.empty_intersection_concepts.push_back(int(c));
            continue;
        }
        for (std::size_t i = 0; i < bs.size(); ++i)
            if (bs[i].members == inter) {
                bc.concept_to_block[c] = int(i);
                break;
            }
        if (bc.concept_to_block[c] == -1)
            throw CorrespondenceViolation("concept extent-intent intersection is not a block");
        const Block& b = bs[bc.concept_to_block[c]];
        if (b.ideal != cs[c].extent || b.filter != cs[c].intent)
            throw CorrespondenceViolation(
                "concept with nonempty intersection is not ((B], [B)) of its block");
    }

    // The two maps must invert each other on their domains.
    for (std::size_t i = 0; i < bs.size(); ++i)
        if (bc.concept_to_block[bc.block_to_concept[i]] != int(i))
            throw CorrespondenceViolation("block to concept map is not inverted by its partner");
    for (std::size_t c = 0; c < cs.size(); ++c)
        if (bc.concept_to_block[c] != -1 &&
            bc.block_to_concept[bc.concept_to_block[c]] != int(c))
            throw CorrespondenceViolation("concept to block map is not inverted by its partner");
    return bc;
}

BlockEmbedding block_embedding(const Relation& tolerance) {
    BlockConceptCorrespondence bc = block_concept_correspondence(tolerance);
    BlockEmbedding d{std::move(bc.factor), std::move(bc.concept_lattice),
                     std::move(bc.block_to_concept)};
    int k = int(d.factor.blocks.size());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (j > i && d.block_to_concept[i] == d.block_to_concept[j])
                throw EmbeddingViolation("block embedding is not injective");
            bool below = d.factor.order.test(i, j);
            bool image_below = d.concept_lattice.as_lattice->le(d.block_to_concept[i],
                                                                d.block_to_concept[j]);
            if (below != image_below)
                throw EmbeddingViolation("block embedding does not preserve and reflect order");
        }
    const auto& F = *d.factor.as_lattice;
    const auto& C = *d.concept_lattice.as_lattice;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            if (d.block_to_concept[F.join(i, j)] !=
                C.join(d.block_to_concept[i], d.block_to_concept[j]))
                throw EmbeddingViolation("block embedding does not preserve binary joins");
            if (d.block_to_concept[F.meet(i, j)] !=
                C.meet(d.block_to_concept[i], d.block_to_concept[j]))
                throw EmbeddingViolation("block embedding does not preserve binary meets");
        }
    return d;
}

FactorConceptIso verify_factor_concept_iso(const Relation& tolerance) {
    FactorConceptIso res;
    BlockEmbedding d = block_embedding(tolerance);
    const auto& C = *d.concept_lattice.as_lattice;

    res.factor_iso_concepts = are_isomorphic(*d.factor.as_lattice, C).has_value();
    if (!res.factor_iso_concepts) res.witness = "factor lattice not isomorphic to concepts";

    ConceptLattice dm = dm_completion(*d.factor.as_lattice);
    res.completion_iso_concepts = are_isomorphic(*dm.as_lattice, C).has_value();
    if (!res.completion_iso_concepts && res.witness.empty())
        res.witness = "completion of factor lattice not isomorphic to concepts";

    // Join- and meet-density of the embedded image, with the empty join being
    // the bottom and the empty meet the top.
    Bits image(C.n);
    for (int c : d.block_to_concept) image.set(c);
    res.sup_dense = true;
    res.inf_dense = true;
    for (int c = 0; c < C.n; ++c) {
        int join = C.bottom, meet = C.top;
        image.for_each([&](int e) {
            if (C.le(e, c)) join = C.join(join, e);
            if (C.le(c, e)) meet = C.meet(meet, e);
        });
        if (join != c) res.sup_dense = false;
        if (meet != c) res.inf_dense = false;
    }
    if (!(res.sup_dense && res.inf_dense) && res.witness.empty())
        res.witness = "embedded image is not dense";
    return res;
}

}  // namespace tolfca
