#include "tolfca/blocks.hpp"

#include <algorithm>
#include <string>

#include "tolfca/errors.hpp"

namespace tolfca {

namespace {

void bron_kerbosch(const std::vector<Bits>& adj, Bits r, Bits p, Bits x,
                   std::vector<Bits>& out) {
    if (p.none() && x.none()) {
        out.push_back(std::move(r));
        return;
    }
    // Pivot on the candidate covering most of p.
    int pivot = -1, best = -1;
    Bits both = p | x;
    both.for_each([&](int u) {
        int c = (p & adj[u]).count();
        if (c > best) {
            best = c;
            pivot = u;
        }
    });
    Bits ext = p & ~adj[pivot];
    ext.for_each([&](int v) {
        Bits r2 = r;
        r2.set(v);
        bron_kerbosch(adj, std::move(r2), p & adj[v], x & adj[v], out);
        p.reset(v);
        x.set(v);
    });
}

}  // namespace

std::vector<Block> blocks(const Relation& tolerance) {
    if (!is_tolerance(tolerance)) throw NotATolerance();
    const auto& L = *tolerance.host();
    int n = L.n;
    std::vector<Bits> adj(n, Bits(n));
    for (int x = 0; x < n; ++x) {
        adj[x] = tolerance.bits().row(x);
        adj[x].reset(x);
    }
    std::vector<Bits> cliques;
    bron_kerbosch(adj, Bits(n), Bits::full(n), Bits(n), cliques);

    std::vector<Block> out;
    out.reserve(cliques.size());
    for (auto& c : cliques) {
        Block b;
        b.host = tolerance.host();
        b.members = std::move(c);
        int lo = b.members.find_first(), hi = lo;
        b.members.for_each([&](int e) {
            lo = L.meet(lo, e);
            hi = L.join(hi, e);
        });
        b.bottom = lo;
        b.top = hi;
        // Every block of a tolerance is the whole interval between its bounds;
        // re-verify clique-ness and maximality on the recomputed interval.
        if (b.members != L.interval(lo, hi))
            throw Error("block of a tolerance is not an interval");
        bool clique = true;
        b.members.for_each([&](int e) {
            Bits rest = b.members;
            rest.reset(e);
            if (!rest.is_subset_of(adj[e])) clique = false;
        });
        if (!clique) throw Error("recomputed block interval is not a clique");
        for (int v = 0; v < n; ++v)
            if (!b.members.test(v) && b.members.is_subset_of(adj[v]))
                throw Error("block is not a maximal clique");
        b.ideal = L.down_set_of(hi);
        b.filter = L.up_set_of(lo);
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) {
        return std::pair(a.bottom, a.top) < std::pair(b.bottom, b.top);
    });
    return out;
}

std::vector<Block> block_of(const Relation& tolerance, int x) {
    std::vector<Block> out;
    for (auto& b : blocks(tolerance))
        if (b.members.test(x)) out.push_back(std::move(b));
    return out;
}

FactorLattice factor_lattice(const Relation& tolerance) {
    const auto& L = *tolerance.host();
    std::vector<Block> bs = blocks(tolerance);
    int k = int(bs.size());

    BitMatrix order(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (bs[i].ideal.is_subset_of(bs[j].ideal)) order.set(i, j);

    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (order.test(i, j) != bs[j].filter.is_subset_of(bs[i].filter))
                throw FactorNotALattice("ideal and filter orders of blocks disagree");
            if (i != j && order.test(i, j) && order.test(j, i))
                throw FactorNotALattice("two distinct blocks generate the same ideal");
        }

    std::vector<std::string> labels;
    labels.reserve(k);
    for (auto& b : bs)
        labels.push_back("[" + L.elem_names[b.bottom] + "," + L.elem_names[b.top] + "]");

    LatticePtr F;
    try {
        F = lattice_from_order("factor of " + L.name, std::move(labels), order);
    } catch (const NotALattice& e) {
        throw FactorNotALattice(std::string("block order is not a lattice: ") + e.what());
    }

    // Filters of joins and ideals of meets compose from the operands'
    // filters/ideals by plain intersection.
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            const Block& e = bs[F->join(i, j)];
            const Block& f = bs[F->meet(i, j)];
            if ((bs[i].filter & bs[j].filter) != e.filter)
                throw FactorNotALattice("filter of a block join is not the filter intersection");
            if ((bs[i].ideal & bs[j].ideal) != f.ideal)
                throw FactorNotALattice("ideal of a block meet is not the ideal intersection");
        }

    FactorLattice fl{tolerance.host(), tolerance, std::move(bs), std::move(order), std::move(F)};
    return fl;
}

}  // namespace tolfca
