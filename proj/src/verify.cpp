#include "tolfca/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>

#include "tolfca/errors.hpp"

namespace tolfca {

namespace {

// splitmix64; all sampling is derived from it so reports are reproducible.
struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    int below(int n) { return int(next() % std::uint64_t(n)); }
};

std::uint64_t fnv(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
    return h;
}

std::string tid(int i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "t%04d", i);
    return buf;
}

BitMatrix compose3(const BitMatrix& a, const BitMatrix& b, const BitMatrix& c) {
    return composed(composed(a, b), c);
}

bool is_ideal_set(const FiniteLattice& L, const Bits& a) {
    bool ok = true;
    a.for_each([&](int x) {
        if (!L.down_set_of(x).is_subset_of(a)) ok = false;
    });
    if (!ok) return false;
    auto idx = a.to_indices();
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i; j < idx.size(); ++j)
            if (!a.test(L.join(idx[i], idx[j]))) return false;
    return true;
}

bool is_filter_set(const FiniteLattice& L, const Bits& a) {
    bool ok = true;
    a.for_each([&](int x) {
        if (!L.up_set_of(x).is_subset_of(a)) ok = false;
    });
    if (!ok) return false;
    auto idx = a.to_indices();
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i; j < idx.size(); ++j)
            if (!a.test(L.meet(idx[i], idx[j]))) return false;
    return true;
}

Bits random_subset(Rng& rng, int n) {
    Bits b(n);
    for (int i = 0; i < n; ++i)
        if (rng.next() & 1) b.set(i);
    return b;
}

BitMatrix random_relation(Rng& rng, int n, int density_percent) {
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (int(rng.next() % 100) < density_percent) m.set(i, j);
    return m;
}

// Join-preserving self-maps: all of them for small lattices, otherwise the
// identity, the constants and whatever a bounded random search finds.
std::vector<std::vector<int>> join_endomorphism_sample(const FiniteLattice& L, Rng& rng,
                                                       int cap) {
    std::vector<std::vector<int>> out;
    int n = L.n;
    auto valid = [&](const std::vector<int>& f) {
        for (int x = 0; x < n; ++x)
            for (int y = x; y < n; ++y)
                if (f[L.join(x, y)] != L.join(f[x], f[y])) return false;
        return true;
    };
    if (n <= 6) {
        std::vector<int> f(n, 0);
        while (true) {
            if (valid(f)) out.push_back(f);
            int k = n - 1;
            while (k >= 0 && f[k] == n - 1) f[k--] = 0;
            if (k < 0) break;
            ++f[k];
        }
    } else {
        std::vector<int> id(n);
        for (int i = 0; i < n; ++i) id[i] = i;
        out.push_back(id);
        for (int c = 0; c < n; ++c) out.push_back(std::vector<int>(n, c));
        for (int tries = 0; tries < 4000 && int(out.size()) < cap; ++tries) {
            std::vector<int> f(n);
            for (int i = 0; i < n; ++i) f[i] = rng.below(n);
            if (valid(f)) out.push_back(std::move(f));
        }
    }
    if (int(out.size()) > cap) {
        // deterministic thinning: keep evenly spaced representatives
        std::vector<std::vector<int>> kept;
        for (int i = 0; i < cap; ++i) kept.push_back(out[std::size_t(i) * out.size() / cap]);
        out = std::move(kept);
    }
    return out;
}

// Per-tolerance derived data, shared by several checks.
struct TolPipeline {
    std::vector<Block> blocks;
    std::string blocks_error;
    std::optional<FactorLattice> factor;
    std::string factor_error;
    std::optional<ConceptLattice> cl;
    std::string cl_error;
    std::string corr_error;
    std::string embed_error;
    FactorConceptIso iso;
    bool iso_valid = false;
};

struct LatticeContext {
    LatticePtr L;
    std::string id;
    std::vector<Relation> tolerances;
    std::vector<Relation> rewors;  // rewors[i] is the attached relation of tolerances[i]
    std::vector<BitMatrix> re_sample;
    std::vector<TolPipeline> pipeline;
};

LatticeContext build_context(const LatticePtr& L, const CheckConfig& cfg) {
    LatticeContext ctx;
    ctx.L = L;
    ctx.id = L->name;
    ctx.tolerances = enumerate_tolerances(L);
    ctx.rewors.reserve(ctx.tolerances.size());
    for (const auto& t : ctx.tolerances) ctx.rewors.push_back(wor_from_tolerance(t));

    // Compatible reflexive relations to exercise: the tolerances, the
    // attached relations and their pairwise compositions. The composition
    // pass is capped so huge tolerance lattices stay affordable.
    std::set<BitMatrix> sample;
    for (const auto& t : ctx.tolerances) sample.insert(t.bits());
    for (const auto& r : ctx.rewors) sample.insert(r.bits());
    std::vector<BitMatrix> base(sample.begin(), sample.end());
    int cap = std::max(1, cfg.pair_sample_budget / 100);
    if (int(base.size()) > cap) {
        std::vector<BitMatrix> kept;
        for (int i = 0; i < cap; ++i) kept.push_back(base[std::size_t(i) * base.size() / cap]);
        base = std::move(kept);
    }
    for (const auto& a : base)
        for (const auto& b : base) sample.insert(composed(a, b));
    ctx.re_sample.assign(sample.begin(), sample.end());

    ctx.pipeline.resize(ctx.tolerances.size());
    for (std::size_t i = 0; i < ctx.tolerances.size(); ++i) {
        TolPipeline& p = ctx.pipeline[i];
        const Relation& t = ctx.tolerances[i];
        try {
            p.factor = factor_lattice(t);
            p.blocks = p.factor->blocks;
        } catch (const FactorNotALattice& e) {
            p.factor_error = e.what();
        } catch (const Error& e) {
            p.blocks_error = e.what();
        }
        if (!p.factor && p.blocks_error.empty()) {
            try {
                p.blocks = blocks(t);
            } catch (const Error& e) {
                p.blocks_error = e.what();
            }
        }
        try {
            p.cl = concepts(tolerance_context(t));
        } catch (const Error& e) {
            p.cl_error = e.what();
        }
        try {
            p.iso = verify_factor_concept_iso(t);
            p.iso_valid = true;
        } catch (const FactorNotALattice& e) {
            if (p.factor_error.empty()) p.factor_error = e.what();
        } catch (const CorrespondenceViolation& e) {
            p.corr_error = e.what();
        } catch (const EmbeddingViolation& e) {
            p.embed_error = e.what();
        } catch (const Error& e) {
            if (p.blocks_error.empty()) p.blocks_error = e.what();
        }
    }
    return ctx;
}

using Emit = std::function<void(const std::string& tol_id, bool pass, const std::string& witness)>;

// Walks either every index pair below the budget or a seeded sample.
template <class Fn>
void pair_walk(int count, const CheckConfig& cfg, Rng& rng, Fn&& fn) {
    long total = long(count) * count;
    if (total <= cfg.pair_sample_budget) {
        for (int i = 0; i < count; ++i)
            for (int j = 0; j < count; ++j) fn(i, j);
    } else {
        for (int s = 0; s < cfg.pair_sample_budget; ++s) fn(rng.below(count), rng.below(count));
    }
}

template <class Fn>
void triple_walk(int count, const CheckConfig& cfg, Rng& rng, bool force_exhaustive, Fn&& fn) {
    long total = long(count) * count * count;
    if (force_exhaustive || total <= cfg.exhaustive_triple_budget) {
        for (int i = 0; i < count; ++i)
            for (int j = 0; j < count; ++j)
                for (int k = 0; k < count; ++k) fn(i, j, k);
    } else {
        for (int s = 0; s < cfg.triple_samples; ++s)
            fn(rng.below(count), rng.below(count), rng.below(count));
    }
}

// ---- relation checks ----

void chk_wor_monoid(const LatticeContext& ctx, const CheckConfig& cfg, Rng& rng,
                    const Emit& emit) {
    const auto& L = *ctx.L;
    for (std::size_t i = 0; i < ctx.rewors.size(); ++i) {
        const BitMatrix& r = ctx.rewors[i].bits();
        bool ok = composed(L.leq, r) == r && composed(r, L.leq) == r;
        emit(tid(int(i)), ok, ok ? "" : "the order is not a composition unit here");
    }
    bool closed = true;
    std::string w;
    pair_walk(int(ctx.rewors.size()), cfg, rng, [&](int i, int j) {
        if (!closed) return;
        Relation c = compose(ctx.rewors[i], ctx.rewors[j]);
        if (!is_weak_ordered(c) || !is_reflexive(c)) {
            closed = false;
            w = "composition " + tid(i) + ";" + tid(j) + " left the monoid";
        }
    });
    emit("", closed, w);
    if (L.n <= 4) {
        bool assoc = true;
        int m = int(ctx.rewors.size());
        for (int i = 0; i < m && assoc; ++i)
            for (int j = 0; j < m && assoc; ++j)
                for (int k = 0; k < m && assoc; ++k)
                    if (composed(composed(ctx.rewors[i].bits(), ctx.rewors[j].bits()),
                                 ctx.rewors[k].bits()) !=
                        composed(ctx.rewors[i].bits(),
                                 composed(ctx.rewors[j].bits(), ctx.rewors[k].bits())))
                        assoc = false;
        emit("", assoc, assoc ? "" : "composition is not associative");
    }
}

void chk_wor_distributivity(const LatticeContext& ctx, const CheckConfig& cfg, Rng& rng,
                            const Emit& emit) {
    const int m = int(ctx.rewors.size());
    bool ok = true;
    std::string w;
    triple_walk(m, cfg, rng, ctx.L->n <= 5, [&](int i, int j, int k) {
        if (!ok) return;
        const BitMatrix &r1 = ctx.rewors[i].bits(), &r2 = ctx.rewors[j].bits(),
                        &s = ctx.rewors[k].bits();
        if (composed(r1 & r2, s) != (composed(r1, s) & composed(r2, s)) ||
            composed(s, r1 & r2) != (composed(s, r1) & composed(s, r2))) {
            ok = false;
            w = "distributivity fails at " + tid(i) + "," + tid(j) + "," + tid(k);
        }
    });
    emit("", ok, w);
}

void chk_wor_intersection(const LatticeContext& ctx, const CheckConfig& cfg, Rng& rng,
                          const Emit& emit) {
    bool ok = true;
    std::string w;
    pair_walk(int(ctx.rewors.size()), cfg, rng, [&](int i, int j) {
        if (!ok) return;
        Relation c = intersect(ctx.rewors[i], ctx.rewors[j]);
        if (!is_weak_ordered(c) || !is_reflexive(c)) {
            ok = false;
            w = "intersection " + tid(i) + "&" + tid(j) + " is not weak ordered";
        }
    });
    emit("", ok, w);
}

void chk_wor_compatible(const LatticeContext& ctx, const CheckConfig& cfg, Rng& rng,
                        const Emit& emit) {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < ctx.rewors.size() && ok; ++i)
        if (!is_compatible(ctx.rewors[i])) {
            ok = false;
            w = "attached relation " + tid(int(i)) + " is not compatible";
        }
    Relation empty = Relation::empty_rel(ctx.L);
    if (ok && (!is_weak_ordered(empty) || !is_compatible(empty))) {
        ok = false;
        w = "the empty relation misbehaves";
    }
    if (ok)
        for (const auto& f : join_endomorphism_sample(*ctx.L, rng, 200)) {
            Relation r = wor_from_join_endomorphism({ctx.L, f});
            if (!is_weak_ordered(r) || !is_compatible(r)) {
                ok = false;
                w = "a join endomorphism relation is not weak ordered and compatible";
                break;
            }
        }
    (void)cfg;
    emit("", ok, w);
}

void chk_rewor_characterization(const LatticeContext& ctx, const CheckConfig& cfg, Rng& rng,
                                const Emit& emit) {
    auto agree = [](const Relation& r) {
        return is_rewor_by_characterization(r) == (is_reflexive(r) && is_weak_ordered(r));
    };
    bool ok = true;
    std::string w;
    for (const auto& t : ctx.tolerances)
        if (!agree(t)) {
            ok = false;
            w = "checkers disagree on a tolerance";
        }
    for (const auto& r : ctx.rewors)
        if (ok && (!agree(r) || !is_rewor_by_characterization(r))) {
            ok = false;
            w = "checkers disagree on an attached relation";
        }
    int n = ctx.L->n;
    for (int s = 0; s < cfg.random_relations && ok; ++s) {
        Relation r(ctx.L, random_relation(rng, n, 10 + (s % 9) * 10));
        if (!agree(r)) {
            ok = false;
            w = "checkers disagree on random relation " + std::to_string(s);
        }
    }
    emit("", ok, w);
}

void chk_product_meet_bound(const LatticeContext& ctx, const CheckConfig& cfg, Rng& rng,
                            const Emit& emit) {
    const auto& d = ctx.re_sample;
    bool ok = true;
    std::string w;
    triple_walk(int(d.size()), cfg, rng, false, [&](int i, int j, int k) {
        if (!ok) return;
        if (!(composed(d[i], d[j]) & d[k]).is_subset_of(composed(d[i] & d[k], d[j] & d[k]))) {
            ok = false;
            w = "product-meet bound fails on sample triple";
        }
    });
    emit("", ok, w);
}

void chk_product_distributivity(const LatticeContext& ctx, const CheckConfig& cfg, Rng& rng,
                                const Emit& emit) {
    const auto& d = ctx.re_sample;
    bool ok = true;
    std::string w;
    triple_walk(int(d.size()), cfg, rng, false, [&](int i, int j, int k) {
        if (!ok) return;
        if (composed(d[i] & d[j], d[k]) != (composed(d[i], d[k]) & composed(d[j], d[k])) ||
            composed(d[k], d[i] & d[j]) != (composed(d[k], d[i]) & composed(d[k], d[j]))) {
            ok = false;
            w = "composition does not distribute on sample triple";
        }
    });
    emit("", ok, w);
}

void chk_tolerance_order_section(const LatticeContext& ctx, const CheckConfig& cfg, Rng& rng,
                                 const Emit& emit) {
    const auto& L = *ctx.L;
    bool ok = true;
    std::string w;
    pair_walk(int(ctx.tolerances.size()), cfg, rng, [&](int i, int j) {
        if (!ok) return;
        bool same = ctx.tolerances[i] == ctx.tolerances[j];
        bool section = (ctx.tolerances[i].bits() & L.leq) == (ctx.tolerances[j].bits() & L.leq);
        if (same != section) {
            ok = false;
            w = "order sections do not separate " + tid(i) + " and " + tid(j);
        }
    });
    emit("", ok, w);
}

void chk_rewor_order_bounds(const LatticeContext& ctx, const CheckConfig&, Rng&,
                            const Emit& emit) {
    const auto& L = *ctx.L;
    BitMatrix full = BitMatrix::full(L.n, L.n);
    for (std::size_t i = 0; i < ctx.rewors.size(); ++i) {
        const BitMatrix& s = ctx.rewors[i].bits();
        BitMatrix sinv = s.transposed();
        bool ok = L.leq.is_subset_of(s) && composed(L.leq, sinv) == full &&
                  composed(sinv, L.leq) == full;
        emit(tid(int(i)), ok, ok ? "" : "order bound laws fail");
    }
}

void chk_attached_wor_valid(const LatticeContext& ctx, const CheckConfig&, Rng&,
                            const Emit& emit) {
    for (std::size_t i = 0; i < ctx.rewors.size(); ++i) {
        const Relation& r = ctx.rewors[i];
        bool ok = is_rewor_by_characterization(r) && is_reflexive(r) && is_weak_ordered(r);
        emit(tid(int(i)), ok, ok ? "" : "attached relation is not reflexive weak ordered");
    }
}

void chk_tolerance_recovery(const LatticeContext& ctx, const CheckConfig&, Rng&,
                            const Emit& emit) {
    const auto& L = *ctx.L;
    for (std::size_t i = 0; i < ctx.tolerances.size(); ++i) {
        const BitMatrix& t = ctx.tolerances[i].bits();
        bool ok = (compose3(L.leq, t, L.leq) & compose3(L.geq, t, L.geq)) == t;
        emit(tid(int(i)), ok, ok ? "" : "tolerance is not the meet of its two stretchings");
    }
}

void chk_tolerance_wor_bijection(const LatticeContext& ctx, const CheckConfig& cfg, Rng& rng,
                                 const Emit& emit) {
    for (std::size_t i = 0; i < ctx.tolerances.size(); ++i) {
        Relation back = intersect(ctx.rewors[i], inverse(ctx.rewors[i]));
        bool ok = back == ctx.tolerances[i];
        emit(tid(int(i)), ok, ok ? "" : "round trip does not return the tolerance");
    }
    std::set<BitMatrix> images;
    for (const auto& r : ctx.rewors) images.insert(r.bits());
    bool ok = images.size() == ctx.rewors.size();
    std::string w = ok ? "" : "attached relations collide";
    if (ok) {
        auto enumerated = enumerate_rewor(ctx.L);
        std::set<BitMatrix> listed;
        for (const auto& r : enumerated) listed.insert(r.bits());
        if (listed != images) {
            ok = false;
            w = "enumerated relations differ from the attached images";
        }
    }
    if (ok)
        for (const auto& r : ctx.rewors) {
            Relation back = wor_from_tolerance(tolerance_from_wor(r));
            if (!(back == r)) {
                ok = false;
                w = "round trip does not return the relation";
                break;
            }
        }
    if (ok)
        pair_walk(int(ctx.tolerances.size()), cfg, rng, [&](int i, int j) {
            if (!ok) return;
            bool tol_le = ctx.tolerances[i].bits().is_subset_of(ctx.tolerances[j].bits());
            bool wor_le = ctx.rewors[i].bits().is_subset_of(ctx.rewors[j].bits());
            if (tol_le != wor_le) {
                ok = false;
                w = "the correspondence is not an order isomorphism at " + tid(i) + "," + tid(j);
            }
        });
    emit("", ok, w);
}

void chk_wor_roundtrip(const LatticeContext& ctx, const CheckConfig&, Rng&, const Emit& emit) {
    const auto& L = *ctx.L;
    for (std::size_t i = 0; i < ctx.rewors.size(); ++i) {
        const BitMatrix& r = ctx.rewors[i].bits();
        bool ok = compose3(L.leq, r & r.transposed(), L.leq) == r;
        emit(tid(int(i)), ok, ok ? "" : "relation is not rebuilt from its symmetric part");
    }
}

// ---- block checks ----

void chk_blocks_convex(const LatticeContext& ctx, const CheckConfig&, Rng&, const Emit& emit) {
    for (std::size_t i = 0; i < ctx.tolerances.size(); ++i) {
        const TolPipeline& p = ctx.pipeline[i];
        bool ok = p.blocks_error.empty();
        std::string w = p.blocks_error;
        for (const auto& b : p.blocks) {
            if (!ok) break;
            if (!is_convex_sublattice({ctx.L, b.members}) ||
                b.members != ctx.L->interval(b.bottom, b.top)) {
                ok = false;
                w = "a block is not a convex interval sublattice";
            }
        }
        emit(tid(int(i)), ok, w);
    }
}

void chk_blocks_cover(const LatticeContext& ctx, const CheckConfig&, Rng&, const Emit& emit) {
    for (std::size_t i = 0; i < ctx.tolerances.size(); ++i) {
        const TolPipeline& p = ctx.pipeline[i];
        Bits u(ctx.L->n);
        for (const auto& b : p.blocks) u |= b.members;
        bool ok = p.blocks_error.empty() && u == Bits::full(ctx.L->n);
        emit(tid(int(i)), ok, ok ? "" : "blocks do not cover the lattice");
    }
}

void chk_factor_antisymmetry(const LatticeContext& ctx, const CheckConfig&, Rng&,
                             const Emit& emit) {
    for (std::size_t i = 0; i < ctx.tolerances.size(); ++i) {
        const TolPipeline& p = ctx.pipeline[i];
        bool ok = p.blocks_error.empty();
        std::string w = p.blocks_error;
        for (std::size_t a = 0; a < p.blocks.size() && ok; ++a)
            for (std::size_t b = a + 1; b < p.blocks.size() && ok; ++b)
                if (p.blocks[a].ideal == p.blocks[b].ideal ||
                    p.blocks[a].filter == p.blocks[b].filter) {
                    ok = false;
                    w = "two distinct blocks share an ideal or filter";
                }
        emit(tid(int(i)), ok, w);
    }
}

void chk_factor_bounds(const LatticeContext& ctx, const CheckConfig&, Rng&, const Emit& emit) {
    for (std::size_t i = 0; i < ctx.tolerances.size(); ++i) {
        const TolPipeline& p = ctx.pipeline[i];
        bool ok = p.factor.has_value();
        emit(tid(int(i)), ok, ok ? "" : p.factor_error);
    }
}

void chk_congruence_quotient(const LatticeContext& ctx, const CheckConfig&, Rng&,
                             const Emit& emit) {
    const auto& L = *ctx.L;
    for (std::size_t i = 0; i < ctx.tolerances.size(); ++i) {
        const BitMatrix& t = ctx.tolerances[i].bits();
        if (!composed(t, t).is_subset_of(t)) continue;  // not transitive: not a congruence
        const TolPipeline& p = ctx.pipeline[i];
        bool ok = p.factor.has_value();
        std::string w = ok ? "" : p.factor_error;
        if (ok) {
            Bits seen(L.n);
            for (const auto& b : p.blocks) {
                if ((seen & b.members).any()) {
                    ok = false;
                    w = "congruence blocks overlap";
                }
                seen |= b.members;
            }
            if (ok && seen != Bits::full(L.n)) {
                ok = false;
                w = "congruence blocks do not partition";
            }
        }
        if (ok) {
            int k = int(p.blocks.size());
            for (int a = 0; a < k && ok; ++a)
                for (int b = 0; b < k && ok; ++b) {
                    bool quotient_le = false;
                    p.blocks[a].members.for_each([&](int x) {
                        if (!quotient_le && (L.up_set_of(x) & p.blocks[b].members).any())
                            quotient_le = true;
                    });
                    if (p.factor->order.test(a, b) != quotient_le) {
                        ok = false;
                        w = "factor order disagrees with the quotient order";
                    }
                }
        }
        emit(tid(int(i)), ok, w);
    }
}

void chk_blocks_monotone(const LatticeContext& ctx, const CheckConfig& cfg, Rng& rng,
                         const Emit& emit) {
    bool ok = true;
    std::string w;
    pair_walk(int(ctx.tolerances.size()), cfg, rng, [&](int i, int j) {
        if (!ok || !ctx.tolerances[i].bits().is_subset_of(ctx.tolerances[j].bits())) return;
        for (const auto& small : ctx.pipeline[i].blocks) {
            bool inside = false;
            for (const auto& big : ctx.pipeline[j].blocks)
                if (small.members.is_subset_of(big.members)) {
                    inside = true;
                    break;
                }
            if (!inside) {
                ok = false;
                w = "a block of " + tid(i) + " fits no block of " + tid(j);
                return;
            }
        }
    });
    emit("", ok, w);
}

void chk_convex_ideal_filter(const LatticeContext& ctx, const CheckConfig&, Rng&,
                             const Emit& emit) {
    for (std::size_t i = 0; i < ctx.tolerances.size(); ++i) {
        const TolPipeline& p = ctx.pipeline[i];
        bool ok = p.blocks_error.empty();
        std::string w = p.blocks_error;
        for (const auto& b : p.blocks) {
            if (!ok) break;
            DownSetResult d = down_set({ctx.L, b.members});
            UpSetResult u = up_set({ctx.L, b.members});
            if (d.set.members != b.ideal || u.set.members != b.filter || !d.join_closed ||
                !u.meet_closed || (b.ideal & b.filter) != b.members) {
                ok = false;
                w = "block is not the intersection of its ideal and filter";
            }
        }
        emit(tid(int(i)), ok, w);
    }
}

// ---- concept checks ----

void chk_galois_laws(const LatticeContext& ctx, const CheckConfig& cfg, Rng& rng,
                     const Emit& emit) {
    const auto& L = *ctx.L;
    for (std::size_t i = 0; i < ctx.tolerances.size(); ++i) {
        FormalContext k{L.elem_names, L.elem_names, ctx.rewors[i].bits()};
        bool ok = true;
        for (int s = 0; s < cfg.random_subsets && ok; ++s) {
            Bits a = random_subset(rng, L.n);
            Bits a2 = a | random_subset(rng, L.n);
            Bits b = random_subset(rng, L.n);
            Bits b2 = b | random_subset(rng, L.n);
            Bits ai = derive_intent(k, a);
            Bits bi = derive_extent(k, b);
            ok = a.is_subset_of(derive_extent(k, ai)) &&
                 ai == derive_intent(k, derive_extent(k, ai)) &&
                 b.is_subset_of(derive_intent(k, bi)) &&
                 bi == derive_extent(k, derive_intent(k, bi)) &&
                 derive_intent(k, a2).is_subset_of(ai) && derive_extent(k, b2).is_subset_of(bi);
        }
        emit(tid(int(i)), ok, ok ? "" : "a Galois connection law fails");
    }
}

void chk_concept_generators(const LatticeContext& ctx, const CheckConfig&, Rng&,
                            const Emit& emit) {
    for (std::size_t i = 0; i < ctx.tolerances.size(); ++i) {
        const TolPipeline& p = ctx.pipeline[i];
        bool ok = p.cl.has_value();
        std::string w = p.cl_error;
        if (ok) {
            const ConceptLattice& cl = *p.cl;
            const FiniteLattice& cf = *cl.as_lattice;
            int n = ctx.L->n;
            std::vector<int> gidx(n), midx(n);
            for (int g = 0; g < n && ok; ++g) {
                Concept c = object_concept(cl.context, g);
                gidx[g] = cl.index_of_extent(c.extent);
                if (gidx[g] < 0 || cl.concepts[gidx[g]].intent != c.intent) ok = false;
            }
            for (int m = 0; m < n && ok; ++m) {
                Concept c = attribute_concept(cl.context, m);
                midx[m] = cl.index_of_extent(c.extent);
                if (midx[m] < 0 || cl.concepts[midx[m]].intent != c.intent) ok = false;
            }
            for (int c = 0; c < cf.n && ok; ++c) {
                int join = cf.bottom, meet = cf.top;
                cl.concepts[c].extent.for_each([&](int g) { join = cf.join(join, gidx[g]); });
                cl.concepts[c].intent.for_each([&](int m) { meet = cf.meet(meet, midx[m]); });
                if (join != c || meet != c) ok = false;
            }
            if (!ok) w = "object/attribute concepts fail to generate";
        }
        emit(tid(int(i)), ok, w);
    }
}

void chk_extents_ideals(const LatticeContext& ctx, const CheckConfig&, Rng& rng,
                        const Emit& emit) {
    const auto& L = *ctx.L;
    auto all_good = [&](const ConceptLattice& cl) {
        for (const auto& c : cl.concepts)
            if (!is_ideal_set(L, c.extent) || !is_filter_set(L, c.intent)) return false;
        return true;
    };
    for (std::size_t i = 0; i < ctx.tolerances.size(); ++i) {
        const TolPipeline& p = ctx.pipeline[i];
        bool ok = p.cl.has_value() && all_good(*p.cl);
        emit(tid(int(i)), ok, ok ? "" : "an extent or intent is not an ideal or filter");
    }
    // Also for non-reflexive weak ordered relations: the empty relation and a
    // few join endomorphism relations.
    bool ok = all_good(concepts({L.elem_names, L.elem_names, BitMatrix(L.n, L.n)}));
    auto fs = join_endomorphism_sample(L, rng, 12);
    for (const auto& f : fs) {
        if (!ok) break;
        Relation r = wor_from_join_endomorphism({ctx.L, f});
        ok = all_good(concepts({L.elem_names, L.elem_names, r.bits()}));
    }
    emit("", ok, ok ? "" : "a general weak ordered context broke the ideal/filter law");
}

void chk_block_concept_bijection(const LatticeContext& ctx, const CheckConfig&, Rng&,
                                 const Emit& emit) {
    for (std::size_t i = 0; i < ctx.tolerances.size(); ++i) {
        const TolPipeline& p = ctx.pipeline[i];
        bool ok = p.factor_error.empty() && p.blocks_error.empty() && p.corr_error.empty() &&
                  p.cl_error.empty();
        std::string w = !p.corr_error.empty()   ? p.corr_error
                        : !p.factor_error.empty() ? p.factor_error
                        : !p.blocks_error.empty() ? p.blocks_error
                                                  : p.cl_error;
        emit(tid(int(i)), ok, w);
    }
}

void chk_block_embedding(const LatticeContext& ctx, const CheckConfig&, Rng&, const Emit& emit) {
    for (std::size_t i = 0; i < ctx.tolerances.size(); ++i) {
        const TolPipeline& p = ctx.pipeline[i];
        bool ok = p.embed_error.empty() && p.corr_error.empty() && p.factor_error.empty() &&
                  p.blocks_error.empty() && p.cl_error.empty();
        std::string w = !p.embed_error.empty() ? p.embed_error
                        : !p.corr_error.empty()  ? p.corr_error
                        : !p.factor_error.empty() ? p.factor_error
                        : !p.blocks_error.empty() ? p.blocks_error
                                                   : p.cl_error;
        emit(tid(int(i)), ok, w);
    }
}

void chk_embedding_density(const LatticeContext& ctx, const CheckConfig&, Rng&,
                           const Emit& emit) {
    for (std::size_t i = 0; i < ctx.tolerances.size(); ++i) {
        const TolPipeline& p = ctx.pipeline[i];
        bool ok = p.iso_valid && p.iso.sup_dense && p.iso.inf_dense;
        emit(tid(int(i)), ok, ok ? "" : (p.iso_valid ? p.iso.witness : "pipeline failed"));
    }
}

void chk_completion_fixed_point(const LatticeContext& ctx, const CheckConfig&, Rng&,
                                const Emit& emit) {
    const auto& L = *ctx.L;
    bool ok = true;
    std::string w;
    try {
        ConceptLattice cl = dm_completion(L);
        if (int(cl.concepts.size()) != L.n) {
            ok = false;
            w = "completion changed the element count";
        }
        std::vector<int> map(L.n, -1);
        for (int x = 0; x < L.n && ok; ++x) {
            map[x] = cl.index_of_extent(L.down_set_of(x));
            if (map[x] < 0 || cl.concepts[map[x]].intent != L.up_set_of(x)) {
                ok = false;
                w = "principal ideal/filter pair is not a concept";
            }
        }
        for (int x = 0; x < L.n && ok; ++x)
            for (int y = 0; y < L.n && ok; ++y)
                if (L.le(x, y) != cl.as_lattice->le(map[x], map[y])) {
                    ok = false;
                    w = "completion order disagrees";
                }
        if (ok && !are_isomorphic(L, *cl.as_lattice)) {
            ok = false;
            w = "completion is not isomorphic to the lattice";
        }
    } catch (const Error& e) {
        ok = false;
        w = e.what();
    }
    emit("", ok, w);
}

void chk_factor_concept_isomorphism(const LatticeContext& ctx, const CheckConfig&, Rng&,
                                    const Emit& emit) {
    for (std::size_t i = 0; i < ctx.tolerances.size(); ++i) {
        const TolPipeline& p = ctx.pipeline[i];
        bool ok = p.iso_valid && p.iso.ok();
        emit(tid(int(i)), ok, ok ? "" : (p.iso_valid ? p.iso.witness : "pipeline failed"));
    }
}

using CheckFn = void (*)(const LatticeContext&, const CheckConfig&, Rng&, const Emit&);

struct RegisteredCheck {
    CheckInfo info;
    CheckFn fn;
};

const std::vector<RegisteredCheck>& registry() {
    static const std::vector<RegisteredCheck> checks = {
        {{"wor-monoid",
          "composition of weak ordered relations is closed, associative, with the order as unit"},
         chk_wor_monoid},
        {{"wor-distributivity",
          "composition distributes over intersection for weak ordered relations"},
         chk_wor_distributivity},
        {{"wor-intersection", "pairwise intersections of weak ordered relations stay weak ordered"},
         chk_wor_intersection},
        {{"wor-compatible", "every weak ordered relation is compatible"}, chk_wor_compatible},
        {{"rewor-characterization",
          "the inductive and the closure checkers agree on every relation"},
         chk_rewor_characterization},
        {{"product-meet-bound",
          "a product meet a compatible reflexive relation refines into factor meets"},
         chk_product_meet_bound},
        {{"product-distributivity",
          "composition by compatible reflexive relations distributes over intersection"},
         chk_product_distributivity},
        {{"tolerance-order-section", "tolerances agree exactly when their order sections agree"},
         chk_tolerance_order_section},
        {{"rewor-order-bounds",
          "reflexive weak ordered relations contain the order and invert to everything"},
         chk_rewor_order_bounds},
        {{"attached-wor-valid", "the attached relation of a tolerance is reflexive weak ordered"},
         chk_attached_wor_valid},
        {{"tolerance-recovery", "a tolerance is the meet of its stretching and the dual one"},
         chk_tolerance_recovery},
        {{"tolerance-wor-bijection",
          "tolerances and reflexive weak ordered relations are in order-isomorphic bijection"},
         chk_tolerance_wor_bijection},
        {{"wor-roundtrip", "a reflexive weak ordered relation is rebuilt from its symmetric part"},
         chk_wor_roundtrip},
        {{"blocks-convex", "every block is a convex sublattice and a whole interval"},
         chk_blocks_convex},
        {{"blocks-cover", "the blocks of a tolerance cover the lattice"}, chk_blocks_cover},
        {{"factor-antisymmetry", "distinct blocks generate distinct ideals and filters"},
         chk_factor_antisymmetry},
        {{"factor-bounds",
          "the block order is a lattice whose bounds compose by intersecting ideals and filters"},
         chk_factor_bounds},
        {{"congruence-quotient",
          "congruence blocks partition the lattice and factor as the standard quotient"},
         chk_congruence_quotient},
        {{"blocks-monotone", "blocks of a smaller tolerance sit inside blocks of a larger one"},
         chk_blocks_monotone},
        {{"convex-ideal-filter", "a block is the intersection of its ideal and its filter"},
         chk_convex_ideal_filter},
        {{"galois-laws", "the derivation operators form a Galois connection"}, chk_galois_laws},
        {{"concept-generators", "object and attribute concepts generate every concept"},
         chk_concept_generators},
        {{"extents-ideals", "extents are ideals and intents are filters in lattice contexts"},
         chk_extents_ideals},
        {{"block-concept-bijection",
          "blocks biject with the concepts having nonempty extent-intent intersection"},
         chk_block_concept_bijection},
        {{"block-embedding", "mapping a block to its ideal-filter concept embeds the factor"},
         chk_block_embedding},
        {{"embedding-density", "the embedded factor image is join- and meet-dense"},
         chk_embedding_density},
        {{"completion-fixed-point", "completing a lattice gives the lattice back"},
         chk_completion_fixed_point},
        {{"factor-concept-isomorphism",
          "factor lattice, its completion and the concept lattice are isomorphic"},
         chk_factor_concept_isomorphism},
    };
    return checks;
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
    static const std::vector<CheckInfo> infos = [] {
        std::vector<CheckInfo> out;
        for (const auto& c : registry()) out.push_back(c.info);
        return out;
    }();
    return infos;
}

VerificationReport run_theorem_suite(const Corpus& corpus, const std::vector<std::string>& checks,
                                     const CheckConfig& config) {
    if (checks.empty()) throw EmptyInput("no checks selected");
    std::set<std::string> wanted;
    for (const auto& id : checks) {
        bool known = false;
        for (const auto& c : registry())
            if (c.info.id == id) known = true;
        if (!known) throw UnknownCheckId(id);
        wanted.insert(id);
    }

    VerificationReport report;
    report.config = config;
    for (const auto& c : registry())
        if (wanted.count(c.info.id)) report.checks.push_back(c.info.id);
    report.lattice_count = int(corpus.entries.size());

    for (const auto& entry : corpus.entries) {
        LatticeContext ctx = build_context(entry.lattice, config);
        for (const auto& c : registry()) {
            if (!wanted.count(c.info.id)) continue;
            Rng rng{config.seed ^ fnv(ctx.id) ^ fnv(c.info.id)};
            Emit emit = [&](const std::string& tol_id, bool pass, const std::string& witness) {
                report.entries.push_back({ctx.id, tol_id, c.info.id, pass, pass ? "" : witness});
                auto& s = report.per_check[c.info.id];
                ++s.run;
                if (!pass) {
                    ++s.failed;
                    ++report.failures;
                }
            };
            c.fn(ctx, config, rng, emit);
        }
    }
    return report;
}

}  // namespace tolfca
