#include "tolfca/relation.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "tolfca/errors.hpp"

namespace tolfca {

Relation::Relation(LatticePtr host, BitMatrix bits) : host_(std::move(host)), bits_(std::move(bits)) {
    if (bits_.rows() != host_->n || bits_.cols() != host_->n)
        throw Error("relation matrix does not match the lattice size");
}

Relation Relation::empty_rel(LatticePtr host) {
    int n = host->n;
    return Relation(std::move(host), BitMatrix(n, n));
}

Relation Relation::diagonal(LatticePtr host) {
    int n = host->n;
    return Relation(std::move(host), BitMatrix::identity(n));
}

Relation Relation::all_pairs(LatticePtr host) {
    int n = host->n;
    return Relation(std::move(host), BitMatrix::full(n, n));
}

Relation Relation::order_of(LatticePtr host) {
    BitMatrix m = host->leq;
    return Relation(std::move(host), std::move(m));
}

std::vector<std::pair<int, int>> Relation::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < n(); ++x)
        bits_.row(x).for_each([&](int y) { out.emplace_back(x, y); });
    return out;
}

namespace {

void require_same_host(const Relation& r, const Relation& s) {
    if (r.host() != s.host()) throw HostMismatch();
}

}  // namespace

Relation compose(const Relation& r, const Relation& s) {
    require_same_host(r, s);
    return Relation(r.host(), composed(r.bits(), s.bits()));
}

Relation inverse(const Relation& r) { return Relation(r.host(), r.bits().transposed()); }

Relation intersect(const Relation& r, const Relation& s) {
    require_same_host(r, s);
    return Relation(r.host(), r.bits() & s.bits());
}

Relation unite(const Relation& r, const Relation& s) {
    require_same_host(r, s);
    return Relation(r.host(), r.bits() | s.bits());
}

bool subset(const Relation& r, const Relation& s) {
    require_same_host(r, s);
    return r.bits().is_subset_of(s.bits());
}

bool is_reflexive(const Relation& r) {
    for (int x = 0; x < r.n(); ++x)
        if (!r.contains(x, x)) return false;
    return true;
}

bool is_symmetric(const Relation& r) { return r.bits() == r.bits().transposed(); }

bool is_compatible(const Relation& r) {
    const auto& L = *r.host();
    auto ps = r.pairs();
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i; j < ps.size(); ++j) {
            auto [x1, y1] = ps[i];
            auto [x2, y2] = ps[j];
            if (!r.contains(L.join(x1, x2), L.join(y1, y2))) return false;
            if (!r.contains(L.meet(x1, x2), L.meet(y1, y2))) return false;
        }
    return true;
}

bool is_tolerance(const Relation& r) {
    return is_reflexive(r) && is_symmetric(r) && is_compatible(r);
}

bool is_weak_ordered(const Relation& r) {
    const auto& L = *r.host();
    int n = r.n();
    // (u <= x, x r y, y <= z) forces u r z: as matrices, <= ; r ; <= inside r.
    BitMatrix stretched = composed(composed(L.leq, r.bits()), L.leq);
    if (!stretched.is_subset_of(r.bits())) return false;
    // Columns closed under join, rows closed under meet; the two-element case
    // carries the general finite one.
    BitMatrix cols = r.bits().transposed();
    for (int t = 0; t < n; ++t) {
        auto as = cols.row(t).to_indices();
        for (std::size_t i = 0; i < as.size(); ++i)
            for (std::size_t j = i + 1; j < as.size(); ++j)
                if (!cols.row(t).test(L.join(as[i], as[j]))) return false;
    }
    for (int z = 0; z < n; ++z) {
        auto bs = r.bits().row(z).to_indices();
        for (std::size_t i = 0; i < bs.size(); ++i)
            for (std::size_t j = i + 1; j < bs.size(); ++j)
                if (!r.bits().row(z).test(L.meet(bs[i], bs[j]))) return false;
    }
    return true;
}

bool is_rewor_by_characterization(const Relation& r) {
    if (!is_reflexive(r) || !is_compatible(r)) return false;
    const auto& L = *r.host();
    return composed(composed(L.leq, r.bits()), L.leq) == r.bits();
}

Relation tolerance_from_wor(const Relation& r) {
    if (!is_rewor_by_characterization(r)) throw NotAWor();
    return intersect(r, inverse(r));
}

Relation wor_from_tolerance(const Relation& t) {
    if (!is_tolerance(t)) throw NotATolerance();
    const auto& L = *t.host();
    return Relation(t.host(), composed(composed(L.leq, t.bits()), L.leq));
}

JoinEndomorphism::JoinEndomorphism(LatticePtr host_, std::vector<int> map_)
    : host(std::move(host_)), map(std::move(map_)) {
    int n = host->n;
    if (int(map.size()) != n) throw NotAJoinEndomorphism();
    for (int v : map)
        if (v < 0 || v >= n) throw NotAJoinEndomorphism();
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y)
            if (map[host->join(x, y)] != host->join(map[x], map[y])) throw NotAJoinEndomorphism();
}

Relation wor_from_join_endomorphism(const JoinEndomorphism& f) {
    const auto& L = *f.host;
    BitMatrix m(L.n, L.n);
    for (int x = 0; x < L.n; ++x) m.row(x) = L.up_set_of(f.map[x]);
    return Relation(f.host, std::move(m));
}

namespace {

// Fixpoint closure under componentwise join and meet of pairs.
BitMatrix compatible_closure(const FiniteLattice& L, BitMatrix m) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::pair<int, int>> ps;
        for (int x = 0; x < L.n; ++x)
            m.row(x).for_each([&](int y) { ps.emplace_back(x, y); });
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i; j < ps.size(); ++j) {
                auto [x1, y1] = ps[i];
                auto [x2, y2] = ps[j];
                int jx = L.join(x1, x2), jy = L.join(y1, y2);
                if (!m.test(jx, jy)) {
                    m.set(jx, jy);
                    changed = true;
                }
                int mx = L.meet(x1, x2), my = L.meet(y1, y2);
                if (!m.test(mx, my)) {
                    m.set(mx, my);
                    changed = true;
                }
            }
    }
    return m;
}

}  // namespace

Relation tolerance_generated_by(LatticePtr host, const std::vector<std::pair<int, int>>& pairs) {
    const auto& L = *host;
    BitMatrix m = BitMatrix::identity(L.n);
    for (auto [x, y] : pairs) {
        m.set(x, y);
        m.set(y, x);
    }
    return Relation(host, compatible_closure(L, std::move(m)));
}

std::vector<Relation> enumerate_tolerances(LatticePtr host, int max_elements) {
    const auto& L = *host;
    if (L.n > max_elements)
        throw SizeBound("lattice has " + std::to_string(L.n) + " elements, enumeration bound is " +
                        std::to_string(max_elements));
    // The principal tolerances generate the whole tolerance lattice under
    // join, so close the set {diagonal, principals} under joining principals.
    std::vector<BitMatrix> principals;
    for (int a = 0; a < L.n; ++a)
        for (int b = a + 1; b < L.n; ++b)
            principals.push_back(tolerance_generated_by(host, {{a, b}}).bits());

    std::set<BitMatrix> seen;
    std::deque<BitMatrix> queue;
    auto push = [&](const BitMatrix& m) {
        if (seen.insert(m).second) queue.push_back(m);
    };
    push(BitMatrix::identity(L.n));
    for (const auto& p : principals) push(p);
    while (!queue.empty()) {
        BitMatrix t = std::move(queue.front());
        queue.pop_front();
        for (const auto& p : principals) {
            if (p.is_subset_of(t)) continue;
            push(compatible_closure(L, t | p));
        }
    }
    std::vector<Relation> out;
    out.reserve(seen.size());
    for (const auto& m : seen) out.emplace_back(host, m);
    return out;
}

std::vector<Relation> enumerate_rewor(LatticePtr host, int max_elements) {
    std::vector<Relation> out;
    std::set<BitMatrix> seen;
    for (const auto& t : enumerate_tolerances(std::move(host), max_elements)) {
        Relation r = wor_from_tolerance(t);
        if (seen.insert(r.bits()).second) out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tolfca
