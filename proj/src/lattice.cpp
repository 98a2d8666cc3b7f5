#include "tolfca/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tolfca/errors.hpp"

namespace tolfca {

std::optional<int> FiniteLattice::index_of(std::string_view label) const {
    for (int i = 0; i < n; ++i)
        if (elem_names[i] == label) return i;
    return std::nullopt;
}

bool is_partial_order(const BitMatrix& m) {
    int n = m.rows();
    if (m.cols() != n) return false;
    for (int i = 0; i < n; ++i)
        if (!m.test(i, i)) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i != j && m.test(i, j) && m.test(j, i)) return false;
            if (m.test(i, j) && !m.row(j).is_subset_of(m.row(i))) return false;
        }
    return true;
}

std::vector<std::pair<int, int>> transitive_reduction(const BitMatrix& leq) {
    int n = leq.rows();
    std::vector<std::pair<int, int>> covers;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y || !leq.test(x, y)) continue;
            bool direct = true;
            for (int z = 0; z < n && direct; ++z)
                if (z != x && z != y && leq.test(x, z) && leq.test(z, y)) direct = false;
            if (direct) covers.emplace_back(x, y);
        }
    return covers;
}

namespace {

// Least element of `candidates` (a member below all others), or -1.
int least_of(const Bits& candidates, const BitMatrix& leq) {
    int least = -1;
    candidates.for_each([&](int z) {
        if (least == -1 && candidates.is_subset_of(leq.row(z))) least = z;
    });
    return least;
}

}  // namespace

LatticePtr lattice_from_order(std::string name, std::vector<std::string> elem_names,
                              BitMatrix leq) {
    auto L = std::make_shared<FiniteLattice>();
    L->name = std::move(name);
    L->n = int(elem_names.size());
    if (L->n == 0) throw EmptyInput("lattice needs at least one element");
    {
        std::map<std::string_view, int> seen;
        for (auto& s : elem_names)
            if (!seen.emplace(s, 1).second) throw DuplicateLabel(s);
    }
    if (!is_partial_order(leq)) throw Error("order matrix is not a partial order");
    L->elem_names = std::move(elem_names);
    L->leq = std::move(leq);
    L->geq = L->leq.transposed();

    int n = L->n;
    L->join_tab.assign(n * n, -1);
    L->meet_tab.assign(n * n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
            int j = least_of(L->leq.row(x) & L->leq.row(y), L->leq);
            if (j == -1)
                throw NotALattice(L->elem_names[x], L->elem_names[y], "least upper bound");
            // The greatest lower bound is the least of the lower-bound set in
            // the dual order.
            int m = least_of(L->geq.row(x) & L->geq.row(y), L->geq);
            if (m == -1)
                throw NotALattice(L->elem_names[x], L->elem_names[y], "greatest lower bound");
            L->join_tab[x * n + y] = L->join_tab[y * n + x] = j;
            L->meet_tab[x * n + y] = L->meet_tab[y * n + x] = m;
        }

    L->bottom = 0;
    L->top = 0;
    for (int x = 1; x < n; ++x) {
        L->bottom = L->meet(L->bottom, x);
        L->top = L->join(L->top, x);
    }
    L->covers = transitive_reduction(L->leq);

    L->heights.assign(n, 0);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return L->down_set_of(a).count() < L->down_set_of(b).count();
    });
    for (int x : order)
        for (auto [lo, hi] : L->covers)
            if (hi == x) L->heights[x] = std::max(L->heights[x], L->heights[lo] + 1);

    return L;
}

LatticePtr build_lattice(std::string name, std::vector<std::string> elem_names,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
    int n = int(elem_names.size());
    if (n == 0) throw EmptyInput("lattice needs at least one element");
    std::map<std::string_view, int> index;
    for (int i = 0; i < n; ++i)
        if (!index.emplace(elem_names[i], i).second) throw DuplicateLabel(elem_names[i]);

    BitMatrix strict(n, n);
    for (auto& [lo, hi] : covers) {
        auto a = index.find(lo);
        if (a == index.end()) throw UnknownLabel(lo);
        auto b = index.find(hi);
        if (b == index.end()) throw UnknownLabel(hi);
        strict.set(a->second, b->second);
    }

    // Warshall closure of the strict edges; a diagonal hit means a cycle.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (strict.test(i, k)) strict.row(i) |= strict.row(k);
    for (int i = 0; i < n; ++i)
        if (strict.test(i, i)) throw CycleDetected();

    BitMatrix leq = strict;
    for (int i = 0; i < n; ++i) leq.set(i, i);
    return lattice_from_order(std::move(name), std::move(elem_names), std::move(leq));
}

DownSetResult down_set(const SubsetView& x) {
    if (x.members.none()) throw EmptyInput("down_set of empty subset");
    const auto& L = *x.host;
    Bits down(L.n);
    x.members.for_each([&](int e) { down |= L.down_set_of(e); });
    bool closed = true;
    auto idx = down.to_indices();
    for (std::size_t i = 0; i < idx.size() && closed; ++i)
        for (std::size_t j = i; j < idx.size() && closed; ++j)
            if (!down.test(L.join(idx[i], idx[j]))) closed = false;
    return {{x.host, down}, closed};
}

UpSetResult up_set(const SubsetView& x) {
    if (x.members.none()) throw EmptyInput("up_set of empty subset");
    const auto& L = *x.host;
    Bits up(L.n);
    x.members.for_each([&](int e) { up |= L.up_set_of(e); });
    bool closed = true;
    auto idx = up.to_indices();
    for (std::size_t i = 0; i < idx.size() && closed; ++i)
        for (std::size_t j = i; j < idx.size() && closed; ++j)
            if (!up.test(L.meet(idx[i], idx[j]))) closed = false;
    return {{x.host, up}, closed};
}

bool is_convex_sublattice(const SubsetView& x) {
    if (x.members.none()) return false;
    const auto& L = *x.host;
    auto idx = x.members.to_indices();
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i; j < idx.size(); ++j) {
            if (!x.members.test(L.join(idx[i], idx[j]))) return false;
            if (!x.members.test(L.meet(idx[i], idx[j]))) return false;
        }
    // Convexity: with join/meet closure it reduces to containing the whole
    // interval between the subset's bounds.
    auto [lo, hi] = interval_hull(x);
    return x.members == L.interval(lo, hi);
}

std::pair<int, int> interval_hull(const SubsetView& x) {
    if (x.members.none()) throw EmptyInput("interval_hull of empty subset");
    const auto& L = *x.host;
    int lo = x.members.find_first(), hi = lo;
    x.members.for_each([&](int e) {
        lo = L.meet(lo, e);
        hi = L.join(hi, e);
    });
    return {lo, hi};
}

namespace {

// Iterated neighbourhood refinement: elements start from basic order
// statistics and are re-partitioned by the classes of their cover
// neighbours until stable.
std::vector<int> invariant_classes(const FiniteLattice& L) {
    int n = L.n;
    std::vector<std::vector<int>> up(n), down(n);
    for (auto [lo, hi] : L.covers) {
        up[lo].push_back(hi);
        down[hi].push_back(lo);
    }
    std::vector<long> cls(n);
    for (int x = 0; x < n; ++x)
        cls[x] = ((long(L.height(x)) * 1024 + long(up[x].size())) * 1024 + long(down[x].size())) *
                     1024 +
                 L.down_set_of(x).count();
    for (int round = 0; round < n; ++round) {
        std::vector<std::tuple<long, std::vector<long>, std::vector<long>>> sig(n);
        for (int x = 0; x < n; ++x) {
            std::vector<long> su, sd;
            for (int y : up[x]) su.push_back(cls[y]);
            for (int y : down[x]) sd.push_back(cls[y]);
            std::sort(su.begin(), su.end());
            std::sort(sd.begin(), sd.end());
            sig[x] = {cls[x], std::move(su), std::move(sd)};
        }
        // Ids come from the sorted signature order so that they are
        // comparable between two independently refined lattices.
        std::map<std::tuple<long, std::vector<long>, std::vector<long>>, long> renumber;
        for (auto& s : sig) renumber.emplace(s, 0);
        long next_id = 0;
        for (auto& [sig_key, id] : renumber) id = next_id++;
        std::vector<long> next(n);
        for (int x = 0; x < n; ++x) next[x] = renumber[sig[x]];
        if (next == cls) break;
        cls = std::move(next);
    }
    std::vector<int> out(n);
    for (int x = 0; x < n; ++x) out[x] = int(cls[x]);
    return out;
}

bool extend_isomorphism(const FiniteLattice& a, const FiniteLattice& b,
                        const std::vector<int>& order, std::size_t pos,
                        const std::vector<int>& ca, const std::vector<int>& cb,
                        std::vector<int>& map, std::vector<bool>& used) {
    if (pos == order.size()) return true;
    int x = order[pos];
    for (int y = 0; y < b.n; ++y) {
        if (used[y] || cb[y] != ca[x]) continue;
        bool ok = true;
        for (std::size_t k = 0; k < pos && ok; ++k) {
            int u = order[k];
            if (a.le(u, x) != b.le(map[u], y) || a.le(x, u) != b.le(y, map[u])) ok = false;
        }
        if (!ok) continue;
        map[x] = y;
        used[y] = true;
        if (extend_isomorphism(a, b, order, pos + 1, ca, cb, map, used)) return true;
        used[y] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
    if (a.n != b.n) return std::nullopt;
    auto ca = invariant_classes(a), cb = invariant_classes(b);
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    // Search elements in order of ascending class size to fail fast.
    std::vector<int> class_size(a.n + 1, 0);
    for (int c : ca) ++class_size[c];
    std::vector<int> order(a.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (class_size[ca[x]] != class_size[ca[y]]) return class_size[ca[x]] < class_size[ca[y]];
        return x < y;
    });
    std::vector<int> map(a.n, -1);
    std::vector<bool> used(a.n, false);
    if (extend_isomorphism(a, b, order, 0, ca, cb, map, used)) return map;
    return std::nullopt;
}

}  // namespace tolfca
