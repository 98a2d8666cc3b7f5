#include "tolfca/corpus.hpp"

#include <algorithm>
#include <set>

#include "tolfca/errors.hpp"

namespace tolfca {

namespace {

LatticePtr chain(const std::string& id, std::vector<std::string> names) {
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::size_t i = 0; i + 1 < names.size(); ++i) covers.emplace_back(names[i], names[i + 1]);
    return build_lattice(id, std::move(names), covers);
}

LatticePtr make_named(const std::string& id) {
    if (id == "C2") return chain(id, {"0", "1"});
    if (id == "C3") return chain(id, {"0", "m", "1"});
    if (id == "C4") return chain(id, {"0", "a", "b", "1"});
    if (id == "C5") return chain(id, {"0", "a", "b", "c", "1"});
    if (id == "B2")
        return build_lattice(id, {"0", "a", "b", "1"},
                             {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
    if (id == "B3")
        return build_lattice(id, {"0", "a", "b", "c", "ab", "ac", "bc", "1"},
                             {{"0", "a"},
                              {"0", "b"},
                              {"0", "c"},
                              {"a", "ab"},
                              {"a", "ac"},
                              {"b", "ab"},
                              {"b", "bc"},
                              {"c", "ac"},
                              {"c", "bc"},
                              {"ab", "1"},
                              {"ac", "1"},
                              {"bc", "1"}});
    if (id == "N5")
        return build_lattice(id, {"0", "a", "b", "c", "1"},
                             {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}});
    if (id == "M3")
        return build_lattice(id, {"0", "a", "b", "c", "1"},
                             {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
    if (id == "hexagon")
        return build_lattice(id, {"0", "a", "b", "c", "d", "1"},
                             {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}});
    throw UnknownLabel(id);
}

}  // namespace

const std::vector<std::string>& named_lattice_ids() {
    static const std::vector<std::string> ids = {"C2", "C3", "C4",      "C5", "B2",
                                                 "B3", "N5", "M3", "hexagon"};
    return ids;
}

LatticePtr named_lattice(const std::string& id) { return make_named(id); }

namespace {

// Depth-first extension by down-sets. Elements are placed in a linear
// extension, so the set of elements below x_j is fixed the moment x_j is
// placed; pairwise meets can therefore be checked as we go, and a poset with
// all meets and a top is a lattice.
struct Enumerator {
    int n;
    std::vector<Bits> down;  // down[j] includes j itself
    std::vector<LatticePtr> found;
    std::vector<std::vector<int>> class_keys;  // invariant profile per found lattice
    int counter = 0;

    explicit Enumerator(int n_) : n(n_) {}

    bool meets_ok(int j) {
        for (int i = 0; i < j; ++i) {
            Bits lb = down[i] & down[j];
            bool has_max = false;
            lb.for_each([&](int z) {
                if (!has_max && lb.is_subset_of(down[z])) has_max = true;
            });
            if (!has_max) return false;
        }
        return true;
    }

    void emit() {
        BitMatrix leq(n, n);
        for (int j = 0; j < n; ++j)
            down[j].for_each([&](int i) { leq.set(i, j); });
        std::vector<std::string> names;
        names.reserve(n);
        for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
        LatticePtr cand = lattice_from_order("", std::move(names), std::move(leq));
        // Dedup up to isomorphism against previous finds with the same
        // invariant profile.
        std::vector<int> key;
        for (int x = 0; x < n; ++x)
            key.push_back(cand->height(x) * 1024 + cand->down_set_of(x).count());
        std::sort(key.begin(), key.end());
        for (std::size_t i = 0; i < found.size(); ++i)
            if (class_keys[i] == key && are_isomorphic(*found[i], *cand)) return;
        auto named = std::make_shared<FiniteLattice>(*cand);
        named->name = "L" + std::to_string(n) + "." + std::to_string(++counter);
        found.push_back(std::move(named));
        class_keys.push_back(std::move(key));
    }

    void extend(int j) {
        if (j == n) {
            emit();
            return;
        }
        if (j == n - 1) {
            // the last element is the top
            Bits d = Bits::full(n);
            down[j] = d;
            if (meets_ok(j)) emit();
            return;
        }
        // Candidate down-sets: unions of existing principal down-sets that
        // include the bottom. Distinct generator sets can collapse to one
        // union, so dedup before recursing.
        std::set<Bits> cands;
        for (std::uint32_t mask = 1; mask < (1u << j); mask += 2) {
            Bits d(n);
            for (int i = 0; i < j; ++i)
                if (mask >> i & 1) d |= down[i];
            d.set(j);
            cands.insert(std::move(d));
        }
        for (const Bits& d : cands) {
            down[j] = d;
            if (meets_ok(j)) extend(j + 1);
        }
    }

    std::vector<LatticePtr> run() {
        if (n == 1) {
            found.push_back(build_lattice("L1.1", {"x0"}, {}));
            return found;
        }
        down.assign(n, Bits(n));
        down[0] = Bits(n);
        down[0].set(0);
        extend(1);
        return found;
    }
};

}  // namespace

std::vector<LatticePtr> enumerate_lattices(int n) {
    if (n < 1) throw SizeBound("lattice size must be at least 1");
    return Enumerator(n).run();
}

Corpus generate_corpus(int nmax) {
    if (nmax < 1 || nmax > 8)
        throw SizeBound("corpus size bound must be between 1 and 8, got " + std::to_string(nmax));
    Corpus c;
    for (int n = 1; n <= nmax; ++n)
        for (auto& l : enumerate_lattices(n)) c.entries.push_back({l, Provenance::enumerated});
    for (const auto& id : named_lattice_ids())
        c.entries.push_back({named_lattice(id), Provenance::named});
    return c;
}

}  // namespace tolfca
