// Acceptance gate: one line per criterion, [PASS] or [FAIL], exit 0 only if
// everything passes. Each criterion is checked end to end against the library
// (and, where required, against the naive oracles or the CLI).

#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "tolfca/errors.hpp"
#include "tolfca/io.hpp"

using namespace tolfca;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool pass, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", number, label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

bool suite_clean(const Corpus& corpus, const std::vector<std::string>& checks,
                 std::string* detail) {
    CheckConfig cfg;
    VerificationReport r = run_theorem_suite(corpus, checks, cfg);
    std::ostringstream d;
    d << r.failures << " failures over " << r.lattice_count << " lattices";
    *detail = d.str();
    return r.all_pass();
}

Relation rel_fixture(const LatticePtr& l, const std::string& name) {
    return read_relation_json(fixture(name), l);
}

}  // namespace

int main() {
    Corpus corpus6 = generate_corpus(6);

    {  // 1: the tolerance <-> relation bijection, timed
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = suite_clean(
            corpus6, {"tolerance-wor-bijection", "attached-wor-valid", "wor-roundtrip"}, &detail);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s in %.1fs", detail.c_str(), secs);
        report(1, "round trips and order isomorphism on every lattice up to 6 elements",
               ok && secs < 120.0, buf);
    }

    {  // 2: block <-> concept bijection, including the worked chain example
        std::string detail;
        bool ok = suite_clean(corpus6, {"block-concept-bijection"}, &detail);
        LatticePtr c3 = read_lattice_json(fixture("c3.json"));
        auto tols = enumerate_tolerances(c3);
        Relation glued = rel_fixture(c3, "glued.json");
        bool found = false;
        for (const auto& t : tols) found = found || t == glued;
        bool worked = tols.size() == 5 && found;
        try {
            BlockConceptCorrespondence bc = block_concept_correspondence(glued);
            worked = worked && bc.factor.blocks.size() == 2 &&
                     bc.concept_lattice.concepts.size() == 2 &&
                     bc.empty_intersection_concepts.empty();
        } catch (const Error&) {
            worked = false;
        }
        report(2, "blocks match nonempty concepts on the corpus and the worked example",
               ok && worked, detail);
    }

    {  // 3: factor lattice, completion and concept lattice are one
        std::string detail;
        bool ok = suite_clean(
            corpus6, {"block-embedding", "embedding-density", "factor-concept-isomorphism"},
            &detail);
        report(3, "factor, completion and concept lattice isomorphisms with dense image", ok,
               detail);
    }

    {  // 4: relation algebra on weak ordered relations
        std::string detail;
        bool ok = suite_clean(corpus6, {"wor-monoid", "wor-distributivity", "wor-intersection"},
                              &detail);
        report(4, "monoid laws, unit laws and distributivity for weak ordered relations", ok,
               detail);
    }

    {  // 5: the auxiliary laws used along the way
        std::string detail;
        bool ok = suite_clean(corpus6,
                              {"product-meet-bound", "product-distributivity",
                               "tolerance-order-section", "rewor-order-bounds",
                               "tolerance-recovery"},
                              &detail);
        report(5, "section, bound and recovery laws on all sampled instances", ok, detail);
    }

    {  // 6: enumeration equals brute force; the two checkers agree
        bool ok = true;
        int lattices = 0;
        for (int n = 1; n <= 5 && ok; ++n)
            for (const auto& l : enumerate_lattices(n)) {
                ++lattices;
                std::set<BitMatrix> tols;
                for (const auto& t : enumerate_tolerances(l)) tols.insert(t.bits());
                if (tols != oracle::brute_tolerances(*l)) ok = false;
                std::set<BitMatrix> rewors;
                for (const auto& r : enumerate_rewor(l)) rewors.insert(r.bits());
                if (rewors != oracle::brute_rewor(*l)) ok = false;
                std::uint64_t state = 0x9e3779b97f4a7c15ull ^ (std::uint64_t(n) << 32);
                for (int s = 0; s < 1000 && ok; ++s) {
                    BitMatrix m(l->n, l->n);
                    for (int i = 0; i < l->n; ++i)
                        for (int j = 0; j < l->n; ++j) {
                            state = state * 6364136223846793005ull + 1442695040888963407ull;
                            if ((state >> 40) % 4 == 0) m.set(i, j);
                        }
                    Relation r(l, m);
                    bool def = is_reflexive(r) && is_weak_ordered(r);
                    if (def != is_rewor_by_characterization(r)) ok = false;
                    if (is_weak_ordered(r) != oracle::naive_weak_ordered(*l, m)) ok = false;
                }
            }
        char buf[96];
        std::snprintf(buf, sizeof buf, "%d lattices, 1000 random relations each", lattices);
        report(6, "enumerations equal brute force and the two checkers agree", ok, buf);
    }

    {  // 7: the concrete frozen numbers
        LatticePtr c3 = read_lattice_json(fixture("c3.json"));
        bool ok = enumerate_tolerances(named_lattice("C2")).size() == 2 &&
                  enumerate_tolerances(c3).size() == 5;
        Relation glued = rel_fixture(c3, "glued.json");
        auto bs = blocks(glued);
        ok = ok && bs.size() == 2 && bs[0].members.to_indices() == std::vector<int>{0, 1} &&
             bs[1].members.to_indices() == std::vector<int>{1, 2};
        Relation r1 = rel_fixture(c3, "r1.json");
        ConceptLattice cl = concepts({c3->elem_names, c3->elem_names, r1.bits()});
        ok = ok && cl.concepts.size() == 2;
        report(7, "frozen counts: two, five, the two glued blocks, two concepts", ok);
    }

    {  // 8: completions are fixed points; the antichain completes to the square
        std::string detail;
        bool ok = suite_clean(corpus6, {"completion-fixed-point"}, &detail);
        ConceptLattice anti = dm_completion({"a", "b"}, BitMatrix::identity(2));
        ok = ok && anti.concepts.size() == 4 &&
             are_isomorphic(*anti.as_lattice, *named_lattice("B2")).has_value();
        report(8, "completion fixes every lattice and squares the antichain", ok, detail);
    }

    {  // 9: formats round trip and the full verification run is clean
        bool ok = true;
        for (const char* f :
             {"c3.json", "b2.json", "n5.json", "m3.json", "b3.json", "hexagon.json"}) {
            LatticePtr l = read_lattice_json(fixture(f));
            LatticePtr back = parse_lattice_json(lattice_json(*l), "rt");
            if (!(l->elem_names == back->elem_names && l->leq == back->leq &&
                  l->name == back->name))
                ok = false;
        }
        LatticePtr c3 = read_lattice_json(fixture("c3.json"));
        for (const char* f : {"t1.json", "r1.json", "glued.json"}) {
            Relation r = rel_fixture(c3, f);
            if (!(parse_relation_json(relation_json(r), "rt", c3) == r)) ok = false;
        }
        FormalContext k = read_cxt(fixture("c3_leq.cxt"));
        if (cxt_string(k) != read_text_file(fixture("c3_leq.cxt"))) ok = false;
        std::ostringstream out, err;
        int code = cli::run({"verify", "--nmax", "6"}, out, err);
        if (code != 0) ok = false;
        report(9, "round trips are exact and the full verify run exits clean", ok,
               code == 0 ? "verify --nmax 6 exit 0" : "verify failed");
    }

    std::printf("%s\n", failures == 0 ? "acceptance: all criteria pass"
                                      : "acceptance: criteria failed");
    return failures == 0 ? 0 : 1;
}
