#pragma once

#include <string>

#include "tolfca/verify.hpp"

namespace tolfca {

// Lattice files: {"name": str, "elements": [str...], "covers": [[str,str]...]}
// where a cover pair [a, b] means a is covered by b.
LatticePtr read_lattice_json(const std::string& path);
LatticePtr parse_lattice_json(const std::string& text, const std::string& origin);
std::string lattice_json(const FiniteLattice& l);
void write_lattice_json(const std::string& path, const FiniteLattice& l);

// Relation files: {"lattice": str, "pairs": [[str,str]...],
//                  "close": "none"|"reflexive"|"symmetric-reflexive"}
// The lattice name must match the host; the closure is applied after loading.
Relation read_relation_json(const std::string& path, const LatticePtr& host);
Relation parse_relation_json(const std::string& text, const std::string& origin,
                             const LatticePtr& host);
std::string relation_json(const Relation& r);
void write_relation_json(const std::string& path, const Relation& r);

// Burmeister context files, bit-exact: "B", blank, |G|, |M|, blank, object
// names, attribute names, then rows of '.' and 'X'.
FormalContext read_cxt(const std::string& path);
FormalContext parse_cxt(const std::string& text, const std::string& origin);
std::string cxt_string(const FormalContext& k);
void write_cxt(const std::string& path, const FormalContext& k);

// Hasse diagram in DOT, bottom-to-top, nodes sorted by (height, name).
std::string dot_string(const FiniteLattice& l);
void export_dot(const FiniteLattice& l, const std::string& path);
void export_dot(const FactorLattice& f, const std::string& path);
void export_dot(const ConceptLattice& c, const std::string& path);

// Verification report renderings. The JSON form carries the configuration,
// per-check tallies and every failing entry; the table is one row per check.
std::string report_json(const VerificationReport& r);
std::string report_table(const VerificationReport& r);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace tolfca
