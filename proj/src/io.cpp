#include "tolfca/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tolfca/errors.hpp"

namespace tolfca {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path + ": cannot open for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError(path + ": read failed");
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path + ": cannot open for writing");
    out << text;
    out.flush();
    if (!out) throw IoError(path + ": write failed");
}

namespace {

json parse_json(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw IoError(origin + ": " + e.what());
    }
}

std::vector<std::pair<std::string, std::string>> string_pairs(const json& arr,
                                                              const std::string& origin,
                                                              const char* field) {
    if (!arr.is_array())
        throw IoError(origin + ": field '" + field + "' must be an array of name pairs");
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& p : arr) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
            throw IoError(origin + ": field '" + field + "' must contain [string, string] pairs");
        out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
    return out;
}

}  // namespace

LatticePtr parse_lattice_json(const std::string& text, const std::string& origin) {
    json j = parse_json(text, origin);
    if (!j.is_object() || !j.contains("name") || !j.contains("elements") || !j.contains("covers"))
        throw IoError(origin + ": expected an object with name, elements and covers");
    if (!j["name"].is_string()) throw IoError(origin + ": 'name' must be a string");
    if (!j["elements"].is_array()) throw IoError(origin + ": 'elements' must be an array");
    std::vector<std::string> elements;
    for (const auto& e : j["elements"]) {
        if (!e.is_string()) throw IoError(origin + ": 'elements' must contain strings");
        elements.push_back(e.get<std::string>());
    }
    auto covers = string_pairs(j["covers"], origin, "covers");
    return build_lattice(j["name"].get<std::string>(), elements, covers);
}

LatticePtr read_lattice_json(const std::string& path) {
    return parse_lattice_json(read_text_file(path), path);
}

std::string lattice_json(const FiniteLattice& l) {
    json j;
    j["name"] = l.name;
    j["elements"] = l.elem_names;
    json covers = json::array();
    for (auto [i, k] : l.covers)
        covers.push_back(json::array({l.elem_names[i], l.elem_names[k]}));
    j["covers"] = covers;
    return j.dump(2) + "\n";
}

void write_lattice_json(const std::string& path, const FiniteLattice& l) {
    write_text_file(path, lattice_json(l));
}

Relation parse_relation_json(const std::string& text, const std::string& origin,
                             const LatticePtr& host) {
    json j = parse_json(text, origin);
    if (!j.is_object() || !j.contains("lattice") || !j.contains("pairs"))
        throw IoError(origin + ": expected an object with lattice, pairs and close");
    if (!j["lattice"].is_string()) throw IoError(origin + ": 'lattice' must be a string");
    if (j["lattice"].get<std::string>() != host->name)
        throw IoError(origin + ": relation is for lattice '" + j["lattice"].get<std::string>() +
                      "', not '" + host->name + "'");
    std::string close = "none";
    if (j.contains("close")) {
        if (!j["close"].is_string()) throw IoError(origin + ": 'close' must be a string");
        close = j["close"].get<std::string>();
    }
    if (close != "none" && close != "reflexive" && close != "symmetric-reflexive")
        throw IoError(origin + ": 'close' must be none, reflexive or symmetric-reflexive");

    BitMatrix m(host->n, host->n);
    auto idx = [&](const std::string& s) {
        auto i = host->index_of(s);
        if (!i) throw UnknownLabel(s);
        return *i;
    };
    for (const auto& [a, b] : string_pairs(j["pairs"], origin, "pairs")) m.set(idx(a), idx(b));
    if (close == "reflexive" || close == "symmetric-reflexive")
        m = m | BitMatrix::identity(host->n);
    if (close == "symmetric-reflexive") m = m | m.transposed();
    return Relation(host, m);
}

Relation read_relation_json(const std::string& path, const LatticePtr& host) {
    return parse_relation_json(read_text_file(path), path, host);
}

std::string relation_json(const Relation& r) {
    const auto& l = *r.host();
    json j;
    j["lattice"] = l.name;
    json pairs = json::array();
    for (auto [x, y] : r.pairs()) pairs.push_back(json::array({l.elem_names[x], l.elem_names[y]}));
    j["pairs"] = pairs;
    j["close"] = "none";
    return j.dump(2) + "\n";
}

void write_relation_json(const std::string& path, const Relation& r) {
    write_text_file(path, relation_json(r));
}

FormalContext parse_cxt(const std::string& text, const std::string& origin) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);

    auto need = [&](std::size_t i) -> const std::string& {
        if (i >= lines.size()) throw IoError(origin + ": truncated context file");
        return lines[i];
    };
    if (need(0) != "B") throw IoError(origin + ": not a Burmeister context file");
    if (!need(1).empty()) throw IoError(origin + ": expected a blank line after the header");
    int ng = 0, nm = 0;
    try {
        ng = std::stoi(need(2));
        nm = std::stoi(need(3));
    } catch (const std::exception&) {
        throw IoError(origin + ": object/attribute counts must be integers");
    }
    if (ng < 0 || nm < 0) throw IoError(origin + ": negative object or attribute count");
    if (!need(4).empty()) throw IoError(origin + ": expected a blank line after the counts");

    FormalContext k;
    std::size_t at = 5;
    for (int g = 0; g < ng; ++g) k.objects.push_back(need(at++));
    for (int m = 0; m < nm; ++m) k.attributes.push_back(need(at++));
    k.incidence = BitMatrix(ng, nm);
    for (int g = 0; g < ng; ++g) {
        const std::string& row = need(at++);
        if (int(row.size()) != nm)
            throw IoError(origin + ": incidence row has wrong length");
        for (int m = 0; m < nm; ++m) {
            if (row[m] == 'X')
                k.incidence.set(g, m);
            else if (row[m] != '.')
                throw IoError(origin + ": incidence rows may only contain '.' and 'X'");
        }
    }
    for (; at < lines.size(); ++at)
        if (!lines[at].empty()) throw IoError(origin + ": trailing content after incidence rows");
    return k;
}

FormalContext read_cxt(const std::string& path) { return parse_cxt(read_text_file(path), path); }

std::string cxt_string(const FormalContext& k) {
    std::ostringstream out;
    out << "B\n\n" << k.objects.size() << "\n" << k.attributes.size() << "\n\n";
    for (const auto& g : k.objects) out << g << "\n";
    for (const auto& m : k.attributes) out << m << "\n";
    for (std::size_t g = 0; g < k.objects.size(); ++g) {
        for (std::size_t m = 0; m < k.attributes.size(); ++m)
            out << (k.incidence.test(int(g), int(m)) ? 'X' : '.');
        out << "\n";
    }
    return out.str();
}

void write_cxt(const std::string& path, const FormalContext& k) {
    write_text_file(path, cxt_string(k));
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string dot_string(const FiniteLattice& l) {
    std::vector<int> order(l.n);
    for (int i = 0; i < l.n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (l.heights[a] != l.heights[b]) return l.heights[a] < l.heights[b];
        return l.elem_names[a] < l.elem_names[b];
    });
    std::vector<int> pos(l.n);
    for (int i = 0; i < l.n; ++i) pos[order[i]] = i;
    auto edges = l.covers;
    std::sort(edges.begin(), edges.end(), [&](const auto& a, const auto& b) {
        if (pos[a.first] != pos[b.first]) return pos[a.first] < pos[b.first];
        return pos[a.second] < pos[b.second];
    });
    std::ostringstream out;
    out << "digraph " << dot_quote(l.name) << " {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int i : order) out << "  " << dot_quote(l.elem_names[i]) << ";\n";
    for (auto [i, j] : edges)
        out << "  " << dot_quote(l.elem_names[i]) << " -> " << dot_quote(l.elem_names[j]) << ";\n";
    out << "}\n";
    return out.str();
}

void export_dot(const FiniteLattice& l, const std::string& path) {
    write_text_file(path, dot_string(l));
}

void export_dot(const FactorLattice& f, const std::string& path) {
    export_dot(*f.as_lattice, path);
}

void export_dot(const ConceptLattice& c, const std::string& path) {
    export_dot(*c.as_lattice, path);
}

std::string report_json(const VerificationReport& r) {
    json j;
    j["config"] = {{"nmax", r.config.nmax},
                   {"seed", r.config.seed},
                   {"triple_samples", r.config.triple_samples},
                   {"exhaustive_triple_budget", r.config.exhaustive_triple_budget},
                   {"pair_sample_budget", r.config.pair_sample_budget},
                   {"random_relations", r.config.random_relations},
                   {"random_subsets", r.config.random_subsets}};
    j["checks"] = r.checks;
    j["lattice_count"] = r.lattice_count;
    j["entries"] = r.entries.size();
    json per = json::object();
    for (const auto& [id, s] : r.per_check) per[id] = {{"run", s.run}, {"failed", s.failed}};
    j["per_check"] = per;
    json fails = json::array();
    for (const auto& e : r.entries)
        if (!e.pass)
            fails.push_back({{"lattice", e.lattice_id},
                             {"tolerance", e.tolerance_id},
                             {"check", e.check_id},
                             {"witness", e.witness}});
    j["failures"] = fails;
    j["failure_count"] = r.failures;
    j["all_pass"] = r.all_pass();
    return j.dump(2) + "\n";
}

std::string report_table(const VerificationReport& r) {
    std::size_t width = 5;
    for (const auto& id : r.checks) width = std::max(width, id.size());
    std::ostringstream out;
    out << "lattices: " << r.lattice_count << "\n";
    for (const auto& id : r.checks) {
        auto it = r.per_check.find(id);
        int run = it == r.per_check.end() ? 0 : it->second.run;
        int failed = it == r.per_check.end() ? 0 : it->second.failed;
        out << "  " << id << std::string(width - id.size() + 2, ' ') << run << " run, " << failed
            << " failed\n";
    }
    out << (r.all_pass() ? "ALL PASS" : "FAILURES: " + std::to_string(r.failures)) << "\n";
    return out.str();
}

}  // namespace tolfca
