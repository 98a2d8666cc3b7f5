#include "cli.hpp"

#include <cstdio>
#include <filesystem>
#include <ostream>

#include "CLI11.hpp"
#include "tolfca/errors.hpp"
#include "tolfca/io.hpp"

namespace tolfca::cli {

namespace {

std::string set_names(const FiniteLattice& l, const Bits& b) {
    std::string out = "{";
    bool first = true;
    b.for_each([&](int i) {
        if (!first) out += ",";
        out += l.elem_names[i];
        first = false;
    });
    return out + "}";
}

void print_block_list(const FiniteLattice& l, const std::vector<Block>& bs, std::ostream& out) {
    out << "blocks (" << bs.size() << "):\n";
    for (const auto& b : bs)
        out << "  [" << l.elem_names[b.bottom] << "," << l.elem_names[b.top]
            << "] = " << set_names(l, b.members) << "\n";
}

void print_covers(const FiniteLattice& l, std::ostream& out) {
    for (auto [i, j] : l.covers)
        out << "  " << l.elem_names[i] << " -< " << l.elem_names[j] << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite lattice tolerances, blocks and concept lattices"};
    app.require_subcommand(1);

    std::string lattice_path, rel_path, mode, ctx_path, out_path, dot_path, json_path, out_dir;
    std::string checks_csv;
    bool count_only = false, list_all = false;
    int nmax = 6;

    auto* validate = app.add_subcommand("validate", "check a lattice file and summarize it");
    validate->add_option("lattice", lattice_path, "lattice JSON file")->required();

    auto* tolerances = app.add_subcommand("tolerances", "enumerate all tolerances of a lattice");
    tolerances->add_option("lattice", lattice_path, "lattice JSON file")->required();
    auto* copt = tolerances->add_flag("--count", count_only, "print only the count");
    tolerances->add_flag("--list", list_all, "print every tolerance")->excludes(copt);

    auto* rel = app.add_subcommand("rel", "map a tolerance or weak ordered relation across");
    rel->add_option("mode", mode, "beta (tolerance to relation) or alpha (relation to tolerance)")
        ->required()
        ->check(CLI::IsMember({"alpha", "beta"}));
    rel->add_option("lattice", lattice_path, "lattice JSON file")->required();
    rel->add_option("relation", rel_path, "relation JSON file")->required();

    auto* blocks_cmd = app.add_subcommand("blocks", "list the blocks of a tolerance");
    blocks_cmd->add_option("lattice", lattice_path, "lattice JSON file")->required();
    blocks_cmd->add_option("--tolerance", rel_path, "tolerance JSON file")->required();

    auto* factor = app.add_subcommand("factor", "build the lattice of blocks");
    factor->add_option("lattice", lattice_path, "lattice JSON file")->required();
    factor->add_option("--tolerance", rel_path, "tolerance JSON file")->required();
    factor->add_option("--dot", dot_path, "also write the factor diagram to this DOT file");

    auto* concepts_cmd = app.add_subcommand("concepts", "list the concepts of a context");
    concepts_cmd->add_option("context", ctx_path, "Burmeister .cxt file");
    concepts_cmd->add_option("--lattice", lattice_path, "lattice JSON file");
    concepts_cmd->add_option("--tolerance", rel_path, "tolerance JSON file");

    auto* dm = app.add_subcommand("dm", "Dedekind-MacNeille completion of a lattice");
    dm->add_option("lattice", lattice_path, "lattice JSON file")->required();

    auto* verify = app.add_subcommand("verify", "run the property checks over small lattices");
    verify->add_option("--nmax", nmax, "verify all lattices up to this size")
        ->check(CLI::Range(1, 8));
    verify->add_option("--checks", checks_csv, "comma-separated check ids (default: all)");
    verify->add_option("--json", json_path, "write the full report as JSON to this file");

    auto* gen = app.add_subcommand("gen", "write every small lattice to a directory");
    gen->add_option("--nmax", nmax, "largest lattice size")->check(CLI::Range(1, 8));
    gen->add_option("--out", out_dir, "output directory")->required();

    auto* exp = app.add_subcommand("export-dot", "write the Hasse diagram of a lattice");
    exp->add_option("lattice", lattice_path, "lattice JSON file")->required();
    exp->add_option("output", out_path, "DOT output file")->required();

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(validate)) {
            LatticePtr l = read_lattice_json(lattice_path);
            out << l->name << ": " << l->n << " elements, bottom=" << l->elem_names[l->bottom]
                << ", top=" << l->elem_names[l->top] << ", height=" << l->height(l->top) << "\n";
        } else if (app.got_subcommand(tolerances)) {
            LatticePtr l = read_lattice_json(lattice_path);
            auto tols = enumerate_tolerances(l);
            if (list_all) {
                for (std::size_t i = 0; i < tols.size(); ++i) {
                    char id[16];
                    std::snprintf(id, sizeof id, "t%04zu", i);
                    out << id << ":";
                    for (auto [x, y] : tols[i].pairs())
                        out << " (" << l->elem_names[x] << "," << l->elem_names[y] << ")";
                    out << "\n";
                }
            } else {
                out << tols.size() << "\n";
            }
        } else if (app.got_subcommand(rel)) {
            LatticePtr l = read_lattice_json(lattice_path);
            Relation r = read_relation_json(rel_path, l);
            Relation mapped = mode == "beta" ? wor_from_tolerance(r) : tolerance_from_wor(r);
            out << relation_json(mapped);
        } else if (app.got_subcommand(blocks_cmd)) {
            LatticePtr l = read_lattice_json(lattice_path);
            Relation t = read_relation_json(rel_path, l);
            print_block_list(*l, blocks(t), out);
        } else if (app.got_subcommand(factor)) {
            LatticePtr l = read_lattice_json(lattice_path);
            Relation t = read_relation_json(rel_path, l);
            FactorLattice f = factor_lattice(t);
            print_block_list(*l, f.blocks, out);
            out << "factor lattice (" << f.as_lattice->n << " elements):\n";
            print_covers(*f.as_lattice, out);
            if (!dot_path.empty()) export_dot(f, dot_path);
        } else if (app.got_subcommand(concepts_cmd)) {
            FormalContext k;
            if (!ctx_path.empty() && lattice_path.empty() && rel_path.empty()) {
                k = read_cxt(ctx_path);
            } else if (ctx_path.empty() && !lattice_path.empty() && !rel_path.empty()) {
                LatticePtr l = read_lattice_json(lattice_path);
                k = tolerance_context(read_relation_json(rel_path, l));
            } else {
                err << "error: concepts needs either a .cxt file or --lattice with --tolerance\n";
                return 2;
            }
            ConceptLattice cl = concepts(k);
            out << "concepts (" << cl.concepts.size() << "):\n";
            for (const auto& name : cl.as_lattice->elem_names) out << "  " << name << "\n";
        } else if (app.got_subcommand(dm)) {
            LatticePtr l = read_lattice_json(lattice_path);
            ConceptLattice cl = dm_completion(*l);
            out << "completion of " << l->name << ": " << cl.concepts.size() << " concepts\n";
            out << "isomorphic to input: "
                << (are_isomorphic(*l, *cl.as_lattice) ? "yes" : "no") << "\n";
        } else if (app.got_subcommand(verify)) {
            CheckConfig cfg;
            cfg.nmax = nmax;
            std::vector<std::string> ids;
            if (checks_csv.empty()) {
                for (const auto& c : check_registry()) ids.push_back(c.id);
            } else {
                std::string cur;
                for (char c : checks_csv + ",") {
                    if (c == ',') {
                        if (!cur.empty()) ids.push_back(cur);
                        cur.clear();
                    } else {
                        cur += c;
                    }
                }
            }
            VerificationReport report = run_theorem_suite(generate_corpus(nmax), ids, cfg);
            out << report_table(report);
            if (!json_path.empty()) write_text_file(json_path, report_json(report));
            return report.all_pass() ? 0 : 1;
        } else if (app.got_subcommand(gen)) {
            std::error_code ec;
            std::filesystem::create_directories(out_dir, ec);
            if (ec) throw IoError(out_dir + ": cannot create directory");
            Corpus corpus = generate_corpus(nmax);
            for (const auto& e : corpus.entries)
                write_lattice_json(out_dir + "/" + e.lattice->name + ".json", *e.lattice);
            out << "wrote " << corpus.entries.size() << " lattices to " << out_dir << "\n";
        } else if (app.got_subcommand(exp)) {
            LatticePtr l = read_lattice_json(lattice_path);
            export_dot(*l, out_path);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace tolfca::cli
