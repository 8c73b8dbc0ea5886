#include "bca/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bca/chains.hpp"
#include "bca/parse.hpp"
#include "bca/spaces.hpp"

namespace bca {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json check_to_json(const Check& c) {
    Json obj;
    obj["axiom"] = c.axiom;
    obj["verdict"] = c.pass ? "pass" : "fail";
    if (c.witness) obj["witness"] = *c.witness;
    if (c.cases) obj["cases"] = *c.cases;
    return obj;
}

Json verdict_to_json(const std::string& axiom, const Verdict& v) {
    Json obj;
    obj["axiom"] = axiom;
    obj["verdict"] = v.status_str();
    if (v.witness) obj["witness"] = *v.witness;
    if (v.depth) obj["cases"] = *v.depth;
    return obj;
}

std::string verdict_text(const std::string& axiom, const Verdict& v) {
    std::string out = axiom + ": " + v.status_str();
    if (v.depth) out += " " + std::to_string(*v.depth);
    if (v.witness) out += " (witness " + *v.witness + ")";
    if (!v.detail.empty()) out += " -- " + v.detail;
    return out + "\n";
}

/// Collected output of one subcommand, renderable as text or JSON.
struct Output {
    std::vector<std::string> prelude;  // human-readable context lines
    std::vector<std::pair<std::string, Json>> extra;  // named JSON fields
    Json verdicts = Json::array();
    std::vector<std::string> verdict_lines;
    std::vector<std::string> notes;
    bool failed = false;

    void add(const Check& c) {
        verdicts.push_back(check_to_json(c));
        std::string line = c.axiom;
        line += c.pass ? ": pass" : ": fail";
        if (c.witness) line += " (witness " + *c.witness + ")";
        if (c.cases) line += " [" + std::to_string(*c.cases) + " cases]";
        verdict_lines.push_back(line + "\n");
        if (!c.pass) failed = true;
    }
    void add(const AxiomReport& report) {
        for (const Check& c : report.checks) add(c);
        for (const std::string& n : report.footnotes) notes.push_back(n);
    }
    void add(const std::string& axiom, const Verdict& v) {
        verdicts.push_back(verdict_to_json(axiom, v));
        verdict_lines.push_back(verdict_text(axiom, v));
        if (!v.ok()) failed = true;
    }

    int emit(std::ostream& out, const std::string& mode, bool expect_fail) const {
        if (mode == "json") {
            Json doc;
            if (!prelude.empty()) {
                Json p = Json::array();
                for (const std::string& line : prelude) p.push_back(line);
                doc["context"] = p;
            }
            for (const auto& [key, value] : extra) doc[key] = value;
            doc["verdicts"] = verdicts;
            if (!notes.empty()) {
                Json n = Json::array();
                for (const std::string& note : notes) n.push_back(note);
                doc["notes"] = n;
            }
            out << doc.dump(2) << "\n";
        } else {
            for (const std::string& line : prelude) out << line << "\n";
            for (const std::string& line : verdict_lines) out << line;
            for (const std::string& note : notes) out << "note: " << note << "\n";
        }
        bool bad = expect_fail ? !failed : failed;
        return bad ? 1 : 0;
    }
};

ContactStructure load_structure(const std::string& path) {
    return build_structure(parse_spec_text(read_file(path)));
}

int run_check(const std::string& file, const std::string& emit, std::ostream& out) {
    ContactStructure s = load_structure(file);
    Output o;
    o.add(check_contact_axioms(s));
    return o.emit(out, emit, false);
}

int run_points(const std::string& file, const std::string& kind,
               const std::string& emit, std::ostream& out) {
    ContactStructure s = load_structure(file);
    const BooleanAlgebra& b = s.algebra();
    std::vector<Filter> points;
    if (kind == "ultra") points = enumerate_ultrafilters(b);
    else if (kind == "round") points = enumerate_round_filters(s);
    else if (kind == "ends") points = enumerate_ends(s);
    else points = enumerate_g_points(s);
    if (emit == "json") {
        Json doc;
        doc["kind"] = kind;
        doc["count"] = points.size();
        Json arr = Json::array();
        for (const Filter& f : points) arr.push_back(b.format(f.generator));
        doc["points"] = arr;
        out << doc.dump(2) << "\n";
    } else {
        out << kind << " points: " << points.size() << "\n";
        for (const Filter& f : points) out << b.format(f.generator) << "\n";
    }
    return 0;
}

int run_space(const std::string& file, const std::string& kind,
              const std::string& emit, bool dump_basis, std::ostream& out) {
    ContactStructure s = load_structure(file);
    PointKind pk = kind == "stone"  ? PointKind::Stone
                   : kind == "end" ? PointKind::End
                                    : PointKind::Grz;
    TopSpace x = point_space(s, pk);
    Output o;
    o.prelude.push_back("points: " + std::to_string(x.point_count()));
    if (x.flagged_empty) o.prelude.push_back("flagged: " + x.flag_reason);
    if (dump_basis)
        for (const auto& line : [&] {
                 std::vector<std::string> lines;
                 std::istringstream dump(basis_dump(x));
                 for (std::string l; std::getline(dump, l);) lines.push_back(l);
                 return lines;
             }())
            o.prelude.push_back("basis " + line);
    o.extra.emplace_back("points", [&] {
        Json arr = Json::array();
        for (const std::string& label : x.point_labels) arr.push_back(label);
        return arr;
    }());
    o.add(check_space_properties(x));
    return o.emit(out, emit, false);
}

int run_duality(const std::string& file, const std::string& kind,
                const std::string& emit, std::ostream& out) {
    ContactStructure s = load_structure(file);
    DualityReport report = kind == "stone" ? verify_stone_duality(s.algebra())
                                           : verify_de_vries_embedding(s);
    Output o;
    for (const auto& [from, to] : report.forward)
        o.prelude.push_back(from + " -> " + to);
    o.extra.emplace_back("map", [&] {
        Json arr = Json::array();
        for (const auto& [from, to] : report.forward) {
            Json entry;
            entry["element"] = from;
            entry["image"] = to;
            arr.push_back(entry);
        }
        return arr;
    }());
    o.add(report.checks);
    return o.emit(out, emit, false);
}

int run_ro_eval(const std::string& expr, std::ostream& out) {
    EvalResult r = eval_region_expression(expr);
    if (r.truth)
        out << (*r.truth ? "true" : "false") << "\n";
    else
        out << r.region->str() << "\n";
    return 0;
}

int run_demo(const std::string& family, int depth, const Rat& at, bool expect_fail,
             const std::string& emit, std::ostream& out) {
    Output o;
    if (family == "origin") {
        RegionChain chain = origin_family(at);
        Catalog catalog = build_catalog(chain, depth, true);
        o.prelude.push_back("family " + chain.name() + ", depth " + std::to_string(depth) +
                            ", catalog " + std::to_string(catalog.entries.size()));
        FalsifyResult f = g_rep_falsify(chain, depth, catalog);
        o.add("r3-falsification", f.verdict);
        WRepResult w = is_w_representative(chain, depth, catalog);
        o.add("w-representative", w.verdict);
    } else if (family == "tails") {
        RegionChain chain = tails_family();
        Catalog periodic = build_catalog(chain, depth, true);
        Catalog plain = build_catalog(chain, depth, false);
        FalsifyResult f = g_rep_falsify(chain, depth, periodic);
        if (f.witness) {
            o.prelude.push_back("r3 witnesses: x=" + f.witness->first.str() +
                                "  y=" + f.witness->second.str());
        }
        o.add("r3-falsification-periodic", f.verdict);
        o.add("r3-falsification-plain", g_rep_falsify(chain, depth, plain).verdict);
        if (f.witness) {
            CounterexampleSequence seq = build_counterexample_sequence(
                chain, f.witness->first, f.witness->second, depth);
            std::string prefix;
            for (int i = 0; i <= std::min(depth, 3); ++i) {
                if (i) prefix += "  ;  ";
                prefix += seq.chain.at(i).str();
            }
            o.prelude.push_back("counterexample chain prefix: " + prefix);
            o.add("counterexample-covered", seq.covered_by_input);
            o.add("counterexample-covers-back", seq.covers_back);
        }
    } else if (family == "deVriesNotEnd") {
        RegionChain chain = de_vries_not_end_family();
        RegionChain extension = origin_family(Rat(0));
        Verdict round = first_descent_violation(chain, depth)
                            ? Verdict::fails("descent")
                            : Verdict::holds_to_depth(depth, "generated filter is round");
        o.add("round", round);
        o.add("extension-round", first_descent_violation(extension, depth)
                                     ? Verdict::fails("descent")
                                     : Verdict::holds_to_depth(depth));
        o.add("extension-covers", chain_covers(chain, extension, depth));
        Region middle = Region::interval(Rat(-1), Rat(1));
        bool in_extension = leq(extension.at(1), middle);
        bool in_original = false;
        for (int j = 0; j <= depth; ++j)
            if (leq(chain.at(j), middle)) { in_original = true; break; }
        o.add("extension-proper",
              in_extension && !in_original
                  ? Verdict::holds_to_depth(depth,
                                            "(-1,1) belongs to the extension only")
                  : Verdict::fails("(-1,1)"));
    } else if (family == "stripes4") {
        auto [u, v] = stripes4();
        o.prelude.push_back("x=" + u.str() + "  y=" + v.str());
        o.add("separated", contact(u, v) ? Verdict::fails("closures meet")
                                         : Verdict::holds());
        RegionChain chain = tails_family();
        bool all = true;
        for (int i = 0; i <= depth; ++i)
            if (!overlap(u, chain.at(i)) || !overlap(v, chain.at(i))) { all = false; break; }
        o.add("overlap-all-tails",
              all ? Verdict::holds_to_depth(depth) : Verdict::fails("missed tail"));
    } else if (family == "counterexample") {
        RegionChain chain = tails_family();
        auto [u, v] = stripes4();
        CounterexampleSequence seq = build_counterexample_sequence(chain, u, v, depth);
        std::string prefix;
        for (int i = 0; i <= std::min(depth, 3); ++i) {
            if (i) prefix += "  ;  ";
            prefix += seq.chain.at(i).str();
        }
        o.prelude.push_back("chain prefix: " + prefix);
        o.add("nonzero", seq.nonzero);
        o.add("descending", seq.descending);
        o.add("covered-by-tails", seq.covered_by_input);
        o.add("covers-back", seq.covers_back);
    } else {
        throw std::runtime_error("unknown family: " + family);
    }
    return o.emit(out, emit, expect_fail);
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Boolean contact algebras, their point constructions, and the exact "
                 "rational interval model of the real line"};
    app.require_subcommand(1);

    std::string file, kind, emit = "text", expr, family, at = "0";
    int depth = 20;
    bool expect_fail = false;

    CLI::App* check = app.add_subcommand("check", "verify contact axioms on a spec file");
    check->add_option("file", file)->required();
    check->add_option("--emit", emit)->check(CLI::IsMember({"text", "json"}));

    CLI::App* points = app.add_subcommand("points", "enumerate point-like filters");
    points->add_option("file", file)->required();
    points->add_option("--kind", kind)
        ->required()
        ->check(CLI::IsMember({"ultra", "round", "ends", "grz"}));
    points->add_option("--emit", emit)->check(CLI::IsMember({"text", "json"}));

    CLI::App* space = app.add_subcommand("space", "build and examine a point space");
    space->add_option("file", file)->required();
    space->add_option("--kind", kind)
        ->required()
        ->check(CLI::IsMember({"stone", "end", "grz"}));
    space->add_option("--emit", emit)->check(CLI::IsMember({"text", "json"}));
    bool dump_basis = false;
    space->add_flag("--dump-basis", dump_basis);

    CLI::App* duality = app.add_subcommand("duality", "verify an object-level duality");
    duality->add_option("file", file)->required();
    duality->add_option("--kind", kind)
        ->required()
        ->check(CLI::IsMember({"stone", "devries"}));
    duality->add_option("--emit", emit)->check(CLI::IsMember({"text", "json"}));

    CLI::App* ro = app.add_subcommand("ro", "evaluate a region expression");
    CLI::App* ro_eval = ro->add_subcommand("eval", "evaluate");
    ro_eval->add_option("expr", expr)->required();
    ro->require_subcommand(1);

    CLI::App* demo = app.add_subcommand("demo", "run a named canonical family");
    demo->add_option("family", family)
        ->required()
        ->check(CLI::IsMember(
            {"origin", "tails", "deVriesNotEnd", "stripes4", "counterexample"}));
    demo->add_option("--depth", depth)->check(CLI::PositiveNumber);
    demo->add_option("--at", at);
    demo->add_flag("--expect-fail", expect_fail);
    demo->add_option("--emit", emit)->check(CLI::IsMember({"text", "json"}));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (check->parsed()) return run_check(file, emit, out);
        if (points->parsed()) return run_points(file, kind, emit, out);
        if (space->parsed()) return run_space(file, kind, emit, dump_basis, out);
        if (duality->parsed()) return run_duality(file, kind, emit, out);
        if (ro->parsed()) return run_ro_eval(expr, out);
        if (demo->parsed())
            return run_demo(family, depth, parse_rational_text(at), expect_fail, emit, out);
    } catch (const ParseError& e) {
        err << "parse error at " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace bca
