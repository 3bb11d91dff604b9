// lcgd: exact toolkit for log-concavity relations on integer sequences,
// partitioned genus distribution chains, and brute-force embedding
// enumeration. Exit codes: 0 all requested checks hold, 1 a check failed
// (witness printed), 2 usage or input error.

#include "lcgd/enumerate.hpp"
#include "lcgd/explore.hpp"
#include "lcgd/json_io.hpp"
#include "lcgd/pgd.hpp"
#include "lcgd/relations.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace lcgd;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string verdict_str(const Verdict& v) {
    if (v.holds) return "holds";
    std::string out = "fails (" + v.witness->inequality + " at k=" + std::to_string(v.witness->k);
    if (v.witness->i) out += ", i=" + std::to_string(*v.witness->i);
    return out + ")";
}

std::string yesno(bool b) {
    return b ? "yes" : "no";
}

struct Output {
    std::string format = "text";
    bool timings = false;

    bool json() const { return format == "json"; }
    void emit(const Json& j) const { std::cout << j.dump(2) << "\n"; }
};

std::uint64_t default_cap() {
    if (const char* env = std::getenv("LCGD_CAP")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw CLI::ValidationError("LCGD_CAP", "must be an unsigned integer");
        }
    }
    return EnumOptions{}.cap;
}

// --- graph sources ----------------------------------------------------

struct GraphSource {
    std::string file;
    std::string builtin;
    EdgeId subdivide_edge = -1;
    EdgeId trisect_edge = -1;
    bool has_subdivide = false;
    bool has_trisect = false;

    void add_flags(CLI::App* cmd, bool with_graph_flag = true) {
        if (with_graph_flag) cmd->add_option("--graph", file, "graph JSON file");
        cmd->add_option("--builtin", builtin,
                        "builtin graph: K4, W4, ML4, circ(n:1,2), bouquet(n), dipole(n), cycle(n)");
        cmd->add_option("--subdivide-edge", subdivide_edge,
                        "subdivide this edge of the builtin; the new vertex becomes the root")
            ->needs(cmd->get_option("--builtin"));
        cmd->add_option("--trisect-edge", trisect_edge,
                        "trisect this edge of the builtin; the middle segment becomes the root edge")
            ->needs(cmd->get_option("--builtin"));
    }

    NamedGraph load() const {
        if (file.empty() == builtin.empty()) {
            throw CLI::ValidationError("graph source", "give exactly one of --graph / --builtin");
        }
        if (!file.empty()) return {file, load_graph(file)};
        Graph g = Graph::builtin(builtin);
        std::string name = builtin;
        if (subdivide_edge >= 0) {
            g.root_vertices.push_back(g.subdivide(subdivide_edge));
            name += " (edge " + std::to_string(subdivide_edge) + " subdivided)";
        }
        if (trisect_edge >= 0) {
            g.root_edges.push_back(g.trisect(trisect_edge));
            name += " (edge " + std::to_string(trisect_edge) + " trisected)";
        }
        g.validate_rooted();
        return {name, g};
    }
};

// criterion set for the internal-zero / log-concavity conjecture scan
std::vector<NamedGraph> conjecture_set() {
    std::vector<NamedGraph> out;
    auto rooted = [](const char* name, bool trisect, EdgeId edge) {
        Graph g = Graph::builtin(name);
        std::string label = name;
        if (trisect) {
            g.root_edges.push_back(g.trisect(edge));
        } else {
            g.root_vertices.push_back(g.subdivide(edge));
        }
        return NamedGraph{label, g};
    };
    out.push_back(rooted("W4", false, 4));          // rim edge midpoint
    out.push_back(rooted("ML4", false, 0));         // rim edge midpoint
    out.push_back(rooted("K4", true, 0));           // trisected edge, middle segment
    out.push_back(rooted("circ(7:1,2)", true, 0));  // distance-1 edge
    for (int n = 3; n <= 8; ++n) {
        out.push_back(rooted(("cycle(" + std::to_string(n) + ")").c_str(), false, 0));
    }
    out.push_back(rooted("dipole(3)", false, 0));
    return out;
}

// --- subcommand bodies -------------------------------------------------

int run_seq_check(const Output& out, const std::string& path, bool req_lc, bool req_uni,
                  bool req_no_iz) {
    const Seq a = load_seq(path);
    const SeqReport r = validate(a);
    const Verdict lc = is_log_concave(a);
    const Verdict uni = is_unimodal(a);
    if (out.json()) {
        Json j = to_json(r);
        j["sequence"] = to_json(a);
        j["log_concave"] = to_json(lc);
        j["unimodal"] = to_json(uni);
        out.emit(j);
    } else {
        std::cout << "sequence: " << a.str() << "\n"
                  << "nonnegative: " << yesno(r.nonnegative) << "\n"
                  << "internal zeros: " << yesno(r.internal_zeros) << "\n"
                  << "first nonzero: " << (r.first_nonzero ? std::to_string(*r.first_nonzero) : "none")
                  << "\n"
                  << "last nonzero: " << (r.last_nonzero ? std::to_string(*r.last_nonzero) : "none")
                  << "\n"
                  << "log-concave: " << verdict_str(lc) << "\n"
                  << "unimodal: " << verdict_str(uni) << "\n";
    }
    const bool ok = (!req_lc || lc.holds) && (!req_uni || uni.holds) && (!req_no_iz || !r.internal_zeros);
    return ok ? kExitOk : kExitCheckFailed;
}

int run_seq_relate(const Output& out, const std::string& a_path, const std::string& b_path) {
    const Seq a = load_seq(a_path), b = load_seq(b_path);
    const Verdict sync = synchronized(a, b);
    const Verdict ab = ratio_dominates(a, b);
    const Verdict ba = ratio_dominates(b, a);
    if (out.json()) {
        out.emit(Json{{"synchronized", sync.holds}, {"A≲B", ab.holds}, {"B≲A", ba.holds}});
    } else {
        std::cout << "A = " << a.str() << "\n"
                  << "B = " << b.str() << "\n"
                  << "synchronized: " << verdict_str(sync) << "\n"
                  << "A≲B: " << verdict_str(ab) << "\n"
                  << "B≲A: " << verdict_str(ba) << "\n";
    }
    return kExitOk;
}

int run_seq_convolve(const Output& out, const std::string& a_path, const std::string& b_path) {
    const Seq c = convolve(load_seq(a_path), load_seq(b_path));
    if (out.json()) {
        out.emit(to_json(c));
    } else {
        std::cout << c.str() << "\n";
    }
    return kExitOk;
}

Mode parse_mode(const std::string& mode) {
    if (mode == "vertex") return Mode::vertex;
    if (mode == "edge") return Mode::edge;
    throw CLI::ValidationError("--mode", "must be vertex or edge");
}

int run_chain_abbrev(const Output& out, const std::string& pgd_path, const std::string& mode) {
    std::vector<std::string> warnings;
    const DoubleRootPGD h = load_double_pgd(pgd_path, &warnings);
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
    const AbbrevQuad q = abbrev(h, parse_mode(mode));
    if (out.json()) {
        out.emit(to_json(q));
    } else {
        std::cout << "A1 = " << q.a1.str() << "\n"
                  << "A2 = " << q.a2.str() << "\n"
                  << "B1 = " << q.b1.str() << "\n"
                  << "B2 = " << q.b2.str() << "\n";
    }
    return kExitOk;
}

int run_chain_check(const Output& out, const std::string& pgd_path, const std::string& mode,
                    const std::string& init_path) {
    std::vector<std::string> warnings;
    const DoubleRootPGD h = load_double_pgd(pgd_path, &warnings);
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
    const Verdict premise = check_amalgamand(h, parse_mode(mode));
    Verdict init_dom = Verdict::ok();
    bool have_init = !init_path.empty();
    if (have_init) {
        const SingleRootPGD init = load_single_pgd(init_path, &warnings);
        init_dom = ratio_dominates(init.d, init.s);
    }
    if (out.json()) {
        Json j{{"premise", to_json(premise)}};
        if (have_init) j["initial_dominance"] = to_json(init_dom);
        out.emit(j);
    } else {
        std::cout << "premise: " << verdict_str(premise) << "\n";
        if (have_init) std::cout << "initial D ≲ S: " << verdict_str(init_dom) << "\n";
    }
    return premise.holds && init_dom.holds ? kExitOk : kExitCheckFailed;
}

int run_chain_run(const Output& out, const std::string& init_path,
                  const std::vector<std::string>& amalgamand_paths, int steps,
                  const std::string& mode, bool certify) {
    std::vector<std::string> warnings;
    const SingleRootPGD init = load_single_pgd(init_path, &warnings);
    const Mode m = parse_mode(mode);

    std::vector<ChainLink> links;
    if (amalgamand_paths.empty()) throw CLI::ValidationError("--amalgamand", "at least one file");
    if (amalgamand_paths.size() == 1) {
        const DoubleRootPGD h = load_double_pgd(amalgamand_paths[0], &warnings);
        const int n = steps > 0 ? steps : 1;
        for (int i = 0; i < n; ++i) links.push_back({h, m, amalgamand_paths[0]});
    } else {
        if (steps > 0 && steps != int(amalgamand_paths.size())) {
            throw CLI::ValidationError("--steps", "must match the number of --amalgamand files");
        }
        for (const std::string& path : amalgamand_paths) {
            links.push_back({load_double_pgd(path, &warnings), m, path});
        }
    }
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";

    const ChainReport report = run_chain(init, links, certify);
    if (out.json()) {
        out.emit(to_json(report));
    } else {
        std::cout << "initial D = " << report.initial.d.str() << "\n"
                  << "initial S = " << report.initial.s.str() << "\n"
                  << "initial D ≲ S: " << verdict_str(report.initial_dominance) << "\n";
        for (const ChainStep& s : report.steps) {
            std::cout << "step " << s.index << " [" << s.amalgamand << ", " << to_string(s.mode)
                      << "]\n"
                      << "  premise: " << verdict_str(s.premise) << "\n"
                      << "  D = " << s.pgd.d.str() << "\n"
                      << "  S = " << s.pgd.s.str() << "\n"
                      << "  Γ = " << s.pgd.gamma().str() << "\n"
                      << "  D ≲ S: " << verdict_str(s.dominance) << "\n"
                      << "  Γ log-concave: " << verdict_str(s.gamma_log_concave) << "\n";
        }
        if (report.abort_reason) std::cout << "aborted: " << *report.abort_reason << "\n";
        std::cout << (report.ok ? "all checks hold" : "checks failed") << "\n";
    }
    if (!certify) return kExitOk;
    return report.ok ? kExitOk : kExitCheckFailed;
}

int run_enum_genus(const Output& out, const GraphSource& src, const EnumOptions& opts) {
    const NamedGraph ng = src.load();
    const Seq dist = genus_distribution(ng.graph, opts);
    if (out.json()) {
        Json j{{"graph", ng.name},
               {"genus_distribution", to_json(dist)},
               {"total", dist.total().str()}};
        out.emit(j);
    } else {
        std::cout << "Γ = " << dist.str() << "\n"
                  << "total = " << dist.total().str() << "\n";
    }
    return kExitOk;
}

int run_enum_partials(const Output& out, const GraphSource& src, VertexId root_vertex,
                      EdgeId root_edge, const EnumOptions& opts) {
    const NamedGraph ng = src.load();
    SingleRootPGD p;
    if (root_vertex >= 0) {
        p = partials_vertex_root(ng.graph, root_vertex, opts);
    } else if (root_edge >= 0) {
        p = partials_edge_root(ng.graph, root_edge, opts);
    } else if (!ng.graph.root_vertices.empty()) {
        p = partials_vertex_root(ng.graph, ng.graph.root_vertices.front(), opts);
    } else if (!ng.graph.root_edges.empty()) {
        p = partials_edge_root(ng.graph, ng.graph.root_edges.front(), opts);
    } else {
        throw CLI::ValidationError("enum partials", "no root: mark one in the file or pass --root-vertex/--root-edge");
    }
    const Verdict dom = ratio_dominates(p.d, p.s);
    if (out.json()) {
        Json j = to_json(p);
        j["graph"] = ng.name;
        j["Gamma"] = to_json(p.gamma());
        j["total"] = p.gamma().total().str();
        j["dominance"] = to_json(dom);
        out.emit(j);
    } else {
        std::cout << "D = " << p.d.str() << "\n"
                  << "S = " << p.s.str() << "\n"
                  << "Γ = " << p.gamma().str() << "\n"
                  << "total = " << p.gamma().total().str() << "\n"
                  << "D ≲ S: " << verdict_str(dom) << "\n";
    }
    return kExitOk;
}

void print_scan_text(const ScanReport& r, const Output& out) {
    for (const std::string& n : r.notes) std::cout << n << "\n";
    for (const Violation& v : r.violations) {
        std::cout << "violation [" << v.theorem << "]: " << v.detail << "\n";
        for (const auto& [name, s] : v.seqs) std::cout << "  " << name << " = " << s.str() << "\n";
        for (const auto& [name, w] : v.weights) {
            std::cout << "  " << name << " = [";
            for (std::size_t i = 0; i < w.size(); ++i) std::cout << (i ? ", " : "") << w[i].str();
            std::cout << "]\n";
        }
    }
    std::cout << "instances: " << r.instances << "\n"
              << "violations: " << r.violations.size() << "\n";
    if (out.timings) std::cout << "wall ms: " << r.wall_ms << "\n";
}

int run_fuzz(const Output& out, const FuzzSpec& spec) {
    const ScanReport r = fuzz(spec);
    if (out.json()) {
        Json j = to_json(r, out.timings);
        j["theorem"] = spec.theorem;
        j["trials"] = spec.trials;
        j["seed"] = spec.seed;
        out.emit(j);
    } else {
        std::cout << "theorem: " << spec.theorem << "\n"
                  << "trials: " << spec.trials << "\n";
        print_scan_text(r, out);
    }
    return r.violations.empty() ? kExitOk : kExitCheckFailed;
}

int run_scan(const Output& out, const std::vector<NamedGraph>& graphs, const EnumOptions& opts) {
    const ScanReport r = scan_partials(graphs, opts);
    if (out.json()) {
        out.emit(to_json(r, out.timings));
    } else {
        print_scan_text(r, out);
    }
    return r.violations.empty() ? kExitOk : kExitCheckFailed;
}

int run_nontrans(const Output& out, const NontransBounds& bounds) {
    const ScanReport r = search_nontransitivity(bounds);
    if (out.json()) {
        out.emit(to_json(r, out.timings));
    } else {
        if (r.violations.empty()) {
            print_scan_text(r, out);
        } else {
            const Violation& v = r.violations.front();
            std::cout << "witness found: " << v.detail << "\n";
            for (const auto& [name, s] : v.seqs) std::cout << "  " << name << " = " << s.str() << "\n";
            std::cout << "triples examined: " << r.instances << "\n";
        }
    }
    return kExitOk;  // the search outcome is data, not a check
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact log-concavity relations, genus-distribution chains, embedding enumeration"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--timings", out.timings, "include wall-clock times in reports");

    // seq
    CLI::App* seq = app.add_subcommand("seq", "sequence checks and algebra");
    seq->require_subcommand(1);

    std::string seq_file, seq_a, seq_b;
    bool req_lc = false, req_uni = false, req_no_iz = false;
    CLI::App* seq_check = seq->add_subcommand("check", "validate a sequence and report its properties");
    seq_check->add_option("file", seq_file, "sequence JSON")->required();
    seq_check->add_flag("--require-log-concave", req_lc);
    seq_check->add_flag("--require-unimodal", req_uni);
    seq_check->add_flag("--require-no-internal-zeros", req_no_iz);

    CLI::App* seq_relate = seq->add_subcommand("relate", "synchronicity and ratio-dominance of A and B");
    seq_relate->add_option("A", seq_a, "sequence JSON")->required();
    seq_relate->add_option("B", seq_b, "sequence JSON")->required();

    CLI::App* seq_convolve = seq->add_subcommand("convolve", "convolution A*B");
    seq_convolve->add_option("A", seq_a, "sequence JSON")->required();
    seq_convolve->add_option("B", seq_b, "sequence JSON")->required();

    // chain
    CLI::App* chain = app.add_subcommand("chain", "partitioned genus distribution chains");
    chain->require_subcommand(1);

    std::string pgd_path, chain_mode = "vertex", init_path;
    CLI::App* chain_abbrev = chain->add_subcommand("abbrev", "abbreviation quadruple of an amalgamand");
    chain_abbrev->add_option("--pgd", pgd_path, "double-root distribution JSON")->required();
    chain_abbrev->add_option("--mode", chain_mode, "vertex or edge")->required();

    CLI::App* chain_check = chain->add_subcommand("check", "premises for certified amalgamation");
    chain_check->add_option("--pgd", pgd_path, "double-root distribution JSON")->required();
    chain_check->add_option("--mode", chain_mode, "vertex or edge")->required();
    chain_check->add_option("--init", init_path, "also check D ≲ S of this single-root distribution");

    std::vector<std::string> amalgamands;
    int steps = 0;
    bool certify = false;
    CLI::App* chain_run = chain->add_subcommand("run", "iterate amalgamations");
    chain_run->add_option("--init", init_path, "initial single-root distribution JSON")->required();
    chain_run->add_option("--amalgamand", amalgamands, "double-root distribution JSON (repeatable)")
        ->required();
    chain_run->add_option("--steps", steps, "number of steps (single amalgamand repeats)");
    chain_run->add_option("--mode", chain_mode, "vertex or edge")->required();
    chain_run->add_flag("--certify", certify, "assert premises and per-step certificates");

    // enum
    CLI::App* enum_cmd = app.add_subcommand("enum", "brute-force embedding enumeration");
    enum_cmd->require_subcommand(1);

    GraphSource genus_src, partials_src;
    std::uint64_t cap = 0;
    int jobs = 1;
    VertexId root_vertex = -1;
    EdgeId root_edge = -1;

    CLI::App* enum_genus = enum_cmd->add_subcommand("genus", "genus distribution by rotation systems");
    genus_src.add_flags(enum_genus);
    enum_genus->add_option("--cap", cap, "max rotation systems (default 1e7, env LCGD_CAP)");
    enum_genus->add_option("--jobs", jobs, "worker threads");

    CLI::App* enum_partials = enum_cmd->add_subcommand("partials", "single-root partials D and S");
    partials_src.add_flags(enum_partials);
    enum_partials->add_option("--root-vertex", root_vertex, "2-valent root vertex id");
    enum_partials->add_option("--root-edge", root_edge, "root edge id (2-valent endpoints)");
    enum_partials->add_option("--cap", cap, "max rotation systems (default 1e7, env LCGD_CAP)");
    enum_partials->add_option("--jobs", jobs, "worker threads");

    // explore
    CLI::App* explore = app.add_subcommand("explore", "fuzzing and conjecture scans");
    explore->require_subcommand(1);

    FuzzSpec fuzz_spec;
    CLI::App* explore_fuzz = explore->add_subcommand("fuzz", "random premise-satisfying instances");
    explore_fuzz->add_option("--theorem", fuzz_spec.theorem, "theorem id")->required();
    explore_fuzz->add_option("--trials", fuzz_spec.trials, "instances to evaluate");
    explore_fuzz->add_option("--max-len", fuzz_spec.max_len, "generator window bound");
    explore_fuzz->add_option("--max-entry", fuzz_spec.max_entry, "generator entry bound");
    explore_fuzz->add_option("--seed", fuzz_spec.seed, "64-bit master seed");
    explore_fuzz->add_option("--jobs", fuzz_spec.jobs, "worker threads");
    explore_fuzz->add_flag("--negate-premise", fuzz_spec.negate_premise,
                           "harness self-test: sample instances whose key premise fails");

    std::vector<std::string> scan_graphs;
    GraphSource scan_src;
    bool conjecture = false;
    CLI::App* explore_scan = explore->add_subcommand("scan", "internal zeros / log-concavity of partials");
    explore_scan->add_option("--graph", scan_graphs, "rooted graph JSON (repeatable)")->take_all();
    scan_src.add_flags(explore_scan, /*with_graph_flag=*/false);
    explore_scan->add_flag("--conjecture-set", conjecture,
                           "scan the bundled set: W4, ML4, K4, circ(7:1,2), cycles C3..C8, dipole(3)");
    explore_scan->add_option("--cap", cap, "max rotation systems per graph");
    explore_scan->add_option("--jobs", jobs, "worker threads");

    NontransBounds nb;
    CLI::App* explore_nontrans =
        explore->add_subcommand("nontrans", "search for a synchronicity non-transitivity witness");
    explore_nontrans->add_option("--max-len", nb.max_len, "tuple length bound");
    explore_nontrans->add_option("--max-entry", nb.max_entry, "entry bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        EnumOptions opts;
        opts.cap = cap > 0 ? cap : default_cap();
        opts.jobs = jobs;

        if (seq_check->parsed()) return run_seq_check(out, seq_file, req_lc, req_uni, req_no_iz);
        if (seq_relate->parsed()) return run_seq_relate(out, seq_a, seq_b);
        if (seq_convolve->parsed()) return run_seq_convolve(out, seq_a, seq_b);
        if (chain_abbrev->parsed()) return run_chain_abbrev(out, pgd_path, chain_mode);
        if (chain_check->parsed()) return run_chain_check(out, pgd_path, chain_mode, init_path);
        if (chain_run->parsed()) {
            return run_chain_run(out, init_path, amalgamands, steps, chain_mode, certify);
        }
        if (enum_genus->parsed()) return run_enum_genus(out, genus_src, opts);
        if (enum_partials->parsed()) {
            return run_enum_partials(out, partials_src, root_vertex, root_edge, opts);
        }
        if (explore_fuzz->parsed()) return run_fuzz(out, fuzz_spec);
        if (explore_scan->parsed()) {
            std::vector<NamedGraph> graphs;
            if (conjecture) graphs = conjecture_set();
            for (const std::string& path : scan_graphs) graphs.push_back({path, load_graph(path)});
            if (!scan_src.file.empty() || !scan_src.builtin.empty()) graphs.push_back(scan_src.load());
            if (graphs.empty()) {
                throw CLI::ValidationError("explore scan", "nothing to scan");
            }
            return run_scan(out, graphs, opts);
        }
        if (explore_nontrans->parsed()) return run_nontrans(out, nb);
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const FileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GeneratorStarvation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
}
