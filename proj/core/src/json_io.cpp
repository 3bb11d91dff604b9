#include "lcgd/json_io.hpp"

#include <fstream>

namespace lcgd {

Json to_json(const Seq& s) {
    Json entries = Json::array();
    if (s.is_zero()) {
        entries.push_back("0");
        return Json{{"entries", entries}, {"offset", 0}};
    }
    const Index from = std::min<Index>(s.lo(), 0);
    for (Index k = from; k <= s.hi(); ++k) entries.push_back(s.at(k).str());
    return Json{{"entries", entries}, {"offset", from}};
}

Seq seq_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
        throw FileError("sequence must be {\"entries\": [...], \"offset\": int}");
    }
    std::vector<Int> entries;
    for (const Json& e : j["entries"]) {
        if (e.is_string()) {
            entries.emplace_back(e.get<std::string>());
        } else if (e.is_number_integer()) {
            entries.emplace_back(e.get<std::int64_t>());
        } else {
            throw FileError("sequence entries must be decimal strings or integers");
        }
    }
    const Index offset = j.value("offset", Index(0));
    try {
        return Seq(std::move(entries), offset);
    } catch (const std::invalid_argument& e) {
        throw FileError(e.what());
    }
}

Json to_json(const Verdict& v) {
    Json j{{"holds", v.holds}};
    if (v.witness) {
        Json w{{"inequality", v.witness->inequality}, {"k", v.witness->k}};
        if (v.witness->i) w["i"] = *v.witness->i;
        j["witness"] = w;
    }
    return j;
}

Json to_json(const SeqReport& r) {
    Json j{{"nonnegative", r.nonnegative}, {"internal_zeros", r.internal_zeros}};
    j["first_nonzero"] = r.first_nonzero ? Json(*r.first_nonzero) : Json();
    j["last_nonzero"] = r.last_nonzero ? Json(*r.last_nonzero) : Json();
    return j;
}

Json to_json(const CollectionClass& c) {
    return Json{{"in_tLC", to_json(c.in_tlc)},
                {"in_ltLC", to_json(c.in_ltlc)},
                {"in_gtLC", to_json(c.in_gtlc)}};
}

Json to_json(const SingleRootPGD& p) {
    return Json{{"D", to_json(p.d)}, {"S", to_json(p.s)}};
}

SingleRootPGD single_pgd_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("D") || !j.contains("S")) {
        throw FileError("single-root distribution needs keys D and S");
    }
    return {seq_from_json(j["D"]), seq_from_json(j["S"])};
}

namespace {
constexpr const char* kPartKeys[10] = {"dd0", "dd1", "dd2", "ds0", "ds1",
                                       "sd0", "sd1", "ss0", "ss1", "ss2"};
}

Json to_json(const DoubleRootPGD& p) {
    const Seq* parts[10] = {&p.dd0, &p.dd1, &p.dd2, &p.ds0, &p.ds1,
                            &p.sd0, &p.sd1, &p.ss0, &p.ss1, &p.ss2};
    Json j = Json::object();
    for (int i = 0; i < 10; ++i) j[kPartKeys[i]] = to_json(*parts[i]);
    return j;
}

DoubleRootPGD double_pgd_from_json(const Json& j) {
    DoubleRootPGD p;
    Seq* parts[10] = {&p.dd0, &p.dd1, &p.dd2, &p.ds0, &p.ds1,
                      &p.sd0, &p.sd1, &p.ss0, &p.ss1, &p.ss2};
    for (int i = 0; i < 10; ++i) {
        if (!j.contains(kPartKeys[i])) {
            throw FileError(std::string("double-root distribution lacks key ") + kPartKeys[i]);
        }
        *parts[i] = seq_from_json(j[kPartKeys[i]]);
    }
    return p;
}

Json to_json(const AbbrevQuad& q) {
    return Json{{"A1", to_json(q.a1)}, {"A2", to_json(q.a2)},
                {"B1", to_json(q.b1)}, {"B2", to_json(q.b2)}};
}

Json to_json(const ChainReport& r) {
    Json steps = Json::array();
    for (const ChainStep& s : r.steps) {
        steps.push_back(Json{{"step", s.index},
                             {"amalgamand", s.amalgamand},
                             {"mode", to_string(s.mode)},
                             {"premise", to_json(s.premise)},
                             {"D", to_json(s.pgd.d)},
                             {"S", to_json(s.pgd.s)},
                             {"Gamma", to_json(s.pgd.gamma())},
                             {"dominance", to_json(s.dominance)},
                             {"gamma_log_concave", to_json(s.gamma_log_concave)}});
    }
    Json j{{"certified", r.certified},
           {"initial", to_json(r.initial)},
           {"initial_dominance", to_json(r.initial_dominance)},
           {"steps", steps},
           {"ok", r.ok}};
    if (r.abort_reason) j["abort_reason"] = *r.abort_reason;
    return j;
}

Json to_json(const Graph& g) {
    Json vertices = Json::array();
    for (VertexId v : g.vertices()) vertices.push_back(v);
    Json edges = Json::array();
    for (const GraphEdge& e : g.edges()) {
        edges.push_back(Json{{"id", e.id}, {"u", e.u}, {"v", e.v}});
    }
    Json j{{"vertices", vertices}, {"edges", edges}};
    if (!g.root_vertices.empty()) j["root_vertices"] = g.root_vertices;
    if (!g.root_edges.empty()) j["root_edges"] = g.root_edges;
    return j;
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
        throw FileError("graph needs \"vertices\" and \"edges\"");
    }
    std::vector<VertexId> vertices;
    for (const Json& v : j["vertices"]) vertices.push_back(v.get<VertexId>());
    std::vector<GraphEdge> edges;
    for (const Json& e : j["edges"]) {
        if (!e.contains("id") || !e.contains("u") || !e.contains("v")) {
            throw FileError("graph edge needs id, u, v");
        }
        edges.push_back({e["id"].get<EdgeId>(), e["u"].get<VertexId>(), e["v"].get<VertexId>()});
    }
    Graph g;
    try {
        g = Graph(std::move(vertices), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw FileError(e.what());
    }
    if (j.contains("root_vertices")) {
        for (const Json& v : j["root_vertices"]) g.root_vertices.push_back(v.get<VertexId>());
    }
    if (j.contains("root_edges")) {
        for (const Json& e : j["root_edges"]) g.root_edges.push_back(e.get<EdgeId>());
    }
    return g;
}

Json to_json(const Violation& v) {
    Json seqs = Json::object();
    for (const auto& [name, s] : v.seqs) seqs[name] = to_json(s);
    Json weights = Json::object();
    for (const auto& [name, w] : v.weights) {
        Json arr = Json::array();
        for (const Int& x : w) arr.push_back(x.str());
        weights[name] = arr;
    }
    Json j{{"theorem", v.theorem}, {"detail", v.detail}, {"inputs", seqs}};
    if (!v.weights.empty()) j["weights"] = weights;
    if (v.negated) j["negated_premise"] = true;
    return j;
}

Json to_json(const ScanReport& r, bool with_timings) {
    Json violations = Json::array();
    for (const Violation& v : r.violations) violations.push_back(to_json(v));
    Json j{{"instances", r.instances},
           {"attempts", r.attempts},
           {"violations", violations},
           {"notes", r.notes}};
    if (with_timings) j["wall_ms"] = r.wall_ms;
    return j;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw FileError(path + ": " + e.what());
    }
    return j;
}

Seq load_seq(const std::string& path) {
    try {
        return seq_from_json(load_json(path));
    } catch (const FileError& e) {
        throw FileError(path + ": " + e.what());
    }
}

namespace {

void warn_partial_zeros(const SingleRootPGD& p, const std::string& path,
                        std::vector<std::string>* warnings) {
    if (validate(p.d + p.s).internal_zeros) {
        throw FileError(path + ": D + S has an internal zero");
    }
    if (warnings) {
        if (validate(p.d).internal_zeros) warnings->push_back(path + ": D has an internal zero");
        if (validate(p.s).internal_zeros) warnings->push_back(path + ": S has an internal zero");
    }
}

}  // namespace

SingleRootPGD load_single_pgd(const std::string& path, std::vector<std::string>* warnings) {
    SingleRootPGD p;
    try {
        p = single_pgd_from_json(load_json(path));
    } catch (const FileError& e) {
        const std::string what = e.what();
        throw FileError(what.rfind(path, 0) == 0 ? what : path + ": " + what);
    }
    warn_partial_zeros(p, path, warnings);
    return p;
}

DoubleRootPGD load_double_pgd(const std::string& path, std::vector<std::string>* warnings) {
    DoubleRootPGD p;
    try {
        p = double_pgd_from_json(load_json(path));
    } catch (const FileError& e) {
        const std::string what = e.what();
        throw FileError(what.rfind(path, 0) == 0 ? what : path + ": " + what);
    }
    if (validate(p.total()).internal_zeros) {
        throw FileError(path + ": DD+DS+SD+SS has an internal zero");
    }
    warn_partial_zeros(suppress_first_root(p), path, warnings);
    return p;
}

Graph load_graph(const std::string& path) {
    Graph g;
    try {
        g = graph_from_json(load_json(path));
        g.validate_rooted();
    } catch (const FileError&) {
        throw;
    } catch (const std::exception& e) {
        throw FileError(path + ": " + e.what());
    }
    return g;
}

}  // namespace lcgd
