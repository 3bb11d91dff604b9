#include "lcgd/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace lcgd {

Graph::Graph(std::vector<VertexId> vertices, std::vector<GraphEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::unordered_set<VertexId> vs(vertices_.begin(), vertices_.end());
    if (vs.size() != vertices_.size()) throw std::invalid_argument("duplicate vertex id");
    std::unordered_set<EdgeId> es;
    for (const GraphEdge& e : edges_) {
        if (!es.insert(e.id).second) throw std::invalid_argument("duplicate edge id");
        if (!vs.count(e.u) || !vs.count(e.v)) throw std::invalid_argument("edge endpoint is not a vertex");
    }
}

bool Graph::has_vertex(VertexId v) const {
    return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

const GraphEdge& Graph::edge(EdgeId id) const {
    for (const GraphEdge& e : edges_) {
        if (e.id == id) return e;
    }
    throw std::invalid_argument("unknown edge id " + std::to_string(id));
}

int Graph::degree(VertexId v) const {
    int d = 0;
    for (const GraphEdge& e : edges_) {
        if (e.u == v) ++d;
        if (e.v == v) ++d;
    }
    return d;
}

std::size_t Graph::vertex_index(VertexId v) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i] == v) return i;
    }
    throw std::invalid_argument("unknown vertex id " + std::to_string(v));
}

std::size_t Graph::edge_index(EdgeId id) const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].id == id) return i;
    }
    throw std::invalid_argument("unknown edge id " + std::to_string(id));
}

bool Graph::connected() const {
    if (vertices_.empty()) return false;
    std::unordered_map<VertexId, std::vector<VertexId>> adj;
    for (const GraphEdge& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::unordered_set<VertexId> seen{vertices_[0]};
    std::vector<VertexId> stack{vertices_[0]};
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : adj[v]) {
            if (seen.insert(w).second) stack.push_back(w);
        }
    }
    return seen.size() == vertices_.size();
}

void Graph::validate_rooted() const {
    if (!connected()) throw std::invalid_argument("graph must be connected");
    for (VertexId v : root_vertices) {
        if (!has_vertex(v)) throw std::invalid_argument("root vertex is not a vertex");
        if (degree(v) != 2) {
            throw std::invalid_argument("root vertex " + std::to_string(v) + " is not 2-valent");
        }
    }
    for (EdgeId id : root_edges) {
        const GraphEdge& e = edge(id);
        if (degree(e.u) != 2 || degree(e.v) != 2) {
            throw std::invalid_argument("root edge " + std::to_string(id) +
                                        " needs two 2-valent endpoints");
        }
    }
}

VertexId Graph::fresh_vertex_id() const {
    VertexId m = -1;
    for (VertexId v : vertices_) m = std::max(m, v);
    return m + 1;
}

EdgeId Graph::fresh_edge_id() const {
    EdgeId m = -1;
    for (const GraphEdge& e : edges_) m = std::max(m, e.id);
    return m + 1;
}

VertexId Graph::subdivide(EdgeId id) {
    GraphEdge& e = edges_[edge_index(id)];
    const VertexId w = fresh_vertex_id();
    const VertexId old_v = e.v;
    vertices_.push_back(w);
    e.v = w;
    edges_.push_back({fresh_edge_id(), w, old_v});
    return w;
}

EdgeId Graph::trisect(EdgeId id) {
    GraphEdge& e = edges_[edge_index(id)];
    const VertexId w1 = fresh_vertex_id();
    const VertexId w2 = w1 + 1;
    const VertexId old_v = e.v;
    vertices_.push_back(w1);
    vertices_.push_back(w2);
    e.v = w1;
    const EdgeId mid = fresh_edge_id();
    edges_.push_back({mid, w1, w2});
    edges_.push_back({mid + 1, w2, old_v});
    return mid;
}

namespace {

Graph cycle_with_chords(int n, const std::vector<int>& chords) {
    std::vector<VertexId> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = i;
    std::vector<GraphEdge> es;
    EdgeId next = 0;
    for (int i = 0; i < n; ++i) es.push_back({next++, i, (i + 1) % n});
    for (int step : chords) {
        const int count = (2 * step == n) ? n / 2 : n;
        for (int i = 0; i < count; ++i) es.push_back({next++, i, (i + step) % n});
    }
    return Graph(std::move(vs), std::move(es));
}

}  // namespace

Graph Graph::builtin(const std::string& name) {
    if (name == "K4" || name == "k4") {
        std::vector<GraphEdge> es;
        EdgeId id = 0;
        for (int u = 0; u < 4; ++u) {
            for (int v = u + 1; v < 4; ++v) es.push_back({id++, u, v});
        }
        return Graph({0, 1, 2, 3}, std::move(es));
    }
    if (name == "W4" || name == "w4") {
        // hub 0; rim 1..4; spoke edges 0..3, rim edges 4..7
        std::vector<GraphEdge> es;
        for (int r = 1; r <= 4; ++r) es.push_back({r - 1, 0, r});
        for (int r = 1; r <= 4; ++r) es.push_back({3 + r, r, 1 + (r % 4)});
        return Graph({0, 1, 2, 3, 4}, std::move(es));
    }
    if (name == "ML4" || name == "ml4") {
        // Moebius ladder on C8: rim edges 0..7 are (i, i+1 mod 8), rungs
        // 8..11 are (i, i+4).
        return cycle_with_chords(8, {4});
    }
    auto parse_param = [&](const std::string& prefix, const std::string& suffix) -> int {
        if (name.size() > prefix.size() + suffix.size() && name.rfind(prefix, 0) == 0 &&
            name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
            const std::string num = name.substr(prefix.size(), name.size() - prefix.size() - suffix.size());
            if (!num.empty() && num.find_first_not_of("0123456789") == std::string::npos) {
                return std::stoi(num);
            }
        }
        return -1;
    };
    if (int n = parse_param("circ(", ":1,2)"); n > 4) {
        // circulant: distance-1 edges 0..n-1, distance-2 edges n..2n-1
        return cycle_with_chords(n, {2});
    }
    if (int n = parse_param("bouquet(", ")"); n >= 1) {
        std::vector<GraphEdge> es;
        for (int i = 0; i < n; ++i) es.push_back({i, 0, 0});
        return Graph({0}, std::move(es));
    }
    if (int n = parse_param("dipole(", ")"); n >= 1) {
        std::vector<GraphEdge> es;
        for (int i = 0; i < n; ++i) es.push_back({i, 0, 1});
        return Graph({0, 1}, std::move(es));
    }
    if (int n = parse_param("cycle(", ")"); n >= 1) {
        return cycle_with_chords(n, {});
    }
    throw std::invalid_argument("unknown builtin graph: " + name);
}

}  // namespace lcgd
