#pragma once

#include "lcgd/seq.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lcgd {

using VertexId = std::int64_t;
using EdgeId = std::int64_t;

struct GraphEdge {
    EdgeId id;
    VertexId u;
    VertexId v;  // u == v for a loop
};

/// Connected multigraph with loops and parallel edges, plus optional root
/// markers. Vertex and edge ids are arbitrary; dart numbering used by the
/// enumerator is positional: edge at position p contributes darts 2p (u side)
/// and 2p+1 (v side).
class Graph {
public:
    Graph() = default;
    Graph(std::vector<VertexId> vertices, std::vector<GraphEdge> edges);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }

    std::vector<VertexId> root_vertices;
    std::vector<EdgeId> root_edges;

    bool has_vertex(VertexId v) const;
    const GraphEdge& edge(EdgeId id) const;  // throws on unknown id
    int degree(VertexId v) const;            // loops count twice
    bool connected() const;

    /// Checks connectivity and that every root marker satisfies its valence
    /// condition (2-valent root vertex; root edge with two 2-valent
    /// endpoints). Throws std::invalid_argument.
    void validate_rooted() const;

    /// Splits an edge at a new 2-valent vertex; the original id keeps the
    /// u-side segment. Returns the new vertex.
    VertexId subdivide(EdgeId id);

    /// Splits an edge into three segments; returns the middle segment's id.
    EdgeId trisect(EdgeId id);

    std::size_t vertex_index(VertexId v) const;  // dense index, throws if absent
    std::size_t edge_index(EdgeId id) const;

    /// Named constructions: "K4", "W4", "ML4", "circ(n:1,2)", "bouquet(n)",
    /// "dipole(n)". Throws std::invalid_argument on an unknown name.
    static Graph builtin(const std::string& name);

private:
    VertexId fresh_vertex_id() const;
    EdgeId fresh_edge_id() const;

    std::vector<VertexId> vertices_;
    std::vector<GraphEdge> edges_;
};

}  // namespace lcgd
