#pragma once

#include "lcgd/graph.hpp"
#include "lcgd/pgd.hpp"
#include "lcgd/seq.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lcgd {

struct EnumOptions {
    std::uint64_t cap = 10'000'000;  // refuse enumerations larger than this
    int jobs = 1;
};

/// Thrown when the rotation-system count exceeds the cap; carries the exact
/// count so the caller can rerun with a larger cap.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(Int n)
        : std::runtime_error("enumeration needs " + n.str() + " rotation systems (over cap)"),
          count(std::move(n)) {}
    Int count;
};

/// Cyclic dart order at each vertex, indexed by vertex position in
/// Graph::vertices(). Dart numbering is positional: the edge at position p
/// has darts 2p (u side) and 2p+1 (v side).
struct RotationSystem {
    std::vector<std::vector<int>> rotation;
};

struct FaceTrace {
    std::vector<std::vector<int>> orbits;  // each orbit starts at its least dart
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    int genus = 0;
};

/// Product of (deg(v) - 1)! over all vertices: the number of distinct
/// rotation systems under the anchored canonical form.
Int rotation_system_count(const Graph& g);

/// Orbits of the successor rule "twin, then next in the rotation at the
/// twin's vertex"; genus from 2 - V + E - F. Throws std::invalid_argument on
/// a malformed rotation and std::logic_error if the Euler count is odd or
/// negative.
FaceTrace trace_faces(const Graph& g, const RotationSystem& rot);

/// Entry i counts rotation systems of genus i. Entries sum to the rotation-
/// system count; the result has no internal zeros (asserted).
Seq genus_distribution(const Graph& g, const EnumOptions& opts = {});

/// Partials at a 2-valent root vertex: an embedding counts toward d when the
/// two corners at the root lie on distinct face orbits, toward s otherwise.
SingleRootPGD partials_vertex_root(const Graph& g, VertexId root, const EnumOptions& opts = {});

/// Partials at a root edge with 2-valent endpoints: d when the edge's two
/// sides lie on distinct face orbits.
SingleRootPGD partials_edge_root(const Graph& g, EdgeId root, const EnumOptions& opts = {});

}  // namespace lcgd
