#pragma once

#include "lcgd/generators.hpp"
#include "lcgd/graph.hpp"
#include "lcgd/pgd.hpp"
#include "lcgd/relations.hpp"
#include "lcgd/seq.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <random>
#include <string>
#include <vector>

namespace lcgd::test {

inline std::string data_path(const std::string& rel) {
#ifdef LCGD_DATA_DIR
    return std::string(LCGD_DATA_DIR) + "/" + rel;
#else
    return "data/" + rel;
#endif
}

// Max-ratio dominating sequence from the constructive half of the
// tLC <=> exists-B equivalence: anchored at the largest first-support index,
// each successive ratio is the max of the members' ratios, realized over a
// common denominator so the entries stay integral. Members must be
// nonnegative without internal zeros; zero members are ignored.
inline Seq envelope_dominator(const std::vector<Seq>& seqs) {
    Index k0 = 0, h0 = -1;
    bool any = false;
    for (const Seq& s : seqs) {
        if (s.is_zero()) continue;
        if (!any) {
            k0 = s.lo();
            h0 = s.hi();
            any = true;
        } else {
            k0 = std::max(k0, s.lo());
            h0 = std::max(h0, s.hi());
        }
    }
    if (!any) return Seq::unit();

    std::vector<Frac> values{{1, 1}};
    for (Index k = k0 + 1; k <= h0; ++k) {
        Frac best{0, 0};
        for (const Seq& s : seqs) {
            if (s.is_zero()) continue;
            const Frac ratio{s.at(k), s.at(k - 1)};
            if (ratio.num == 0 && ratio.den == 0) continue;
            if ((best.num == 0 && best.den == 0) || !ratio_leq(ratio, best)) best = ratio;
        }
        const Frac prev = values.back();
        values.push_back({prev.num * best.num, prev.den * best.den});
    }

    Int common = 1;
    for (const Frac& v : values) common = boost::multiprecision::lcm(common, v.den);
    std::vector<Int> entries;
    for (const Frac& v : values) entries.push_back(v.num * (common / v.den));
    return Seq(std::move(entries), k0);
}

// Ten random partials; entries small enough that chain outputs stay exact in
// any integer width, internal zeros allowed.
inline DoubleRootPGD random_pgd(Rng& rng, std::int64_t max_entry = 20) {
    const GenBounds b{4, max_entry};
    auto gen = [&] { return random_seq(rng, b); };
    return DoubleRootPGD{gen(), gen(), gen(), gen(), gen(), gen(), gen(), gen(), gen(), gen()};
}

// Connected multigraph with loops and parallel edges, small enough to
// enumerate exhaustively.
inline Graph random_connected_graph(Rng& rng, int max_vertices = 4, int max_extra_edges = 3) {
    const int nv = 1 + int(rng() % std::uint64_t(max_vertices));
    std::vector<VertexId> vertices;
    for (int i = 0; i < nv; ++i) vertices.push_back(i);
    std::vector<GraphEdge> edges;
    EdgeId next = 0;
    for (int i = 1; i < nv; ++i) {
        edges.push_back({next++, VertexId(rng() % std::uint64_t(i)), i});  // spanning tree
    }
    const int extra = int(rng() % std::uint64_t(max_extra_edges + 1));
    for (int i = 0; i < extra; ++i) {
        const VertexId u = VertexId(rng() % std::uint64_t(nv));
        const VertexId v = VertexId(rng() % std::uint64_t(nv));
        edges.push_back({next++, u, v});
    }
    return Graph(std::move(vertices), std::move(edges));
}

}  // namespace lcgd::test
