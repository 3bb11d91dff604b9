#include "lcgd/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace lcgd {

namespace {

// Positional view of the graph used by the enumeration kernel.
struct Layout {
    int nv = 0;
    int ndarts = 0;
    std::vector<std::vector<int>> darts_at;  // sorted darts per vertex position
    std::vector<int> dart_vertex;            // vertex position of each dart

    explicit Layout(const Graph& g) {
        nv = int(g.vertices().size());
        ndarts = int(2 * g.edges().size());
        darts_at.resize(std::size_t(nv));
        dart_vertex.resize(std::size_t(ndarts));
        for (std::size_t p = 0; p < g.edges().size(); ++p) {
            const GraphEdge& e = g.edges()[p];
            const int du = int(2 * p), dv = int(2 * p + 1);
            const int iu = int(g.vertex_index(e.u)), iv = int(g.vertex_index(e.v));
            darts_at[std::size_t(iu)].push_back(du);
            darts_at[std::size_t(iv)].push_back(dv);
            dart_vertex[std::size_t(du)] = iu;
            dart_vertex[std::size_t(dv)] = iv;
        }
        for (auto& ds : darts_at) std::sort(ds.begin(), ds.end());
    }
};

std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

// Lexicographically nth arrangement of the sorted tail (factorial number
// system), so worker blocks can start mid-sequence.
void unrank(std::vector<int>& tail, std::uint64_t rank) {
    std::sort(tail.begin(), tail.end());
    std::vector<int> pool = tail;
    for (std::size_t i = 0; i < tail.size(); ++i) {
        const std::uint64_t f = factorial(pool.size() - 1);
        const std::size_t pick = std::size_t(rank / f);
        rank %= f;
        tail[i] = pool[pick];
        pool.erase(pool.begin() + std::ptrdiff_t(pick));
    }
}

// Face-tracing kernel shared by the enumerator and trace_faces. The rotation
// at each vertex is anchored at its least dart; the enumeration order is the
// mixed-radix odometer over the per-vertex tail arrangements, last vertex
// fastest, each tail stepped in lexicographic order. This order is frozen so
// reports are byte-stable.
class Kernel {
public:
    Kernel(const Layout& lay, int root_a, int root_b)
        : lay_(lay), root_a_(root_a), root_b_(root_b), succ_(std::size_t(lay.ndarts)),
          stamp_(std::size_t(lay.ndarts), 0), face_(std::size_t(lay.ndarts), -1) {
        const std::size_t buckets = std::size_t(lay.ndarts / 2 + 2);
        hist_d.assign(buckets, 0);
        hist_s.assign(buckets, 0);
        tails_.resize(std::size_t(lay.nv));
        radix_.resize(std::size_t(lay.nv));
        for (int v = 0; v < lay.nv; ++v) {
            const auto& ds = lay.darts_at[std::size_t(v)];
            tails_[std::size_t(v)].assign(ds.begin() + (ds.empty() ? 0 : 1), ds.end());
            radix_[std::size_t(v)] = factorial(tails_[std::size_t(v)].size());
        }
    }

    void run(std::uint64_t begin, std::uint64_t end) {
        seek(begin);
        for (int v = 0; v < lay_.nv; ++v) rebuild(v);
        for (std::uint64_t i = begin; i < end; ++i) {
            evaluate();
            if (i + 1 < end) step();
        }
    }

    std::vector<std::uint64_t> hist_d, hist_s;

private:
    void seek(std::uint64_t index) {
        for (int v = lay_.nv - 1; v >= 0; --v) {
            const std::uint64_t r = radix_[std::size_t(v)];
            unrank(tails_[std::size_t(v)], index % r);
            index /= r;
        }
    }

    void rebuild(int v) {
        const auto& ds = lay_.darts_at[std::size_t(v)];
        if (ds.empty()) return;
        const auto& tail = tails_[std::size_t(v)];
        int prev = ds[0];
        for (int d : tail) {
            succ_[std::size_t(prev)] = d;
            prev = d;
        }
        succ_[std::size_t(prev)] = ds[0];
    }

    void step() {
        for (int v = lay_.nv - 1; v >= 0; --v) {
            auto& tail = tails_[std::size_t(v)];
            if (std::next_permutation(tail.begin(), tail.end())) {
                rebuild(v);
                return;
            }
            rebuild(v);  // wrapped back to the sorted arrangement; carry on
        }
    }

    void evaluate() {
        ++epoch_;
        int faces = 0;
        for (int d0 = 0; d0 < lay_.ndarts; ++d0) {
            if (stamp_[std::size_t(d0)] == epoch_) continue;
            int d = d0;
            while (stamp_[std::size_t(d)] != epoch_) {
                stamp_[std::size_t(d)] = epoch_;
                face_[std::size_t(d)] = faces;
                d = succ_[std::size_t(d ^ 1)];
            }
            ++faces;
        }
        if (lay_.ndarts == 0) faces = 1;  // lone vertex on a disk
        const int euler = 2 - lay_.nv + lay_.ndarts / 2 - faces;
        if (euler < 0 || euler % 2 != 0) throw std::logic_error("face trace: bad Euler count");
        const std::size_t genus = std::size_t(euler / 2);
        const bool distinct =
            root_a_ < 0 || face_[std::size_t(root_a_)] != face_[std::size_t(root_b_)];
        (distinct ? hist_d : hist_s)[genus] += 1;
    }

    const Layout& lay_;
    int root_a_, root_b_;
    std::vector<int> succ_;
    std::vector<std::uint32_t> stamp_;
    std::vector<int> face_;
    std::uint32_t epoch_ = 0;
    std::vector<std::vector<int>> tails_;
    std::vector<std::uint64_t> radix_;
};

struct Histograms {
    std::vector<std::uint64_t> d, s;
};

Histograms enumerate(const Graph& g, int root_a, int root_b, const EnumOptions& opts) {
    if (!g.connected()) throw std::invalid_argument("enumeration requires a connected graph");
    const Int count = rotation_system_count(g);
    if (count > opts.cap) throw CapExceeded(count);
    const std::uint64_t n = count.convert_to<std::uint64_t>();
    const Layout lay(g);

    const int jobs = std::max(1, std::min<int>(opts.jobs, int(std::min<std::uint64_t>(n, 64))));
    std::vector<Kernel> kernels;
    kernels.reserve(std::size_t(jobs));
    for (int w = 0; w < jobs; ++w) kernels.emplace_back(lay, root_a, root_b);

    if (jobs == 1) {
        kernels[0].run(0, n);
    } else {
        // contiguous index blocks; merged by addition, so the result does
        // not depend on scheduling
        std::vector<std::thread> threads;
        for (int w = 0; w < jobs; ++w) {
            const std::uint64_t begin = n * std::uint64_t(w) / std::uint64_t(jobs);
            const std::uint64_t end = n * std::uint64_t(w + 1) / std::uint64_t(jobs);
            threads.emplace_back([&kernels, w, begin, end] { kernels[std::size_t(w)].run(begin, end); });
        }
        for (auto& t : threads) t.join();
    }

    Histograms out;
    out.d.assign(kernels[0].hist_d.size(), 0);
    out.s.assign(kernels[0].hist_s.size(), 0);
    for (const Kernel& k : kernels) {
        for (std::size_t i = 0; i < out.d.size(); ++i) {
            out.d[i] += k.hist_d[i];
            out.s[i] += k.hist_s[i];
        }
    }
    return out;
}

Seq to_seq(const std::vector<std::uint64_t>& hist) {
    std::vector<Int> entries(hist.size());
    for (std::size_t i = 0; i < hist.size(); ++i) entries[i] = hist[i];
    return Seq(std::move(entries), 0);
}

}  // namespace

Int rotation_system_count(const Graph& g) {
    Int n = 1;
    for (VertexId v : g.vertices()) {
        const int deg = g.degree(v);
        for (int i = 2; i <= deg - 1; ++i) n *= i;
    }
    return n;
}

FaceTrace trace_faces(const Graph& g, const RotationSystem& rot) {
    const Layout lay(g);
    if (rot.rotation.size() != std::size_t(lay.nv)) {
        throw std::invalid_argument("rotation system: wrong vertex count");
    }
    std::vector<int> succ(std::size_t(lay.ndarts), -1);
    std::vector<bool> seen(std::size_t(lay.ndarts), false);
    for (int v = 0; v < lay.nv; ++v) {
        const auto& cyc = rot.rotation[std::size_t(v)];
        if (cyc.size() != lay.darts_at[std::size_t(v)].size()) {
            throw std::invalid_argument("rotation system: wrong dart count at a vertex");
        }
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const int d = cyc[i];
            if (d < 0 || d >= lay.ndarts || lay.dart_vertex[std::size_t(d)] != v || seen[std::size_t(d)]) {
                throw std::invalid_argument("rotation system: malformed rotation");
            }
            seen[std::size_t(d)] = true;
            succ[std::size_t(d)] = cyc[(i + 1) % cyc.size()];
        }
    }

    FaceTrace out;
    out.vertices = lay.nv;
    out.edges = lay.ndarts / 2;
    std::vector<bool> visited(std::size_t(lay.ndarts), false);
    for (int d0 = 0; d0 < lay.ndarts; ++d0) {
        if (visited[std::size_t(d0)]) continue;
        std::vector<int> orbit;
        int d = d0;
        while (!visited[std::size_t(d)]) {
            visited[std::size_t(d)] = true;
            orbit.push_back(d);
            d = succ[std::size_t(d ^ 1)];
        }
        out.orbits.push_back(std::move(orbit));
    }
    out.faces = lay.ndarts == 0 ? 1 : int(out.orbits.size());
    const int euler = 2 - out.vertices + out.edges - out.faces;
    if (euler < 0 || euler % 2 != 0) throw std::logic_error("face trace: bad Euler count");
    out.genus = euler / 2;
    return out;
}

Seq genus_distribution(const Graph& g, const EnumOptions& opts) {
    const Histograms h = enumerate(g, -1, -1, opts);
    Seq dist = to_seq(h.d);
    if (dist.total() != rotation_system_count(g)) {
        throw std::logic_error("genus distribution total disagrees with the rotation count");
    }
    if (validate(dist).internal_zeros) {
        throw std::logic_error("genus distribution has an internal zero");
    }
    return dist;
}

SingleRootPGD partials_vertex_root(const Graph& g, VertexId root, const EnumOptions& opts) {
    if (g.degree(root) != 2) throw std::invalid_argument("root vertex must be 2-valent");
    const Layout lay(g);
    const auto& ds = lay.darts_at[g.vertex_index(root)];
    const Histograms h = enumerate(g, ds[0], ds[1], opts);
    SingleRootPGD out{to_seq(h.d), to_seq(h.s)};
    if (out.gamma().total() != rotation_system_count(g)) {
        throw std::logic_error("partials total disagrees with the rotation count");
    }
    return out;
}

SingleRootPGD partials_edge_root(const Graph& g, EdgeId root, const EnumOptions& opts) {
    const GraphEdge& e = g.edge(root);
    if (g.degree(e.u) != 2 || g.degree(e.v) != 2) {
        throw std::invalid_argument("root edge must have two 2-valent endpoints");
    }
    const std::size_t p = g.edge_index(root);
    const Histograms h = enumerate(g, int(2 * p), int(2 * p + 1), opts);
    SingleRootPGD out{to_seq(h.d), to_seq(h.s)};
    if (out.gamma().total() != rotation_system_count(g)) {
        throw std::logic_error("partials total disagrees with the rotation count");
    }
    return out;
}

}  // namespace lcgd
