#include "lcgd/generators.hpp"

#include <algorithm>

namespace lcgd {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t worker) {
    std::uint64_t z = master ^ (worker + 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

}  // namespace

Seq random_log_concave(Rng& rng, const GenBounds& b) {
    const int len = int(uniform(rng, 1, b.max_len));
    const Index offset = uniform(rng, 0, 2);
    std::vector<Int> entries;
    std::int64_t prev2 = 0, prev = 0;
    for (int k = 0; k < len; ++k) {
        std::int64_t hi = b.max_entry;
        if (prev2 > 0) hi = std::min(hi, prev * prev / prev2);
        if (hi < 1) break;  // no positive entry keeps log-concavity
        const std::int64_t value = uniform(rng, 1, hi);
        entries.emplace_back(value);
        prev2 = prev;
        prev = value;
    }
    return Seq(std::move(entries), offset);
}

Seq random_seq(Rng& rng, const GenBounds& b) {
    const int len = int(uniform(rng, 1, b.max_len));
    const Index offset = uniform(rng, 0, 2);
    std::vector<Int> entries;
    for (int k = 0; k < len; ++k) entries.emplace_back(uniform(rng, 0, b.max_entry));
    return Seq(std::move(entries), offset);
}

std::vector<Int> random_weights(Rng& rng, std::size_t n, std::int64_t max_entry) {
    std::vector<Int> w(n);
    for (auto& x : w) x = uniform(rng, 0, max_entry);
    return w;
}

namespace {

// u*X + v*X+; the pair (u, v) acts like a position between X and X+.
Seq mixture(const Seq& base, std::int64_t u, std::int64_t v) {
    return base.scaled(u) + base.shifted().scaled(v);
}

// Orders mixtures by v/u ascending (all-shift last), the direction of <~.
struct MixWeight {
    std::int64_t u, v;
    bool operator<(const MixWeight& o) const { return v * o.u < o.v * u; }
};

}  // namespace

std::pair<Seq, Seq> candidate_pair(Rng& rng, const GenBounds& b) {
    if (uniform(rng, 0, 1) == 0) {
        return {random_log_concave(rng, b), random_log_concave(rng, b)};
    }
    const Seq base = random_log_concave(rng, b);
    MixWeight p{uniform(rng, 0, 4), uniform(rng, 0, 4)};
    MixWeight q{uniform(rng, 0, 4), uniform(rng, 0, 4)};
    if (p.u + p.v == 0) p.u = 1;
    if (q.u + q.v == 0) q.u = 1;
    if (q < p) std::swap(p, q);
    return {mixture(base, p.u, p.v), mixture(base, q.u, q.v)};
}

std::vector<Seq> candidate_mixture_chain(Rng& rng, int n, const GenBounds& b) {
    const Seq base = random_log_concave(rng, b);
    std::vector<MixWeight> ws;
    for (int i = 0; i < n; ++i) {
        MixWeight w{uniform(rng, 0, 4), uniform(rng, 0, 4)};
        if (w.u + w.v == 0) w.u = 1;
        ws.push_back(w);
    }
    std::sort(ws.begin(), ws.end());
    std::vector<Seq> out;
    for (const MixWeight& w : ws) out.push_back(mixture(base, w.u, w.v));
    return out;
}

LexCandidate candidate_lex_families(Rng& rng, int n, const GenBounds& b) {
    const int columns = int(uniform(rng, 1, 3));
    const std::int64_t top = std::max<std::int64_t>(2, std::min<std::int64_t>(b.max_entry, 5));
    auto ladder = [&] {
        std::vector<std::int64_t> flat(std::size_t(n) * std::size_t(columns));
        for (auto& x : flat) x = uniform(rng, 1, top);
        std::sort(flat.rbegin(), flat.rend());
        return flat;  // position (t-1)*n + (i-1): descending within and across columns
    };
    const auto f = ladder(), g = ladder();

    LexCandidate out;
    for (int i = 0; i < n; ++i) {
        std::vector<Int> a{uniform(rng, 1, 3)};
        std::vector<Int> bseq{0};
        for (int t = 1; t <= columns; ++t) {
            const std::size_t pos = std::size_t(t - 1) * std::size_t(n) + std::size_t(i);
            const Int prev = a.back();
            bseq.push_back(prev * g[pos]);
            a.push_back(prev * f[pos] * g[pos]);
        }
        out.as.emplace_back(std::move(a));
        out.bs.emplace_back(std::move(bseq));
    }
    return out;
}

}  // namespace lcgd
