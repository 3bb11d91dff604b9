#pragma once

#include "lcgd/seq.hpp"

#include <random>
#include <utility>
#include <vector>

namespace lcgd {

using Rng = std::mt19937_64;

/// Deterministic per-worker seed derivation (splitmix64 over master ^ index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t worker);

struct GenBounds {
    int max_len = 6;
    std::int64_t max_entry = 50;
};

/// Log-concave, positive on its support (no internal zeros), offset in [0,2].
Seq random_log_concave(Rng& rng, const GenBounds& b);

/// Arbitrary nonnegative sequence; may contain internal zeros.
Seq random_seq(Rng& rng, const GenBounds& b);

/// Nonnegative weights, zeros allowed.
std::vector<Int> random_weights(Rng& rng, std::size_t n, std::int64_t max_entry);

/// Candidate pair biased toward the synchronicity/dominance premises: half
/// the time two independent log-concave draws, half the time two mixtures
/// u*X + v*X+ of one base (ordered by shift share, which favors A <~ B).
/// Callers must still reject against the premise they need.
std::pair<Seq, Seq> candidate_pair(Rng& rng, const GenBounds& b);

/// n mixtures of one log-concave base and its offset sequence, sorted by
/// shift share; biased toward pairwise-dominated chains.
std::vector<Seq> candidate_mixture_chain(Rng& rng, int n, const GenBounds& b);

/// Families built from two descending-lexicographic integer ladders F, G:
/// a_{i,t} = a_{i,t-1} * F_{i,t} * G_{i,t} and b_{i,t} = a_{i,t-1} * G_{i,t},
/// which satisfy both lexicographic premise families by construction.
struct LexCandidate {
    std::vector<Seq> as, bs;
};
LexCandidate candidate_lex_families(Rng& rng, int n, const GenBounds& b);

}  // namespace lcgd
