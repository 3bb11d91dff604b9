#pragma once

#include "lcgd/enumerate.hpp"
#include "lcgd/generators.hpp"
#include "lcgd/graph.hpp"
#include "lcgd/seq.hpp"

#include <span>
#include <string>
#include <vector>

namespace lcgd {

struct FuzzSpec {
    std::string theorem;  // one of fuzz_theorems()
    std::uint64_t trials = 10'000;
    int max_len = 6;
    std::int64_t max_entry = 50;
    std::uint64_t seed = 0;
    bool negate_premise = false;  // harness self-test: key premise must fail
    int jobs = 1;
};

/// A premise-satisfying instance whose conclusion failed, minimized by a
/// greedy best-effort shrink. Violations replay: feeding the echoed inputs
/// back through replay_violation() reproduces the failure.
struct Violation {
    std::string theorem;
    std::string detail;
    bool negated = false;
    std::vector<std::pair<std::string, Seq>> seqs;
    std::vector<std::pair<std::string, std::vector<Int>>> weights;
};

struct ScanReport {
    std::uint64_t instances = 0;
    std::uint64_t attempts = 0;  // generator attempts consumed
    std::vector<Violation> violations;
    std::vector<std::string> notes;
    double wall_ms = 0;  // informational; excluded from byte-stable output
};

/// Thrown when rejection sampling cannot produce the requested number of
/// premise-satisfying instances within 100x the trial count.
struct GeneratorStarvation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> fuzz_theorems();

/// Rejection-samples premise-satisfying instances and evaluates the
/// conclusion. Proved statements must come back with zero violations; any
/// hit is a probable implementation bug, reported minimized.
ScanReport fuzz(const FuzzSpec& spec);

/// True when the violation's inputs still satisfy its premise and fail its
/// conclusion.
bool replay_violation(const Violation& v);

struct NamedGraph {
    std::string name;
    Graph graph;
};

/// Computes single-root partials for each rooted graph and reports internal
/// zeros or log-concavity failures in D or S; also notes whether D <~ S.
/// Graphs over the cap are skipped and noted.
ScanReport scan_partials(std::span<const NamedGraph> graphs, const EnumOptions& opts = {});

struct NontransBounds {
    int max_len = 4;
    std::int64_t max_entry = 6;
};

/// Exhaustive search for sequences A ~ B, B ~ C with A !~ C over raw entry
/// tuples (length and entry bounded; leading zeros give bounded offsets).
/// Records the first witness in enumeration order, or notes exhaustion.
ScanReport search_nontransitivity(const NontransBounds& bounds);

}  // namespace lcgd
