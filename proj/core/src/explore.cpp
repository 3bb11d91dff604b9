#include "lcgd/explore.hpp"

#include "lcgd/relations.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <thread>

namespace lcgd {

namespace {

struct Instance {
    std::vector<std::pair<std::string, Seq>> seqs;
    std::vector<std::pair<std::string, std::vector<Int>>> weights;

    const Seq& get(const std::string& name) const {
        for (const auto& [n, s] : seqs) {
            if (n == name) return s;
        }
        throw std::logic_error("instance lacks sequence " + name);
    }
    const std::vector<Int>& w(const std::string& name) const {
        for (const auto& [n, v] : weights) {
            if (n == name) return v;
        }
        throw std::logic_error("instance lacks weights " + name);
    }
    std::vector<Seq> group(const std::string& prefix) const {
        std::vector<Seq> out;
        for (std::size_t i = 1;; ++i) {
            const std::string name = prefix + std::to_string(i);
            bool found = false;
            for (const auto& [n, s] : seqs) {
                if (n == name) {
                    out.push_back(s);
                    found = true;
                    break;
                }
            }
            if (!found) break;
        }
        return out;
    }
};

bool no_internal_zeros(const Seq& s) {
    return !validate(s).internal_zeros;
}

struct Suite {
    // Draws one candidate (biased toward the premise, never checked here).
    std::function<Instance(Rng&, const GenBounds&)> candidate;
    // Side conditions kept in both modes (log-concavity of carriers, no
    // internal zeros where the statement requires them).
    std::function<bool(const Instance&)> aux;
    // The relation under test; negate_premise flips it.
    std::function<bool(const Instance&)> key;
    // Returns a failure description when the conclusion does not hold.
    std::function<std::optional<std::string>(const Instance&)> conclusion;
    bool supports_negation = true;
};

Seq weighted_sum(const std::vector<Int>& w, const std::vector<Seq>& seqs) {
    return combine(w, seqs);
}

const std::map<std::string, Suite>& suites() {
    static const std::map<std::string, Suite> table = [] {
        std::map<std::string, Suite> t;

        t["convo-sync"] = Suite{
            [](Rng& rng, const GenBounds& b) {
                auto [a, bb] = candidate_pair(rng, b);
                return Instance{{{"A", a}, {"B", bb}, {"C", random_log_concave(rng, b)}}, {}};
            },
            [](const Instance& in) {
                return no_internal_zeros(in.get("A")) && no_internal_zeros(in.get("B")) &&
                       no_internal_zeros(in.get("C")) && is_log_concave(in.get("C")).holds;
            },
            [](const Instance& in) { return synchronized(in.get("A"), in.get("B")).holds; },
            [](const Instance& in) -> std::optional<std::string> {
                const Seq ac = convolve(in.get("A"), in.get("C"));
                const Seq bc = convolve(in.get("B"), in.get("C"));
                if (synchronized(ac, bc)) return std::nullopt;
                return "A*C !~ B*C";
            }};

        t["pwconvo"] = Suite{
            [](Rng& rng, const GenBounds& b) {
                auto [a, bb] = candidate_pair(rng, b);
                auto [c, d] = candidate_pair(rng, b);
                return Instance{{{"A", a}, {"B", bb}, {"C", c}, {"D", d}}, {}};
            },
            [](const Instance& in) {
                for (const char* n : {"A", "B", "C", "D"}) {
                    if (!no_internal_zeros(in.get(n))) return false;
                }
                return true;
            },
            [](const Instance& in) {
                return ratio_dominates(in.get("A"), in.get("B")).holds &&
                       ratio_dominates(in.get("C"), in.get("D")).holds;
            },
            [](const Instance& in) -> std::optional<std::string> {
                if (synchronized(convolve(in.get("A"), in.get("D")),
                                 convolve(in.get("B"), in.get("C")))) {
                    return std::nullopt;
                }
                return "A*D !~ B*C";
            }};

        t["lincomb"] = Suite{
            [](Rng& rng, const GenBounds& b) {
                const int n = 2 + int(rng() % 2);
                std::vector<Seq> members = (rng() % 2 == 0)
                                               ? candidate_mixture_chain(rng, n, b)
                                               : [&] {
                                                     std::vector<Seq> ms;
                                                     for (int i = 0; i < n; ++i) {
                                                         ms.push_back(random_log_concave(rng, b));
                                                     }
                                                     return ms;
                                                 }();
                Instance in;
                for (int i = 0; i < n; ++i) {
                    in.seqs.emplace_back("A" + std::to_string(i + 1), members[std::size_t(i)]);
                }
                in.weights.emplace_back("u", random_weights(rng, std::size_t(n), 6));
                in.weights.emplace_back("v", random_weights(rng, std::size_t(n), 6));
                return in;
            },
            [](const Instance&) { return true; },
            [](const Instance& in) {
                const auto as = in.group("A");
                return collection_class(as).in_tlc.holds;
            },
            [](const Instance& in) -> std::optional<std::string> {
                const auto as = in.group("A");
                const Seq u = weighted_sum(in.w("u"), as);
                const Seq v = weighted_sum(in.w("v"), as);
                if (!synchronized(u, v)) return "sum(u_i A_i) !~ sum(v_i A_i)";
                for (std::size_t i = 0; i < as.size(); ++i) {
                    if (!synchronized(u, as[i])) {
                        return "sum(u_i A_i) !~ A" + std::to_string(i + 1);
                    }
                }
                return std::nullopt;
            }};

        t["sumls"] = Suite{
            [](Rng& rng, const GenBounds& b) {
                const int n = 1 + int(rng() % 2), m = 1 + int(rng() % 2);
                const auto chain = candidate_mixture_chain(rng, n + m, b);
                Instance in;
                for (int i = 0; i < n; ++i) {
                    in.seqs.emplace_back("A" + std::to_string(i + 1), chain[std::size_t(i)]);
                }
                for (int j = 0; j < m; ++j) {
                    in.seqs.emplace_back("B" + std::to_string(j + 1), chain[std::size_t(n + j)]);
                }
                in.weights.emplace_back("u", random_weights(rng, std::size_t(n), 6));
                in.weights.emplace_back("v", random_weights(rng, std::size_t(m), 6));
                return in;
            },
            [](const Instance&) { return true; },
            [](const Instance& in) {
                for (const Seq& a : in.group("A")) {
                    for (const Seq& b : in.group("B")) {
                        if (!ratio_dominates(a, b)) return false;
                    }
                }
                return true;
            },
            [](const Instance& in) -> std::optional<std::string> {
                const Seq u = weighted_sum(in.w("u"), in.group("A"));
                const Seq v = weighted_sum(in.w("v"), in.group("B"));
                if (ratio_dominates(u, v)) return std::nullopt;
                return "sum(u_i A_i) !<~ sum(v_j B_j)";
            }};

        t["simls"] = Suite{
            [](Rng& rng, const GenBounds& b) {
                auto [a, bb] = candidate_pair(rng, b);
                return Instance{{{"A", a}, {"B", bb}}, {}};
            },
            [](const Instance&) { return true; },
            [](const Instance& in) {
                const Seq& a = in.get("A");
                const Seq& b = in.get("B");
                return synchronized(a, b).holds && ratio_dominates(a, a + b).holds;
            },
            [](const Instance& in) -> std::optional<std::string> {
                if (ratio_dominates(in.get("A"), in.get("B"))) return std::nullopt;
                return "A !<~ B";
            }};

        t["sumclvls"] = Suite{
            [](Rng& rng, const GenBounds& b) {
                const int n = 1 + int(rng() % 3);
                const LexCandidate fam = candidate_lex_families(rng, n, b);
                const auto ws = candidate_mixture_chain(rng, n, b);
                Instance in;
                for (int i = 0; i < n; ++i) {
                    in.seqs.emplace_back("A" + std::to_string(i + 1), fam.as[std::size_t(i)]);
                }
                for (int i = 0; i < n; ++i) {
                    in.seqs.emplace_back("B" + std::to_string(i + 1), fam.bs[std::size_t(i)]);
                }
                for (int i = 0; i < n; ++i) {
                    in.seqs.emplace_back("W" + std::to_string(i + 1), ws[std::size_t(i)]);
                }
                return in;
            },
            [](const Instance& in) {
                for (const auto& [name, s] : in.seqs) {
                    if (!no_internal_zeros(s)) return false;
                }
                return true;
            },
            [](const Instance& in) {
                const auto as = in.group("A"), bs = in.group("B"), ws = in.group("W");
                return sumclvls_premises(as, bs).holds && collection_class(ws).in_ltlc.holds;
            },
            [](const Instance& in) -> std::optional<std::string> {
                const auto as = in.group("A"), bs = in.group("B"), ws = in.group("W");
                Seq left, right;
                for (std::size_t i = 0; i < as.size(); ++i) {
                    left = left + convolve(ws[i], as[i]);
                    right = right + convolve(ws[i], bs[i]);
                }
                if (ratio_dominates(left, right)) return std::nullopt;
                return "sum(W_i*A_i) !<~ sum(W_i*B_i)";
            }};

        t["ac-bc"] = Suite{
            [](Rng& rng, const GenBounds& b) {
                auto [a, bb] = candidate_pair(rng, b);
                return Instance{{{"A", a}, {"B", bb}, {"C", random_log_concave(rng, b)}}, {}};
            },
            [](const Instance& in) {
                return no_internal_zeros(in.get("A")) && no_internal_zeros(in.get("B")) &&
                       no_internal_zeros(in.get("C")) && is_log_concave(in.get("C")).holds;
            },
            [](const Instance& in) { return ratio_dominates(in.get("A"), in.get("B")).holds; },
            [](const Instance& in) -> std::optional<std::string> {
                if (ratio_dominates(convolve(in.get("A"), in.get("C")),
                                    convolve(in.get("B"), in.get("C")))) {
                    return std::nullopt;
                }
                return "A*C !<~ B*C";
            }};

        t["ac-bd"] = Suite{
            [](Rng& rng, const GenBounds& b) {
                const auto chain = candidate_mixture_chain(rng, 4, b);
                return Instance{
                    {{"A", chain[0]}, {"B", chain[1]}, {"C", chain[2]}, {"D", chain[3]}}, {}};
            },
            [](const Instance& in) {
                for (const char* n : {"A", "B", "C", "D"}) {
                    if (!no_internal_zeros(in.get(n))) return false;
                }
                return true;
            },
            [](const Instance& in) {
                const std::vector<Seq> tuple{in.get("A"), in.get("B"), in.get("C"), in.get("D")};
                return collection_class(tuple).in_ltlc.holds;
            },
            [](const Instance& in) -> std::optional<std::string> {
                if (ratio_dominates(convolve(in.get("A"), in.get("C")),
                                    convolve(in.get("B"), in.get("D")))) {
                    return std::nullopt;
                }
                return "A*C !<~ B*D";
            }};

        // The A <~ B <=> B <~ A+ equivalence needs the supports to interact
        // (overlap, or sit at gap 1): for disjoint supports at gap >= 2 the
        // product-form relations go vacuous on one side of the shift but not
        // the other, e.g. A = (0,0,1), B = (1). The shift law
        // A <~ B <=> A+ <~ B+ is unconditional.
        t["offset-laws"] = Suite{
            [](Rng& rng, const GenBounds& b) {
                const Seq a = (rng() % 2 == 0) ? random_log_concave(rng, b) : random_seq(rng, b);
                const Seq bb = (rng() % 2 == 0) ? random_log_concave(rng, b) : random_seq(rng, b);
                return Instance{{{"A", a}, {"B", bb}}, {}};
            },
            [](const Instance&) { return true; },
            [](const Instance& in) {
                const Seq& a = in.get("A");
                const Seq& b = in.get("B");
                return a.is_zero() || b.is_zero() ||
                       std::max(a.lo(), b.lo()) <= std::min(a.hi(), b.hi()) + 1;
            },
            [](const Instance& in) -> std::optional<std::string> {
                const Seq& a = in.get("A");
                const Seq& b = in.get("B");
                const bool ab = ratio_dominates(a, b).holds;
                const bool b_aplus = ratio_dominates(b, a.shifted()).holds;
                const bool shifted = ratio_dominates(a.shifted(), b.shifted()).holds;
                if (ab != b_aplus) return "A <~ B and B <~ A+ disagree";
                if (ab != shifted) return "A <~ B and A+ <~ B+ disagree";
                if (is_log_concave(a).holds && no_internal_zeros(a) &&
                    !ratio_dominates(a, a.shifted()).holds) {
                    return "log-concave A without internal zeros fails A <~ A+";
                }
                return std::nullopt;
            },
            false};

        t["bc-ac+"] = Suite{
            [](Rng& rng, const GenBounds& b) {
                auto [a, bb] = candidate_pair(rng, b);
                return Instance{{{"A", a}, {"B", bb}, {"C", random_log_concave(rng, b)}}, {}};
            },
            [](const Instance& in) {
                return no_internal_zeros(in.get("A")) && no_internal_zeros(in.get("B")) &&
                       no_internal_zeros(in.get("C")) && is_log_concave(in.get("C")).holds;
            },
            [](const Instance& in) { return ratio_dominates(in.get("A"), in.get("B")).holds; },
            [](const Instance& in) -> std::optional<std::string> {
                if (ratio_dominates(convolve(in.get("B"), in.get("C")),
                                    convolve(in.get("A"), in.get("C").shifted()))) {
                    return std::nullopt;
                }
                return "B*C !<~ A*C+";
            }};

        t["lx"] = Suite{
            [](Rng& rng, const GenBounds& b) {
                const int n = 1 + int(rng() % 3);
                const LexCandidate fam = candidate_lex_families(rng, n, b);
                Instance in;
                for (int i = 0; i < n; ++i) {
                    in.seqs.emplace_back("A" + std::to_string(i + 1), fam.as[std::size_t(i)]);
                }
                for (int i = 0; i < n; ++i) {
                    in.seqs.emplace_back("B" + std::to_string(i + 1), fam.bs[std::size_t(i)]);
                }
                return in;
            },
            [](const Instance&) { return true; },
            [](const Instance& in) {
                const auto as = in.group("A"), bs = in.group("B");
                return is_lexicographic(ba_family(as, bs)).holds &&
                       is_lexicographic(ab_offset_family(as, bs)).holds;
            },
            [](const Instance& in) -> std::optional<std::string> {
                const auto as = in.group("A"), bs = in.group("B");
                if (!collection_class(as).in_gtlc.holds) return "As not in gtLC";
                if (!collection_class(bs).in_gtlc.holds) return "Bs not in gtLC";
                for (std::size_t i = 0; i < as.size(); ++i) {
                    if (!ratio_dominates(as[i], bs[i])) {
                        return "A" + std::to_string(i + 1) + " !<~ B" + std::to_string(i + 1);
                    }
                }
                return std::nullopt;
            }};

        return t;
    }();
    return table;
}

bool instance_valid(const Suite& suite, const Instance& in, bool negated) {
    return suite.aux(in) && suite.key(in) == !negated;
}

// Greedy best-effort shrink: drop margin entries or shrink single entries
// while the instance still satisfies the (possibly negated) premise and
// still violates the conclusion.
Instance minimize(const Suite& suite, Instance in, bool negated) {
    auto violates = [&](const Instance& cand) {
        try {
            return instance_valid(suite, cand, negated) && suite.conclusion(cand).has_value();
        } catch (const std::logic_error&) {
            return false;
        }
    };
    bool improved = true;
    int budget = 2000;
    while (improved && budget > 0) {
        improved = false;
        for (std::size_t si = 0; si < in.seqs.size() && !improved; ++si) {
            const Seq seq = in.seqs[si].second;
            std::vector<Seq> candidates;
            if (!seq.is_zero()) {
                std::vector<Int> entries;
                for (Index k = seq.lo(); k <= seq.hi(); ++k) entries.push_back(seq.at(k));
                candidates.emplace_back(std::vector<Int>(entries.begin() + 1, entries.end()),
                                        seq.lo() + 1);
                candidates.emplace_back(std::vector<Int>(entries.begin(), entries.end() - 1),
                                        seq.lo());
                for (std::size_t i = 0; i < entries.size(); ++i) {
                    if (entries[i] == 0) continue;
                    auto half = entries;
                    half[i] /= 2;
                    candidates.emplace_back(std::move(half), seq.lo());
                    auto dec = entries;
                    dec[i] -= 1;
                    candidates.emplace_back(std::move(dec), seq.lo());
                }
            }
            for (Seq& cand : candidates) {
                if (--budget <= 0) break;
                Instance trial = in;
                trial.seqs[si].second = cand;
                if (violates(trial)) {
                    in = std::move(trial);
                    improved = true;
                    break;
                }
            }
        }
    }
    return in;
}

struct WorkerResult {
    std::uint64_t instances = 0;
    std::uint64_t attempts = 0;
    std::vector<Violation> violations;
    std::optional<std::string> starvation;
};

WorkerResult fuzz_worker(const Suite& suite, const FuzzSpec& spec, std::uint64_t trials,
                         std::uint64_t attempt_budget, std::uint64_t seed) {
    WorkerResult out;
    Rng rng(seed);
    const GenBounds bounds{spec.max_len, spec.max_entry};
    while (out.instances < trials) {
        if (out.attempts >= attempt_budget) {
            out.starvation = "generator starvation after " + std::to_string(out.attempts) +
                             " attempts (" + std::to_string(out.instances) + "/" +
                             std::to_string(trials) + " instances)";
            return out;
        }
        ++out.attempts;
        Instance in = suite.candidate(rng, bounds);
        if (!instance_valid(suite, in, spec.negate_premise)) continue;
        ++out.instances;
        if (auto detail = suite.conclusion(in)) {
            Instance min = minimize(suite, std::move(in), spec.negate_premise);
            out.violations.push_back(Violation{spec.theorem, *detail, spec.negate_premise,
                                               std::move(min.seqs), std::move(min.weights)});
        }
    }
    return out;
}

}  // namespace

std::vector<std::string> fuzz_theorems() {
    std::vector<std::string> names;
    for (const auto& [name, suite] : suites()) names.push_back(name);
    return names;
}

ScanReport fuzz(const FuzzSpec& spec) {
    const auto it = suites().find(spec.theorem);
    if (it == suites().end()) throw std::invalid_argument("unknown theorem id: " + spec.theorem);
    const Suite& suite = it->second;
    if (spec.negate_premise && !suite.supports_negation) {
        throw std::invalid_argument("theorem " + spec.theorem + " has no premise to negate");
    }

    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t budget = 100 * std::max<std::uint64_t>(spec.trials, 1);
    const int jobs = std::max(1, std::min<int>(spec.jobs, 16));

    std::vector<WorkerResult> results(static_cast<std::size_t>(jobs));
    auto run = [&](int w) {
        const std::uint64_t lo = spec.trials * std::uint64_t(w) / std::uint64_t(jobs);
        const std::uint64_t hi = spec.trials * std::uint64_t(w + 1) / std::uint64_t(jobs);
        results[std::size_t(w)] = fuzz_worker(suite, spec, hi - lo, budget / std::uint64_t(jobs),
                                              derive_seed(spec.seed, std::uint64_t(w)));
    };
    if (jobs == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < jobs; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }

    ScanReport report;
    for (const WorkerResult& r : results) {
        report.instances += r.instances;
        report.attempts += r.attempts;
        for (const Violation& v : r.violations) report.violations.push_back(v);
        if (r.starvation) throw GeneratorStarvation(spec.theorem + ": " + *r.starvation);
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

bool replay_violation(const Violation& v) {
    const auto it = suites().find(v.theorem);
    if (it == suites().end()) return false;
    Instance in{v.seqs, v.weights};
    try {
        return instance_valid(it->second, in, v.negated) && it->second.conclusion(in).has_value();
    } catch (const std::logic_error&) {
        return false;
    }
}

ScanReport scan_partials(std::span<const NamedGraph> graphs, const EnumOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    ScanReport report;
    for (const NamedGraph& ng : graphs) {
        SingleRootPGD p;
        try {
            ng.graph.validate_rooted();
            if (!ng.graph.root_vertices.empty()) {
                p = partials_vertex_root(ng.graph, ng.graph.root_vertices.front(), opts);
            } else if (!ng.graph.root_edges.empty()) {
                p = partials_edge_root(ng.graph, ng.graph.root_edges.front(), opts);
            } else {
                report.notes.push_back(ng.name + ": skipped (no root marker)");
                continue;
            }
        } catch (const CapExceeded& e) {
            report.notes.push_back(ng.name + ": skipped (needs " + e.count.str() +
                                   " rotation systems, cap " + std::to_string(opts.cap) + ")");
            continue;
        }
        ++report.instances;
        const auto record = [&](const char* which, const Seq& s) {
            if (validate(s).internal_zeros) {
                report.violations.push_back(Violation{"pgd-scan",
                                                      ng.name + ": internal zero in " + which,
                                                      false,
                                                      {{"D", p.d}, {"S", p.s}},
                                                      {}});
            }
            if (!is_log_concave(s)) {
                report.violations.push_back(Violation{"pgd-scan",
                                                      ng.name + ": " + std::string(which) +
                                                          " is not log-concave",
                                                      false,
                                                      {{"D", p.d}, {"S", p.s}},
                                                      {}});
            }
        };
        record("D", p.d);
        record("S", p.s);
        const bool dom = ratio_dominates(p.d, p.s).holds;
        report.notes.push_back(ng.name + ": D = " + p.d.str() + ", S = " + p.s.str() +
                               ", D <~ S: " + (dom ? "holds" : "fails"));
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

// int64 views of small sequences for the exhaustive search; witnesses found
// here are re-verified through the exact Seq relations before reporting.
struct SmallSeq {
    std::vector<std::int64_t> entries;  // raw tuple, index 0 first
    Seq seq;
};

std::int64_t small_at(const SmallSeq& s, std::int64_t k) {
    return (k >= 0 && k < std::int64_t(s.entries.size())) ? s.entries[std::size_t(k)] : 0;
}

bool small_lc(const SmallSeq& s) {
    for (std::int64_t k = 1; k + 1 < std::int64_t(s.entries.size()); ++k) {
        if (small_at(s, k - 1) * small_at(s, k + 1) > small_at(s, k) * small_at(s, k)) return false;
    }
    return true;
}

bool small_sync(const SmallSeq& a, const SmallSeq& b) {
    const std::int64_t hi = std::int64_t(std::max(a.entries.size(), b.entries.size()));
    for (std::int64_t k = -1; k <= hi; ++k) {
        if (small_at(a, k - 1) * small_at(b, k + 1) > small_at(a, k) * small_at(b, k)) return false;
        if (small_at(a, k + 1) * small_at(b, k - 1) > small_at(a, k) * small_at(b, k)) return false;
    }
    return true;
}

}  // namespace

ScanReport search_nontransitivity(const NontransBounds& bounds) {
    const auto start = std::chrono::steady_clock::now();
    if (bounds.max_len < 1 || bounds.max_entry < 1) {
        throw std::invalid_argument("search bounds must be positive");
    }

    // all raw tuples in (length, lexicographic) order, deduplicated by value
    std::vector<SmallSeq> pool;
    std::vector<std::int64_t> tuple;
    auto emit = [&] {
        std::vector<Int> entries(tuple.begin(), tuple.end());
        Seq s(std::move(entries), 0);
        if (s.is_zero()) return;
        for (const SmallSeq& existing : pool) {
            if (existing.seq == s) return;
        }
        pool.push_back(SmallSeq{tuple, std::move(s)});
    };
    std::function<void(int)> extend = [&](int len) {
        if (len > 0) emit();
        if (len == bounds.max_len) return;
        for (std::int64_t v = 0; v <= bounds.max_entry; ++v) {
            tuple.push_back(v);
            extend(len + 1);
            tuple.pop_back();
        }
    };
    extend(0);

    const std::size_t n = pool.size();
    std::vector<char> lc(n);
    for (std::size_t i = 0; i < n; ++i) lc[i] = small_lc(pool[i]) ? 1 : 0;
    const std::size_t words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> sync(n, std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (!lc[i]) continue;
        for (std::size_t j = i; j < n; ++j) {
            if (!lc[j]) continue;
            if (small_sync(pool[i], pool[j])) {
                sync[i][j / 64] |= 1ULL << (j % 64);
                sync[j][i / 64] |= 1ULL << (i % 64);
            }
        }
    }

    ScanReport report;
    for (std::size_t b = 0; b < n && report.violations.empty(); ++b) {
        if (!lc[b]) continue;
        for (std::size_t a = 0; a < n && report.violations.empty(); ++a) {
            if (!(sync[b][a / 64] >> (a % 64) & 1)) continue;
            for (std::size_t w = 0; w < words; ++w) {
                const std::uint64_t candidates = sync[b][w] & ~sync[a][w];
                report.instances += std::uint64_t(__builtin_popcountll(sync[b][w]));
                if (candidates == 0) continue;
                const std::size_t c = w * 64 + std::size_t(__builtin_ctzll(candidates));
                const Seq &A = pool[a].seq, &B = pool[b].seq, &C = pool[c].seq;
                // exact re-verification of the fast-path result
                if (!synchronized(A, B) || !synchronized(B, C) || synchronized(A, C)) {
                    throw std::logic_error("nontransitivity witness failed re-verification");
                }
                report.violations.push_back(Violation{"sync-nontransitivity",
                                                      "A ~ B and B ~ C but A !~ C",
                                                      false,
                                                      {{"A", A}, {"B", B}, {"C", C}},
                                                      {}});
                break;
            }
        }
    }
    if (report.violations.empty()) {
        report.notes.push_back("no witness within bounds (len <= " + std::to_string(bounds.max_len) +
                               ", entries <= " + std::to_string(bounds.max_entry) + ")");
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace lcgd
