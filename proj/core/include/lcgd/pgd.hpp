#pragma once

#include "lcgd/relations.hpp"
#include "lcgd/seq.hpp"

#include <span>
#include <string>
#include <vector>

namespace lcgd {

enum class Mode { vertex, edge };

std::string to_string(Mode m);

/// Partitioned genus distribution of a singly rooted graph: d_i counts the
/// embeddings with two distinct face-boundary walks at the root, s_i those
/// with a single walk twice incident. Gamma = D + S.
struct SingleRootPGD {
    Seq d;
    Seq s;

    Seq gamma() const { return d + s; }
};

/// The ten double-root partials dd0, dd', dd'', ds0, ds', sd0, sd', ss0,
/// ss1, ss2 of a doubly rooted graph, as opaque input categories. The
/// groupings DD/DS/SD/SS are derived, and DD+DS+SD+SS is the genus
/// distribution of the underlying graph.
struct DoubleRootPGD {
    Seq dd0, dd1, dd2;
    Seq ds0, ds1;
    Seq sd0, sd1;
    Seq ss0, ss1, ss2;

    Seq dd() const { return dd0 + dd1 + dd2; }
    Seq ds() const { return ds0 + ds1; }
    Seq sd() const { return sd0 + sd1; }
    Seq ss() const { return ss0 + ss1 + ss2; }
    Seq total() const { return dd() + ds() + sd() + ss(); }
};

/// Suppress the first root: D = DD + SD, S = DS + SS.
SingleRootPGD suppress_first_root(const DoubleRootPGD& h);

/// The four abbreviation sequences used by the amalgamation premise checks.
struct AbbrevQuad {
    Seq a1, a2, b1, b2;
};

// A1 = dd0+ + dd'+ + ss2 + SD, A2 = SD + DD,
// B1 = ds'+ + dd''+ + ss0 + ss1, B2 = SS + DS.
AbbrevQuad abbrev_vertex(const DoubleRootPGD& h);
// A1 = dd0+ + dd'+ + ss2 + sd0 + SD, A2 = sd' + DD,
// B1 = DS+ + dd''+ + ss0 + ss1, B2 = SS + DS.
AbbrevQuad abbrev_edge(const DoubleRootPGD& h);
AbbrevQuad abbrev(const DoubleRootPGD& h, Mode m);

/// One step of vertex-amalgamation: merge the 2-valent root of g with the
/// first root of h; the result is rooted at h's second root. Computed twice,
/// from the term-by-term production sums and from the compact weighted form;
/// a mismatch throws std::logic_error.
SingleRootPGD amalgamate_vertex(const SingleRootPGD& g, const DoubleRootPGD& h);

/// Edge analogue (merge root edges; both endpoints 2-valent).
SingleRootPGD amalgamate_edge(const SingleRootPGD& g, const DoubleRootPGD& h);

SingleRootPGD amalgamate(const SingleRootPGD& g, const DoubleRootPGD& h, Mode m);

/// Rejects when any abbreviation sequence has an internal zero, then checks
/// the lexicographic premises on ([A1,A2],[B1,B2]).
Verdict check_amalgamand(const DoubleRootPGD& h, Mode m);

/// Rotation count at the merged root, derived from the production rows (6
/// for vertex mode, 4 for edge mode).
int embedding_multiplier(Mode m);

/// Total of the amalgamation output predicted directly from the production
/// rows, entry sums only. Exact for every input, including the rows whose
/// coefficient sum deviates from embedding_multiplier (d x ds0 in vertex
/// mode, s x sd0 in edge mode).
Int predicted_total(const SingleRootPGD& g, const DoubleRootPGD& h, Mode m);

struct ChainLink {
    DoubleRootPGD pgd;
    Mode mode = Mode::vertex;
    std::string name;
};

struct ChainStep {
    int index = 0;
    std::string amalgamand;
    Mode mode = Mode::vertex;
    Verdict premise;            // check_amalgamand on this step's input
    SingleRootPGD pgd;          // state after the step
    Verdict dominance;          // D <~ S
    Verdict gamma_log_concave;  // Gamma = D + S
};

struct ChainReport {
    bool certified = false;
    SingleRootPGD initial;
    Verdict initial_dominance;
    std::vector<ChainStep> steps;
    bool ok = true;  // every recorded verdict holds
    std::optional<std::string> abort_reason;
};

/// Iterates the amalgamations. With certify set, the initial dominance, each
/// step's premise, and each step's certificates (D <~ S, Gamma log-concave)
/// must hold; the first failure aborts the chain and is reported with its
/// witness. Without certify, failures are recorded and iteration continues.
ChainReport run_chain(const SingleRootPGD& init, std::span<const ChainLink> links, bool certify);

}  // namespace lcgd
