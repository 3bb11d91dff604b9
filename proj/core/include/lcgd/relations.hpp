#pragma once

#include "lcgd/seq.hpp"

#include <span>
#include <vector>

namespace lcgd {

/// Rendered forms of the inequalities that can appear in a Witness. Every
/// verdict produced by this header reports one of these, and
/// witness_reproduces() re-evaluates them.
namespace ineq {
inline constexpr const char* lc_a = "a[k-1]*a[k+1] <= a[k]^2";
inline constexpr const char* lc_b = "b[k-1]*b[k+1] <= b[k]^2";
inline constexpr const char* sync_fwd = "a[k-1]*b[k+1] <= a[k]*b[k]";
inline constexpr const char* sync_bwd = "a[k+1]*b[k-1] <= a[k]*b[k]";
inline constexpr const char* dominance = "a[k+1]*b[k] <= a[k]*b[k+1]";
inline constexpr const char* unimodal = "a[i] > a[i+1] and a[k] < a[k+1]";
inline constexpr const char* lex_column = "f[i,k] <= f[i+1,k]";
inline constexpr const char* lex_wrap = "f[n,k] <= f[1,k+1]";
}  // namespace ineq

struct SeqReport {
    bool nonnegative = true;  // guaranteed by the Seq constructor
    bool internal_zeros = false;
    std::optional<Index> first_nonzero;
    std::optional<Index> last_nonzero;
};

/// Internal zeros: a zero entry strictly between two nonzero entries.
SeqReport validate(const Seq& a);

/// a_{k-1} a_{k+1} <= a_k^2 for all k; witness is the least failing k.
Verdict is_log_concave(const Seq& a);

/// Entries rise to a peak and then fall; witness pairs the first descent
/// (index i) with a later rise (index k).
Verdict is_unimodal(const Seq& a);

/// A ~ B: both log-concave, and a_{k-1}b_{k+1} <= a_k b_k and
/// a_{k+1}b_{k-1} <= a_k b_k for all k. Symmetric; decided in product form,
/// no division.
Verdict synchronized(const Seq& a, const Seq& b);

/// A <~ B: synchronized and a_{k+1}b_k <= a_k b_{k+1} for all k.
Verdict ratio_dominates(const Seq& a, const Seq& b);

struct CollectionClass {
    Verdict in_tlc;   // pairwise synchronized
    Verdict in_ltlc;  // A_i <~ A_j for i < j
    Verdict in_gtlc;  // A_i >~ A_j for i < j
};

/// Classifies a collection. Every member must be log-concave for membership
/// in any of the three classes (for n >= 2 this is implied by the pairwise
/// relations; for n = 1 it keeps the classes aligned with the existence of a
/// dominating sequence). The ltLC/gtLC verdicts are computed from the
/// pairwise definition and cross-checked against the chain criterion
/// (consecutive dominances plus first~last); a disagreement throws
/// std::logic_error. Collections containing the zero sequence skip the
/// cross-check: a zero member satisfies every pairwise relation, which
/// breaks chain transitivity.
CollectionClass collection_class(std::span<const Seq> seqs);

/// Bivariate family f_{i,k} of exact fractions; all rows share one column
/// window starting at offset().
class BivFamily {
public:
    BivFamily() = default;
    /// Throws std::invalid_argument if rows have unequal lengths.
    explicit BivFamily(std::vector<std::vector<Frac>> rows, Index offset = 0);

    std::size_t rows() const { return rows_.size(); }
    std::size_t columns() const { return rows_.empty() ? 0 : rows_[0].size(); }
    Index offset() const { return offset_; }
    /// f_{i,k} with 1-based row i; (0,0) outside the window.
    Frac at(std::size_t i, Index k) const;

private:
    std::vector<std::vector<Frac>> rows_;
    Index offset_ = 0;
};

/// f_{1,k} <= f_{2,k} <= ... <= f_{n,k} <= f_{1,k+1} for all k, each
/// comparison via ratio_leq. Witness carries the column k and the 1-based
/// row i of the left operand (i = n marks the wrap comparison).
Verdict is_lexicographic(const BivFamily& f);

/// The two families checked by sumclvls_premises.
BivFamily ba_family(std::span<const Seq> as, std::span<const Seq> bs);        // b_{i,t} / a_{i,t}
BivFamily ab_offset_family(std::span<const Seq> as, std::span<const Seq> bs); // a_{i,t-1} / b_{i,t}

/// Both families above are lexicographic. Witnesses are prefixed "b/a:" or
/// "a/b:". When the premises hold, the implied consequences (As and Bs in
/// gtLC, A_i <~ B_i) are re-derived as a cross-check and a failure throws
/// std::logic_error; the cross-check is skipped for families with a zero
/// member or with supports that do not interact (a gap of two or more
/// between supports makes the ratio chains vacuous where the product-form
/// relations are not).
Verdict sumclvls_premises(std::span<const Seq> as, std::span<const Seq> bs);

/// Re-evaluates a witness produced by the binary relations (log-concavity,
/// synchronicity, ratio-dominance, unimodality) against its operands;
/// returns true when the reported inequality indeed fails there. Pass the
/// same sequence twice for unary checks.
bool witness_reproduces(const Witness& w, const Seq& a, const Seq& b);

/// Re-evaluates a lexicographicity witness against its family.
bool witness_reproduces(const Witness& w, const BivFamily& f);

}  // namespace lcgd
