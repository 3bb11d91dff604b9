#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lcgd {

using Int = boost::multiprecision::cpp_int;
using Index = std::int64_t;

/// Finite window of a doubly infinite nonnegative integer sequence.
/// Canonical form stores the support only: the first and last stored entries
/// are nonzero unless the sequence is identically zero. Indices outside the
/// window read as zero, so (0,8) at offset 0 and (8) at offset 1 are the
/// same value.
class Seq {
public:
    Seq() = default;
    /// Canonicalizes (trims zero margins). Throws std::invalid_argument on a
    /// negative entry.
    explicit Seq(std::vector<Int> entries, Index offset = 0);
    Seq(std::initializer_list<std::int64_t> entries, Index offset = 0);

    /// The sequence with a single 1 at index `at`; unit of convolution when at = 0.
    static Seq unit(Index at = 0);

    bool is_zero() const { return entries_.empty(); }
    /// Support bounds. For the zero sequence lo() == 0 and hi() == -1.
    Index lo() const { return is_zero() ? 0 : offset_; }
    Index hi() const { return is_zero() ? -1 : offset_ + Index(entries_.size()) - 1; }
    std::size_t support_size() const { return entries_.size(); }

    const Int& at(Index k) const;
    Int total() const;

    /// The offset sequence A+ with (A+)_k = a_{k-1}.
    Seq shifted() const;
    Seq scaled(const Int& u) const;

    friend Seq operator+(const Seq& a, const Seq& b);
    friend bool operator==(const Seq&, const Seq&) = default;

    /// "(2, 44)"; nonnegative-offset sequences are padded from index 0, so a
    /// value supported on {1,2} prints as "(0, 2, 44)".
    std::string str() const;

private:
    Index offset_ = 0;
    std::vector<Int> entries_;
};

/// Coefficient sequence of the product of the generating polynomials.
Seq convolve(const Seq& a, const Seq& b);

/// Pointwise sum of weights[i] * seqs[i]. Throws std::invalid_argument on a
/// length mismatch or a negative weight.
Seq combine(std::span<const Int> weights, std::span<const Seq> seqs);

/// Exact nonnegative fraction. (0,0) is a legal value (comparisons involving
/// it hold by default); (x,0) with x > 0 reads as +infinity.
struct Frac {
    Int num;
    Int den;
};

/// Decides p <= q by exact cross-multiplication. The inequality holds by
/// default when p = (0,0), q = (0,0), or both denominators are zero; a lone
/// (x,0) with x > 0 compares as +infinity.
bool ratio_leq(const Frac& p, const Frac& q);

/// Location of a failed inequality: its rendered form, the primary index k,
/// and an optional secondary index (lexicographic row, or the descent
/// position for unimodality).
struct Witness {
    std::string inequality;
    Index k = 0;
    std::optional<Index> i;
};

struct Verdict {
    bool holds = true;
    std::optional<Witness> witness;

    explicit operator bool() const { return holds; }
    static Verdict ok() { return {}; }
    static Verdict fail(std::string inequality, Index k, std::optional<Index> i = std::nullopt) {
        return {false, Witness{std::move(inequality), k, i}};
    }
};

}  // namespace lcgd
