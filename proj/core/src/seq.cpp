#include "lcgd/seq.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lcgd {

namespace {
const Int kZero = 0;
}

Seq::Seq(std::vector<Int> entries, Index offset) : offset_(offset), entries_(std::move(entries)) {
    for (const Int& e : entries_) {
        if (e < 0) throw std::invalid_argument("Seq entry must be nonnegative");
    }
    std::size_t first = 0;
    while (first < entries_.size() && entries_[first] == 0) ++first;
    if (first == entries_.size()) {
        entries_.clear();
        offset_ = 0;
        return;
    }
    std::size_t last = entries_.size();
    while (entries_[last - 1] == 0) --last;
    entries_.erase(entries_.begin() + last, entries_.end());
    entries_.erase(entries_.begin(), entries_.begin() + first);
    offset_ += Index(first);
}

Seq::Seq(std::initializer_list<std::int64_t> entries, Index offset)
    : Seq(std::vector<Int>(entries.begin(), entries.end()), offset) {}

Seq Seq::unit(Index at) {
    return Seq({1}, at);
}

const Int& Seq::at(Index k) const {
    if (is_zero() || k < offset_ || k >= offset_ + Index(entries_.size())) return kZero;
    return entries_[std::size_t(k - offset_)];
}

Int Seq::total() const {
    Int sum = 0;
    for (const Int& e : entries_) sum += e;
    return sum;
}

Seq Seq::shifted() const {
    Seq out = *this;
    if (!out.is_zero()) ++out.offset_;
    return out;
}

Seq Seq::scaled(const Int& u) const {
    if (u < 0) throw std::invalid_argument("scale factor must be nonnegative");
    if (u == 0 || is_zero()) return {};
    Seq out = *this;
    for (Int& e : out.entries_) e *= u;
    return out;
}

Seq operator+(const Seq& a, const Seq& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const Index lo = std::min(a.lo(), b.lo());
    const Index hi = std::max(a.hi(), b.hi());
    std::vector<Int> entries(std::size_t(hi - lo + 1));
    for (Index k = lo; k <= hi; ++k) entries[std::size_t(k - lo)] = a.at(k) + b.at(k);
    return Seq(std::move(entries), lo);
}

Seq convolve(const Seq& a, const Seq& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const Index lo = a.lo() + b.lo();
    const Index hi = a.hi() + b.hi();
    std::vector<Int> entries(std::size_t(hi - lo + 1));
    for (Index i = a.lo(); i <= a.hi(); ++i) {
        if (a.at(i) == 0) continue;
        for (Index j = b.lo(); j <= b.hi(); ++j) {
            entries[std::size_t(i + j - lo)] += a.at(i) * b.at(j);
        }
    }
    return Seq(std::move(entries), lo);
}

Seq combine(std::span<const Int> weights, std::span<const Seq> seqs) {
    if (weights.size() != seqs.size()) {
        throw std::invalid_argument("combine: weights and sequences differ in length");
    }
    Seq out;
    for (std::size_t i = 0; i < seqs.size(); ++i) out = out + seqs[i].scaled(weights[i]);
    return out;
}

std::string Seq::str() const {
    if (is_zero()) return "(0)";
    std::ostringstream os;
    const Index from = std::min<Index>(lo(), 0);
    os << "(";
    for (Index k = from; k <= hi(); ++k) {
        if (k > from) os << ", ";
        os << at(k);
    }
    os << ")";
    if (lo() < 0) os << " [offset " << lo() << "]";
    return os.str();
}

bool ratio_leq(const Frac& p, const Frac& q) {
    if (p.num < 0 || p.den < 0 || q.num < 0 || q.den < 0) {
        throw std::invalid_argument("ratio_leq: fractions must be nonnegative");
    }
    if (p.num == 0 && p.den == 0) return true;
    if (q.num == 0 && q.den == 0) return true;
    if (p.den == 0 && q.den == 0) return true;
    if (p.den == 0) return false;  // p = +inf, q finite
    if (q.den == 0) return true;   // q = +inf
    return p.num * q.den <= q.num * p.den;
}

}  // namespace lcgd
