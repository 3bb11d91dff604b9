#include "lcgd/relations.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lcgd {

namespace {

struct Window {
    Index lo, hi;  // empty when lo > hi
};

Window union_window(const Seq& a, const Seq& b) {
    if (a.is_zero() && b.is_zero()) return {0, -1};
    if (a.is_zero()) return {b.lo(), b.hi()};
    if (b.is_zero()) return {a.lo(), a.hi()};
    return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

Verdict log_concave_with_name(const Seq& a, const char* name) {
    for (Index k = a.lo() + 1; k <= a.hi() - 1; ++k) {
        if (a.at(k - 1) * a.at(k + 1) > a.at(k) * a.at(k)) return Verdict::fail(name, k);
    }
    return Verdict::ok();
}

}  // namespace

SeqReport validate(const Seq& a) {
    SeqReport r;
    if (a.is_zero()) return r;
    r.first_nonzero = a.lo();
    r.last_nonzero = a.hi();
    for (Index k = a.lo(); k <= a.hi(); ++k) {
        if (a.at(k) == 0) {
            r.internal_zeros = true;
            break;
        }
    }
    return r;
}

Verdict is_log_concave(const Seq& a) {
    return log_concave_with_name(a, ineq::lc_a);
}

Verdict is_unimodal(const Seq& a) {
    std::optional<Index> descent;
    for (Index k = a.lo(); k < a.hi(); ++k) {
        if (a.at(k) > a.at(k + 1)) {
            if (!descent) descent = k;
        } else if (a.at(k) < a.at(k + 1) && descent) {
            return Verdict::fail(ineq::unimodal, k, *descent);
        }
    }
    return Verdict::ok();
}

Verdict synchronized(const Seq& a, const Seq& b) {
    if (Verdict v = log_concave_with_name(a, ineq::lc_a); !v) return v;
    if (Verdict v = log_concave_with_name(b, ineq::lc_b); !v) return v;
    const auto [lo, hi] = union_window(a, b);
    for (Index k = lo - 1; k <= hi + 1; ++k) {
        if (a.at(k - 1) * b.at(k + 1) > a.at(k) * b.at(k)) return Verdict::fail(ineq::sync_fwd, k);
        if (a.at(k + 1) * b.at(k - 1) > a.at(k) * b.at(k)) return Verdict::fail(ineq::sync_bwd, k);
    }
    return Verdict::ok();
}

Verdict ratio_dominates(const Seq& a, const Seq& b) {
    if (Verdict v = synchronized(a, b); !v) return v;
    const auto [lo, hi] = union_window(a, b);
    for (Index k = lo - 1; k <= hi + 1; ++k) {
        if (a.at(k + 1) * b.at(k) > a.at(k) * b.at(k + 1)) return Verdict::fail(ineq::dominance, k);
    }
    return Verdict::ok();
}

namespace {

// Tags a pairwise witness with the offending pair.
Verdict tag_pair(Verdict v, std::size_t i, std::size_t j) {
    if (!v && v.witness) {
        v.witness->inequality =
            "A[" + std::to_string(i + 1) + "],A[" + std::to_string(j + 1) + "]: " + v.witness->inequality;
    }
    return v;
}

Verdict pairwise_ltlc(std::span<const Seq> seqs) {
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        if (Verdict v = is_log_concave(seqs[i]); !v) return tag_pair(v, i, i);
        for (std::size_t j = i + 1; j < seqs.size(); ++j) {
            if (Verdict v = ratio_dominates(seqs[i], seqs[j]); !v) return tag_pair(v, i, j);
        }
    }
    return Verdict::ok();
}

Verdict chain_ltlc(std::span<const Seq> seqs) {
    for (std::size_t i = 0; i < seqs.size(); ++i) {
        if (Verdict v = is_log_concave(seqs[i]); !v) return v;
    }
    for (std::size_t i = 0; i + 1 < seqs.size(); ++i) {
        if (Verdict v = ratio_dominates(seqs[i], seqs[i + 1]); !v) return v;
    }
    if (seqs.size() >= 2) {
        if (Verdict v = synchronized(seqs.front(), seqs.back()); !v) return v;
    }
    return Verdict::ok();
}

}  // namespace

CollectionClass collection_class(std::span<const Seq> seqs) {
    if (seqs.empty()) throw std::invalid_argument("collection_class: empty collection");
    CollectionClass out;
    for (std::size_t i = 0; i < seqs.size() && out.in_tlc.holds; ++i) {
        if (Verdict v = is_log_concave(seqs[i]); !v) {
            out.in_tlc = tag_pair(v, i, i);
            break;
        }
        for (std::size_t j = i + 1; j < seqs.size(); ++j) {
            if (Verdict v = synchronized(seqs[i], seqs[j]); !v) {
                out.in_tlc = tag_pair(v, i, j);
                break;
            }
        }
    }

    out.in_ltlc = pairwise_ltlc(seqs);
    std::vector<Seq> reversed(seqs.rbegin(), seqs.rend());
    out.in_gtlc = pairwise_ltlc(reversed);

    const bool has_zero_member =
        std::any_of(seqs.begin(), seqs.end(), [](const Seq& s) { return s.is_zero(); });
    if (!has_zero_member) {
        if (chain_ltlc(seqs).holds != out.in_ltlc.holds ||
            chain_ltlc(reversed).holds != out.in_gtlc.holds) {
            throw std::logic_error("collection_class: pairwise and chain criteria disagree");
        }
    }
    return out;
}

BivFamily::BivFamily(std::vector<std::vector<Frac>> rows, Index offset)
    : rows_(std::move(rows)), offset_(offset) {
    for (const auto& row : rows_) {
        if (row.size() != rows_[0].size()) {
            throw std::invalid_argument("BivFamily: rows must share one window");
        }
    }
}

Frac BivFamily::at(std::size_t i, Index k) const {
    if (i < 1 || i > rows_.size()) throw std::out_of_range("BivFamily row");
    if (k < offset_ || k >= offset_ + Index(columns())) return {0, 0};
    return rows_[i - 1][std::size_t(k - offset_)];
}

Verdict is_lexicographic(const BivFamily& f) {
    const std::size_t n = f.rows();
    if (n == 0) return Verdict::ok();
    const Index lo = f.offset();
    const Index hi = lo + Index(f.columns()) - 1;
    for (Index k = lo; k <= hi; ++k) {
        for (std::size_t i = 1; i < n; ++i) {
            if (!ratio_leq(f.at(i, k), f.at(i + 1, k))) {
                return Verdict::fail(ineq::lex_column, k, Index(i));
            }
        }
        if (!ratio_leq(f.at(n, k), f.at(1, k + 1))) {
            return Verdict::fail(ineq::lex_wrap, k, Index(n));
        }
    }
    return Verdict::ok();
}

namespace {

Window family_window(std::span<const Seq> as, std::span<const Seq> bs) {
    Window w{0, -1};
    bool any = false;
    auto widen = [&](const Seq& s) {
        if (s.is_zero()) return;
        if (!any) {
            w = {s.lo(), s.hi()};
            any = true;
        } else {
            w.lo = std::min(w.lo, s.lo());
            w.hi = std::max(w.hi, s.hi());
        }
    };
    for (const Seq& s : as) widen(s);
    for (const Seq& s : bs) widen(s);
    return w;
}

}  // namespace

BivFamily ba_family(std::span<const Seq> as, std::span<const Seq> bs) {
    if (as.size() != bs.size()) throw std::invalid_argument("ba_family: length mismatch");
    const auto [lo, hi] = family_window(as, bs);
    std::vector<std::vector<Frac>> rows(as.size());
    for (std::size_t i = 0; i < as.size(); ++i) {
        for (Index t = lo - 1; t <= hi + 1; ++t) rows[i].push_back({bs[i].at(t), as[i].at(t)});
    }
    return BivFamily(std::move(rows), lo - 1);
}

BivFamily ab_offset_family(std::span<const Seq> as, std::span<const Seq> bs) {
    if (as.size() != bs.size()) throw std::invalid_argument("ab_offset_family: length mismatch");
    const auto [lo, hi] = family_window(as, bs);
    std::vector<std::vector<Frac>> rows(as.size());
    for (std::size_t i = 0; i < as.size(); ++i) {
        for (Index t = lo - 1; t <= hi + 2; ++t) rows[i].push_back({as[i].at(t - 1), bs[i].at(t)});
    }
    return BivFamily(std::move(rows), lo - 1);
}

Verdict sumclvls_premises(std::span<const Seq> as, std::span<const Seq> bs) {
    if (as.size() != bs.size()) {
        throw std::invalid_argument("sumclvls_premises: length mismatch");
    }
    if (Verdict v = is_lexicographic(ba_family(as, bs)); !v) {
        v.witness->inequality = "b/a: " + v.witness->inequality;
        return v;
    }
    if (Verdict v = is_lexicographic(ab_offset_family(as, bs)); !v) {
        v.witness->inequality = "a/b: " + v.witness->inequality;
        return v;
    }

    // The consequence cross-check needs interacting supports: lexicographic
    // premises are pure ratio chains whose 0/0 defaults skip the product
    // comparisons that a gap >= 2 between supports leaves one-sided (e.g.
    // As = [(0,0,1)], Bs = [(1)] passes both chains yet A !<~ B).
    bool interacting = true;
    auto check_pair = [&](const Seq& x, const Seq& y) {
        if (x.is_zero() || y.is_zero()) {
            interacting = false;
        } else if (std::max(x.lo(), y.lo()) > std::min(x.hi(), y.hi()) + 1) {
            interacting = false;
        }
    };
    for (std::size_t i = 0; i < as.size() && interacting; ++i) {
        for (std::size_t j = 0; j < as.size() && interacting; ++j) {
            check_pair(as[i], as[j]);
            check_pair(as[i], bs[j]);
            check_pair(bs[i], bs[j]);
        }
    }
    if (interacting) {
        auto pairwise_gtlc = [](std::span<const Seq> seqs) {
            for (std::size_t i = 0; i < seqs.size(); ++i) {
                if (!is_log_concave(seqs[i])) return false;
                for (std::size_t j = i + 1; j < seqs.size(); ++j) {
                    if (!ratio_dominates(seqs[j], seqs[i])) return false;
                }
            }
            return true;
        };
        bool consequences = pairwise_gtlc(as) && pairwise_gtlc(bs);
        for (std::size_t i = 0; consequences && i < as.size(); ++i) {
            consequences = ratio_dominates(as[i], bs[i]).holds;
        }
        if (!consequences) {
            throw std::logic_error("sumclvls_premises: premises hold but a consequence fails");
        }
    }
    return Verdict::ok();
}

bool witness_reproduces(const Witness& w, const Seq& a, const Seq& b) {
    const Index k = w.k;
    const std::string& s = w.inequality;
    auto ends_with = [&](const char* name) {
        const std::string t = name;
        return s.size() >= t.size() && s.compare(s.size() - t.size(), t.size(), t) == 0;
    };
    if (ends_with(ineq::lc_a)) return a.at(k - 1) * a.at(k + 1) > a.at(k) * a.at(k);
    if (ends_with(ineq::lc_b)) return b.at(k - 1) * b.at(k + 1) > b.at(k) * b.at(k);
    if (ends_with(ineq::sync_fwd)) return a.at(k - 1) * b.at(k + 1) > a.at(k) * b.at(k);
    if (ends_with(ineq::sync_bwd)) return a.at(k + 1) * b.at(k - 1) > a.at(k) * b.at(k);
    if (ends_with(ineq::dominance)) return a.at(k + 1) * b.at(k) > a.at(k) * b.at(k + 1);
    if (ends_with(ineq::unimodal)) {
        return w.i && a.at(*w.i) > a.at(*w.i + 1) && a.at(k) < a.at(k + 1) && *w.i < k;
    }
    return false;
}

bool witness_reproduces(const Witness& w, const BivFamily& f) {
    if (!w.i) return false;
    const std::size_t i = std::size_t(*w.i);
    const std::string& s = w.inequality;
    if (s.find(ineq::lex_wrap) != std::string::npos) {
        return i == f.rows() && !ratio_leq(f.at(i, w.k), f.at(1, w.k + 1));
    }
    if (s.find(ineq::lex_column) != std::string::npos) {
        return i + 1 <= f.rows() && !ratio_leq(f.at(i, w.k), f.at(i + 1, w.k));
    }
    return false;
}

}  // namespace lcgd
