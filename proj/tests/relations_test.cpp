#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcgd/generators.hpp"
#include "lcgd/relations.hpp"

#include "support.hpp"

#include <vector>

using namespace lcgd;
using lcgd::test::envelope_dominator;

TEST_CASE("log-concavity with witnesses") {
    CHECK(is_log_concave(Seq{16, 1080, 18184, 27872, 7776}).holds);
    CHECK(is_log_concave(Seq{8, 168, 720, 128}).holds);
    const Verdict v = is_log_concave(Seq{1, 1, 2});
    REQUIRE_FALSE(v.holds);
    CHECK(v.witness->k == 1);
    CHECK(witness_reproduces(*v.witness, Seq{1, 1, 2}, Seq{1, 1, 2}));
    CHECK(is_log_concave(Seq()).holds);
    CHECK(is_log_concave(Seq{5}).holds);
}

TEST_CASE("unimodality with witness pairs") {
    CHECK(is_unimodal(Seq{0, 144, 4776, 15552, 7776}).holds);
    const Verdict v = is_unimodal(Seq{1, 0, 1});
    REQUIRE_FALSE(v.holds);
    CHECK(witness_reproduces(*v.witness, Seq{1, 0, 1}, Seq{1, 0, 1}));
    CHECK(is_unimodal(Seq{3, 3, 1}).holds);
}

TEST_CASE("log-concave without internal zeros implies unimodal") {
    Rng rng(11);
    const GenBounds bounds{6, 50};
    for (int i = 0; i < 2000; ++i) {
        const Seq a = random_log_concave(rng, bounds);
        CHECK(is_unimodal(a).holds);
    }
}

TEST_CASE("synchronicity in product form") {
    CHECK(synchronized(Seq{2, 44}, Seq{0, 14, 36}).holds);

    // any two log-concave length-2 sequences are synchronized: every product
    // in the definition needs an index gap of two
    CHECK(synchronized(Seq{1, 10}, Seq{10, 1}).holds);

    const Seq a{4, 2, 1}, c{1, 2, 4};
    const Verdict v = synchronized(a, c);
    REQUIRE_FALSE(v.holds);
    CHECK(witness_reproduces(*v.witness, a, c));

    SUBCASE("reduces to log-concavity on the diagonal") {
        Rng rng(12);
        const GenBounds bounds{6, 50};
        for (int i = 0; i < 500; ++i) {
            const Seq s = random_seq(rng, bounds);
            CHECK(synchronized(s, s).holds == is_log_concave(s).holds);
        }
    }

    SUBCASE("symmetric") {
        Rng rng(13);
        const GenBounds bounds{5, 20};
        for (int i = 0; i < 2000; ++i) {
            const Seq a2 = random_seq(rng, bounds);
            const Seq b2 = random_seq(rng, bounds);
            CHECK(synchronized(a2, b2).holds == synchronized(b2, a2).holds);
        }
    }
}

TEST_CASE("ratio-dominance") {
    CHECK(ratio_dominates(Seq{16, 936, 13408, 12320}, Seq{0, 144, 4776, 15552, 7776}).holds);
    CHECK(ratio_dominates(Seq{2, 8}, Seq{0, 6}).holds);
    CHECK_FALSE(ratio_dominates(Seq{0, 6}, Seq{2, 8}).holds);
    CHECK(ratio_dominates(Seq{10, 1}, Seq{1, 10}).holds);

    SUBCASE("a log-concave sequence is dominated by its offset sequence") {
        Rng rng(14);
        const GenBounds bounds{6, 50};
        for (int i = 0; i < 2000; ++i) {
            const Seq a = random_log_concave(rng, bounds);
            CHECK(ratio_dominates(a, a.shifted()).holds);
        }
    }

    SUBCASE("failed verdicts re-verify") {
        Rng rng(15);
        const GenBounds bounds{5, 30};
        int failures = 0;
        for (int i = 0; i < 4000; ++i) {
            const Seq a = random_seq(rng, bounds);
            const Seq b = random_seq(rng, bounds);
            for (const Verdict& v :
                 {synchronized(a, b), ratio_dominates(a, b), is_log_concave(a)}) {
                if (!v.holds) {
                    ++failures;
                    CHECK(witness_reproduces(*v.witness, a, b));
                }
            }
        }
        CHECK(failures > 100);  // the sample actually exercised failures
    }
}

TEST_CASE("collection classes") {
    const Seq lc{2, 44};

    SUBCASE("log-concave singleton is in all three classes") {
        const std::vector<Seq> single{lc};
        const CollectionClass c = collection_class(single);
        CHECK(c.in_tlc.holds);
        CHECK(c.in_ltlc.holds);
        CHECK(c.in_gtlc.holds);
    }

    SUBCASE("non-log-concave singleton is in none") {
        const std::vector<Seq> single{Seq{1, 1, 2}};
        const CollectionClass c = collection_class(single);
        CHECK_FALSE(c.in_tlc.holds);
        CHECK_FALSE(c.in_ltlc.holds);
        CHECK_FALSE(c.in_gtlc.holds);
    }

    SUBCASE("constant-ratio offset ladder is an ascending chain") {
        const Seq geo{1, 2, 4};
        const std::vector<Seq> ladder{geo, geo.shifted(), geo.shifted().shifted()};
        const CollectionClass c = collection_class(ladder);
        CHECK(c.in_ltlc.holds);
        CHECK_FALSE(c.in_gtlc.holds);
    }

    SUBCASE("strict-ratio ladder breaks at the double shift") {
        // A and A++ are not synchronized once the ratios strictly drop:
        // a[k-1]*(A++)[k+1] <= a[k]*(A++)[k] asks for reverse log-concavity
        const std::vector<Seq> ladder{lc, lc.shifted(), lc.shifted().shifted()};
        CHECK_FALSE(synchronized(lc, lc.shifted().shifted()).holds);
        CHECK_FALSE(collection_class(ladder).in_ltlc.holds);
    }

    SUBCASE("mixtures of a base and its shift form an ascending chain") {
        const std::vector<Seq> chain{lc.scaled(2), lc + lc.shifted(), lc.shifted().scaled(3)};
        const CollectionClass c = collection_class(chain);
        CHECK(c.in_ltlc.holds);
        CHECK_FALSE(c.in_gtlc.holds);
    }

    SUBCASE("length-2 antisymmetric pair is synchronized but not an ascending chain") {
        const std::vector<Seq> pair{Seq{1, 10}, Seq{10, 1}};
        const CollectionClass c = collection_class(pair);
        CHECK(c.in_tlc.holds);
        CHECK_FALSE(c.in_ltlc.holds);
        CHECK(c.in_gtlc.holds);  // (10,1) is dominated by (1,10)
    }

    SUBCASE("empty collection is rejected") {
        CHECK_THROWS_AS(collection_class(std::vector<Seq>{}), std::invalid_argument);
    }

    SUBCASE("pairwise and chain routes agree on random collections") {
        Rng rng(16);
        const GenBounds bounds{5, 12};
        for (int i = 0; i < 20000; ++i) {
            std::vector<Seq> seqs;
            const int n = 1 + int(rng() % 4);
            for (int j = 0; j < n; ++j) {
                seqs.push_back(rng() % 2 == 0 ? random_log_concave(rng, bounds)
                                              : random_seq(rng, bounds));
            }
            CHECK_NOTHROW(collection_class(seqs));  // disagreement throws
        }
    }
}

TEST_CASE("lexicographic families") {
    SUBCASE("interleaved wheel family") {
        // columns k = 0..2 of b/a over A1=(0,16,32), A2=(2,44), B1=(0,0,44),
        // B2=(0,14,36): 0/2 <= 0/16 <= 14/44 <= 44/32 <= 36/0
        const BivFamily f({{{0, 2}, {14, 44}, {36, 0}}, {{0, 16}, {44, 32}, {0, 0}}}, 0);
        CHECK(is_lexicographic(f).holds);
    }

    SUBCASE("single-row descent fails at the wrap") {
        const BivFamily f({{{2, 1}, {1, 1}}}, 0);
        const Verdict v = is_lexicographic(f);
        REQUIRE_FALSE(v.holds);
        CHECK(v.witness->k == 0);
        CHECK(witness_reproduces(*v.witness, f));
    }

    SUBCASE("all-vacuous family holds") {
        const BivFamily f({{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}}, 0);
        CHECK(is_lexicographic(f).holds);
    }

    SUBCASE("rows must share one window") {
        CHECK_THROWS_AS(BivFamily({{{1, 1}}, {{1, 1}, {1, 2}}}, 0), std::invalid_argument);
    }
}

TEST_CASE("sum-of-convolutions premises") {
    SUBCASE("wheel quadruple") {
        const std::vector<Seq> as{Seq{0, 16, 32}, Seq{2, 44}};
        const std::vector<Seq> bs{Seq{0, 0, 44}, Seq{0, 14, 36}};
        CHECK(sumclvls_premises(as, bs).holds);
    }

    SUBCASE("complete-graph quadruple") {
        const std::vector<Seq> as{Seq{0, 8}, Seq{2, 8}};
        const std::vector<Seq> bs{Seq{0, 0, 8}, Seq{0, 6}};
        CHECK(sumclvls_premises(as, bs).holds);
    }

    SUBCASE("single pair with interacting supports reduces to ratio-dominance") {
        Rng rng(17);
        const GenBounds bounds{5, 20};
        for (int i = 0; i < 5000; ++i) {
            auto [a, b] = candidate_pair(rng, bounds);
            if (a.is_zero() || b.is_zero()) continue;
            if (std::max(a.lo(), b.lo()) > std::min(a.hi(), b.hi()) + 1) continue;
            const std::vector<Seq> as{a}, bs{b};
            CHECK(sumclvls_premises(as, bs).holds == ratio_dominates(a, b).holds);
        }
    }

    SUBCASE("non-interacting supports can pass the ratio chains vacuously") {
        // the cross-check must not fire here even though A !<~ B
        const std::vector<Seq> as{Seq{0, 0, 1}}, bs{Seq{1}};
        CHECK(sumclvls_premises(as, bs).holds);
        CHECK_FALSE(ratio_dominates(as[0], bs[0]).holds);
    }

    SUBCASE("length mismatch is rejected") {
        const std::vector<Seq> as{Seq{1}}, bs{};
        CHECK_THROWS_AS(sumclvls_premises(as, bs), std::invalid_argument);
    }

    SUBCASE("failing premises carry a reproducible witness") {
        const std::vector<Seq> as{Seq{1, 10}}, bs{Seq{10, 1}};
        const Verdict v = sumclvls_premises(as, bs);
        REQUIRE_FALSE(v.holds);
        const BivFamily f = v.witness->inequality.rfind("b/a:", 0) == 0
                                ? ba_family(as, bs)
                                : ab_offset_family(as, bs);
        CHECK(witness_reproduces(*v.witness, f));
    }
}

TEST_CASE("pairwise synchronicity is equivalent to domination by the max-ratio envelope") {
    Rng rng(18);
    const GenBounds bounds{5, 20};
    int in_tlc = 0, out_tlc = 0;
    for (int i = 0; i < 10000; ++i) {
        std::vector<Seq> seqs;
        const int n = 1 + int(rng() % 3);
        const bool biased = rng() % 2 == 0;
        for (int j = 0; j < n; ++j) {
            seqs.push_back(biased ? candidate_mixture_chain(rng, 1, bounds)[0]
                                  : random_log_concave(rng, bounds));
        }
        bool has_nonzero = false;
        bool clean = true;
        for (const Seq& s : seqs) {
            has_nonzero = has_nonzero || !s.is_zero();
            clean = clean && !validate(s).internal_zeros;
        }
        if (!has_nonzero || !clean) continue;

        const Seq envelope = envelope_dominator(seqs);
        bool all_dominated = true;
        for (const Seq& s : seqs) all_dominated = all_dominated && ratio_dominates(s, envelope).holds;

        const bool tlc = collection_class(seqs).in_tlc.holds;
        CHECK(tlc == all_dominated);
        (tlc ? in_tlc : out_tlc) += 1;
    }
    CHECK(in_tlc > 500);   // both sides of the equivalence were exercised
    CHECK(out_tlc > 500);
}

TEST_CASE("ultra log-concavity of infinite order via ratio-dominance by (k a_k)") {
    Rng rng(19);
    const GenBounds bounds{6, 30};
    int agree_holds = 0;
    for (int i = 0; i < 5000; ++i) {
        const Seq a = random_log_concave(rng, bounds);
        // (k a_k) and (k! a_k) over the padded window
        std::vector<Int> ka, kfact_a;
        Int fact = 1;
        for (Index k = 0; k <= a.hi(); ++k) {
            if (k > 0) fact *= k;
            ka.push_back(Int(k) * a.at(k));
            kfact_a.push_back(fact * a.at(k));
        }
        const bool dominated = ratio_dominates(a, Seq(ka)).holds;
        const bool ultra = is_log_concave(Seq(kfact_a)).holds;
        CHECK(dominated == ultra);
        if (dominated) ++agree_holds;
    }
    CHECK(agree_holds > 100);
}
