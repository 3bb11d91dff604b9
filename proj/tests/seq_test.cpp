#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lcgd/generators.hpp"
#include "lcgd/relations.hpp"
#include "lcgd/seq.hpp"

#include <stdexcept>
#include <vector>

using namespace lcgd;

TEST_CASE("canonical form trims zero margins and keeps the offset") {
    CHECK(Seq{0, 8} == Seq({8}, 1));
    CHECK(Seq{0, 0} == Seq());
    CHECK(Seq{}.is_zero());
    CHECK(Seq({2, 44}).lo() == 0);
    CHECK(Seq({0, 2, 36}).lo() == 1);
    CHECK(Seq({0, 2, 36}).hi() == 2);
    CHECK(Seq({1, 0, 1}).support_size() == 3);
    CHECK_THROWS_AS(Seq(std::vector<Int>{Int(-1)}), std::invalid_argument);
}

TEST_CASE("indexing reads zero outside the window") {
    const Seq s{0, 14, 36};
    CHECK(s.at(-3) == 0);
    CHECK(s.at(0) == 0);
    CHECK(s.at(1) == 14);
    CHECK(s.at(2) == 36);
    CHECK(s.at(3) == 0);
    CHECK(s.total() == 50);
}

TEST_CASE("offset sequence shifts the window by one") {
    CHECK(Seq({2, 44}).shifted() == Seq({2, 44}, 1));
    CHECK(Seq({2, 44}).shifted() == Seq{0, 2, 44});
    CHECK(Seq().shifted().is_zero());
    CHECK(Seq({0, 8}).shifted() == Seq{0, 0, 8});  // DD0 of the ladder example
}

TEST_CASE("offset sequence agrees with convolution by the unit at 1") {
    const Seq a{3, 1, 4, 1};
    CHECK(a.shifted() == convolve(a, Seq::unit(1)));
}

TEST_CASE("pointwise sum over the union window") {
    CHECK(Seq{2, 44} + Seq{0, 14, 36} == Seq{2, 58, 36});
    CHECK(Seq() + Seq{1} == Seq{1});
    CHECK(Seq({1}, -2) + Seq({1}, 2) == Seq({1, 0, 0, 0, 1}, -2));
}

TEST_CASE("convolution matches polynomial products") {
    CHECK(convolve(Seq{1}, Seq{5, 7, 11}) == Seq{5, 7, 11});
    CHECK(convolve(Seq{1, 1}, Seq{1, 1}) == Seq{1, 2, 1});
    CHECK(convolve(Seq{2, 8}, Seq{0, 4}) == Seq{0, 8, 32});
    CHECK(convolve(Seq(), Seq{1, 2}).is_zero());
    CHECK(convolve(Seq({1}, 2), Seq({1}, 3)) == Seq({1}, 5));
}

TEST_CASE("convolution is commutative and associative with unit (1)") {
    Rng rng(20240811);
    const GenBounds bounds{5, 30};
    for (int i = 0; i < 500; ++i) {
        const Seq a = random_seq(rng, bounds);
        const Seq b = random_seq(rng, bounds);
        const Seq c = random_seq(rng, bounds);
        CHECK(convolve(a, b) == convolve(b, a));
        CHECK(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
        CHECK(convolve(a, Seq::unit()) == a);
    }
}

TEST_CASE("combine forms linear combinations") {
    const std::vector<Seq> ds{Seq{2, 44}, Seq{0, 14, 36}};
    const std::vector<Int> ones{1, 1};
    CHECK(combine(ones, ds) == Seq{2, 58, 36});
    const std::vector<Int> zero{0};
    const std::vector<Seq> one_seq{Seq{3, 9}};
    CHECK(combine(zero, one_seq).is_zero());
    const std::vector<Int> w46{4, 6};
    CHECK(combine(w46, ds) == Seq{8, 260, 216});
    const std::vector<Int> short_w{1};
    CHECK_THROWS_AS(combine(short_w, ds), std::invalid_argument);
}

TEST_CASE("ratio comparisons hold by default in the vacuous cases") {
    CHECK(ratio_leq({44, 32}, {36, 0}));
    CHECK(ratio_leq({0, 0}, {7, 3}));
    CHECK(ratio_leq({7, 3}, {0, 0}));
    CHECK_FALSE(ratio_leq({5, 0}, {7, 3}));  // +inf exceeds any finite value
    CHECK(ratio_leq({5, 0}, {7, 0}));        // both denominators zero
    CHECK(ratio_leq({1, 3}, {1, 2}));
    CHECK_FALSE(ratio_leq({1, 2}, {1, 3}));
    CHECK(ratio_leq({2, 4}, {1, 2}));  // equality via cross-multiplication
}

TEST_CASE("validate reports support and internal zeros") {
    const SeqReport a = validate(Seq{2, 44});
    CHECK(a.nonnegative);
    CHECK_FALSE(a.internal_zeros);
    CHECK(a.first_nonzero == 0);
    CHECK(a.last_nonzero == 1);

    CHECK(validate(Seq{1, 0, 1}).internal_zeros);

    const SeqReport c = validate(Seq{0, 2, 12});
    CHECK_FALSE(c.internal_zeros);
    CHECK(c.first_nonzero == 1);

    const SeqReport zero = validate(Seq());
    CHECK_FALSE(zero.internal_zeros);
    CHECK_FALSE(zero.first_nonzero.has_value());
}

TEST_CASE("rendering pads from zero") {
    CHECK(Seq{2, 44}.str() == "(2, 44)");
    CHECK(Seq({14, 36}, 1).str() == "(0, 14, 36)");
    CHECK(Seq().str() == "(0)");
    CHECK(Seq({1, 2}, -1).str() == "(1, 2) [offset -1]");
}
