#include "doctest.h"

#include "quandlekit/free_quandle.hpp"
#include "quandlekit/int_quandle.hpp"
#include "quandlekit/rng.hpp"

using namespace quandlekit;

namespace {

FreeQuandleElement fq(int rank, const std::string& text) {
    return FreeQuandleElement::parse(rank, text);
}

}  // namespace

TEST_CASE("free quandle multiplication in normal form") {
    // a * b with empty conjugators: a^{b}
    const auto a = FreeQuandleElement::generator(2, 0);
    const auto b = FreeQuandleElement::generator(2, 1);
    const auto ab = fq_multiply(a, b);
    CHECK(ab.gen() == 0);
    REQUIRE(ab.word().size() == 1);
    CHECK(ab.word()[0] == Letter{1, false});
    CHECK(ab.str() == "a0^[+1]");

    // x * x = x for several shapes of x
    for (const auto& x : {a, b, ab, fq(2, "a1^[+0 -1 +0]")}) {
        CHECK(fq_multiply(x, x) == x);
    }

    // a^{b} * a^{1}: word b * a, stays reduced, first letter b != a
    const auto aba = fq_multiply(ab, a);
    CHECK(aba.gen() == 0);
    REQUIRE(aba.word().size() == 2);
    CHECK(aba.word()[0] == Letter{1, false});
    CHECK(aba.word()[1] == Letter{0, false});
}

TEST_CASE("normal form strips leading powers of the base generator") {
    // a^{a w} = a^{w}
    const auto lhs = fq(2, "a0^[+0 +1]");
    const auto rhs = fq(2, "a0^[+1]");
    CHECK(fq_equal(lhs, rhs));
    // even repeated and inverse leading letters
    CHECK(fq_equal(fq(2, "a0^[-0 -0 +1]"), rhs));
    // but a letter after a non-a letter stays
    CHECK_FALSE(fq_equal(fq(2, "a0^[+1 +0]"), rhs));
}

TEST_CASE("fq_equal distinguishes generators and conjugates") {
    CHECK_FALSE(fq_equal(fq(2, "a0^[+1]"), fq(2, "a1^[+0]")));
    CHECK_FALSE(fq_equal(fq(2, "a0^[+1 +1]"), fq(2, "a0^[+1]")));
    CHECK_THROWS_AS(fq_multiply(fq(2, "a0^[]"), fq(3, "a0^[]")), Error);
}

TEST_CASE("free reduction cancels inverse pairs") {
    const Word w = reduce_concat({Letter{0, false}, Letter{1, false}},
                                 {Letter{1, true}, Letter{0, false}});
    REQUIRE(w.size() == 2);
    CHECK(w[0] == Letter{0, false});
    CHECK(w[1] == Letter{0, false});
    CHECK(reduce_concat({Letter{0, false}}, {Letter{0, true}}).empty());
}

TEST_CASE("free quandle literal syntax round trips") {
    for (const std::string text : {"a2^[+0 -1 +0]", "a0^[]", "a1^[-2]"}) {
        const auto e = fq(3, text);
        CHECK(fq(3, e.str()) == e);
    }
    CHECK_THROWS_AS(fq(2, "a5^[]"), Error);       // generator out of range
    CHECK_THROWS_AS(fq(2, "b0^[]"), ParseError);  // bad prefix
    CHECK_THROWS_AS(fq(2, "a0^[x]"), ParseError);
}

TEST_CASE("Q1 and Q3 hold for free quandle multiplication on random triples") {
    Rng rng(2024);
    for (int t = 0; t < 1000; ++t) {
        const auto x = random_fq_element(rng, 2, 5);
        const auto y = random_fq_element(rng, 2, 5);
        const auto z = random_fq_element(rng, 2, 5);
        CHECK(fq_multiply(x, x) == x);
        CHECK(fq_multiply(fq_multiply(x, y), z) ==
              fq_multiply(fq_multiply(x, z), fq_multiply(y, z)));
        // output stays in normal form
        const auto p = fq_multiply(x, y);
        if (!p.word().empty()) CHECK(p.word()[0].gen != p.gen());
    }
}

TEST_CASE("right multiplication inverts via the inverse word operation") {
    Rng rng(99);
    for (int t = 0; t < 500; ++t) {
        const auto x = random_fq_element(rng, 3, 4);
        const auto y = random_fq_element(rng, 3, 4);
        const auto z = fq_right_divide(x, y);
        CHECK(fq_multiply(z, y) == x);
    }
}

TEST_CASE("free quandles sample as semi-latin") {
    const auto r1 = fq_semi_latin_sample(1, 100, 4, 1);
    CHECK(r1.violations == 0);

    const auto r2 = fq_semi_latin_sample(2, 10000, 6, 1);
    CHECK(r2.violations == 0);
    CHECK(r2.trials > 0);

    // the fixed triple z = a^1, x = b^1, y = b^{a}
    const auto z = fq(2, "a0^[]");
    const auto x = fq(2, "a1^[]");
    const auto y = fq(2, "a1^[+0]");
    REQUIRE_FALSE(fq_equal(x, y));
    CHECK_FALSE(fq_equal(fq_multiply(z, x), fq_multiply(z, y)));
}

TEST_CASE("integer quandle rules evaluate exactly") {
    const auto core = IntQuandle::core();
    CHECK(core.mul(1, 2) == Integer(3));
    CHECK(core.mul(5, 5) == Integer(5));
    CHECK_THROWS_AS(IntQuandle::alex(0), Error);

    // alex-z(-1) coincides with core-z
    const auto alex = IntQuandle::alex(-1);
    Rng rng(5);
    for (int t = 0; t < 200; ++t) {
        const Integer a(rng.next_in(-100, 100));
        const Integer b(rng.next_in(-100, 100));
        CHECK(alex.mul(a, b) == core.mul(a, b));
    }
}

TEST_CASE("core-z is involutary on samples") {
    const auto core = IntQuandle::core();
    Rng rng(6);
    for (int t = 0; t < 1000; ++t) {
        const Integer a(rng.next_in(-1000, 1000));
        const Integer b(rng.next_in(-1000, 1000));
        CHECK(core.mul(core.mul(a, b), b) == a);
    }
}

TEST_CASE("order monotonicity sampling matches the stated sides") {
    const auto core = IntQuandle::core();
    const auto left = order_monotonicity_sample(core, OrderSide::left, 10000, 3);
    CHECK(left.violations == 0);

    const auto right = order_monotonicity_sample(core, OrderSide::right, 1000, 3);
    CHECK(right.violations == right.trials);  // reversal on every strict pair
    REQUIRE_FALSE(right.witnesses.empty());

    // the concrete witness triple (0, 1, 0): 0*0 = 0 > -1 = 1*0
    CHECK(core.mul(Integer(0), Integer(0)) == Integer(0));
    CHECK(core.mul(Integer(1), Integer(0)) == Integer(-1));

    const auto alex_left = order_monotonicity_sample(IntQuandle::alex(-1), OrderSide::left, 10000, 3);
    CHECK(alex_left.violations == 0);
}
