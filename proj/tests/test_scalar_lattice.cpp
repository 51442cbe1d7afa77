#include "doctest.h"

#include "quandlekit/lattice.hpp"
#include "quandlekit/rng.hpp"
#include "quandlekit/scalar.hpp"

#include <algorithm>

using namespace quandlekit;

namespace {

std::vector<Integer> iv(std::initializer_list<long long> xs) {
    std::vector<Integer> out;
    for (long long x : xs) out.push_back(Integer(x));
    return out;
}

LatticeBasis z_basis(std::size_t dim, std::initializer_list<std::initializer_list<long long>> rows) {
    LatticeBasis b(CoefficientRing::integers(), dim);
    for (const auto& r : rows) b = hnf_insert(b, iv(r));
    return b;
}

}  // namespace

TEST_CASE("integer arithmetic is exact and overflow is a hard failure") {
    Integer big = 1;
    for (int i = 0; i < 126; ++i) big *= 2;
    CHECK_THROWS_AS(big * Integer(4), OverflowError);
    CHECK_THROWS_AS(big + big, OverflowError);
    CHECK((Integer(-7)).floor_mod(Integer(5)) == Integer(3));
    CHECK((Integer(-7)).floor_div(Integer(5)) == Integer(-2));
    CHECK(Integer::parse("-12345678901234567890123456789").str() == "-12345678901234567890123456789");
    CHECK(gcd(Integer(12), Integer(-18)) == Integer(6));
}

TEST_CASE("coefficient ring flags") {
    CHECK(CoefficientRing::integers().is_integral_domain());
    CHECK(CoefficientRing::rationals().is_integral_domain());
    CHECK(CoefficientRing::integers_mod(7).is_integral_domain());
    CHECK_FALSE(CoefficientRing::integers_mod(6).is_integral_domain());
    CHECK(CoefficientRing::parse("zmod:12").modulus() == 12);
    CHECK_THROWS_AS(CoefficientRing::parse("bogus"), ParseError);
    CHECK_THROWS_AS(CoefficientRing::integers_mod(1), Error);
}

TEST_CASE("residues are canonical and fractions are reduced") {
    const auto z5 = CoefficientRing::integers_mod(5);
    CHECK(Scalar::of(z5, Integer(-3)).numerator() == Integer(2));
    CHECK(Scalar::of(z5, Integer(7)) == Scalar::of(z5, Integer(2)));
    CHECK(Scalar::of(z5, 3).inverse() == Scalar::of(z5, 2));

    const Scalar half = Scalar::fraction(2, 4);
    CHECK(half.numerator() == Integer(1));
    CHECK(half.denominator() == Integer(2));
    CHECK(Scalar::fraction(1, -2).denominator() == Integer(2));
    CHECK(Scalar::fraction(1, -2).numerator() == Integer(-1));
    CHECK((Scalar::fraction(1, 3) + Scalar::fraction(1, 6)) == Scalar::fraction(1, 2));
    CHECK(Scalar::fraction(3, 4).str() == "3/4");
}

TEST_CASE("cross-ring scalar arithmetic is an error, not a coercion") {
    const Scalar a = Scalar::of(CoefficientRing::integers(), 1);
    const Scalar b = Scalar::of(CoefficientRing::integers_mod(5), 1);
    CHECK_THROWS_AS(a + b, RingMismatchError);
}

TEST_CASE("mod-m scalar arithmetic agrees with integer arithmetic plus reduction") {
    // random suite over several moduli
    Rng rng(42);
    for (long long m : {2LL, 5LL, 6LL, 97LL}) {
        const auto zm = CoefficientRing::integers_mod(m);
        for (int t = 0; t < 1000; ++t) {
            const long long x = rng.next_in(-1000, 1000);
            const long long y = rng.next_in(-1000, 1000);
            const Scalar sx = Scalar::of(zm, Integer(x));
            const Scalar sy = Scalar::of(zm, Integer(y));
            CHECK((sx + sy).numerator() == Integer(x + y).floor_mod(Integer(m)));
            CHECK((sx * sy).numerator() == Integer(x * y).floor_mod(Integer(m)));
            CHECK((sx - sy).numerator() == Integer(x - y).floor_mod(Integer(m)));
        }
    }
}

TEST_CASE("hnf_insert examples") {
    SUBCASE("inserting a member leaves the basis unchanged") {
        const auto b = z_basis(3, {{1, -1, 0}, {0, 1, -1}});
        const auto b2 = hnf_insert(b, iv({1, 0, -1}));  // row1 + row2
        CHECK(b == b2);
    }
    SUBCASE("zero vector spans nothing") {
        LatticeBasis empty(CoefficientRing::integers(), 3);
        const auto b = hnf_insert(empty, iv({0, 0, 0}));
        CHECK(b.rank() == 0);
        CHECK(b == empty);
    }
    SUBCASE("independent vectors stack in HNF") {
        const auto b = z_basis(2, {{2, 0}, {0, 3}});
        REQUIRE(b.rank() == 2);
        CHECK(b.rows()[0] == to_scalar_vector(CoefficientRing::integers(), iv({2, 0})));
        CHECK(b.rows()[1] == to_scalar_vector(CoefficientRing::integers(), iv({0, 3})));
    }
    SUBCASE("dimension mismatch is an error") {
        LatticeBasis b(CoefficientRing::integers(), 2);
        CHECK_THROWS_AS(hnf_insert(b, iv({1, 2, 3})), DimensionMismatchError);
    }
}

TEST_CASE("lattice_contains examples") {
    const auto b = z_basis(3, {{1, -1, 0}, {0, 1, -1}});
    CHECK(lattice_contains(b, iv({2, -1, -1})));  // 2*row1 + row2
    CHECK_FALSE(lattice_contains(z_basis(2, {{2, 0}}), iv({1, 0})));  // parity obstruction
    CHECK(lattice_contains(LatticeBasis(CoefficientRing::integers(), 2), iv({0, 0})));
}

TEST_CASE("HNF is independent of insertion order") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::vector<Integer>> vecs;
        const int count = static_cast<int>(rng.next_in(1, 5));
        for (int i = 0; i < count; ++i) {
            vecs.push_back(iv({rng.next_in(-9, 9), rng.next_in(-9, 9), rng.next_in(-9, 9),
                               rng.next_in(-9, 9)}));
        }
        LatticeBasis forward(CoefficientRing::integers(), 4);
        for (const auto& v : vecs) forward = hnf_insert(forward, v);
        LatticeBasis backward(CoefficientRing::integers(), 4);
        for (auto it = vecs.rbegin(); it != vecs.rend(); ++it) backward = hnf_insert(backward, *it);
        CHECK(forward == backward);
    }
}

TEST_CASE("membership is closed under integer scaling") {
    Rng rng(11);
    const auto b = z_basis(3, {{2, 1, 0}, {0, 3, 3}});
    for (int trial = 0; trial < 100; ++trial) {
        const long long c1 = rng.next_in(-4, 4);
        const long long c2 = rng.next_in(-4, 4);
        std::vector<Integer> v = iv({2 * c1, c1 + 3 * c2, 3 * c2});
        REQUIRE(lattice_contains(b, v));
        const long long k = rng.next_in(-5, 5);
        for (auto& x : v) x *= Integer(k);
        CHECK(lattice_contains(b, v));
    }
}

TEST_CASE("row reduction over fields uses unit pivots") {
    const auto q = CoefficientRing::rationals();
    LatticeBasis b(q, 3);
    b = b.inserted({Scalar::of(q, 2), Scalar::of(q, 0), Scalar::of(q, 2)});
    b = b.inserted({Scalar::of(q, 0), Scalar::of(q, 3), Scalar::of(q, 0)});
    REQUIRE(b.rank() == 2);
    CHECK(b.rows()[0][0] == Scalar::one(q));  // scaled to 1 over a field
    CHECK(b.contains({Scalar::of(q, 1), Scalar::of(q, 1), Scalar::of(q, 1)}));
    CHECK_FALSE(b.contains({Scalar::of(q, 0), Scalar::of(q, 0), Scalar::of(q, 1)}));
}

TEST_CASE("membership agrees with a brute-force combination oracle") {
    // oracle: v is in the lattice of {g1, g2} iff some integer combination
    // c1 g1 + c2 g2 with small coefficients hits v (generators chosen so that
    // members need only small coefficients)
    Rng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const std::vector<Integer> g1 = iv({rng.next_in(-3, 3), rng.next_in(-3, 3), rng.next_in(-3, 3)});
        const std::vector<Integer> g2 = iv({rng.next_in(-3, 3), rng.next_in(-3, 3), rng.next_in(-3, 3)});
        LatticeBasis b(CoefficientRing::integers(), 3);
        b = hnf_insert(b, g1);
        b = hnf_insert(b, g2);
        for (long long c1 = -3; c1 <= 3; ++c1) {
            for (long long c2 = -3; c2 <= 3; ++c2) {
                std::vector<Integer> v(3, Integer(0));
                for (int i = 0; i < 3; ++i) v[static_cast<std::size_t>(i)] =
                    Integer(c1) * g1[static_cast<std::size_t>(i)] + Integer(c2) * g2[static_cast<std::size_t>(i)];
                CHECK(lattice_contains(b, v));
            }
        }
        // and a vector off the lattice when the rank is not full
        if (b.rank() < 3) {
            // find a coordinate direction outside
            bool found_outside = false;
            for (int i = 0; i < 3 && !found_outside; ++i) {
                std::vector<Integer> probe(3, Integer(0));
                probe[static_cast<std::size_t>(i)] = Integer(1);
                // brute-force oracle over a generous coefficient window
                bool representable = false;
                for (long long c1 = -12; c1 <= 12 && !representable; ++c1) {
                    for (long long c2 = -12; c2 <= 12; ++c2) {
                        bool equal = true;
                        for (int k = 0; k < 3; ++k) {
                            if (Integer(c1) * g1[static_cast<std::size_t>(k)] +
                                    Integer(c2) * g2[static_cast<std::size_t>(k)] !=
                                probe[static_cast<std::size_t>(k)]) {
                                equal = false;
                                break;
                            }
                        }
                        if (equal) {
                            representable = true;
                            break;
                        }
                    }
                }
                if (!representable) {
                    CHECK_FALSE(lattice_contains(b, probe));
                    found_outside = true;
                }
            }
        }
    }
}

TEST_CASE("modular inverses multiply back to one for every unit") {
    for (long long m : {2LL, 5LL, 6LL, 12LL, 97LL}) {
        const auto zm = CoefficientRing::integers_mod(m);
        for (long long x = 0; x < m; ++x) {
            const Scalar s = Scalar::of(zm, Integer(x));
            if (s.is_unit()) {
                CHECK((s * s.inverse()).is_one());
            } else {
                CHECK_THROWS_AS(s.inverse(), Error);
            }
        }
    }
}

TEST_CASE("parse edge cases") {
    CHECK_THROWS_AS(CoefficientRing::parse("zmod:"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(CoefficientRing::integers(), "1/2"), ParseError);
    CHECK(Scalar::parse(CoefficientRing::rationals(), "-6/4") == Scalar::fraction(-3, 2));
    CHECK_THROWS_AS(Integer::parse(""), ParseError);
    CHECK_THROWS_AS(Integer::parse("-"), ParseError);
    CHECK_THROWS_AS(Integer::parse("12x"), ParseError);
}

TEST_CASE("composite moduli are refused where a domain is required") {
    CHECK_THROWS_AS(LatticeBasis(CoefficientRing::integers_mod(6), 3), NotIntegralDomainError);
    // prime modulus is fine
    LatticeBasis b(CoefficientRing::integers_mod(5), 2);
    b = b.inserted({Scalar::of(CoefficientRing::integers_mod(5), 2),
                    Scalar::of(CoefficientRing::integers_mod(5), 1)});
    CHECK(b.rank() == 1);
}
