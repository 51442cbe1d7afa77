#include "doctest.h"

#include "quandlekit/catalog.hpp"
#include "quandlekit/nonassoc.hpp"

using namespace quandlekit;

namespace {

const CoefficientRing kZ = CoefficientRing::integers();
const CoefficientRing kQ = CoefficientRing::rationals();

}  // namespace

TEST_CASE("trivial quandle rings are associative, exactly") {
    for (const auto& name : {"T2", "T4"}) {
        const DerivedAlgebra ring(catalog::quandle(name), kZ, AlgebraKind::ring);
        const auto report = check_identity(ring, Identity::associative);
        CHECK(report.exact);
        CHECK_FALSE(report.counterexample_found);
    }
    // and a dihedral ring is not
    const DerivedAlgebra r4(catalog::quandle("R4"), kZ, AlgebraKind::ring);
    const auto report = check_identity(r4, Identity::associative);
    CHECK(report.exact);
    CHECK(report.counterexample_found);
}

TEST_CASE("Z[R3] is a commutative ring, hence elastic; alternatives and Jordan fail") {
    const DerivedAlgebra r3(catalog::quandle("R3"), kZ, AlgebraKind::ring);

    // commutativity of the ring makes elasticity an identity: no witness
    // exists (the basis products satisfy a_i a_j = a_j a_i in R3)
    const auto elastic = check_identity(r3, Identity::elastic, 2, 1u << 20);
    CHECK_FALSE(elastic.counterexample_found);

    const auto left_alt = check_identity(r3, Identity::left_alternative, 2);
    CHECK(left_alt.counterexample_found);
    CHECK_FALSE(left_alt.witness_lhs.empty());

    const auto right_alt = check_identity(r3, Identity::right_alternative, 2);
    CHECK(right_alt.counterexample_found);

    const auto jordan = check_identity(r3, Identity::jordan, 2);
    CHECK(jordan.counterexample_found);
}

TEST_CASE("for non-trivial catalog quandles one of the section-8 identities fails") {
    for (const auto& name : {"R3", "R4", "R5", "R6", "Cs4", "Conj(S3)", "Alex(Z5,2)"}) {
        const DerivedAlgebra alg(catalog::quandle(name), kZ, AlgebraKind::ring);
        const bool left_alt = check_identity(alg, Identity::left_alternative, 2, 300000).counterexample_found;
        const bool elastic = check_identity(alg, Identity::elastic, 2, 300000).counterexample_found;
        const bool jordan = check_identity(alg, Identity::jordan, 2, 300000).counterexample_found;
        CAPTURE(name);
        CHECK((left_alt || elastic || jordan));
    }
}

TEST_CASE("Cs4 and R4 rings fail elasticity with explicit witnesses") {
    for (const auto& name : {"Cs4", "R4"}) {
        const DerivedAlgebra alg(catalog::quandle(name), kZ, AlgebraKind::ring);
        const auto report = check_identity(alg, Identity::elastic, 2);
        CAPTURE(name);
        CHECK(report.counterexample_found);
        CHECK_FALSE(report.witness_elements.empty());
    }
}

TEST_CASE("minus algebras of associative rings satisfy anticommutativity and Jacobi") {
    for (const auto& name : {"T2", "T3", "T4"}) {
        const DerivedAlgebra minus(catalog::quandle(name), kZ, AlgebraKind::minus);
        const auto anti = check_identity(minus, Identity::anticommutative);
        CHECK(anti.exact);
        CHECK_FALSE(anti.counterexample_found);
        const auto jacobi = check_identity(minus, Identity::lie_jacobi);
        CHECK(jacobi.exact);
        CHECK_FALSE(jacobi.counterexample_found);
    }
}

TEST_CASE("plus algebras need an invertible two") {
    CHECK_THROWS_AS(DerivedAlgebra(catalog::quandle("T2"), kZ, AlgebraKind::plus), Error);
    CHECK_THROWS_AS(DerivedAlgebra(catalog::quandle("T2"), CoefficientRing::integers_mod(2),
                                   AlgebraKind::plus),
                    Error);
    CHECK_NOTHROW(DerivedAlgebra(catalog::quandle("T2"), kQ, AlgebraKind::plus));
    CHECK_NOTHROW(DerivedAlgebra(catalog::quandle("T2"), CoefficientRing::integers_mod(5),
                                 AlgebraKind::plus));
}

TEST_CASE("derived product formulas in trivial quandle rings") {
    const auto t4 = catalog::quandle("T4");
    const DerivedAlgebra minus(t4, kQ, AlgebraKind::minus);
    const DerivedAlgebra plus(t4, kQ, AlgebraKind::plus);
    auto basis = [&](int i) { return RingElement::basis(t4, kQ, i); };

    // e_i o x_j = e_i and x_j o e_i = -e_i
    for (int i = 0; i + 1 < 4; ++i) {
        const RingElement e = basis(i) - basis(i + 1);
        for (int j = 0; j < 4; ++j) {
            CHECK(minus.mul(e, basis(j)) == e);
            CHECK(minus.mul(basis(j), e) == -e);
        }
    }
    // x_i . x_j = (x_i + x_j) / 2
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            CHECK(plus.mul(basis(i), basis(j)) ==
                  (basis(i) + basis(j)).scaled(Scalar::fraction(1, 2)));
        }
    }
}

TEST_CASE("power associativity witnesses") {
    SUBCASE("Z[R3] has a witness in a small box") {
        const auto w = power_associative_witness(catalog::quandle("R3"), kZ, 2, 4);
        REQUIRE(w.has_value());
        CHECK_FALSE(w->lhs == w->rhs);
        // re-evaluate both sides
        const auto xx = w->x * w->x;
        CHECK(w->lhs == xx * xx);
        CHECK(w->rhs == (xx * w->x) * w->x);
    }
    SUBCASE("Z[Cs4] has a witness") {
        CHECK(power_associative_witness(catalog::quandle("Cs4"), kZ, 2, 4).has_value());
    }
    SUBCASE("associative Z[T4] has none") {
        CHECK_FALSE(power_associative_witness(catalog::quandle("T4"), kZ, 2, 2).has_value());
    }
    SUBCASE("characteristic 2 and 3 are refused for this probe") {
        CHECK_THROWS_AS(power_associative_witness(catalog::quandle("R3"),
                                                  CoefficientRing::integers_mod(2), 2, 2),
                        Error);
        CHECK_THROWS_AS(power_associative_witness(catalog::quandle("R3"),
                                                  CoefficientRing::integers_mod(3), 2, 2),
                        Error);
        CHECK_NOTHROW(power_associative_witness(catalog::quandle("R3"),
                                                CoefficientRing::integers_mod(5), 1, 1));
    }
}

TEST_CASE("lie analysis of trivial quandle rings") {
    SUBCASE("n = 4 over the rationals") {
        const auto report = trivial_quandle_lie_analysis(4, kQ);
        CHECK(report.l2_rank == 3);
        CHECK(report.l2_basis_is_chain);
        CHECK(report.l2_equals_l3);
        CHECK(report.l2_squared_zero);
        REQUIRE(report.j_supported);
        CHECK(report.j2_equals_j);
    }
    SUBCASE("n = 2 over the rationals") {
        const auto report = trivial_quandle_lie_analysis(2, kQ);
        CHECK(report.l2_rank == 1);
        CHECK(report.l2_equals_l3);
        CHECK(report.l2_squared_zero);
    }
    SUBCASE("n = 1 collapses") {
        const auto report = trivial_quandle_lie_analysis(1, kQ);
        CHECK(report.l2_rank == 0);
        CHECK(report.l2_squared_zero);
    }
    SUBCASE("over Z the Jordan part is unsupported but L parts hold") {
        const auto report = trivial_quandle_lie_analysis(4, kZ);
        CHECK(report.l2_rank == 3);
        CHECK(report.l2_basis_is_chain);
        CHECK_FALSE(report.j_supported);
    }
    SUBCASE("over an odd prime field") {
        const auto report = trivial_quandle_lie_analysis(3, CoefficientRing::integers_mod(5));
        CHECK(report.l2_rank == 2);
        CHECK(report.j_supported);
        CHECK(report.j2_equals_j);
    }
}

TEST_CASE("plus algebras of associative rings behave like Jordan algebras on the box") {
    // classic: A associative makes A^(+) a Jordan algebra; box evidence only,
    // since the identity is not multilinear
    const DerivedAlgebra plus(catalog::quandle("T3"), kQ, AlgebraKind::plus);
    const auto report = check_identity(plus, Identity::jordan, 1, 100000);
    CHECK_FALSE(report.counterexample_found);
    CHECK_FALSE(report.exact);
}

TEST_CASE("identity name parsing") {
    CHECK(parse_identity("elastic") == Identity::elastic);
    CHECK(identity_name(Identity::lie_jacobi) == "lie-jacobi");
    CHECK_THROWS_AS(parse_identity("bogus"), UnknownNameError);
    CHECK(identity_is_multilinear(Identity::associative));
    CHECK_FALSE(identity_is_multilinear(Identity::jordan));
}
