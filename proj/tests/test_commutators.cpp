#include "doctest.h"

#include "quandlekit/catalog.hpp"
#include "quandlekit/commutators.hpp"
#include "quandlekit/rng.hpp"

using namespace quandlekit;

namespace {

const CoefficientRing kZ = CoefficientRing::integers();

RingElement from(const QuandlePtr& q, std::initializer_list<long long> coeffs) {
    std::vector<Integer> v;
    for (long long c : coeffs) v.push_back(Integer(c));
    return RingElement::from_dense(q, kZ, v);
}

}  // namespace

TEST_CASE("commutator evaluations from the width proofs") {
    const auto r4 = catalog::quandle("R4");
    // [a3, a2] = a1 - a0 = e1
    CHECK(commutator(RingElement::basis(r4, kZ, 3), RingElement::basis(r4, kZ, 2)) ==
          from(r4, {-1, 1, 0, 0}));
    // [a2, a0] = e2 and -[a2, a1] = e3
    CHECK(commutator(RingElement::basis(r4, kZ, 2), RingElement::basis(r4, kZ, 0)) ==
          from(r4, {-1, 0, 1, 0}));
    CHECK(-commutator(RingElement::basis(r4, kZ, 2), RingElement::basis(r4, kZ, 1)) ==
          from(r4, {-1, 0, 0, 1}));

    const auto cs4 = catalog::quandle("Cs4");
    // [y, x] = y - x
    CHECK(commutator(RingElement::basis(cs4, kZ, 1), RingElement::basis(cs4, kZ, 0)) ==
          from(cs4, {-1, 1, 0}));
    // [z, y] = z - x
    CHECK(commutator(RingElement::basis(cs4, kZ, 2), RingElement::basis(cs4, kZ, 1)) ==
          from(cs4, {-1, 0, 1}));

    // [u, u] = 0
    const auto u = from(r4, {3, -2, 1, 5});
    CHECK(commutator(u, u).is_zero());
}

TEST_CASE("commutator subalgebra closures") {
    SUBCASE("Z[R3] is commutative, closure is zero") {
        CHECK(commutator_subalgebra(catalog::quandle("R3"), kZ).is_zero());
    }
    SUBCASE("Z[R4] closure equals Delta, rank 3") {
        const auto closure = commutator_subalgebra(catalog::quandle("R4"), kZ);
        CHECK(closure.rank() == 3);
        CHECK(closure == delta_lattice(catalog::quandle("R4"), kZ));
    }
    SUBCASE("Z[Cs4] closure equals Delta, rank 2") {
        const auto closure = commutator_subalgebra(catalog::quandle("Cs4"), kZ);
        CHECK(closure.rank() == 2);
        CHECK(closure == delta_lattice(catalog::quandle("Cs4"), kZ));
    }
    SUBCASE("Alex(Z5, 2) closure equals Delta, rank 4") {
        const auto q = catalog::quandle("Alex(Z5,2)");
        const auto closure = commutator_subalgebra(q, kZ);
        CHECK(closure.rank() == 4);
        CHECK(closure == delta_lattice(q, kZ));
    }
    SUBCASE("over the rationals as well") {
        const auto q = CoefficientRing::rationals();
        CHECK(commutator_subalgebra(catalog::quandle("R3"), q).is_zero());
        CHECK(commutator_subalgebra(catalog::quandle("R4"), q) ==
              delta_lattice(catalog::quandle("R4"), q));
    }
}

TEST_CASE("closure sits inside Delta across the catalog") {
    for (const auto& [name, q] : catalog::finite_quandles(6)) {
        CAPTURE(name);
        CHECK(contained_in_delta(q, kZ));
    }
}

TEST_CASE("commutativity is equivalent to zero closure across the catalog") {
    for (const auto& [name, q] : catalog::finite_quandles(6)) {
        CAPTURE(name);
        const bool comm = predicates(*q).commutative;
        CHECK(commutator_subalgebra(q, kZ).is_zero() == comm);
    }
}

TEST_CASE("strongly non-commutative quandles have closure equal to Delta") {
    for (const auto& [name, q] : catalog::finite_quandles(6)) {
        if (!predicates(*q).strongly_non_commutative) continue;
        CAPTURE(name);
        CHECK(commutator_subalgebra(q, kZ) == delta_lattice(q, kZ));
    }
}

TEST_CASE("delta equality certificates") {
    SUBCASE("Alex(Z5, 2) yields a witness for every ordered pair") {
        const auto cert = strongly_noncomm_delta_equality(catalog::quandle("Alex(Z5,2)"));
        REQUIRE(cert.certified);
        CHECK(cert.witnesses.size() == 20);  // 5 * 4 ordered pairs
        // the (a0, a1) witness solves 2a - b = 0, 2b - a = 1 mod 5
        const auto q = catalog::quandle("Alex(Z5,2)");
        bool found = false;
        for (const auto& w : cert.witnesses) {
            if (w.x == 0 && w.y == 1) {
                CHECK(q->mul(w.a, w.b) == 0);
                CHECK(q->mul(w.b, w.a) == 1);
                found = true;
            }
        }
        CHECK(found);
    }
    SUBCASE("R4 is strongly non-commutative and certifies directly") {
        const auto cert = strongly_noncomm_delta_equality(catalog::quandle("R4"));
        CHECK(cert.certified);
        CHECK(cert.hypothesis == "strongly non-commutative");
    }
    SUBCASE("commutative quandles report hypothesis failure") {
        const auto r3 = strongly_noncomm_delta_equality(catalog::quandle("R3"));
        CHECK_FALSE(r3.certified);
        CHECK(r3.failure.find("commutative") != std::string::npos);
        CHECK_FALSE(strongly_noncomm_delta_equality(catalog::quandle("T1")).certified);
    }
    SUBCASE("trivial quandles with n >= 2 are strongly non-commutative: a=x, b=y works") {
        // ab = a and ba = b in a trivial quandle, so every ordered pair is hit
        const auto cert = strongly_noncomm_delta_equality(catalog::quandle("T2"));
        CHECK(cert.certified);
        CHECK(cert.hypothesis == "strongly non-commutative");
    }
}

TEST_CASE("single-commutator witnesses reproduce the stated evaluations") {
    SUBCASE("Z[T3]: u = -3 x0 + 2 x1 + x2 = [-2 x0 + 2 x1 + x2, x0]") {
        const auto t3 = catalog::quandle("T3");
        const auto u = from(t3, {-3, 2, 1});
        const auto cert = cw_witness("T3", u);
        REQUIRE(cert.decomposition.size() == 1);
        CHECK(cert.decomposition[0].left == from(t3, {-2, 2, 1}));
        CHECK(cert.decomposition[0].right == RingElement::basis(t3, kZ, 0));
        CHECK(verify_commutator_certificate(cert));
        CHECK(commutator(cert.decomposition[0].left, cert.decomposition[0].right) == u);
    }
    SUBCASE("Z[R4]: e1 + e2 + e3 = [a2, a0 - a1 - a3]") {
        const auto r4 = catalog::quandle("R4");
        const auto u = from(r4, {-3, 1, 1, 1});
        const auto cert = cw_witness("R4", u);
        REQUIRE(cert.decomposition.size() == 1);
        CHECK(cert.decomposition[0].left == RingElement::basis(r4, kZ, 2));
        CHECK(cert.decomposition[0].right == from(r4, {1, -1, 0, -1}));
        CHECK(verify_commutator_certificate(cert));
    }
    SUBCASE("Z[Cs4]: e1 = [x + e1, x]") {
        const auto cs4 = catalog::quandle("Cs4");
        const auto e1 = from(cs4, {-1, 1, 0});
        const auto cert = cw_witness("Cs4", e1);
        REQUIRE(cert.decomposition.size() == 1);
        CHECK(cert.decomposition[0].left == from(cs4, {0, 1, 0}));  // x + (y - x) = y
        CHECK(cert.decomposition[0].right == RingElement::basis(cs4, kZ, 0));
        CHECK(verify_commutator_certificate(cert));
    }
    SUBCASE("zero element gets the empty decomposition") {
        const auto cert = cw_witness("R4", RingElement::zero(catalog::quandle("R4"), kZ));
        CHECK(cert.claimed_length == 0);
        CHECK(verify_commutator_certificate(cert));
    }
}

TEST_CASE("randomized width-one certificates all verify") {
    for (const auto& name : {"T1", "T2", "T3", "T4", "R4", "Cs4"}) {
        const auto certs = cw_certificates(name, 200, 7);
        CHECK(certs.size() == 200);
        for (const auto& cert : certs) CHECK(verify_commutator_certificate(cert));
    }
}

TEST_CASE("the width bound 1 <= cw <= n-1 certifies on Alex(Z5,2)") {
    // hypothesis of the bound: non-commutative with a 2-transitive action
    // (here even strongly non-commutative), so every x - y is a commutator
    // and any element of Delta splits into at most n - 1 of them
    const auto q = catalog::quandle("Alex(Z5,2)");
    REQUIRE_FALSE(predicates(*q).commutative);
    REQUIRE(is_2transitive(*q));
    const auto cert = strongly_noncomm_delta_equality(q);
    REQUIRE(cert.certified);

    auto witness_for = [&](int x, int y) -> PairWitness {
        for (const auto& w : cert.witnesses) {
            if (w.x == x && w.y == y) return w;
        }
        FAIL("missing witness");
        return {};
    };
    Rng rng(55);
    for (int trial = 0; trial < 100; ++trial) {
        // u = sum_i alpha_i (x_i - x_0) in Delta
        std::vector<long long> alpha;
        for (int i = 1; i < 5; ++i) alpha.push_back(rng.next_in(-5, 5));
        RingElement u = RingElement::zero(q, kZ);
        CommutatorCertificate bound_cert{u, {}, 0};
        for (int i = 1; i < 5; ++i) {
            const Scalar a = Scalar::of(kZ, Integer(alpha[static_cast<std::size_t>(i - 1)]));
            if (a.is_zero()) continue;
            u = u + (RingElement::basis(q, kZ, i) - RingElement::basis(q, kZ, 0)).scaled(a);
            const auto w = witness_for(i, 0);
            bound_cert.decomposition.push_back(
                {a, RingElement::basis(q, kZ, w.a), RingElement::basis(q, kZ, w.b)});
        }
        bound_cert.element = u;
        bound_cert.claimed_length = bound_cert.decomposition.size();
        CHECK(bound_cert.claimed_length <= 4);  // n - 1
        CHECK(verify_commutator_certificate(bound_cert));
    }
}

TEST_CASE("a nonzero commutator witnesses cw >= 1") {
    for (const auto& name : {"T2", "R4", "Cs4"}) {
        const auto q = catalog::quandle(name);
        bool nonzero_found = false;
        for (int i = 0; i < q->size() && !nonzero_found; ++i) {
            for (int j = 0; j < q->size(); ++j) {
                if (!commutator(RingElement::basis(q, kZ, i), RingElement::basis(q, kZ, j)).is_zero()) {
                    nonzero_found = true;
                    break;
                }
            }
        }
        CHECK(nonzero_found);
    }
}

TEST_CASE("exact small commutator length") {
    const auto r4 = catalog::quandle("R4");
    SUBCASE("zero has length zero") {
        const auto result = cl_exact_small(RingElement::zero(r4, kZ), 2, 1);
        CHECK(result.decided);
        CHECK(result.length == 0);
    }
    SUBCASE("e1 in Z[R4] has length 1 within bound 1") {
        const auto result = cl_exact_small(from(r4, {-1, 1, 0, 0}), 1, 1);
        REQUIRE(result.decided);
        CHECK(result.length == 1);
        REQUIRE(result.certificate.has_value());
        CHECK(verify_commutator_certificate(*result.certificate));
    }
    SUBCASE("nonzero elements of commutative Z[R3] admit no decomposition") {
        const auto r3 = catalog::quandle("R3");
        const auto result = cl_exact_small(from(r3, {-1, 1, 0}), 2, 2);
        CHECK_FALSE(result.decided);
        CHECK(result.note.find("no decomposition") != std::string::npos);
    }
    SUBCASE("a genuine length-2 example") {
        // e1 + "independent" e2-direction over Cs4 needs only length 1 by the
        // paper; build a length-2-decidable target in Z[R4] from two
        // commutator values and let the search find some decomposition
        const auto c1 = commutator(RingElement::basis(r4, kZ, 3), RingElement::basis(r4, kZ, 2));
        const auto c2 = commutator(RingElement::basis(r4, kZ, 2), RingElement::basis(r4, kZ, 0));
        const auto u = c1.scaled(Scalar::of(kZ, 2)) + c2.scaled(Scalar::of(kZ, 3));
        const auto result = cl_exact_small(u, 2, 1);
        REQUIRE(result.decided);
        CHECK(result.length <= 2);
        REQUIRE(result.certificate.has_value());
        CHECK(verify_commutator_certificate(*result.certificate));
    }
    CHECK_THROWS_AS(cl_exact_small(from(r4, {0, 1, 0, -1}), 3, 1), Error);
}

TEST_CASE("cl search decides every scalar combination of two box commutators") {
    const auto r4 = catalog::quandle("R4");
    const auto c1 = commutator(RingElement::basis(r4, kZ, 3), RingElement::basis(r4, kZ, 2));
    const auto c2 = commutator(RingElement::basis(r4, kZ, 2), RingElement::basis(r4, kZ, 0));
    Rng rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        const long long s1 = rng.next_in(-4, 4);
        const long long s2 = rng.next_in(-4, 4);
        const auto u = c1.scaled(Scalar::of(kZ, Integer(s1))) + c2.scaled(Scalar::of(kZ, Integer(s2)));
        const auto result = cl_exact_small(u, 2, 1);
        REQUIRE(result.decided);
        CHECK(result.length <= 2);
        if (u.is_zero()) CHECK(result.length == 0);
        if (result.certificate) CHECK(verify_commutator_certificate(*result.certificate));
    }
}
