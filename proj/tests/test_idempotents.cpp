#include "doctest.h"

#include "quandlekit/catalog.hpp"
#include "quandlekit/idempotents.hpp"
#include "quandlekit/quandle.hpp"

#include <algorithm>

using namespace quandlekit;

namespace {

const CoefficientRing kZ = CoefficientRing::integers();

bool contains_element(const std::vector<RingElement>& list, const RingElement& e) {
    return std::any_of(list.begin(), list.end(), [&](const RingElement& x) { return x == e; });
}

std::vector<Integer> dense_ints(const RingElement& e) {
    std::vector<Integer> out;
    for (const auto& s : e.dense()) out.push_back(s.numerator());
    return out;
}

}  // namespace

TEST_CASE("modular enumeration") {
    SUBCASE("all eight elements of Z2[R3] are idempotent") {
        const auto all = idempotents_modular(catalog::quandle("R3"), 2);
        CHECK(all.size() == 8);  // the zero element included
    }
    SUBCASE("Z2[T1]") {
        const auto all = idempotents_modular(catalog::quandle("T1"), 2);
        CHECK(all.size() == 2);  // 0 and x0
    }
    SUBCASE("quandle basis elements are always idempotent") {
        const auto r3 = catalog::quandle("R3");
        const auto all = idempotents_modular(r3, 3);
        const auto z3 = CoefficientRing::integers_mod(3);
        for (int i = 0; i < 3; ++i) {
            CHECK(contains_element(all, RingElement::basis(r3, z3, i)));
        }
    }
    SUBCASE("budget guard") {
        CHECK_THROWS_AS(idempotents_modular(catalog::quandle("R6"), 100, 1000), BudgetExceededError);
    }
}

TEST_CASE("box enumeration over the integers") {
    SUBCASE("R3 bound 3: exactly the quandle basis") {
        const auto nz = nonzero(idempotents_box(catalog::quandle("R3"), 3));
        REQUIRE(nz.size() == 3);
        const auto r3 = catalog::quandle("R3");
        for (int i = 0; i < 3; ++i) CHECK(contains_element(nz, RingElement::basis(r3, kZ, i)));
    }
    SUBCASE("R4 bound 2: the family slice, eight nonzero idempotents") {
        // the t/alpha/beta family intersected with the box has alpha and beta
        // ranging over {-1, 0, 1, 2} on each branch
        const auto r4 = catalog::quandle("R4");
        const auto nz = nonzero(idempotents_box(r4, 2));
        CHECK(nz.size() == 8);
        for (const auto& e : nz) {
            CHECK(augmentation(e) == Scalar::one(kZ));  // no idempotents inside Delta
        }
        const auto family = builtin_family("R4");
        const auto cover = family_covers_box(family, 2);
        CHECK(cover.covers_all);
    }
    SUBCASE("Cs4 bound 2: six nonzero idempotents covered by the two families") {
        const auto nz = nonzero(idempotents_box(catalog::quandle("Cs4"), 2));
        CHECK(nz.size() == 6);
        const auto cover = family_covers_box(builtin_family("Cs4"), 2);
        CHECK(cover.covers_all);
    }
    SUBCASE("basis elements always appear once the bound reaches 1") {
        for (const auto& name : {"T3", "R4", "Cs4", "R5"}) {
            const auto q = catalog::quandle(name);
            const auto nz = nonzero(idempotents_box(q, 1));
            for (int i = 0; i < q->size(); ++i) {
                CHECK(contains_element(nz, RingElement::basis(q, kZ, i)));
            }
        }
    }
    SUBCASE("outputs agree with an unpruned brute-force oracle") {
        // oracle: scan the full box without the augmentation shortcut
        for (const auto& name : {"R3", "Cs4", "R4"}) {
            const auto q = catalog::quandle(name);
            const long long bound = 2;
            std::vector<RingElement> oracle;
            std::vector<Integer> v(static_cast<std::size_t>(q->size()), Integer(-bound));
            while (true) {
                const auto e = RingElement::from_dense(q, kZ, v);
                if (e * e == e) oracle.push_back(e);
                std::size_t i = 0;
                while (i < v.size() && v[i] == Integer(bound)) {
                    v[i] = Integer(-bound);
                    ++i;
                }
                if (i == v.size()) break;
                v[i] += 1;
            }
            std::sort(oracle.begin(), oracle.end(),
                      [](const RingElement& a, const RingElement& b) { return a.lex_less(b); });
            const auto fast = idempotents_box(q, bound);
            REQUIRE(fast.size() == oracle.size());
            for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == oracle[i]);
        }
    }
}

TEST_CASE("augmentation of idempotents over a domain is 0 or 1") {
    for (const auto& name : {"T2", "T4", "R3", "R4", "Cs4"}) {
        for (const auto& e : idempotents_box(catalog::quandle(name), 2)) {
            const auto eps = augmentation(e);
            CHECK((eps.is_zero() || eps.is_one()));
        }
    }
    // over Z5 as well (prime field)
    for (const auto& e : idempotents_modular(catalog::quandle("Cs4"), 5)) {
        const auto eps = augmentation(e);
        CHECK((eps.is_zero() || eps.is_one()));
    }
}

TEST_CASE("idempotent sets are closed under quandle automorphisms") {
    for (const auto& name : {"R4", "Cs4"}) {
        const auto q = catalog::quandle(name);
        const auto idems = idempotents_box(q, 2);
        for (const auto& phi : quandle_automorphisms(*q)) {
            for (const auto& e : idems) {
                const auto d = dense_ints(e);
                std::vector<Integer> permuted(d.size(), Integer(0));
                for (std::size_t i = 0; i < d.size(); ++i) {
                    permuted[static_cast<std::size_t>(phi.perm[i])] = d[i];
                }
                CHECK(contains_element(idems, RingElement::from_dense(q, kZ, permuted)));
            }
        }
    }
}

TEST_CASE("no nonzero idempotents inside Delta for trivial quandles and R4") {
    for (const auto& name : {"T2", "T3", "T4", "R4"}) {
        for (const auto& e : nonzero(idempotents_box(catalog::quandle(name), 2))) {
            CHECK_FALSE(augmentation(e).is_zero());
        }
    }
}

TEST_CASE("parametric family certificates") {
    SUBCASE("the trivial-quandle family over T4") {
        const auto cert = verify_family(builtin_family("T4"));
        CHECK(cert.certified);
        CHECK(cert.grid_radius == 2);
    }
    SUBCASE("both Cs4 families certify") {
        const auto cert = verify_family(builtin_family("Cs4"));
        CHECK(cert.certified);
    }
    SUBCASE("the R4 family certifies") {
        CHECK(verify_family(builtin_family("R4")).certified);
    }
    SUBCASE("a corrupted family is rejected with a witness") {
        auto family = builtin_family("Cs4");
        family.branches[0].offset[2] += 1;  // off-family shift
        const auto cert = verify_family(family);
        CHECK_FALSE(cert.certified);
        CHECK_FALSE(cert.witness.empty());
    }
}

TEST_CASE("family coverage solves parameters per element") {
    SUBCASE("R4 assignments recover t, alpha, beta") {
        const auto cover = family_covers_box(builtin_family("R4"), 2);
        REQUIRE(cover.covers_all);
        CHECK(cover.assignments.size() == 8);
        for (const auto& a : cover.assignments) {
            CHECK(evaluate_branch(catalog::quandle("R4"), builtin_family("R4").branches[static_cast<std::size_t>(a.branch)], a.params) == a.element);
        }
    }
    SUBCASE("R3 constants cover the bound-3 box") {
        CHECK(family_covers_box(builtin_family("R3"), 3).covers_all);
    }
    SUBCASE("T4 family covers its box exactly") {
        const auto cover = family_covers_box(builtin_family("T4"), 2);
        CHECK(cover.covers_all);
    }
    SUBCASE("an element outside the family image is reported") {
        // shrink the R4 family to the first branch only: the a1/a3 branch
        // elements become uncovered
        auto family = builtin_family("R4");
        family.branches.pop_back();
        const auto cover = family_covers_box(family, 2);
        CHECK_FALSE(cover.covers_all);
        CHECK(cover.uncovered.size() == 4);
    }
}

TEST_CASE("connected catalog quandles carry only trivial idempotents in the box") {
    // exploratory check of the remark that connected quandles may admit only
    // trivial idempotents; an assertion for the built-in catalog only
    for (const auto& [name, q] : catalog::finite_quandles(6)) {
        if (!predicates(*q).connected || q->size() < 2) continue;
        const auto nz = nonzero(idempotents_box(q, 2));
        CHECK(nz.size() == static_cast<std::size_t>(q->size()));
    }
}
