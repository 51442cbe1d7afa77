#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quandlekit/lattice.hpp"
#include "quandlekit/ring_element.hpp"

namespace quandlekit {

enum class AlgebraKind { ring, minus, plus };

// The base ring, or one of its derived products: minus is x o y = xy - yx,
// plus is x . y = (xy + yx)/2 (needs 2 invertible in the ring).
class DerivedAlgebra {
public:
    DerivedAlgebra(QuandlePtr quandle, CoefficientRing ring, AlgebraKind kind);

    const QuandlePtr& quandle() const { return quandle_; }
    const CoefficientRing& ring() const { return ring_; }
    AlgebraKind kind() const { return kind_; }

    RingElement mul(const RingElement& a, const RingElement& b) const;

private:
    QuandlePtr quandle_;
    CoefficientRing ring_;
    AlgebraKind kind_;
};

enum class Identity {
    left_alternative,   // a^2 b = a (a b)
    right_alternative,  // a b^2 = (a b) b
    elastic,            // (a b) a = a (b a)
    jordan,             // commutative and (a^2 b) a = a^2 (b a)
    associative,        // (a b) c = a (b c)
    lie_jacobi,         // (a b) c + (b c) a + (c a) b = 0
    anticommutative     // a b = -(b a) and a a = 0 on the basis
};

Identity parse_identity(const std::string& name);
std::string identity_name(Identity id);
bool identity_is_multilinear(Identity id);

struct IdentityReport {
    Identity identity;
    bool counterexample_found = false;
    bool exact = false;  // multilinear identities checked on the basis are proofs
    std::uint64_t cases_checked = 0;
    std::string verdict;
    // both sides of the first (coefficient-sum minimal) failing instance
    std::string witness_lhs, witness_rhs, witness_elements;
};

// Multilinear identities (associative, lie_jacobi, anticommutative) are
// checked exhaustively on basis tuples, which is exact. The rest are scanned
// over the coefficient box in ascending coefficient-sum order up to `trials`
// pairs; absence of a counterexample there is reported as such, never as a
// proof.
IdentityReport check_identity(const DerivedAlgebra& algebra, Identity identity,
                              long long bound = 2, std::uint64_t trials = 200'000);

struct PowerAssociativityWitness {
    RingElement x;
    RingElement lhs;  // (xx)(xx)
    RingElement rhs;  // ((xx)x)x
    long long bound_used = 0;
};

// Searches |coefficients| <= bound for x with (xx)(xx) != ((xx)x)x, widening
// the box up to max_bound before giving up.
std::optional<PowerAssociativityWitness> power_associative_witness(QuandlePtr quandle,
                                                                   const CoefficientRing& ring,
                                                                   long long bound = 2,
                                                                   long long max_bound = 4);

struct LieAnalysisReport {
    int n = 0;
    std::size_t l2_rank = 0;
    bool l2_basis_is_chain = false;  // {x0 - x1, x1 - x2, ...}
    bool l2_equals_l3 = false;
    bool l2_squared_zero = false;
    bool j_supported = false;        // 2 invertible in the ring
    bool j2_equals_j = false;
};

// The minus and plus algebras of a trivial quandle ring: computes L^2, L^3,
// (L^2)^2 and J^2 as modules and compares them with the stated answers.
LieAnalysisReport trivial_quandle_lie_analysis(int n, const CoefficientRing& ring);

}  // namespace quandlekit
