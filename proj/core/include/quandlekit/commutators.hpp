#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quandlekit/lattice.hpp"
#include "quandlekit/ring_element.hpp"

namespace quandlekit {

RingElement commutator(const RingElement& u, const RingElement& v);

// Additive basis of the algebra generated by all commutators: start from the
// span of [x_i, x_j] and adjoin products of basis vectors (both orders) until
// the echelon basis stabilizes. Bilinearity makes basis products sufficient,
// and the ascending chain of submodules of R^n terminates.
LatticeBasis commutator_subalgebra(QuandlePtr quandle, const CoefficientRing& ring);

// Span of {x_i - x_0}, for comparisons against the closure.
LatticeBasis delta_lattice(QuandlePtr quandle, const CoefficientRing& ring);

// Lemma check: every closure basis vector has augmentation zero.
bool contained_in_delta(QuandlePtr quandle, const CoefficientRing& ring);

struct PairWitness {
    int x, y;  // ordered pair of distinct elements
    int a, b;  // a*b = x, b*a = y
};

struct DeltaEqualityCertificate {
    bool certified = false;
    std::string hypothesis;  // which route produced the witnesses
    std::string failure;
    std::vector<PairWitness> witnesses;  // one per ordered pair x != y
};

// For strongly non-commutative Q (or non-commutative Q with a 2-transitive
// automorphism action), exhibits (a, b) with ab = x, ba = y for every ordered
// pair, so x - y = [a, b] and R[Q]' = Delta_R(Q).
DeltaEqualityCertificate strongly_noncomm_delta_equality(QuandlePtr quandle);

struct CommutatorTerm {
    Scalar scalar;
    RingElement left;
    RingElement right;
};

// u = sum scalar_i * [left_i, right_i]; re-evaluating the list reproduces u.
struct CommutatorCertificate {
    RingElement element;
    std::vector<CommutatorTerm> decomposition;
    std::size_t claimed_length = 0;
};

bool verify_commutator_certificate(const CommutatorCertificate& cert);

// Single-commutator witnesses of the width-one theorem, per named quandle
// shape. Draws `samples` random elements of the commutator subalgebra with
// coefficients in [-5, 5] and returns a verified certificate for each.
std::vector<CommutatorCertificate> cw_certificates(const std::string& catalog_name,
                                                   std::size_t samples, std::uint64_t seed);

// The explicit witness construction for one element (u must lie in the
// commutator subalgebra of the named quandle).
CommutatorCertificate cw_witness(const std::string& catalog_name, const RingElement& u);

struct CommutatorLengthResult {
    bool decided = false;        // found a decomposition within bounds
    std::size_t length = 0;      // valid when decided
    std::optional<CommutatorCertificate> certificate;
    std::string note;
};

// Exhaustive search for a decomposition of length <= max_len (<= 2) with all
// u_i, v_i coefficients in [-bound, bound]. "Not decided" means no
// decomposition within these bounds, not nonexistence.
CommutatorLengthResult cl_exact_small(const RingElement& u, int max_len, long long bound,
                                      long long budget = 50'000'000);

}  // namespace quandlekit
