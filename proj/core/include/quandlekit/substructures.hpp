#pragma once

#include <map>
#include <string>
#include <vector>

#include "quandlekit/idempotents.hpp"
#include "quandlekit/ring_element.hpp"

namespace quandlekit {

// A finite subset of a quandle ring closed under multiplication and
// satisfying the quandle axioms, together with its closure table.
struct RingQuandle {
    std::vector<RingElement> elements;       // canonical lexicographic order
    std::vector<std::vector<int>> table;     // table[i][j] = index of elements[i] * elements[j]
};

struct RingQuandleCheck {
    bool ok = false;
    std::string violation;                   // first failure, empty when ok
    std::vector<std::vector<int>> table;     // filled when closure holds
};

// Exhaustive closure + Q1-Q3 check of a finite element set.
RingQuandleCheck is_ring_quandle(const std::vector<RingElement>& elements);

// All inclusion-maximal subsets of the given idempotent list that are ring
// quandles. The zero element is dropped first: a quandle containing 0 is {0},
// and the zero quandle is excluded from mq by convention. When the whole
// nonzero list is itself a quandle it is the unique maximal one and no
// subset search runs.
std::vector<RingQuandle> maximal_quandles_finite(const std::vector<RingElement>& idempotents,
                                                 std::size_t max_elements = 20);

// Sparse integer polynomial in the concatenated (left params, right params)
// variables; exponent vector -> coefficient.
using ParamPoly = std::map<std::vector<int>, Integer>;

Integer evaluate_param_poly(const ParamPoly& poly, const std::vector<Integer>& vars);

// Closed-form product rule for one ordered branch pair: the product of a
// left-branch member at params p and a right-branch member at params q
// lands in result_branch at parameters result_params(p, q).
struct BranchProductRule {
    int left_branch;
    int right_branch;
    int result_branch;
    std::vector<ParamPoly> result_params;
};

struct ParametricQuandle {
    QuandlePtr quandle;
    std::string name;
    std::vector<FamilyBranch> branches;
    std::vector<BranchProductRule> rules;  // one per ordered branch pair
};

struct ParametricCertificate {
    bool certified = false;
    long long grid_radius = 0;
    long long points_checked = 0;
    std::string detail;
    std::string failure;
};

// Grid-certifies, with the degree argument of verify_family, that the
// parametric set is a quandle: members are idempotent, products follow the
// stated rules, right translations act on parameter space by affine maps
// with unit determinant, and Q3 holds on grid triples.
ParametricCertificate certify_parametric_quandle(const ParametricQuandle& pq,
                                                 long long grid_radius = 2);

// Registry of the built-in parametric maximal quandles: "T2".."T6" (the
// x0 + Delta quandle), "R4" (M = M1 u M2), "Cs4:N1" and "Cs4:N2".
ParametricQuandle builtin_parametric_quandle(const std::string& name);

struct ObstructionCase {
    Integer alpha;
    Integer linear_coefficient;  // 4a - 1
    bool bijective;
    std::string unreachable;     // witness gamma when not surjective
};

struct NotExtendableCertificate {
    bool certified = false;
    std::string detail;
    std::vector<ObstructionCase> cases;
};

// Reproduces the obstruction that keeps N1 in Z[Cs(4)] from growing: right
// translation by u = a(x + y - 2z) + z sends the line parameter b to
// 1 - b - 2a + 4ab, and the linear coefficient 4a - 1 is a unit only at
// a = 0. Verified against ring products on a grid first.
NotExtendableCertificate certify_cs4_not_extendable(long long alpha_range = 5,
                                                    long long grid_radius = 2);

struct MqReductionReport {
    std::vector<RingQuandle> integral;       // maximal quandles among box idempotents over Z
    std::vector<RingQuandle> modular;        // maximal quandles over Z/m
    std::vector<std::vector<int>> images;    // images of integral ones as modular element index lists
    std::vector<bool> hit;                   // per modular quandle: is it an image?
    bool surjective = false;
};

// Compares images of the integral maximal quandles (box representatives)
// under coefficient reduction mod m against the maximal quandles over Z/m.
MqReductionReport mq_reduction_check(QuandlePtr quandle, long long modulus,
                                     long long box_bound = 2,
                                     long long budget = kDefaultEnumerationBudget);

}  // namespace quandlekit
