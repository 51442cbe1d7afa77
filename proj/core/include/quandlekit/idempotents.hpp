#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quandlekit/ring_element.hpp"

namespace quandlekit {

inline constexpr long long kDefaultEnumerationBudget = 10'000'000;

// Complete list of z with z*z = z over Z/m, in lexicographic coefficient
// order (zero included). Throws BudgetExceededError when m^n > budget.
std::vector<RingElement> idempotents_modular(QuandlePtr quandle, long long modulus,
                                             long long budget = kDefaultEnumerationBudget);

// Complete list of integer idempotents with every |coefficient| <= bound,
// lexicographic order, zero included. The odometer prunes the last
// coordinate with the augmentation condition eps(z) in {0, 1}, which is
// necessary for idempotents over an integral domain.
std::vector<RingElement> idempotents_box(QuandlePtr quandle, long long bound,
                                         long long budget = kDefaultEnumerationBudget);

std::vector<RingElement> nonzero(const std::vector<RingElement>& elements);

// One affine branch of a parametric idempotent family:
// z(p) = offset + sum_i p_i * columns[i], coefficients over Z.
struct FamilyBranch {
    std::string name;
    std::vector<Integer> offset;
    std::vector<std::vector<Integer>> columns;
    std::vector<std::string> params;
};

struct IdempotentFamily {
    QuandlePtr quandle;
    std::string name;
    std::vector<FamilyBranch> branches;
};

RingElement evaluate_branch(const QuandlePtr& quandle, const FamilyBranch& branch,
                            const std::vector<Integer>& params);

struct FamilyCertificate {
    bool certified = false;
    long long grid_radius = 0;
    long long points_checked = 0;
    std::string detail;      // degree argument summary
    std::string witness;     // set when a grid point refutes the family
};

// Evaluates z(p)^2 - z(p) on the integer grid |p_i| <= grid_radius for every
// branch. Each coordinate of z^2 - z is a polynomial of degree <= 2 per
// parameter, so vanishing on 3 points per axis already certifies the
// identity; the default radius 2 gives 5 points per axis as margin.
FamilyCertificate verify_family(const IdempotentFamily& family, long long grid_radius = 2);

struct CoverageAssignment {
    RingElement element;
    int branch = -1;
    std::vector<Integer> params;
};

struct CoverageReport {
    bool covers_all = false;
    std::vector<CoverageAssignment> assignments;
    std::vector<RingElement> uncovered;
};

// Decides, per nonzero box idempotent, the affine system "offset + M p = z"
// over the integers.
CoverageReport family_covers_box(const IdempotentFamily& family, long long bound,
                                 long long budget = kDefaultEnumerationBudget);

// Families of the built-in catalog entries that have one (trivial quandles,
// R3, R4, Cs4). Throws UnknownNameError for anything else.
IdempotentFamily builtin_family(const std::string& catalog_name);

}  // namespace quandlekit
