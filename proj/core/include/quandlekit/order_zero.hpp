#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quandlekit/free_quandle.hpp"
#include "quandlekit/int_quandle.hpp"
#include "quandlekit/ring_element.hpp"

namespace quandlekit {

// A linear order on a finite quandle compatible with one side's translations.
struct LinearOrder {
    OrderSide side;
    std::vector<int> ranking;  // elements from smallest to largest

    std::string str(const FiniteQuandle& q) const;  // "a2 < a0 < a1"
};

inline constexpr int kDefaultOrderSearchBound = 9;

// Backtracking search: elements are appended smallest-to-largest with
// incremental monotonicity checks. Returns a witness order, or nullopt after
// exhausting the search tree.
std::optional<LinearOrder> find_order(const FiniteQuandle& q, OrderSide side,
                                      int bound = kDefaultOrderSearchBound);

// n! oracle used to cross-check the backtracking search on small quandles.
std::optional<LinearOrder> find_order_bruteforce(const FiniteQuandle& q, OrderSide side);

struct UniqueProductReport {
    // product element (as index or integer label) -> list of (a, b) factor pairs
    std::map<Integer, std::vector<std::pair<Integer, Integer>>> census;
    std::vector<Integer> unique_products;
    bool up = false;   // at least one uniquely represented product
    bool tup = false;  // at least two, when |A| + |B| > 2
    // witnesses of the ordered-quandle statement: the largest and smallest
    // elements of A admit uniquely represented products
    std::optional<std::pair<Integer, Integer>> a_max_witness;  // (b', a_max * b')
    std::optional<std::pair<Integer, Integer>> a_min_witness;  // (b'', a_min * b'')
};

UniqueProductReport unique_products(const IntQuandle& q, const std::vector<Integer>& a,
                                    const std::vector<Integer>& b);
UniqueProductReport unique_products(const FiniteQuandle& q, const std::vector<int>& a,
                                    const std::vector<int>& b);

struct InertWitness {
    std::vector<int> set;  // A
    int x, y;
};

// First subset A (|A| <= max_size, ordered by size then lexicographically)
// and pair x != y with equal product multisets {a*x} and {a*y}. Multiset
// equality is what the cancellation argument needs, even though the source
// definition is written with sets; reports surface that reading.
std::optional<InertWitness> inert_witness(const FiniteQuandle& q, int max_size);

enum class ZeroDivisorStrategy { automatic, trivial_subquandle, finite_subquandle, not_semi_latin, inert };

struct ZeroDivisorWitness {
    RingElement u;
    RingElement v;
    std::string strategy;
    std::string detail;
};

// Applies the witness recipes in order: a 2-element trivial subquandle gives
// (x1 - x2)^2 = 0; a finite subquandle A with x != y in A gives
// (sum A)(x - y) = 0; a non-semi-latin triple gives x(y - z) = 0; an inert
// witness gives (sum A)(x - y) = 0. Every returned pair is re-verified to
// multiply to zero. "None" is a search outcome, not a nonexistence proof.
std::optional<ZeroDivisorWitness> zero_divisor_witness(
    QuandlePtr quandle, const CoefficientRing& ring,
    ZeroDivisorStrategy strategy = ZeroDivisorStrategy::automatic);

struct NoZeroDivisorSampleReport {
    std::uint64_t trials = 0;
    std::uint64_t zero_products = 0;
    std::uint64_t up_confirmed = 0;  // sampled support pairs with a unique product
    std::string witness;             // set if a zero product ever appears
};

// Samples pairs of nonzero finitely supported elements of Z[Q] for an
// integer-rule quandle and asserts nonzero products; also confirms the
// unique-product property on each sampled support pair.
NoZeroDivisorSampleReport up_sample_no_zero_divisors(const IntQuandle& q, std::uint64_t trials,
                                                     int max_support, long long coeff_bound,
                                                     std::uint64_t seed);

// Same sampling over the free quandle of the given rank.
NoZeroDivisorSampleReport up_sample_no_zero_divisors_free(int rank, std::uint64_t trials,
                                                          int max_support, long long coeff_bound,
                                                          std::uint64_t seed, int max_word_len = 4);

}  // namespace quandlekit
