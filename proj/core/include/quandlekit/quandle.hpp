#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quandlekit/errors.hpp"

namespace quandlekit {

enum class QuandleAxiom { shape, q1, q2, q3 };

struct AxiomViolation {
    QuandleAxiom axiom;
    int i = -1;
    int j = -1;
    int k = -1;
    std::string message;
};

class QuandleAxiomError : public Error {
public:
    explicit QuandleAxiomError(AxiomViolation v) : Error(v.message), violation_(std::move(v)) {}
    const AxiomViolation& violation() const { return violation_; }

private:
    AxiomViolation violation_;
};

// Finite quandle as an n x n multiplication table, table[i][j] = i * j,
// validated against (Q1) x*x = x, (Q2) right translations are permutations,
// (Q3) (x*y)*z = (x*z)*(y*z). Immutable once built.
class FiniteQuandle {
public:
    static std::optional<AxiomViolation> check(const std::vector<std::vector<int>>& table);

    // Validates and builds; throws QuandleAxiomError naming the first violated
    // axiom with a witness triple.
    static FiniteQuandle verified(std::vector<std::vector<int>> table,
                                  std::vector<std::string> labels = {});

    int size() const { return n_; }
    int mul(int i, int j) const { return table_[i][j]; }
    const std::vector<std::vector<int>>& table() const { return table_; }

    bool has_labels() const { return !labels_.empty(); }
    const std::string& label(int i) const;
    const std::vector<std::string>& labels() const { return labels_; }
    int index_of_label(const std::string& label) const;  // -1 when absent

    // Right translation S_y as a permutation (column y of the table).
    std::vector<int> right_translation(int y) const;

    friend bool operator==(const FiniteQuandle& a, const FiniteQuandle& b) {
        return a.table_ == b.table_;
    }

private:
    FiniteQuandle(std::vector<std::vector<int>> table, std::vector<std::string> labels);

    int n_;
    std::vector<std::vector<int>> table_;
    std::vector<std::string> labels_;
};

using QuandlePtr = std::shared_ptr<const FiniteQuandle>;

inline QuandlePtr share(FiniteQuandle q) { return std::make_shared<const FiniteQuandle>(std::move(q)); }

// Finite group given by a Cayley table, with identity and inverses verified.
class FiniteGroup {
public:
    static FiniteGroup verified(std::vector<std::vector<int>> cayley);
    static FiniteGroup cyclic(int n);
    static FiniteGroup symmetric(int points);  // order points!

    int size() const { return n_; }
    int mul(int a, int b) const { return cayley_[a][b]; }
    int identity() const { return identity_; }
    int inverse(int a) const { return inverse_[a]; }
    const std::vector<std::vector<int>>& cayley() const { return cayley_; }

    bool is_automorphism(const std::vector<int>& phi) const;

private:
    FiniteGroup(std::vector<std::vector<int>> cayley, int identity, std::vector<int> inverse);

    int n_;
    std::vector<std::vector<int>> cayley_;
    int identity_;
    std::vector<int> inverse_;
};

// Named constructors. Every output passes FiniteQuandle::check.
FiniteQuandle make_trivial(int n);
FiniteQuandle make_dihedral(int n);
FiniteQuandle make_cs4();
FiniteQuandle make_conj(const FiniteGroup& g);
FiniteQuandle make_core(const FiniteGroup& g);
FiniteQuandle make_alex(const FiniteGroup& g, const std::vector<int>& phi);

struct QuandlePredicates {
    bool trivial = false;
    bool latin = false;
    bool semi_latin = false;
    bool involutary = false;
    bool commutative = false;
    bool strongly_non_commutative = false;
    bool connected = false;
};

QuandlePredicates predicates(const FiniteQuandle& q);

// A permutation of the elements commuting with the table.
struct QuandlePermutation {
    std::vector<int> perm;
};

inline constexpr int kDefaultAutomorphismBound = 8;

// Complete automorphism list by backtracking, most-constrained element first,
// output sorted lexicographically. Throws BudgetExceededError above the bound.
std::vector<QuandlePermutation> quandle_automorphisms(const FiniteQuandle& q,
                                                      int bound = kDefaultAutomorphismBound);

bool is_quandle_automorphism(const FiniteQuandle& q, const std::vector<int>& perm);

// True iff Aut(Q) maps every ordered pair of distinct elements to every other.
bool is_2transitive(const FiniteQuandle& q, int bound = kDefaultAutomorphismBound);

bool are_isomorphic(const FiniteQuandle& a, const FiniteQuandle& b);

}  // namespace quandlekit
