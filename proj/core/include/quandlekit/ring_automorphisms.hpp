#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quandlekit/idempotents.hpp"
#include "quandlekit/ring_element.hpp"

namespace quandlekit {

// Column-major matrix of an R-linear ring endomorphism of Z[Q]: column j is
// the coefficient vector of phi(x_j).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Integer(0)) {}

    static IntMatrix identity(int n);
    static IntMatrix from_columns(const std::vector<std::vector<Integer>>& columns);
    static IntMatrix from_permutation(const std::vector<int>& perm);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Integer& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Integer& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    std::vector<Integer> column(int c) const;

    IntMatrix operator*(const IntMatrix& o) const;
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
    bool operator<(const IntMatrix& o) const { return data_lex() < o.data_lex(); }

    Integer determinant() const;
    std::optional<IntMatrix> inverse_unimodular() const;  // adjugate/det for det = +-1

    std::string str() const;  // row-major, one row per line

private:
    std::vector<Integer> data_lex() const { return data_; }
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Integer> data_;
};

// Is the Z-linear map with the given matrix multiplicative on Z[Q]?
bool is_multiplicative(const QuandlePtr& q, const IntMatrix& m);

// All matrices whose columns are nonzero box idempotents (|coeff| <= bound),
// with determinant +-1 and full multiplicativity. Complete within the bound;
// deterministic lexicographic order. Backtracking places columns left to
// right, forcing phi(x_i x_j) from already placed pairs.
std::vector<IntMatrix> automorphisms_bounded(QuandlePtr quandle, long long bound,
                                             long long budget = kDefaultEnumerationBudget);

struct RelationInstance {
    std::string text;  // e.g. "A(2)*A(3)=A(5)"
    bool holds = false;
};

struct RelationCertificate {
    bool all_hold = false;
    std::vector<RelationInstance> instances;
};

// Matrix families of the T2 automorphism group: A_a has determinant 1,
// B_a determinant -1.
IntMatrix t2_family_a(long long alpha);
IntMatrix t2_family_b(long long alpha);

// Generators of Aut(Z[R4]).
IntMatrix r4_matrix_a();
IntMatrix r4_matrix_b();
IntMatrix r4_matrix_tau();

// A(a)*A(b) = A(a+b), B(a)*B(b) = A(a-b), B(1)*A(a)*B(1) = A(-a) for
// |a|, |b| <= range.
RelationCertificate verify_t2_relations(long long range = 5);

// A^2 = B^2 = I, A*B = B*A, tau*A*tau = B.
RelationCertificate verify_r4_relations();

struct GroupClosureResult {
    bool finite = false;
    std::vector<IntMatrix> elements;             // sorted, valid when finite
    std::vector<std::vector<int>> cayley;        // indices into elements
};

// Closes the given matrices under multiplication; stops with finite = false
// once the element count passes the cap.
GroupClosureResult group_order_small(const std::vector<IntMatrix>& generators,
                                     std::size_t cap = 1000);

}  // namespace quandlekit
