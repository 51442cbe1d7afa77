#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "quandlekit/scalar.hpp"

namespace quandlekit {

// Canonical echelon basis of the module spanned by a set of vectors.
// Over Z the rows are kept in Hermite normal form (pivot columns strictly
// increasing, pivots positive, entries above a pivot reduced into
// [0, pivot)), so equal lattices have equal row lists regardless of the
// insertion order. Over Q and Z/p the rows are a reduced row echelon basis
// with the same interface. Composite moduli are refused: the pivot rules
// need an integral domain.
class LatticeBasis {
public:
    LatticeBasis(CoefficientRing ring, std::size_t dimension);

    static LatticeBasis spanning(const CoefficientRing& ring, std::size_t dimension,
                                 std::span<const std::vector<Scalar>> vectors);

    const CoefficientRing& ring() const { return ring_; }
    std::size_t dimension() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    bool is_zero() const { return rows_.empty(); }
    const std::vector<std::vector<Scalar>>& rows() const { return rows_; }

    // Basis of the module spanned by this one plus v. Inserting a member
    // returns an equal basis.
    LatticeBasis inserted(const std::vector<Scalar>& v) const;

    bool contains(const std::vector<Scalar>& v) const;

    friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;

private:
    void reduce();
    void check_vector(const std::vector<Scalar>& v) const;

    CoefficientRing ring_;
    std::size_t dim_;
    std::vector<std::vector<Scalar>> rows_;
};

// Convenience entry points over Z for integer-vector callers.
LatticeBasis hnf_insert(const LatticeBasis& basis, const std::vector<Integer>& v);
bool lattice_contains(const LatticeBasis& basis, const std::vector<Integer>& v);
std::vector<Scalar> to_scalar_vector(const CoefficientRing& ring, const std::vector<Integer>& v);

}  // namespace quandlekit
