#pragma once

#include <map>
#include <string>
#include <vector>

#include "quandlekit/quandle.hpp"
#include "quandlekit/scalar.hpp"

namespace quandlekit {

// Element of R[Q]: a sparse coefficient vector over the quandle basis.
// Zero coefficients are never stored. Operands must share both the quandle
// (structurally) and the coefficient ring; there are no coercions.
class RingElement {
public:
    RingElement(QuandlePtr quandle, CoefficientRing ring);

    static RingElement zero(QuandlePtr quandle, const CoefficientRing& ring);
    static RingElement basis(QuandlePtr quandle, const CoefficientRing& ring, int index);
    static RingElement term(QuandlePtr quandle, const CoefficientRing& ring, int index, Scalar coeff);
    static RingElement from_dense(QuandlePtr quandle, const CoefficientRing& ring,
                                  const std::vector<Integer>& coeffs);
    static RingElement from_dense_scalars(QuandlePtr quandle, const CoefficientRing& ring,
                                          const std::vector<Scalar>& coeffs);

    const FiniteQuandle& quandle() const { return *quandle_; }
    const QuandlePtr& quandle_ptr() const { return quandle_; }
    const CoefficientRing& ring() const { return ring_; }
    const std::map<int, Scalar>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    int support_size() const { return static_cast<int>(coeffs_.size()); }
    Scalar coeff(int index) const;
    std::vector<Scalar> dense() const;

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator-() const;
    RingElement operator*(const RingElement& o) const;  // bilinear through the table
    RingElement scaled(const Scalar& s) const;

    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }
    // Lexicographic on dense coefficient vectors; canonical output order.
    bool lex_less(const RingElement& o) const;

    // Canonical form "2*a0 - a1 + 3*a2", ascending index, zero terms omitted,
    // "0" for the zero element.
    std::string str() const;

    // Accepts the literal grammar above plus the dense form "[2,-1,3]".
    static RingElement parse(QuandlePtr quandle, const CoefficientRing& ring, const std::string& text);

private:
    void check_compatible(const RingElement& o) const;
    void set_coeff(int index, const Scalar& value);

    QuandlePtr quandle_;
    CoefficientRing ring_;
    std::map<int, Scalar> coeffs_;
};

Scalar augmentation(const RingElement& u);

// Element of the extended ring R°[Q] = R[Q] + R·e with e a two-sided identity.
class ExtRingElement {
public:
    ExtRingElement(RingElement body, Scalar unit);
    static ExtRingElement embed(RingElement body);
    static ExtRingElement identity(QuandlePtr quandle, const CoefficientRing& ring);

    const RingElement& body() const { return body_; }
    const Scalar& unit() const { return unit_; }
    bool is_zero() const { return body_.is_zero() && unit_.is_zero(); }

    ExtRingElement operator+(const ExtRingElement& o) const;
    ExtRingElement operator-(const ExtRingElement& o) const;
    ExtRingElement operator*(const ExtRingElement& o) const;
    bool operator==(const ExtRingElement& o) const { return body_ == o.body_ && unit_ == o.unit_; }

    std::string str() const;

private:
    RingElement body_;
    Scalar unit_;
};

Scalar augmentation(const ExtRingElement& u);

// Basis {x_i - x_base : i != base} of the augmentation ideal.
struct AugIdealBasis {
    int base_index;
    std::vector<RingElement> vectors;
};

AugIdealBasis aug_ideal_basis(QuandlePtr quandle, const CoefficientRing& ring, int base_index = 0);

// Theorem test: all pairwise products of Delta basis vectors vanish.
bool delta_square_is_zero(QuandlePtr quandle, const CoefficientRing& ring);

}  // namespace quandlekit
