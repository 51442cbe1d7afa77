#pragma once

#include <compare>
#include <string>

#include "quandlekit/checked_int.hpp"
#include "quandlekit/errors.hpp"

namespace quandlekit {

enum class RingKind { integers, integers_mod, rationals };

// Exact coefficient ring tag: Z, Z/m (m >= 2) or Q.
class CoefficientRing {
public:
    static CoefficientRing integers() { return CoefficientRing(RingKind::integers, 0); }
    static CoefficientRing rationals() { return CoefficientRing(RingKind::rationals, 0); }
    static CoefficientRing integers_mod(long long m);

    RingKind kind() const { return kind_; }
    long long modulus() const { return modulus_; }

    bool is_integral_domain() const;
    bool has_invertible_two() const;
    long long characteristic() const { return kind_ == RingKind::integers_mod ? modulus_ : 0; }

    std::string str() const;
    // "z", "q", "zmod:<m>"
    static CoefficientRing parse(const std::string& text);

    friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

private:
    CoefficientRing(RingKind kind, long long modulus) : kind_(kind), modulus_(modulus) {}
    RingKind kind_;
    long long modulus_;
};

// One exact coefficient, tagged by its ring. Integers are checked 128-bit,
// residues are canonical in [0, m-1], fractions are in lowest terms with a
// positive denominator.
class Scalar {
public:
    Scalar() : ring_(CoefficientRing::integers()), num_(0), den_(1) {}

    static Scalar of(const CoefficientRing& ring, Integer value);
    static Scalar fraction(Integer num, Integer den);
    static Scalar zero(const CoefficientRing& ring) { return of(ring, 0); }
    static Scalar one(const CoefficientRing& ring) { return of(ring, 1); }

    const CoefficientRing& ring() const { return ring_; }
    const Integer& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_unit() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    // Multiplicative inverse; throws unless the value is a unit.
    Scalar inverse() const;
    // Exact division: over Q and Z/p this is ordinary division, over Z it
    // requires divisibility and throws otherwise.
    Scalar div_exact(const Scalar& o) const;

    friend bool operator==(const Scalar&, const Scalar&) = default;
    // Total order used for canonical sorting of output. Mathematically
    // meaningful for Z and Q; for residues it is the order of canonical
    // representatives.
    std::strong_ordering operator<=>(const Scalar& o) const;

    std::string str() const;
    static Scalar parse(const CoefficientRing& ring, const std::string& text);

private:
    Scalar(CoefficientRing ring, Integer num, Integer den) : ring_(ring), num_(num), den_(den) {}
    void check_same_ring(const Scalar& o) const;
    static Scalar make_rational(Integer num, Integer den);

    CoefficientRing ring_;
    Integer num_;
    Integer den_;  // 1 unless rationals
};

}  // namespace quandlekit
