#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quandlekit/checked_int.hpp"
#include "quandlekit/scalar.hpp"

namespace quandlekit {

// Quandle structure on all of Z given by a closed integer formula:
//   core-z     a*b = 2b - a          (Core of the infinite cyclic group)
//   alex-z(c)  a*b = c*a + (1-c)*b   (Alexander rule, c != 0)
// Q1/Q3 are identities of the rule; they are spot-verified on a sample at
// construction time.
class IntQuandle {
public:
    enum class Rule { core_z, alex_z };

    static IntQuandle core();
    static IntQuandle alex(long long c);

    Rule rule() const { return rule_; }
    long long parameter() const { return c_; }
    std::string name() const;

    Integer mul(const Integer& a, const Integer& b) const;

private:
    IntQuandle(Rule rule, long long c);
    void verify_axioms_sampled() const;

    Rule rule_;
    long long c_;
};

// Finitely supported element of Z[Q] for an integer-indexed quandle: the
// same sparse shape as RingElement, with integer labels.
class IntRingElement {
public:
    explicit IntRingElement(CoefficientRing ring) : ring_(ring) {}

    static IntRingElement basis(const CoefficientRing& ring, Integer label);

    const CoefficientRing& ring() const { return ring_; }
    const std::map<Integer, Scalar>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int support_size() const { return static_cast<int>(coeffs_.size()); }

    void add_term(const Integer& label, const Scalar& coeff);

    IntRingElement operator+(const IntRingElement& o) const;
    IntRingElement operator-(const IntRingElement& o) const;
    IntRingElement mul(const IntQuandle& q, const IntRingElement& o) const;
    bool operator==(const IntRingElement& o) const {
        return ring_ == o.ring_ && coeffs_ == o.coeffs_;
    }

    std::string str() const;

private:
    CoefficientRing ring_;
    std::map<Integer, Scalar> coeffs_;
};

struct MonotonicityViolation {
    Integer x, y, z;
    Integer left, right;  // the two compared products
};

struct MonotonicityReport {
    std::uint64_t trials = 0;
    std::uint64_t violations = 0;
    std::vector<MonotonicityViolation> witnesses;  // first few
};

enum class OrderSide { left, right };

// Checks the chosen side's monotonicity law under the natural integer order
// on random triples: right means x < y implies x*z < y*z, left means
// x < y implies z*x < z*y.
MonotonicityReport order_monotonicity_sample(const IntQuandle& q, OrderSide side,
                                             std::uint64_t trials, std::uint64_t seed,
                                             long long range = 1000);

}  // namespace quandlekit
