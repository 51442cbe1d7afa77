#include "quandlekit/int_quandle.hpp"

#include <sstream>

#include "quandlekit/rng.hpp"

namespace quandlekit {

IntQuandle::IntQuandle(Rule rule, long long c) : rule_(rule), c_(c) {
    verify_axioms_sampled();
}

IntQuandle IntQuandle::core() { return IntQuandle(Rule::core_z, -1); }

IntQuandle IntQuandle::alex(long long c) {
    if (c == 0) throw Error("alex-z parameter must be nonzero");
    return IntQuandle(Rule::alex_z, c);
}

std::string IntQuandle::name() const {
    return rule_ == Rule::core_z ? "CoreZ" : "AlexZ(" + std::to_string(c_) + ")";
}

Integer IntQuandle::mul(const Integer& a, const Integer& b) const {
    switch (rule_) {
        case Rule::core_z:
            return Integer(2) * b - a;
        case Rule::alex_z:
            return Integer(c_) * a + Integer(1 - c_) * b;
    }
    throw Error("bad rule");
}

void IntQuandle::verify_axioms_sampled() const {
    Rng rng(12345);
    for (int t = 0; t < 100; ++t) {
        const Integer x(rng.next_in(-50, 50));
        const Integer y(rng.next_in(-50, 50));
        const Integer z(rng.next_in(-50, 50));
        if (mul(x, x) != x) throw Error("rule violates Q1");
        if (mul(mul(x, y), z) != mul(mul(x, z), mul(y, z))) throw Error("rule violates Q3");
    }
}

IntRingElement IntRingElement::basis(const CoefficientRing& ring, Integer label) {
    IntRingElement e(ring);
    e.add_term(label, Scalar::one(ring));
    return e;
}

void IntRingElement::add_term(const Integer& label, const Scalar& coeff) {
    if (coeff.ring() != ring_) throw RingMismatchError("coefficient ring");
    auto it = coeffs_.find(label);
    Scalar next = (it == coeffs_.end()) ? coeff : it->second + coeff;
    if (next.is_zero()) {
        if (it != coeffs_.end()) coeffs_.erase(it);
    } else {
        coeffs_.insert_or_assign(label, next);
    }
}

IntRingElement IntRingElement::operator+(const IntRingElement& o) const {
    if (ring_ != o.ring_) throw RingMismatchError("element rings");
    IntRingElement out = *this;
    for (const auto& [l, c] : o.coeffs_) out.add_term(l, c);
    return out;
}

IntRingElement IntRingElement::operator-(const IntRingElement& o) const {
    if (ring_ != o.ring_) throw RingMismatchError("element rings");
    IntRingElement out = *this;
    for (const auto& [l, c] : o.coeffs_) out.add_term(l, -c);
    return out;
}

IntRingElement IntRingElement::mul(const IntQuandle& q, const IntRingElement& o) const {
    if (ring_ != o.ring_) throw RingMismatchError("element rings");
    IntRingElement out(ring_);
    for (const auto& [a, ca] : coeffs_) {
        for (const auto& [b, cb] : o.coeffs_) {
            out.add_term(q.mul(a, b), ca * cb);
        }
    }
    return out;
}

std::string IntRingElement::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [l, c] : coeffs_) {
        const bool negative = c < Scalar::zero(ring_) && ring_.kind() != RingKind::integers_mod;
        Scalar mag = negative ? -c : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (mag.is_one()) {
            out << "x" << l.str();
        } else {
            out << mag.str() << "*x" << l.str();
        }
    }
    return out.str();
}

MonotonicityReport order_monotonicity_sample(const IntQuandle& q, OrderSide side,
                                             std::uint64_t trials, std::uint64_t seed,
                                             long long range) {
    Rng rng(seed);
    MonotonicityReport report;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Integer x(rng.next_in(-range, range));
        Integer y(rng.next_in(-range, range));
        const Integer z(rng.next_in(-range, range));
        if (x == y) continue;
        if (y < x) std::swap(x, y);
        ++report.trials;
        const Integer lhs = side == OrderSide::right ? q.mul(x, z) : q.mul(z, x);
        const Integer rhs = side == OrderSide::right ? q.mul(y, z) : q.mul(z, y);
        if (!(lhs < rhs)) {
            ++report.violations;
            if (report.witnesses.size() < 5) {
                report.witnesses.push_back({x, y, z, lhs, rhs});
            }
        }
    }
    return report;
}

}  // namespace quandlekit
