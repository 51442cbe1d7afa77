#include "quandlekit/scalar.hpp"

namespace quandlekit {

namespace {

bool is_prime(long long m) {
    if (m < 2) return false;
    for (long long d = 2; d * d <= m; ++d) {
        if (m % d == 0) return false;
    }
    return true;
}

}  // namespace

CoefficientRing CoefficientRing::integers_mod(long long m) {
    if (m < 2) throw Error("modulus must be >= 2, got " + std::to_string(m));
    return CoefficientRing(RingKind::integers_mod, m);
}

bool CoefficientRing::is_integral_domain() const {
    switch (kind_) {
        case RingKind::integers:
        case RingKind::rationals:
            return true;
        case RingKind::integers_mod:
            return is_prime(modulus_);
    }
    return false;
}

bool CoefficientRing::has_invertible_two() const {
    switch (kind_) {
        case RingKind::integers:
            return false;
        case RingKind::rationals:
            return true;
        case RingKind::integers_mod:
            return modulus_ % 2 != 0;
    }
    return false;
}

std::string CoefficientRing::str() const {
    switch (kind_) {
        case RingKind::integers:
            return "z";
        case RingKind::rationals:
            return "q";
        case RingKind::integers_mod:
            return "zmod:" + std::to_string(modulus_);
    }
    return "?";
}

CoefficientRing CoefficientRing::parse(const std::string& text) {
    if (text == "z" || text == "Z") return integers();
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("zmod:", 0) == 0) {
        const std::string tail = text.substr(5);
        if (tail.empty()) throw ParseError("missing modulus in '" + text + "'");
        long long m = 0;
        for (char c : tail) {
            if (c < '0' || c > '9') throw ParseError("bad modulus in '" + text + "'");
            m = m * 10 + (c - '0');
            if (m > (1LL << 40)) throw ParseError("modulus too large in '" + text + "'");
        }
        return integers_mod(m);
    }
    throw ParseError("unknown ring '" + text + "' (expected z, q or zmod:<m>)");
}

Scalar Scalar::of(const CoefficientRing& ring, Integer value) {
    switch (ring.kind()) {
        case RingKind::integers:
            return Scalar(ring, value, 1);
        case RingKind::rationals:
            return Scalar(ring, value, 1);
        case RingKind::integers_mod:
            return Scalar(ring, value.floor_mod(Integer(ring.modulus())), 1);
    }
    throw Error("bad ring kind");
}

Scalar Scalar::make_rational(Integer num, Integer den) {
    if (den.is_zero()) throw Error("zero denominator");
    if (den.is_negative()) {
        num = -num;
        den = -den;
    }
    Integer g = gcd(num, den);
    if (!g.is_zero() && !g.is_one()) {
        num = num.quot(g);
        den = den.quot(g);
    }
    if (num.is_zero()) den = 1;
    return Scalar(CoefficientRing::rationals(), num, den);
}

Scalar Scalar::fraction(Integer num, Integer den) { return make_rational(num, den); }

void Scalar::check_same_ring(const Scalar& o) const {
    if (ring_ != o.ring_) {
        throw RingMismatchError(ring_.str() + " vs " + o.ring_.str());
    }
}

bool Scalar::is_unit() const {
    switch (ring_.kind()) {
        case RingKind::integers:
            return num_ == Integer(1) || num_ == Integer(-1);
        case RingKind::rationals:
            return !num_.is_zero();
        case RingKind::integers_mod:
            return gcd(num_, Integer(ring_.modulus())).is_one();
    }
    return false;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_ring(o);
    switch (ring_.kind()) {
        case RingKind::integers:
            return Scalar(ring_, num_ + o.num_, 1);
        case RingKind::integers_mod:
            return of(ring_, num_ + o.num_);
        case RingKind::rationals:
            return make_rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    throw Error("bad ring kind");
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_ring(o);
    switch (ring_.kind()) {
        case RingKind::integers:
            return Scalar(ring_, num_ * o.num_, 1);
        case RingKind::integers_mod:
            return of(ring_, num_ * o.num_);
        case RingKind::rationals:
            return make_rational(num_ * o.num_, den_ * o.den_);
    }
    throw Error("bad ring kind");
}

Scalar Scalar::operator-() const {
    switch (ring_.kind()) {
        case RingKind::integers:
            return Scalar(ring_, -num_, 1);
        case RingKind::integers_mod:
            return of(ring_, -num_);
        case RingKind::rationals:
            return Scalar(ring_, -num_, den_);
    }
    throw Error("bad ring kind");
}

Scalar Scalar::inverse() const {
    switch (ring_.kind()) {
        case RingKind::integers:
            if (!is_unit()) throw Error("integer " + num_.str() + " is not a unit");
            return *this;
        case RingKind::rationals:
            if (num_.is_zero()) throw Error("division by zero");
            return make_rational(den_, num_);
        case RingKind::integers_mod: {
            // extended Euclid on (num, m)
            Integer m(ring_.modulus());
            Integer a = num_, b = m, x0 = 1, x1 = 0;
            while (!b.is_zero()) {
                Integer q = a.quot(b);
                Integer t = a - q * b;
                a = b;
                b = t;
                t = x0 - q * x1;
                x0 = x1;
                x1 = t;
            }
            if (!a.is_one()) {
                throw Error("residue " + num_.str() + " is not a unit mod " + std::to_string(ring_.modulus()));
            }
            return of(ring_, x0);
        }
    }
    throw Error("bad ring kind");
}

Scalar Scalar::div_exact(const Scalar& o) const {
    check_same_ring(o);
    if (ring_.kind() == RingKind::integers) {
        if (o.num_.is_zero()) throw Error("division by zero");
        if (!num_.divisible_by(o.num_)) {
            throw Error("inexact integer division " + num_.str() + " / " + o.num_.str());
        }
        return Scalar(ring_, num_.quot(o.num_), 1);
    }
    return *this * o.inverse();
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
    check_same_ring(o);
    if (ring_.kind() == RingKind::rationals) {
        return (num_ * o.den_) <=> (o.num_ * den_);
    }
    return num_ <=> o.num_;
}

std::string Scalar::str() const {
    if (ring_.kind() == RingKind::rationals && !den_.is_one()) {
        return num_.str() + "/" + den_.str();
    }
    return num_.str();
}

Scalar Scalar::parse(const CoefficientRing& ring, const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        if (ring.kind() != RingKind::rationals) {
            throw ParseError("fraction literal '" + text + "' needs ring q");
        }
        return fraction(Integer::parse(text.substr(0, slash)), Integer::parse(text.substr(slash + 1)));
    }
    return of(ring, Integer::parse(text));
}

}  // namespace quandlekit
