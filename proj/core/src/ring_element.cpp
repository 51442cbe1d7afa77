#include "quandlekit/ring_element.hpp"

#include <cctype>
#include <sstream>

namespace quandlekit {

RingElement::RingElement(QuandlePtr quandle, CoefficientRing ring)
    : quandle_(std::move(quandle)), ring_(ring) {
    if (!quandle_) throw Error("null quandle");
}

RingElement RingElement::zero(QuandlePtr quandle, const CoefficientRing& ring) {
    return RingElement(std::move(quandle), ring);
}

RingElement RingElement::basis(QuandlePtr quandle, const CoefficientRing& ring, int index) {
    return term(std::move(quandle), ring, index, Scalar::one(ring));
}

RingElement RingElement::term(QuandlePtr quandle, const CoefficientRing& ring, int index, Scalar coeff) {
    RingElement e(std::move(quandle), ring);
    if (index < 0 || index >= e.quandle().size()) {
        throw Error("basis index " + std::to_string(index) + " out of range");
    }
    e.set_coeff(index, coeff);
    return e;
}

RingElement RingElement::from_dense(QuandlePtr quandle, const CoefficientRing& ring,
                                    const std::vector<Integer>& coeffs) {
    RingElement e(std::move(quandle), ring);
    if (static_cast<int>(coeffs.size()) != e.quandle().size()) {
        throw DimensionMismatchError("dense vector length vs quandle order");
    }
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        e.set_coeff(static_cast<int>(i), Scalar::of(ring, coeffs[i]));
    }
    return e;
}

RingElement RingElement::from_dense_scalars(QuandlePtr quandle, const CoefficientRing& ring,
                                            const std::vector<Scalar>& coeffs) {
    RingElement e(std::move(quandle), ring);
    if (static_cast<int>(coeffs.size()) != e.quandle().size()) {
        throw DimensionMismatchError("dense vector length vs quandle order");
    }
    for (std::size_t i = 0; i < coeffs.size(); ++i) e.set_coeff(static_cast<int>(i), coeffs[i]);
    return e;
}

Scalar RingElement::coeff(int index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? Scalar::zero(ring_) : it->second;
}

std::vector<Scalar> RingElement::dense() const {
    std::vector<Scalar> out(static_cast<std::size_t>(quandle().size()), Scalar::zero(ring_));
    for (const auto& [i, c] : coeffs_) out[static_cast<std::size_t>(i)] = c;
    return out;
}

void RingElement::check_compatible(const RingElement& o) const {
    if (ring_ != o.ring_) throw RingMismatchError(ring_.str() + " vs " + o.ring_.str());
    if (!(quandle() == o.quandle())) throw Error("elements live over different quandles");
}

void RingElement::set_coeff(int index, const Scalar& value) {
    if (value.ring() != ring_) throw RingMismatchError("coefficient ring");
    if (value.is_zero()) {
        coeffs_.erase(index);
    } else {
        coeffs_.insert_or_assign(index, value);
    }
}

RingElement RingElement::operator+(const RingElement& o) const {
    check_compatible(o);
    RingElement out = *this;
    for (const auto& [i, c] : o.coeffs_) out.set_coeff(i, out.coeff(i) + c);
    return out;
}

RingElement RingElement::operator-(const RingElement& o) const {
    check_compatible(o);
    RingElement out = *this;
    for (const auto& [i, c] : o.coeffs_) out.set_coeff(i, out.coeff(i) - c);
    return out;
}

RingElement RingElement::operator-() const {
    RingElement out(quandle_, ring_);
    for (const auto& [i, c] : coeffs_) out.coeffs_.emplace(i, -c);
    return out;
}

RingElement RingElement::operator*(const RingElement& o) const {
    check_compatible(o);
    RingElement out(quandle_, ring_);
    for (const auto& [i, a] : coeffs_) {
        for (const auto& [j, b] : o.coeffs_) {
            const int k = quandle().mul(i, j);
            out.set_coeff(k, out.coeff(k) + a * b);
        }
    }
    return out;
}

RingElement RingElement::scaled(const Scalar& s) const {
    RingElement out(quandle_, ring_);
    for (const auto& [i, c] : coeffs_) out.set_coeff(i, c * s);
    return out;
}

bool RingElement::operator==(const RingElement& o) const {
    return ring_ == o.ring_ && quandle() == o.quandle() && coeffs_ == o.coeffs_;
}

bool RingElement::lex_less(const RingElement& o) const {
    check_compatible(o);
    const auto a = dense();
    const auto b = o.dense();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

std::string RingElement::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [i, c] : coeffs_) {
        const bool negative = c < Scalar::zero(ring_) && ring_.kind() != RingKind::integers_mod;
        Scalar mag = negative ? -c : c;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        const std::string name = quandle().has_labels() ? quandle().label(i)
                                                        : "q" + std::to_string(i);
        if (mag.is_one()) {
            out << name;
        } else {
            out << mag.str() << "*" << name;
        }
    }
    return out.str();
}

namespace {

int resolve_label(const FiniteQuandle& q, const std::string& name) {
    if (q.has_labels()) {
        const int idx = q.index_of_label(name);
        if (idx >= 0) return idx;
    }
    if (name.size() >= 2 && name[0] == 'q') {
        bool digits = true;
        for (std::size_t i = 1; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9') {
                digits = false;
                break;
            }
        }
        if (digits) {
            const int idx = std::stoi(name.substr(1));
            if (idx >= 0 && idx < q.size()) return idx;
        }
    }
    throw ParseError("unknown basis label '" + name + "'");
}

}  // namespace

RingElement RingElement::parse(QuandlePtr quandle, const CoefficientRing& ring, const std::string& text) {
    std::string s;
    for (char c : text) {
        if (c != ' ' && c != '\t') s.push_back(c);
    }
    if (s.empty()) throw ParseError("empty ring element literal");
    RingElement out = RingElement::zero(quandle, ring);
    if (s.front() == '[') {
        if (s.back() != ']') throw ParseError("unterminated dense vector literal");
        std::vector<Scalar> coeffs;
        std::string body = s.substr(1, s.size() - 2);
        std::size_t pos = 0;
        while (pos <= body.size()) {
            auto comma = body.find(',', pos);
            const std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                                : comma - pos);
            if (!tok.empty()) coeffs.push_back(Scalar::parse(ring, tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return from_dense_scalars(std::move(quandle), ring, coeffs);
    }
    if (s == "0") return out;
    std::size_t pos = 0;
    bool expect_term = true;
    Scalar sign = Scalar::one(ring);
    while (pos < s.size()) {
        if (!expect_term) {
            if (s[pos] == '+') {
                sign = Scalar::one(ring);
            } else if (s[pos] == '-') {
                sign = -Scalar::one(ring);
            } else {
                throw ParseError("expected '+' or '-' at '" + s.substr(pos) + "'");
            }
            ++pos;
            expect_term = true;
            continue;
        }
        if (s[pos] == '+' || s[pos] == '-') {
            if (s[pos] == '-') sign = -sign;
            ++pos;
            continue;
        }
        // term: [coeff '*'] label  or bare coeff is invalid (no unit in R[Q])
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string term = s.substr(pos, end - pos);
        Scalar coeff = sign;
        std::string label = term;
        auto star = term.find('*');
        if (star != std::string::npos) {
            coeff = sign * Scalar::parse(ring, term.substr(0, star));
            label = term.substr(star + 1);
        } else if (!term.empty() && (std::isdigit(static_cast<unsigned char>(term[0])) != 0)) {
            // allow "2a0" without the star? keep strict: digits must be followed by '*'
            throw ParseError("coefficient must be separated from label with '*' in '" + term + "'");
        }
        if (label.empty()) throw ParseError("missing basis label in '" + term + "'");
        const int idx = resolve_label(out.quandle(), label);
        out.set_coeff(idx, out.coeff(idx) + coeff);
        sign = Scalar::one(ring);
        expect_term = false;
        pos = end;
    }
    if (expect_term) throw ParseError("dangling sign in '" + text + "'");
    return out;
}

Scalar augmentation(const RingElement& u) {
    Scalar total = Scalar::zero(u.ring());
    for (const auto& [i, c] : u.coeffs()) {
        (void)i;
        total += c;
    }
    return total;
}

ExtRingElement::ExtRingElement(RingElement body, Scalar unit)
    : body_(std::move(body)), unit_(std::move(unit)) {
    if (unit_.ring() != body_.ring()) throw RingMismatchError("extended ring unit coefficient");
}

ExtRingElement ExtRingElement::embed(RingElement body) {
    Scalar z = Scalar::zero(body.ring());
    return ExtRingElement(std::move(body), z);
}

ExtRingElement ExtRingElement::identity(QuandlePtr quandle, const CoefficientRing& ring) {
    return ExtRingElement(RingElement::zero(std::move(quandle), ring), Scalar::one(ring));
}

ExtRingElement ExtRingElement::operator+(const ExtRingElement& o) const {
    return ExtRingElement(body_ + o.body_, unit_ + o.unit_);
}

ExtRingElement ExtRingElement::operator-(const ExtRingElement& o) const {
    return ExtRingElement(body_ - o.body_, unit_ - o.unit_);
}

ExtRingElement ExtRingElement::operator*(const ExtRingElement& o) const {
    // (b1 + u1 e)(b2 + u2 e) = b1 b2 + u2 b1 + u1 b2 + u1 u2 e
    RingElement body = body_ * o.body_ + body_.scaled(o.unit_) + o.body_.scaled(unit_);
    return ExtRingElement(std::move(body), unit_ * o.unit_);
}

std::string ExtRingElement::str() const {
    if (unit_.is_zero()) return body_.str();
    std::string e_part = unit_.is_one() ? "e" : unit_.str() + "*e";
    if (body_.is_zero()) return e_part;
    return body_.str() + " + " + e_part;
}

Scalar augmentation(const ExtRingElement& u) { return augmentation(u.body()) + u.unit(); }

AugIdealBasis aug_ideal_basis(QuandlePtr quandle, const CoefficientRing& ring, int base_index) {
    const int n = quandle->size();
    if (base_index < 0 || base_index >= n) {
        throw Error("base index " + std::to_string(base_index) + " out of range");
    }
    AugIdealBasis basis{base_index, {}};
    for (int i = 0; i < n; ++i) {
        if (i == base_index) continue;
        basis.vectors.push_back(RingElement::basis(quandle, ring, i) -
                                RingElement::basis(quandle, ring, base_index));
    }
    return basis;
}

bool delta_square_is_zero(QuandlePtr quandle, const CoefficientRing& ring) {
    const auto basis = aug_ideal_basis(quandle, ring, 0);
    for (const auto& u : basis.vectors) {
        for (const auto& v : basis.vectors) {
            if (!(u * v).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace quandlekit
