#include "quandlekit/nonassoc.hpp"

#include <algorithm>

#include "quandlekit/quandle.hpp"

namespace quandlekit {

DerivedAlgebra::DerivedAlgebra(QuandlePtr quandle, CoefficientRing ring, AlgebraKind kind)
    : quandle_(std::move(quandle)), ring_(ring), kind_(kind) {
    if (kind_ == AlgebraKind::plus && !ring_.has_invertible_two()) {
        throw Error("plus algebra needs 2 invertible in the coefficient ring (" + ring_.str() + ")");
    }
}

RingElement DerivedAlgebra::mul(const RingElement& a, const RingElement& b) const {
    switch (kind_) {
        case AlgebraKind::ring:
            return a * b;
        case AlgebraKind::minus:
            return a * b - b * a;
        case AlgebraKind::plus: {
            const RingElement sum = a * b + b * a;
            const Scalar half = ring_.kind() == RingKind::rationals
                                    ? Scalar::fraction(1, 2)
                                    : Scalar::of(ring_, 2).inverse();
            return sum.scaled(half);
        }
    }
    throw Error("bad algebra kind");
}

Identity parse_identity(const std::string& name) {
    if (name == "left-alternative") return Identity::left_alternative;
    if (name == "right-alternative") return Identity::right_alternative;
    if (name == "elastic") return Identity::elastic;
    if (name == "jordan") return Identity::jordan;
    if (name == "associative") return Identity::associative;
    if (name == "lie-jacobi") return Identity::lie_jacobi;
    if (name == "anticommutative") return Identity::anticommutative;
    throw UnknownNameError("identity '" + name + "'");
}

std::string identity_name(Identity id) {
    switch (id) {
        case Identity::left_alternative: return "left-alternative";
        case Identity::right_alternative: return "right-alternative";
        case Identity::elastic: return "elastic";
        case Identity::jordan: return "jordan";
        case Identity::associative: return "associative";
        case Identity::lie_jacobi: return "lie-jacobi";
        case Identity::anticommutative: return "anticommutative";
    }
    return "?";
}

bool identity_is_multilinear(Identity id) {
    switch (id) {
        case Identity::associative:
        case Identity::lie_jacobi:
        case Identity::anticommutative:
            return true;
        default:
            return false;
    }
}

namespace {

// lhs/rhs of a two-variable identity instance
std::pair<RingElement, RingElement> evaluate_pair_identity(const DerivedAlgebra& alg, Identity id,
                                                           const RingElement& a,
                                                           const RingElement& b) {
    switch (id) {
        case Identity::left_alternative:
            return {alg.mul(alg.mul(a, a), b), alg.mul(a, alg.mul(a, b))};
        case Identity::right_alternative:
            return {alg.mul(a, alg.mul(b, b)), alg.mul(alg.mul(a, b), b)};
        case Identity::elastic:
            return {alg.mul(alg.mul(a, b), a), alg.mul(a, alg.mul(b, a))};
        case Identity::jordan:
            return {alg.mul(alg.mul(alg.mul(a, a), b), a), alg.mul(alg.mul(a, a), alg.mul(b, a))};
        default:
            throw Error("not a two-variable identity");
    }
}

// elements with |coefficients| <= bound ordered by (coefficient sum, lex)
std::vector<RingElement> box_by_weight(const QuandlePtr& q, const CoefficientRing& ring,
                                       long long bound) {
    const int n = q->size();
    std::vector<std::vector<Integer>> vecs;
    std::vector<Integer> v(static_cast<std::size_t>(n), Integer(-bound));
    while (true) {
        vecs.push_back(v);
        std::size_t i = 0;
        while (i < v.size() && v[i] == Integer(bound)) {
            v[i] = Integer(-bound);
            ++i;
        }
        if (i == v.size()) break;
        v[i] += 1;
    }
    std::sort(vecs.begin(), vecs.end(), [](const auto& a, const auto& b) {
        Integer wa(0), wb(0);
        for (const auto& x : a) wa += x.abs();
        for (const auto& x : b) wb += x.abs();
        if (wa != wb) return wa < wb;
        return a < b;
    });
    std::vector<RingElement> out;
    out.reserve(vecs.size());
    for (const auto& vec : vecs) out.push_back(RingElement::from_dense(q, ring, vec));
    return out;
}

}  // namespace

IdentityReport check_identity(const DerivedAlgebra& algebra, Identity identity, long long bound,
                              std::uint64_t trials) {
    IdentityReport report;
    report.identity = identity;
    const QuandlePtr& q = algebra.quandle();
    const CoefficientRing& ring = algebra.ring();
    const int n = q->size();

    if (identity_is_multilinear(identity)) {
        report.exact = true;
        auto basis = [&](int i) { return RingElement::basis(q, ring, i); };
        if (identity == Identity::anticommutative) {
            for (int i = 0; i < n; ++i) {
                const RingElement diag = algebra.mul(basis(i), basis(i));
                ++report.cases_checked;
                if (!diag.is_zero()) {
                    report.counterexample_found = true;
                    report.witness_lhs = diag.str();
                    report.witness_rhs = "0";
                    report.witness_elements = "x = basis " + std::to_string(i);
                    break;
                }
                for (int j = 0; j < n && !report.counterexample_found; ++j) {
                    const RingElement lhs = algebra.mul(basis(i), basis(j));
                    const RingElement rhs = -algebra.mul(basis(j), basis(i));
                    ++report.cases_checked;
                    if (!(lhs == rhs)) {
                        report.counterexample_found = true;
                        report.witness_lhs = lhs.str();
                        report.witness_rhs = rhs.str();
                        report.witness_elements =
                            "basis pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
                    }
                }
                if (report.counterexample_found) break;
            }
        } else {
            for (int i = 0; i < n && !report.counterexample_found; ++i) {
                for (int j = 0; j < n && !report.counterexample_found; ++j) {
                    for (int k = 0; k < n; ++k) {
                        RingElement lhs = RingElement::zero(q, ring);
                        RingElement rhs = RingElement::zero(q, ring);
                        if (identity == Identity::associative) {
                            lhs = algebra.mul(algebra.mul(basis(i), basis(j)), basis(k));
                            rhs = algebra.mul(basis(i), algebra.mul(basis(j), basis(k)));
                        } else {  // lie_jacobi
                            lhs = algebra.mul(algebra.mul(basis(i), basis(j)), basis(k)) +
                                  algebra.mul(algebra.mul(basis(j), basis(k)), basis(i)) +
                                  algebra.mul(algebra.mul(basis(k), basis(i)), basis(j));
                        }
                        ++report.cases_checked;
                        if (!(lhs == rhs)) {
                            report.counterexample_found = true;
                            report.witness_lhs = lhs.str();
                            report.witness_rhs = rhs.str();
                            report.witness_elements = "basis triple (" + std::to_string(i) + ", " +
                                                      std::to_string(j) + ", " + std::to_string(k) + ")";
                            break;
                        }
                    }
                }
            }
        }
        report.verdict = report.counterexample_found
                             ? "fails (exact, multilinear identity refuted on a basis tuple)"
                             : "holds (exact by multilinearity, all basis tuples check out)";
        return report;
    }

    // Non-multilinear: scan the coefficient box in ascending weight so the
    // first counterexample is minimal by coefficient sum. Holding on the box
    // is evidence, not proof.
    const auto elements = box_by_weight(q, ring, bound);
    for (const auto& a : elements) {
        if (a.is_zero()) continue;
        bool budget_left = true;
        for (const auto& b : elements) {
            if (b.is_zero()) continue;
            if (report.cases_checked >= trials) {
                budget_left = false;
                break;
            }
            ++report.cases_checked;
            if (identity == Identity::jordan) {
                // commutativity is part of the definition
                const RingElement ab = algebra.mul(a, b);
                const RingElement ba = algebra.mul(b, a);
                if (!(ab == ba)) {
                    report.counterexample_found = true;
                    report.witness_lhs = ab.str();
                    report.witness_rhs = ba.str();
                    report.witness_elements = "commutativity: a = " + a.str() + ", b = " + b.str();
                    break;
                }
            }
            const auto [lhs, rhs] = evaluate_pair_identity(algebra, identity, a, b);
            if (!(lhs == rhs)) {
                report.counterexample_found = true;
                report.witness_lhs = lhs.str();
                report.witness_rhs = rhs.str();
                report.witness_elements = "a = " + a.str() + ", b = " + b.str();
                break;
            }
        }
        if (report.counterexample_found || !budget_left) break;
    }
    report.verdict = report.counterexample_found
                         ? "fails (counterexample found, minimal by coefficient sum in the box)"
                         : "no counterexample with |coefficients| <= " + std::to_string(bound) +
                               " (" + std::to_string(report.cases_checked) + " pairs; not a proof)";
    return report;
}

std::optional<PowerAssociativityWitness> power_associative_witness(QuandlePtr quandle,
                                                                   const CoefficientRing& ring,
                                                                   long long bound,
                                                                   long long max_bound) {
    // the non-power-associativity statement assumes characteristic != 2, 3
    if (ring.characteristic() == 2 || ring.characteristic() == 3) {
        throw Error("power-associativity probe excludes characteristic 2 and 3 (got " + ring.str() +
                    ")");
    }
    for (long long b = bound; b <= max_bound; ++b) {
        const auto elements = box_by_weight(quandle, ring, b);
        for (const auto& x : elements) {
            if (x.is_zero()) continue;
            const RingElement xx = x * x;
            const RingElement lhs = xx * xx;
            const RingElement rhs = (xx * x) * x;
            if (!(lhs == rhs)) {
                return PowerAssociativityWitness{x, lhs, rhs, b};
            }
        }
    }
    return std::nullopt;
}

namespace {

LatticeBasis span_of(const QuandlePtr& q, const CoefficientRing& ring,
                     const std::vector<RingElement>& gens) {
    LatticeBasis basis(ring, static_cast<std::size_t>(q->size()));
    for (const auto& g : gens) basis = basis.inserted(g.dense());
    return basis;
}

}  // namespace

LieAnalysisReport trivial_quandle_lie_analysis(int n, const CoefficientRing& ring) {
    LieAnalysisReport report;
    report.n = n;
    const QuandlePtr q = share(make_trivial(n));
    const DerivedAlgebra minus(q, ring, AlgebraKind::minus);

    auto basis = [&](int i) { return RingElement::basis(q, ring, i); };

    // L^2 = span of x_i o x_j
    std::vector<RingElement> l2_gens;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            l2_gens.push_back(minus.mul(basis(i), basis(j)));
        }
    }
    const LatticeBasis l2 = span_of(q, ring, l2_gens);
    report.l2_rank = l2.rank();

    // chain basis {x_i - x_{i+1}}
    std::vector<RingElement> chain;
    for (int i = 0; i + 1 < n; ++i) chain.push_back(basis(i) - basis(i + 1));
    report.l2_basis_is_chain = l2 == span_of(q, ring, chain);

    // L^3 = span of products of L^2 basis with L basis, both orders
    std::vector<RingElement> l3_gens;
    for (const auto& row : l2.rows()) {
        const RingElement e = RingElement::from_dense_scalars(q, ring, row);
        for (int j = 0; j < n; ++j) {
            l3_gens.push_back(minus.mul(e, basis(j)));
            l3_gens.push_back(minus.mul(basis(j), e));
        }
    }
    report.l2_equals_l3 = l2 == span_of(q, ring, l3_gens);

    // (L^2)^2
    bool all_zero = true;
    for (const auto& ru : l2.rows()) {
        const RingElement u = RingElement::from_dense_scalars(q, ring, ru);
        for (const auto& rv : l2.rows()) {
            const RingElement v = RingElement::from_dense_scalars(q, ring, rv);
            if (!minus.mul(u, v).is_zero()) {
                all_zero = false;
                break;
            }
        }
        if (!all_zero) break;
    }
    report.l2_squared_zero = all_zero;

    // J^2 vs J over rings with a half
    report.j_supported = ring.has_invertible_two();
    if (report.j_supported) {
        const DerivedAlgebra plus(q, ring, AlgebraKind::plus);
        std::vector<RingElement> j2_gens;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                j2_gens.push_back(plus.mul(basis(i), basis(j)));
            }
        }
        std::vector<RingElement> j_gens;
        for (int i = 0; i < n; ++i) j_gens.push_back(basis(i));
        report.j2_equals_j = span_of(q, ring, j2_gens) == span_of(q, ring, j_gens);
    }
    return report;
}

}  // namespace quandlekit
