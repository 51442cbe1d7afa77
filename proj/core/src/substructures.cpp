#include "quandlekit/substructures.hpp"

#include <algorithm>
#include <set>

namespace quandlekit {

RingQuandleCheck is_ring_quandle(const std::vector<RingElement>& elements) {
    RingQuandleCheck check;
    const int n = static_cast<int>(elements.size());
    if (n == 0) {
        check.violation = "empty set";
        return check;
    }
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const RingElement p = elements[static_cast<std::size_t>(i)] *
                                  elements[static_cast<std::size_t>(j)];
            int k = -1;
            for (int c = 0; c < n; ++c) {
                if (elements[static_cast<std::size_t>(c)] == p) {
                    k = c;
                    break;
                }
            }
            if (k < 0) {
                check.violation = "closure fails: (" + elements[static_cast<std::size_t>(i)].str() +
                                  ") * (" + elements[static_cast<std::size_t>(j)].str() + ") = " +
                                  p.str() + " is outside the set";
                return check;
            }
            table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = k;
        }
    }
    if (auto v = FiniteQuandle::check(table)) {
        check.violation = v->message;
        check.table = std::move(table);
        return check;
    }
    check.ok = true;
    check.table = std::move(table);
    return check;
}

namespace {

std::vector<RingElement> sorted_unique_nonzero(const std::vector<RingElement>& in) {
    std::vector<RingElement> out;
    for (const auto& e : in) {
        if (e.is_zero()) continue;
        bool dup = false;
        for (const auto& seen : out) {
            if (seen == e) {
                dup = true;
                break;
            }
        }
        if (!dup) out.push_back(e);
    }
    std::sort(out.begin(), out.end(),
              [](const RingElement& a, const RingElement& b) { return a.lex_less(b); });
    return out;
}

RingQuandle make_ring_quandle(std::vector<RingElement> elements) {
    auto check = is_ring_quandle(elements);
    return RingQuandle{std::move(elements), std::move(check.table)};
}

}  // namespace

std::vector<RingQuandle> maximal_quandles_finite(const std::vector<RingElement>& idempotents,
                                                 std::size_t max_elements) {
    const auto pool = sorted_unique_nonzero(idempotents);
    if (pool.empty()) return {};

    if (is_ring_quandle(pool).ok) {
        // Every quandle in the ring sits inside the idempotent set, so the
        // whole set being a quandle makes it the unique maximal one.
        std::vector<RingQuandle> out;
        out.push_back(make_ring_quandle(pool));
        return out;
    }
    if (pool.size() > max_elements) {
        throw BudgetExceededError("maximal quandle search over " + std::to_string(pool.size()) +
                                  " idempotents (cap " + std::to_string(max_elements) + ")");
    }

    const int n = static_cast<int>(pool.size());
    auto index_of = [&](const RingElement& e) {
        for (int c = 0; c < n; ++c) {
            if (pool[static_cast<std::size_t>(c)] == e) return c;
        }
        return -1;
    };
    // product table over the pool, -1 for products that leave it
    std::vector<std::vector<int>> prod(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                index_of(pool[static_cast<std::size_t>(i)] * pool[static_cast<std::size_t>(j)]);
        }
    }

    // closure of an index set within the pool; nullopt when a product escapes
    auto closure = [&](std::vector<int> s) -> std::optional<std::vector<int>> {
        std::set<int> have(s.begin(), s.end());
        std::vector<int> work(have.begin(), have.end());
        for (std::size_t a = 0; a < work.size(); ++a) {
            for (std::size_t b = 0; b < work.size(); ++b) {
                for (int k : {prod[static_cast<std::size_t>(work[a])][static_cast<std::size_t>(work[b])],
                              prod[static_cast<std::size_t>(work[b])][static_cast<std::size_t>(work[a])]}) {
                    if (k < 0) return std::nullopt;
                    if (have.insert(k).second) work.push_back(k);
                }
            }
        }
        return std::vector<int>(have.begin(), have.end());
    };

    // BFS over closed subsets: every closed set is reached from a singleton
    // closure by repeatedly adjoining one element and reclosing.
    std::set<std::vector<int>> closed;
    std::vector<std::vector<int>> queue;
    constexpr std::size_t kClosedSetCap = 200'000;
    for (int i = 0; i < n; ++i) {
        if (auto c = closure({i})) {
            if (closed.insert(*c).second) queue.push_back(*c);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto current = queue[head];
        for (int e = 0; e < n; ++e) {
            if (std::binary_search(current.begin(), current.end(), e)) continue;
            auto with = current;
            with.push_back(e);
            if (auto c = closure(std::move(with))) {
                if (closed.size() >= kClosedSetCap) {
                    throw BudgetExceededError("closed-subset enumeration cap hit");
                }
                if (closed.insert(*c).second) queue.push_back(*c);
            }
        }
    }

    std::vector<std::vector<int>> valid;
    for (const auto& s : closed) {
        std::vector<RingElement> elems;
        elems.reserve(s.size());
        for (int i : s) elems.push_back(pool[static_cast<std::size_t>(i)]);
        if (is_ring_quandle(elems).ok) valid.push_back(s);
    }
    std::vector<RingQuandle> out;
    for (const auto& s : valid) {
        bool maximal = true;
        for (const auto& t : valid) {
            if (s.size() < t.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                maximal = false;
                break;
            }
        }
        if (!maximal) continue;
        std::vector<RingElement> elems;
        for (int i : s) elems.push_back(pool[static_cast<std::size_t>(i)]);
        out.push_back(make_ring_quandle(std::move(elems)));
    }
    std::sort(out.begin(), out.end(), [](const RingQuandle& a, const RingQuandle& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        for (std::size_t i = 0; i < a.elements.size(); ++i) {
            if (!(a.elements[i] == b.elements[i])) return a.elements[i].lex_less(b.elements[i]);
        }
        return false;
    });
    return out;
}

Integer evaluate_param_poly(const ParamPoly& poly, const std::vector<Integer>& vars) {
    Integer total(0);
    for (const auto& [expo, coeff] : poly) {
        Integer term = coeff;
        for (std::size_t v = 0; v < expo.size(); ++v) {
            for (int e = 0; e < expo[v]; ++e) term *= vars[v];
        }
        total += term;
    }
    return total;
}

namespace {

bool next_grid_point(std::vector<Integer>& p, long long radius) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < Integer(radius)) {
            p[i] += 1;
            for (std::size_t j = 0; j < i; ++j) p[j] = Integer(-radius);
            return true;
        }
    }
    return false;
}

// All grid tuples of the given arity with |coordinate| <= radius.
std::vector<std::vector<Integer>> grid_points(std::size_t arity, long long radius) {
    std::vector<std::vector<Integer>> out;
    std::vector<Integer> p(arity, Integer(-radius));
    out.push_back(p);
    while (arity > 0 && next_grid_point(p, radius)) out.push_back(p);
    return out;
}

// Left-variable degree of a monomial exponent vector.
int left_degree(const std::vector<int>& expo, std::size_t left_arity) {
    int d = 0;
    for (std::size_t i = 0; i < left_arity && i < expo.size(); ++i) d += expo[i];
    return d;
}

// Cofactor expansion; the matrices here stay tiny (parameter arity <= 5).
Integer integer_determinant(const std::vector<std::vector<Integer>>& a) {
    const std::size_t k = a.size();
    if (k == 0) return Integer(1);
    if (k == 1) return a[0][0];
    Integer total(0);
    Integer sign(1);
    for (std::size_t c = 0; c < k; ++c) {
        std::vector<std::vector<Integer>> minor;
        for (std::size_t r = 1; r < k; ++r) {
            std::vector<Integer> row;
            for (std::size_t c2 = 0; c2 < k; ++c2) {
                if (c2 != c) row.push_back(a[r][c2]);
            }
            minor.push_back(std::move(row));
        }
        total += sign * a[0][c] * integer_determinant(minor);
        sign = -sign;
    }
    return total;
}

}  // namespace

ParametricCertificate certify_parametric_quandle(const ParametricQuandle& pq, long long grid_radius) {
    ParametricCertificate cert;
    cert.grid_radius = grid_radius;

    // Q1: every branch member is idempotent.
    IdempotentFamily family{pq.quandle, pq.name, pq.branches};
    const auto fam_cert = verify_family(family, grid_radius);
    cert.points_checked += fam_cert.points_checked;
    if (!fam_cert.certified) {
        cert.failure = "Q1: " + fam_cert.witness;
        return cert;
    }

    auto rule_for = [&](int left, int right) -> const BranchProductRule* {
        for (const auto& r : pq.rules) {
            if (r.left_branch == left && r.right_branch == right) return &r;
        }
        return nullptr;
    };

    // Closure: products match the stated rules on the grid. Both sides have
    // coordinate polynomials of degree <= 2 per parameter, so grid equality
    // certifies the identity.
    const int nb = static_cast<int>(pq.branches.size());
    for (int i = 0; i < nb; ++i) {
        for (int j = 0; j < nb; ++j) {
            const auto* rule = rule_for(i, j);
            if (rule == nullptr) {
                cert.failure = "no product rule for branch pair (" + std::to_string(i) + ", " +
                               std::to_string(j) + ")";
                return cert;
            }
            const auto& bi = pq.branches[static_cast<std::size_t>(i)];
            const auto& bj = pq.branches[static_cast<std::size_t>(j)];
            const auto& br = pq.branches[static_cast<std::size_t>(rule->result_branch)];
            if (rule->result_params.size() != br.params.size()) {
                cert.failure = "rule arity mismatch for branch pair (" + std::to_string(i) + ", " +
                               std::to_string(j) + ")";
                return cert;
            }
            for (const auto& pl : grid_points(bi.params.size(), grid_radius)) {
                for (const auto& pr : grid_points(bj.params.size(), grid_radius)) {
                    std::vector<Integer> vars = pl;
                    vars.insert(vars.end(), pr.begin(), pr.end());
                    std::vector<Integer> out_params;
                    out_params.reserve(rule->result_params.size());
                    for (const auto& poly : rule->result_params) {
                        out_params.push_back(evaluate_param_poly(poly, vars));
                    }
                    const RingElement lhs = evaluate_branch(pq.quandle, bi, pl) *
                                            evaluate_branch(pq.quandle, bj, pr);
                    const RingElement rhs = evaluate_branch(pq.quandle, br, out_params);
                    ++cert.points_checked;
                    if (!(lhs == rhs)) {
                        cert.failure = "closure rule fails for branches (" + bi.name + ") * (" +
                                       bj.name + ") at a grid point: " + lhs.str() + " vs " + rhs.str();
                        return cert;
                    }
                }
            }
        }
    }

    // Q2: for every fixed right element, each left branch maps into its
    // result branch by an affine parameter map with determinant +-1.
    for (int j = 0; j < nb; ++j) {
        const auto& bj = pq.branches[static_cast<std::size_t>(j)];
        for (int i = 0; i < nb; ++i) {
            const auto* rule = rule_for(i, j);
            const auto& bi = pq.branches[static_cast<std::size_t>(i)];
            const std::size_t kl = bi.params.size();
            // a translation must permute each branch, so the parameter arity
            // cannot change
            if (pq.branches[static_cast<std::size_t>(rule->result_branch)].params.size() != kl) {
                cert.failure = "translation changes branch arity for pair (" + bi.name + ", " +
                               bj.name + ")";
                return cert;
            }
            // left-degree must be <= 1 for affinity in the left parameters
            for (const auto& poly : rule->result_params) {
                for (const auto& [expo, coeff] : poly) {
                    if (!coeff.is_zero() && left_degree(expo, kl) > 1) {
                        cert.failure = "translation is not affine in the left parameters for pair (" +
                                       bi.name + ", " + bj.name + ")";
                        return cert;
                    }
                }
            }
            if (kl == 0) continue;
            for (const auto& pr : grid_points(bj.params.size(), grid_radius)) {
                // linear coefficient matrix at this right point
                std::vector<std::vector<Integer>> mat(kl, std::vector<Integer>(kl, Integer(0)));
                for (std::size_t out = 0; out < rule->result_params.size(); ++out) {
                    for (const auto& [expo, coeff] : rule->result_params[out]) {
                        int lvar = -1;
                        for (std::size_t v = 0; v < kl; ++v) {
                            if (v < expo.size() && expo[v] == 1) {
                                lvar = static_cast<int>(v);
                                break;
                            }
                        }
                        if (lvar < 0) continue;
                        Integer term = coeff;
                        for (std::size_t v = kl; v < expo.size(); ++v) {
                            for (int e = 0; e < expo[v]; ++e) term *= pr[v - kl];
                        }
                        mat[out][static_cast<std::size_t>(lvar)] += term;
                    }
                }
                const Integer det = integer_determinant(mat);
                ++cert.points_checked;
                if (!(det == Integer(1) || det == Integer(-1))) {
                    cert.failure = "right translation by branch '" + bj.name +
                                   "' is not unimodular on branch '" + bi.name +
                                   "' (det = " + det.str() + ")";
                    return cert;
                }
            }
        }
    }

    // Q3 on grid triples, directly on ring elements.
    for (int i = 0; i < nb; ++i) {
        for (int j = 0; j < nb; ++j) {
            for (int k = 0; k < nb; ++k) {
                const auto& bi = pq.branches[static_cast<std::size_t>(i)];
                const auto& bj = pq.branches[static_cast<std::size_t>(j)];
                const auto& bk = pq.branches[static_cast<std::size_t>(k)];
                for (const auto& pi : grid_points(bi.params.size(), grid_radius)) {
                    const RingElement x = evaluate_branch(pq.quandle, bi, pi);
                    for (const auto& pj : grid_points(bj.params.size(), grid_radius)) {
                        const RingElement y = evaluate_branch(pq.quandle, bj, pj);
                        for (const auto& pk : grid_points(bk.params.size(), grid_radius)) {
                            const RingElement z = evaluate_branch(pq.quandle, bk, pk);
                            ++cert.points_checked;
                            if (!((x * y) * z == (x * z) * (y * z))) {
                                cert.failure = "Q3 fails on a grid triple";
                                return cert;
                            }
                        }
                    }
                }
            }
        }
    }

    cert.certified = true;
    cert.detail = "idempotence, stated product rules, unimodular right translations and Q3 verified on "
                  "the grid; all coordinates have degree <= 2 per parameter, so " +
                  std::to_string(2 * grid_radius + 1) + " points per axis certify the identities";
    return cert;
}

namespace {

ParamPoly poly_const(Integer c, std::size_t arity) {
    ParamPoly p;
    if (!c.is_zero()) p[std::vector<int>(arity, 0)] = c;
    return p;
}

ParamPoly poly_var(std::size_t var, std::size_t arity, Integer coeff = Integer(1)) {
    ParamPoly p;
    std::vector<int> e(arity, 0);
    e[var] = 1;
    p[e] = coeff;
    return p;
}

ParamPoly poly_add(ParamPoly a, const ParamPoly& b) {
    for (const auto& [e, c] : b) {
        auto it = a.find(e);
        Integer next = (it == a.end()) ? c : it->second + c;
        if (next.is_zero()) {
            if (it != a.end()) a.erase(it);
        } else {
            a[e] = next;
        }
    }
    return a;
}

}  // namespace

ParametricQuandle builtin_parametric_quandle(const std::string& name) {
    if (name.size() >= 2 && (name[0] == 'T' || name[0] == 't')) {
        const auto family = builtin_family(name);
        ParametricQuandle pq{family.quandle, "mq(Z[" + family.name + "])", family.branches, {}};
        const std::size_t k = pq.branches[0].params.size();
        BranchProductRule rule{0, 0, 0, {}};
        // u * v = u in a trivial quandle ring: output params = left params
        for (std::size_t i = 0; i < k; ++i) rule.result_params.push_back(poly_var(i, 2 * k));
        pq.rules.push_back(std::move(rule));
        return pq;
    }
    if (name == "R4" || name == "r4") {
        const auto family = builtin_family("R4");
        ParametricQuandle pq{family.quandle, "M in Z[R4]", family.branches, {}};
        // vars: (left param, right param)
        const auto alpha = poly_var(0, 2);
        const auto one_minus_alpha = poly_add(poly_const(1, 2), poly_var(0, 2, Integer(-1)));
        pq.rules.push_back({0, 0, 0, {alpha}});             // M1 * M1: identity
        pq.rules.push_back({0, 1, 0, {one_minus_alpha}});   // M1 * M2: alpha -> 1 - alpha
        pq.rules.push_back({1, 0, 1, {one_minus_alpha}});   // M2 * M1: beta -> 1 - beta
        pq.rules.push_back({1, 1, 1, {alpha}});             // M2 * M2: identity
        return pq;
    }
    if (name == "Cs4:N1" || name == "cs4:n1") {
        auto family = builtin_family("Cs4");
        ParametricQuandle pq{family.quandle, "N1 in Z[Cs4]", {}, {}};
        pq.branches.push_back(family.branches[0]);  // (1 - b) x + b y
        // constant branch {z}
        FamilyBranch zbranch{"z", {Integer(0), Integer(0), Integer(1)}, {}, {}};
        pq.branches.push_back(zbranch);
        const auto beta = poly_var(0, 2);
        const auto one_minus_beta_l = poly_add(poly_const(1, 1), poly_var(0, 1, Integer(-1)));
        pq.rules.push_back({0, 0, 0, {beta}});                         // line * line: identity
        pq.rules.push_back({0, 1, 0, {one_minus_beta_l}});             // line * z: b -> 1 - b
        pq.rules.push_back({1, 0, 1, {}});                             // z * line = z
        pq.rules.push_back({1, 1, 1, {}});                             // z * z = z
        return pq;
    }
    if (name == "Cs4:N2" || name == "cs4:n2") {
        auto family = builtin_family("Cs4");
        ParametricQuandle pq{family.quandle, "N2 in Z[Cs4]", {family.branches[1]}, {}};
        pq.rules.push_back({0, 0, 0, {poly_var(0, 2)}});  // trivial quandle
        return pq;
    }
    throw UnknownNameError("no built-in parametric quandle named '" + name + "'");
}

NotExtendableCertificate certify_cs4_not_extendable(long long alpha_range, long long grid_radius) {
    NotExtendableCertificate cert;
    const auto family = builtin_family("Cs4");
    const auto& line = family.branches[0];   // (1 - b) x + b y
    const auto& cone = family.branches[1];   // a x + a y + (1 - 2a) z

    // Verify the induced map on the line against actual ring products:
    // w(b) * u(a) = line(1 - b - 2a + 4ab).
    for (long long a = -grid_radius; a <= grid_radius; ++a) {
        for (long long b = -grid_radius; b <= grid_radius; ++b) {
            const RingElement w = evaluate_branch(family.quandle, line, {Integer(b)});
            const RingElement u = evaluate_branch(family.quandle, cone, {Integer(a)});
            const Integer bprime = Integer(1) - Integer(b) - Integer(2) * Integer(a) +
                                   Integer(4) * Integer(a) * Integer(b);
            const RingElement expect = evaluate_branch(family.quandle, line, {bprime});
            if (!(w * u == expect)) {
                cert.detail = "induced parameter map disagrees with ring products";
                return cert;
            }
        }
    }

    // S_u is surjective on the line iff b = (g + 2a - 1) / (4a - 1) is an
    // integer for every g, i.e. iff 4a - 1 is a unit, i.e. a = 0.
    for (long long a = -alpha_range; a <= alpha_range; ++a) {
        ObstructionCase c;
        c.alpha = Integer(a);
        c.linear_coefficient = Integer(4) * Integer(a) - Integer(1);
        const Integer coeff_abs = c.linear_coefficient.abs();
        c.bijective = coeff_abs == Integer(1);
        if (a == 0 && !c.bijective) {
            cert.detail = "expected a = 0 to give a bijection";
            return cert;
        }
        if (!c.bijective) {
            // gamma with (gamma + 2a - 1) not divisible by (4a - 1):
            // gamma = 2a + 1 leaves remainder 1.
            const Integer gamma = Integer(2) * Integer(a) + Integer(1);
            const Integer numerator = gamma + Integer(2) * Integer(a) - Integer(1);
            if (numerator.divisible_by(c.linear_coefficient)) {
                cert.detail = "unreachable-target witness failed at a = " + std::to_string(a);
                return cert;
            }
            c.unreachable = "gamma = " + gamma.str() + ": (gamma + 2a - 1) = " + numerator.str() +
                            " is not divisible by (4a - 1) = " + c.linear_coefficient.str();
        }
        cert.cases.push_back(std::move(c));
    }
    cert.certified = true;
    cert.detail = "right translation by a(x + y - 2z) + z maps the line parameter b to "
                  "1 - b - 2a + 4ab; the linear coefficient 4a - 1 is a unit only at a = 0, so "
                  "the solvability test b = (g + 2a - 1)/(4a - 1) fails for some g whenever a != 0";
    return cert;
}

MqReductionReport mq_reduction_check(QuandlePtr quandle, long long modulus, long long box_bound,
                                     long long budget) {
    MqReductionReport report;
    const auto integral_idempotents = idempotents_box(quandle, box_bound, budget);
    report.integral = maximal_quandles_finite(integral_idempotents);
    const auto modular_idempotents = idempotents_modular(quandle, modulus, budget);
    report.modular = maximal_quandles_finite(modular_idempotents);

    const CoefficientRing zm = CoefficientRing::integers_mod(modulus);
    auto reduce = [&](const RingElement& e) {
        std::vector<Integer> v;
        for (const auto& s : e.dense()) v.push_back(s.numerator());
        return RingElement::from_dense(quandle, zm, v);
    };

    report.hit.assign(report.modular.size(), false);
    for (const auto& q : report.integral) {
        // compare the reduced element set against each modular maximal quandle
        std::vector<RingElement> image;
        for (const auto& e : q.elements) {
            const RingElement r = reduce(e);
            bool dup = false;
            for (const auto& seen : image) {
                if (seen == r) {
                    dup = true;
                    break;
                }
            }
            if (!dup) image.push_back(r);
        }
        std::sort(image.begin(), image.end(),
                  [](const RingElement& a, const RingElement& b) { return a.lex_less(b); });
        std::vector<int> image_as_indices;
        for (std::size_t m = 0; m < report.modular.size(); ++m) {
            const auto& mq = report.modular[m];
            if (mq.elements.size() != image.size()) continue;
            bool equal = true;
            for (std::size_t i = 0; i < image.size(); ++i) {
                if (!(mq.elements[i] == image[i])) {
                    equal = false;
                    break;
                }
            }
            if (equal) {
                report.hit[m] = true;
                image_as_indices.push_back(static_cast<int>(m));
            }
        }
        report.images.push_back(std::move(image_as_indices));
    }
    report.surjective = std::all_of(report.hit.begin(), report.hit.end(), [](bool h) { return h; });
    return report;
}

}  // namespace quandlekit
