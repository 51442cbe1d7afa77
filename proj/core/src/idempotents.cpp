#include "quandlekit/idempotents.hpp"

#include <algorithm>
#include <cmath>

#include "quandlekit/catalog.hpp"

namespace quandlekit {

namespace {

void check_budget(int n, long long values_per_coord, long long budget, const char* what) {
    double total = 1.0;
    for (int i = 0; i < n; ++i) total *= static_cast<double>(values_per_coord);
    if (total > static_cast<double>(budget)) {
        throw BudgetExceededError(std::string(what) + ": " + std::to_string(values_per_coord) +
                                  "^" + std::to_string(n) + " candidates exceed budget " +
                                  std::to_string(budget));
    }
}

bool is_idempotent(const FiniteQuandle& q, const std::vector<Integer>& v, long long modulus) {
    const int n = q.size();
    std::vector<Integer> sq(static_cast<std::size_t>(n), Integer(0));
    for (int i = 0; i < n; ++i) {
        if (v[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (v[static_cast<std::size_t>(j)].is_zero()) continue;
            auto& slot = sq[static_cast<std::size_t>(q.mul(i, j))];
            slot += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)];
        }
    }
    for (int i = 0; i < n; ++i) {
        Integer d = sq[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(i)];
        if (modulus > 0) d = d.floor_mod(Integer(modulus));
        if (!d.is_zero()) return false;
    }
    return true;
}

}  // namespace

std::vector<RingElement> idempotents_modular(QuandlePtr quandle, long long modulus,
                                             long long budget) {
    if (modulus < 2) throw Error("modulus must be >= 2");
    const int n = quandle->size();
    check_budget(n, modulus, budget, "modular idempotent enumeration");
    const CoefficientRing ring = CoefficientRing::integers_mod(modulus);

    // residues e with e^2 = e mod m; the last coordinate of a candidate must
    // bring the total augmentation to one of these.
    std::vector<long long> idem_residues;
    for (long long e = 0; e < modulus; ++e) {
        if ((e * e) % modulus == e) idem_residues.push_back(e);
    }

    std::vector<RingElement> out;
    std::vector<Integer> v(static_cast<std::size_t>(n), Integer(0));

    auto emit = [&]() {
        if (is_idempotent(*quandle, v, modulus)) {
            out.push_back(RingElement::from_dense(quandle, ring, v));
        }
    };

    // odometer over coordinates 0..n-2, augmentation-pruned last coordinate
    auto rec = [&](auto&& self, int coord, long long partial_sum) -> void {
        if (coord == n - 1) {
            for (long long e : idem_residues) {
                long long t = ((e - partial_sum) % modulus + modulus) % modulus;
                v[static_cast<std::size_t>(coord)] = Integer(t);
                emit();
            }
            return;
        }
        for (long long t = 0; t < modulus; ++t) {
            v[static_cast<std::size_t>(coord)] = Integer(t);
            self(self, coord + 1, (partial_sum + t) % modulus);
        }
    };
    if (n == 1) {
        for (long long e : idem_residues) {
            v[0] = Integer(e);
            emit();
        }
    } else {
        rec(rec, 0, 0);
    }
    std::sort(out.begin(), out.end(),
              [](const RingElement& a, const RingElement& b) { return a.lex_less(b); });
    return out;
}

std::vector<RingElement> idempotents_box(QuandlePtr quandle, long long bound, long long budget) {
    if (bound < 0) throw Error("bound must be >= 0");
    const int n = quandle->size();
    check_budget(n, 2 * bound + 1, budget, "box idempotent enumeration");
    const CoefficientRing ring = CoefficientRing::integers();

    std::vector<RingElement> out;
    std::vector<Integer> v(static_cast<std::size_t>(n), Integer(0));

    auto emit = [&]() {
        if (is_idempotent(*quandle, v, 0)) {
            out.push_back(RingElement::from_dense(quandle, ring, v));
        }
    };

    auto rec = [&](auto&& self, int coord, long long partial_sum) -> void {
        if (coord == n - 1) {
            // eps(z) in {0, 1} over an integral domain
            for (long long target : {0LL, 1LL}) {
                const long long t = target - partial_sum;
                if (t < -bound || t > bound) continue;
                v[static_cast<std::size_t>(coord)] = Integer(t);
                emit();
            }
            return;
        }
        for (long long t = -bound; t <= bound; ++t) {
            v[static_cast<std::size_t>(coord)] = Integer(t);
            self(self, coord + 1, partial_sum + t);
        }
    };
    if (n == 1) {
        for (long long t : {0LL, 1LL}) {
            if (t > bound) continue;
            v[0] = Integer(t);
            emit();
        }
    } else {
        rec(rec, 0, 0);
    }
    std::sort(out.begin(), out.end(),
              [](const RingElement& a, const RingElement& b) { return a.lex_less(b); });
    return out;
}

std::vector<RingElement> nonzero(const std::vector<RingElement>& elements) {
    std::vector<RingElement> out;
    for (const auto& e : elements) {
        if (!e.is_zero()) out.push_back(e);
    }
    return out;
}

RingElement evaluate_branch(const QuandlePtr& quandle, const FamilyBranch& branch,
                            const std::vector<Integer>& params) {
    if (params.size() != branch.columns.size()) {
        throw DimensionMismatchError("parameter count for branch '" + branch.name + "'");
    }
    std::vector<Integer> v = branch.offset;
    for (std::size_t p = 0; p < params.size(); ++p) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] += params[p] * branch.columns[p][i];
        }
    }
    return RingElement::from_dense(quandle, CoefficientRing::integers(), v);
}

namespace {

// Iterates all integer tuples with |p_i| <= radius.
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

}  // namespace

FamilyCertificate verify_family(const IdempotentFamily& family, long long grid_radius) {
    FamilyCertificate cert;
    cert.grid_radius = grid_radius;
    for (const auto& branch : family.branches) {
        std::vector<Integer> p(branch.columns.size(), Integer(-grid_radius));
        while (true) {
            const RingElement z = evaluate_branch(family.quandle, branch, p);
            const RingElement defect = z * z - z;
            ++cert.points_checked;
            if (!defect.is_zero()) {
                std::string params;
                for (const auto& x : p) params += (params.empty() ? "" : ", ") + x.str();
                cert.witness = "branch '" + branch.name + "' at (" + params +
                               "): z^2 - z = " + defect.str();
                cert.detail = "refuted by grid evaluation";
                return cert;
            }
            if (p.empty() || !next_grid_point(p, grid_radius)) break;
        }
    }
    cert.certified = true;
    cert.detail =
        "each coordinate of z(p)^2 - z(p) has degree <= 2 in every parameter; vanishing on " +
        std::to_string(2 * grid_radius + 1) + " points per axis certifies the identity";
    return cert;
}

namespace {

// Solve offset + M p = target over the integers (unique rational solution
// demanded; registry branches have independent columns).
std::optional<std::vector<Integer>> solve_branch(const FamilyBranch& branch,
                                                 const std::vector<Scalar>& target) {
    const std::size_t n = branch.offset.size();
    const std::size_t k = branch.columns.size();
    const CoefficientRing q = CoefficientRing::rationals();
    // augmented matrix [M | t - offset] over Q
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(k + 1, Scalar::zero(q)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < k; ++c) {
            m[i][c] = Scalar::of(q, branch.columns[c][i]);
        }
        m[i][k] = Scalar::of(q, target[i].numerator()) - Scalar::of(q, branch.offset[i]);
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_of_col(k, SIZE_MAX);
    for (std::size_t c = 0; c < k && row < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = row; i < n; ++i) {
            if (!m[i][c].is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv == n) continue;
        std::swap(m[row], m[piv]);
        const Scalar inv = m[row][c].inverse();
        for (auto& x : m[row]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || m[i][c].is_zero()) continue;
            const Scalar f = m[i][c];
            for (std::size_t x = 0; x <= k; ++x) m[i][x] -= f * m[row][x];
        }
        pivot_of_col[c] = row;
        ++row;
    }
    // inconsistent?
    for (std::size_t i = row; i < n; ++i) {
        if (!m[i][k].is_zero()) return std::nullopt;
    }
    std::vector<Integer> sol(k, Integer(0));
    for (std::size_t c = 0; c < k; ++c) {
        if (pivot_of_col[c] == SIZE_MAX) return std::nullopt;  // underdetermined; not used by registry
        const Scalar& val = m[pivot_of_col[c]][k];
        if (!val.denominator().is_one()) return std::nullopt;  // non-integral parameter
        sol[c] = val.numerator();
    }
    return sol;
}

}  // namespace

CoverageReport family_covers_box(const IdempotentFamily& family, long long bound, long long budget) {
    CoverageReport report;
    const auto box = nonzero(idempotents_box(family.quandle, bound, budget));
    report.covers_all = true;
    for (const auto& z : box) {
        const auto dense = z.dense();
        bool solved = false;
        for (std::size_t b = 0; b < family.branches.size() && !solved; ++b) {
            if (auto params = solve_branch(family.branches[b], dense)) {
                // confirm exactly (guards against inconsistent overdetermined rows)
                if (evaluate_branch(family.quandle, family.branches[b], *params) == z) {
                    report.assignments.push_back({z, static_cast<int>(b), *params});
                    solved = true;
                }
            }
        }
        if (!solved) {
            report.covers_all = false;
            report.uncovered.push_back(z);
        }
    }
    return report;
}

IdempotentFamily builtin_family(const std::string& catalog_name) {
    const std::string key = catalog::normalize_name(catalog_name);
    const QuandlePtr q = catalog::quandle(key);
    const int n = q->size();
    IdempotentFamily family{q, key, {}};

    auto basis_vec = [n](int i) {
        std::vector<Integer> v(static_cast<std::size_t>(n), Integer(0));
        v[static_cast<std::size_t>(i)] = 1;
        return v;
    };
    auto diff_vec = [n](int i, int j) {
        std::vector<Integer> v(static_cast<std::size_t>(n), Integer(0));
        v[static_cast<std::size_t>(i)] = 1;
        v[static_cast<std::size_t>(j)] = Integer(-1);
        return v;
    };

    if (key.size() >= 2 && key[0] == 'T') {
        // x0 + sum_i d_i (x_i - x0)
        FamilyBranch branch;
        branch.name = "x0 + Delta";
        branch.offset = basis_vec(0);
        for (int i = 1; i < n; ++i) {
            branch.columns.push_back(diff_vec(i, 0));
            branch.params.push_back("d" + std::to_string(i));
        }
        family.branches.push_back(std::move(branch));
        return family;
    }
    if (key == "R3") {
        for (int i = 0; i < 3; ++i) {
            family.branches.push_back({"a" + std::to_string(i), basis_vec(i), {}, {}});
        }
        return family;
    }
    if (key == "R4") {
        family.branches.push_back({"t=1: a0 + alpha*(a2 - a0)", basis_vec(0), {diff_vec(2, 0)}, {"alpha"}});
        family.branches.push_back({"t=0: a1 + beta*(a3 - a1)", basis_vec(1), {diff_vec(3, 1)}, {"beta"}});
        return family;
    }
    if (key == "Cs4") {
        family.branches.push_back({"(1 - beta)*x + beta*y", basis_vec(0), {diff_vec(1, 0)}, {"beta"}});
        // alpha*x + alpha*y + (1 - 2 alpha)*z
        std::vector<Integer> col(static_cast<std::size_t>(n), Integer(0));
        col[0] = 1;
        col[1] = 1;
        col[2] = Integer(-2);
        family.branches.push_back({"alpha*(x + y - 2z) + z", basis_vec(2), {col}, {"alpha"}});
        return family;
    }
    throw UnknownNameError("no built-in idempotent family for '" + catalog_name + "'");
}

}  // namespace quandlekit
