#include "quandlekit/ring_automorphisms.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace quandlekit {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Integer>>& columns) {
    const int cols = static_cast<int>(columns.size());
    if (cols == 0) throw Error("matrix needs at least one column");
    const int rows = static_cast<int>(columns[0].size());
    IntMatrix m(rows, cols);
    for (int c = 0; c < cols; ++c) {
        if (static_cast<int>(columns[static_cast<std::size_t>(c)].size()) != rows) {
            throw DimensionMismatchError("ragged column list");
        }
        for (int r = 0; r < rows; ++r) {
            m.at(r, c) = columns[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
        }
    }
    return m;
}

IntMatrix IntMatrix::from_permutation(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    IntMatrix m(n, n);
    for (int j = 0; j < n; ++j) m.at(perm[static_cast<std::size_t>(j)], j) = 1;
    return m;
}

std::vector<Integer> IntMatrix::column(int c) const {
    std::vector<Integer> out(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) out[static_cast<std::size_t>(r)] = at(r, c);
    return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatchError("matrix product");
    IntMatrix out(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < o.cols_; ++c) {
            Integer acc(0);
            for (int k = 0; k < cols_; ++k) acc += at(r, k) * o.at(k, c);
            out.at(r, c) = acc;
        }
    }
    return out;
}

Integer IntMatrix::determinant() const {
    if (rows_ != cols_) throw DimensionMismatchError("determinant of non-square matrix");
    const int n = rows_;
    if (n == 0) return Integer(1);
    if (n == 1) return at(0, 0);
    Integer total(0);
    Integer sign(1);
    for (int c = 0; c < n; ++c) {
        IntMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c2 = 0; c2 < n; ++c2) {
                if (c2 == c) continue;
                minor.at(r - 1, cc++) = at(r, c2);
            }
        }
        total += sign * at(0, c) * minor.determinant();
        sign = -sign;
    }
    return total;
}

std::optional<IntMatrix> IntMatrix::inverse_unimodular() const {
    const Integer det = determinant();
    if (!(det == Integer(1) || det == Integer(-1))) return std::nullopt;
    const int n = rows_;
    IntMatrix adj(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            IntMatrix minor(n - 1, n - 1);
            int rr = 0;
            for (int r2 = 0; r2 < n; ++r2) {
                if (r2 == r) continue;
                int cc = 0;
                for (int c2 = 0; c2 < n; ++c2) {
                    if (c2 == c) continue;
                    minor.at(rr, cc++) = at(r2, c2);
                }
                ++rr;
            }
            Integer cof = minor.determinant();
            if ((r + c) % 2 == 1) cof = -cof;
            adj.at(c, r) = cof;  // transpose
        }
    }
    if (det == Integer(-1)) {
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) adj.at(r, c) = -adj.at(r, c);
        }
    }
    return adj;
}

std::string IntMatrix::str() const {
    std::ostringstream out;
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            if (c) out << " ";
            out << at(r, c).str();
        }
        out << "\n";
    }
    return out.str();
}

bool is_multiplicative(const QuandlePtr& q, const IntMatrix& m) {
    const int n = q->size();
    if (m.rows() != n || m.cols() != n) return false;
    const CoefficientRing z = CoefficientRing::integers();
    std::vector<RingElement> cols;
    cols.reserve(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) cols.push_back(RingElement::from_dense(q, z, m.column(c)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!(cols[static_cast<std::size_t>(i)] * cols[static_cast<std::size_t>(j)] ==
                  cols[static_cast<std::size_t>(q->mul(i, j))])) {
                return false;
            }
        }
    }
    return true;
}

std::vector<IntMatrix> automorphisms_bounded(QuandlePtr quandle, long long bound, long long budget) {
    const int n = quandle->size();
    const auto candidates = nonzero(idempotents_box(quandle, bound, budget));
    const int m = static_cast<int>(candidates.size());

    std::vector<std::vector<Integer>> cand_dense;
    cand_dense.reserve(static_cast<std::size_t>(m));
    for (const auto& c : candidates) {
        std::vector<Integer> v;
        for (const auto& s : c.dense()) v.push_back(s.numerator());
        cand_dense.push_back(std::move(v));
    }

    // chosen[j] = candidate index of column j; forced[j] = required element
    std::vector<int> chosen(static_cast<std::size_t>(n), -1);
    std::vector<std::optional<RingElement>> forced(static_cast<std::size_t>(n));
    std::vector<IntMatrix> out;

    auto column_element = [&](int j) { return candidates[static_cast<std::size_t>(chosen[static_cast<std::size_t>(j)])]; };

    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            std::vector<std::vector<Integer>> cols;
            cols.reserve(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) cols.push_back(cand_dense[static_cast<std::size_t>(chosen[static_cast<std::size_t>(j)])]);
            IntMatrix mat = IntMatrix::from_columns(cols);
            const Integer det = mat.determinant();
            if (!(det == Integer(1) || det == Integer(-1))) return;
            if (is_multiplicative(quandle, mat)) out.push_back(std::move(mat));
            return;
        }
        for (int c = 0; c < m; ++c) {
            if (forced[static_cast<std::size_t>(depth)] &&
                !(candidates[static_cast<std::size_t>(c)] == *forced[static_cast<std::size_t>(depth)])) {
                continue;
            }
            chosen[static_cast<std::size_t>(depth)] = c;
            // derive constraints from placed pairs (i, depth) and (depth, i)
            std::vector<std::pair<int, std::optional<RingElement>>> saved;
            bool consistent = true;
            for (int i = 0; i <= depth && consistent; ++i) {
                for (const auto& [a, b] : {std::pair<int, int>{i, depth}, std::pair<int, int>{depth, i}}) {
                    const int target = quandle->mul(a, b);
                    const RingElement product = column_element(a) * column_element(b);
                    if (target <= depth) {
                        if (!(product == column_element(target))) {
                            consistent = false;
                            break;
                        }
                    } else {
                        if (forced[static_cast<std::size_t>(target)]) {
                            if (!(*forced[static_cast<std::size_t>(target)] == product)) {
                                consistent = false;
                                break;
                            }
                        } else {
                            saved.emplace_back(target, forced[static_cast<std::size_t>(target)]);
                            forced[static_cast<std::size_t>(target)] = product;
                        }
                    }
                }
            }
            if (consistent) self(self, depth + 1);
            for (auto it = saved.rbegin(); it != saved.rend(); ++it) {
                forced[static_cast<std::size_t>(it->first)] = it->second;
            }
            chosen[static_cast<std::size_t>(depth)] = -1;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

IntMatrix t2_family_a(long long alpha) {
    IntMatrix m(2, 2);
    m.at(0, 0) = Integer(1 - alpha);
    m.at(0, 1) = Integer(-alpha);
    m.at(1, 0) = Integer(alpha);
    m.at(1, 1) = Integer(1 + alpha);
    return m;
}

IntMatrix t2_family_b(long long alpha) {
    IntMatrix m(2, 2);
    m.at(0, 0) = Integer(1 - alpha);
    m.at(0, 1) = Integer(2 - alpha);
    m.at(1, 0) = Integer(alpha);
    m.at(1, 1) = Integer(alpha - 1);
    return m;
}

IntMatrix r4_matrix_a() { return IntMatrix::from_permutation({0, 3, 2, 1}); }
IntMatrix r4_matrix_b() { return IntMatrix::from_permutation({2, 1, 0, 3}); }
IntMatrix r4_matrix_tau() { return IntMatrix::from_permutation({1, 0, 3, 2}); }

namespace {

RelationInstance check_relation(std::string text, const IntMatrix& lhs, const IntMatrix& rhs) {
    return RelationInstance{std::move(text), lhs == rhs};
}

}  // namespace

RelationCertificate verify_t2_relations(long long range) {
    RelationCertificate cert;
    for (long long a = -range; a <= range; ++a) {
        for (long long b = -range; b <= range; ++b) {
            cert.instances.push_back(check_relation(
                "A(" + std::to_string(a) + ")*A(" + std::to_string(b) + ")=A(" + std::to_string(a + b) + ")",
                t2_family_a(a) * t2_family_a(b), t2_family_a(a + b)));
            cert.instances.push_back(check_relation(
                "B(" + std::to_string(a) + ")*B(" + std::to_string(b) + ")=A(" + std::to_string(a - b) + ")",
                t2_family_b(a) * t2_family_b(b), t2_family_a(a - b)));
        }
        cert.instances.push_back(check_relation(
            "B(1)*A(" + std::to_string(a) + ")*B(1)=A(" + std::to_string(-a) + ")",
            t2_family_b(1) * t2_family_a(a) * t2_family_b(1), t2_family_a(-a)));
    }
    cert.instances.push_back(check_relation("B(1)*B(1)=A(0)", t2_family_b(1) * t2_family_b(1),
                                            IntMatrix::identity(2)));
    cert.all_hold = std::all_of(cert.instances.begin(), cert.instances.end(),
                                [](const RelationInstance& r) { return r.holds; });
    return cert;
}

RelationCertificate verify_r4_relations() {
    RelationCertificate cert;
    const IntMatrix a = r4_matrix_a();
    const IntMatrix b = r4_matrix_b();
    const IntMatrix tau = r4_matrix_tau();
    const IntMatrix id = IntMatrix::identity(4);
    cert.instances.push_back(check_relation("A*A=I", a * a, id));
    cert.instances.push_back(check_relation("B*B=I", b * b, id));
    cert.instances.push_back(check_relation("A*B=B*A", a * b, b * a));
    cert.instances.push_back(check_relation("tau*A*tau=B", tau * a * tau, b));
    cert.instances.push_back(check_relation("tau*tau=I", tau * tau, id));
    cert.all_hold = std::all_of(cert.instances.begin(), cert.instances.end(),
                                [](const RelationInstance& r) { return r.holds; });
    return cert;
}

GroupClosureResult group_order_small(const std::vector<IntMatrix>& generators, std::size_t cap) {
    GroupClosureResult result;
    if (generators.empty()) return result;
    std::map<std::vector<long long>, int> index;
    auto key = [](const IntMatrix& m) {
        std::vector<long long> k;
        k.reserve(static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols()));
        for (int r = 0; r < m.rows(); ++r) {
            for (int c = 0; c < m.cols(); ++c) k.push_back(m.at(r, c).to_long_long());
        }
        return k;
    };
    std::vector<IntMatrix> elements;
    auto add = [&](const IntMatrix& m) -> bool {
        auto [it, inserted] = index.emplace(key(m), static_cast<int>(elements.size()));
        (void)it;
        if (inserted) elements.push_back(m);
        return inserted;
    };
    for (const auto& g : generators) add(g);
    for (std::size_t head = 0; head < elements.size(); ++head) {
        if (elements.size() > cap) return result;  // finite = false
        for (std::size_t other = 0; other < elements.size(); ++other) {
            const IntMatrix p1 = elements[head] * elements[other];
            const IntMatrix p2 = elements[other] * elements[head];
            add(p1);
            add(p2);
            if (elements.size() > cap) return result;
        }
    }
    // stable canonical order, then rebuild the table
    std::sort(elements.begin(), elements.end());
    result.finite = true;
    result.elements = elements;
    index.clear();
    for (std::size_t i = 0; i < elements.size(); ++i) index[key(elements[i])] = static_cast<int>(i);
    result.cayley.assign(elements.size(), std::vector<int>(elements.size(), -1));
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = 0; j < elements.size(); ++j) {
            result.cayley[i][j] = index.at(key(elements[i] * elements[j]));
        }
    }
    return result;
}

}  // namespace quandlekit
