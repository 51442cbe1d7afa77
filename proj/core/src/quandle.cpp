#include "quandlekit/quandle.hpp"

#include <algorithm>
#include <numeric>

namespace quandlekit {

namespace {

std::string triple(int i, int j, int k) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")";
}

}  // namespace

std::optional<AxiomViolation> FiniteQuandle::check(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) {
        return AxiomViolation{QuandleAxiom::shape, -1, -1, -1, "empty table"};
    }
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n) {
            return AxiomViolation{QuandleAxiom::shape, i, -1, -1,
                                  "ragged table: row " + std::to_string(i) + " has " +
                                      std::to_string(table[i].size()) + " entries, expected " +
                                      std::to_string(n)};
        }
        for (int j = 0; j < n; ++j) {
            if (table[i][j] < 0 || table[i][j] >= n) {
                return AxiomViolation{QuandleAxiom::shape, i, j, -1,
                                      "entry out of range at (" + std::to_string(i) + ", " +
                                          std::to_string(j) + ")"};
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        if (table[i][i] != i) {
            return AxiomViolation{QuandleAxiom::q1, i, -1, -1,
                                  "Q1 fails at i=" + std::to_string(i) + ": x*x != x"};
        }
    }
    for (int j = 0; j < n; ++j) {
        std::vector<bool> seen(n, false);
        for (int i = 0; i < n; ++i) {
            if (seen[table[i][j]]) {
                return AxiomViolation{QuandleAxiom::q2, i, j, -1,
                                      "Q2 fails: column " + std::to_string(j) +
                                          " is not a permutation (duplicate at i=" + std::to_string(i) + ")"};
            }
            seen[table[i][j]] = true;
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                if (table[table[i][j]][k] != table[table[i][k]][table[j][k]]) {
                    return AxiomViolation{QuandleAxiom::q3, i, j, k,
                                          "Q3 fails at " + triple(i, j, k)};
                }
            }
        }
    }
    return std::nullopt;
}

FiniteQuandle FiniteQuandle::verified(std::vector<std::vector<int>> table,
                                      std::vector<std::string> labels) {
    if (auto v = check(table)) throw QuandleAxiomError(*v);
    if (!labels.empty() && labels.size() != table.size()) {
        throw Error("label count " + std::to_string(labels.size()) + " does not match order " +
                    std::to_string(table.size()));
    }
    return FiniteQuandle(std::move(table), std::move(labels));
}

FiniteQuandle::FiniteQuandle(std::vector<std::vector<int>> table, std::vector<std::string> labels)
    : n_(static_cast<int>(table.size())), table_(std::move(table)), labels_(std::move(labels)) {}

const std::string& FiniteQuandle::label(int i) const {
    static const std::string empty;
    if (labels_.empty()) return empty;
    return labels_[static_cast<std::size_t>(i)];
}

int FiniteQuandle::index_of_label(const std::string& label) const {
    for (int i = 0; i < n_; ++i) {
        if (labels_[static_cast<std::size_t>(i)] == label) return i;
    }
    return -1;
}

std::vector<int> FiniteQuandle::right_translation(int y) const {
    std::vector<int> s(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) s[static_cast<std::size_t>(i)] = table_[i][y];
    return s;
}

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> cayley, int identity, std::vector<int> inverse)
    : n_(static_cast<int>(cayley.size())),
      cayley_(std::move(cayley)),
      identity_(identity),
      inverse_(std::move(inverse)) {}

FiniteGroup FiniteGroup::verified(std::vector<std::vector<int>> cayley) {
    const int n = static_cast<int>(cayley.size());
    if (n == 0) throw Error("empty group table");
    for (const auto& row : cayley) {
        if (static_cast<int>(row.size()) != n) throw Error("ragged group table");
        for (int x : row) {
            if (x < 0 || x >= n) throw Error("group table entry out of range");
        }
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]]) {
                    throw Error("group table not associative at " + triple(a, b, c));
                }
            }
        }
    }
    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n; ++a) {
            if (cayley[e][a] != a || cayley[a][e] != a) {
                ok = false;
                break;
            }
        }
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw Error("group table has no identity");
    std::vector<int> inverse(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (cayley[a][b] == identity && cayley[b][a] == identity) {
                inverse[static_cast<std::size_t>(a)] = b;
                break;
            }
        }
        if (inverse[static_cast<std::size_t>(a)] < 0) {
            throw Error("group element " + std::to_string(a) + " has no inverse");
        }
    }
    return FiniteGroup(std::move(cayley), identity, std::move(inverse));
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw Error("cyclic group order must be >= 1");
    std::vector<std::vector<int>> cayley(static_cast<std::size_t>(n),
                                         std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) cayley[a][b] = (a + b) % n;
    }
    return verified(std::move(cayley));
}

FiniteGroup FiniteGroup::symmetric(int points) {
    if (points < 1 || points > 5) throw Error("symmetric group supported for 1..5 points");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(points));
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int n = static_cast<int>(perms.size());
    auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
        // (a.b)(x) = a(b(x))
        std::vector<int> r(a.size());
        for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[static_cast<std::size_t>(b[x])];
        return r;
    };
    auto index_of = [&](const std::vector<int>& q) {
        for (int i = 0; i < n; ++i) {
            if (perms[static_cast<std::size_t>(i)] == q) return i;
        }
        return -1;
    };
    std::vector<std::vector<int>> cayley(static_cast<std::size_t>(n),
                                         std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            cayley[a][b] = index_of(compose(perms[static_cast<std::size_t>(a)],
                                            perms[static_cast<std::size_t>(b)]));
        }
    }
    return verified(std::move(cayley));
}

bool FiniteGroup::is_automorphism(const std::vector<int>& phi) const {
    if (static_cast<int>(phi.size()) != n_) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (int x : phi) {
        if (x < 0 || x >= n_ || seen[static_cast<std::size_t>(x)]) return false;
        seen[static_cast<std::size_t>(x)] = true;
    }
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b) {
            if (phi[static_cast<std::size_t>(cayley_[a][b])] !=
                cayley_[phi[static_cast<std::size_t>(a)]][phi[static_cast<std::size_t>(b)]]) {
                return false;
            }
        }
    }
    return true;
}

namespace {

std::vector<std::string> indexed_labels(const std::string& prefix, int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
    return labels;
}

}  // namespace

FiniteQuandle make_trivial(int n) {
    if (n < 1) throw Error("trivial quandle needs n >= 1");
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) t[i][j] = i;
    }
    return FiniteQuandle::verified(std::move(t), indexed_labels("x", n));
}

FiniteQuandle make_dihedral(int n) {
    if (n < 1) throw Error("dihedral quandle needs n >= 1");
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) t[i][j] = ((2 * j - i) % n + n) % n;
    }
    return FiniteQuandle::verified(std::move(t), indexed_labels("a", n));
}

FiniteQuandle make_cs4() {
    // Joyce's 3-element singular cyclic quandle: rows x:(x,x,y) y:(y,y,x) z:(z,z,z).
    std::vector<std::vector<int>> t = {{0, 0, 1}, {1, 1, 0}, {2, 2, 2}};
    return FiniteQuandle::verified(std::move(t), {"x", "y", "z"});
}

FiniteQuandle make_conj(const FiniteGroup& g) {
    const int n = g.size();
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) t[a][b] = g.mul(g.mul(g.inverse(b), a), b);
    }
    return FiniteQuandle::verified(std::move(t), indexed_labels("g", n));
}

FiniteQuandle make_core(const FiniteGroup& g) {
    const int n = g.size();
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) t[a][b] = g.mul(g.mul(b, g.inverse(a)), b);
    }
    return FiniteQuandle::verified(std::move(t), indexed_labels("a", n));
}

FiniteQuandle make_alex(const FiniteGroup& g, const std::vector<int>& phi) {
    if (!g.is_automorphism(phi)) throw Error("phi is not a group automorphism");
    const int n = g.size();
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            t[a][b] = g.mul(phi[static_cast<std::size_t>(g.mul(a, g.inverse(b)))], b);
        }
    }
    return FiniteQuandle::verified(std::move(t), indexed_labels("a", n));
}

QuandlePredicates predicates(const FiniteQuandle& q) {
    const int n = q.size();
    QuandlePredicates p;
    p.trivial = true;
    p.commutative = true;
    p.latin = true;
    p.semi_latin = true;
    p.involutary = true;
    for (int i = 0; i < n && (p.trivial || p.commutative); ++i) {
        for (int j = 0; j < n; ++j) {
            if (q.mul(i, j) != i) p.trivial = false;
            if (q.mul(i, j) != q.mul(j, i)) p.commutative = false;
        }
    }
    for (int i = 0; i < n; ++i) {
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int j = 0; j < n; ++j) {
            if (seen[static_cast<std::size_t>(q.mul(i, j))]) {
                p.latin = false;
                p.semi_latin = false;  // injective = bijective on a finite set
                break;
            }
            seen[static_cast<std::size_t>(q.mul(i, j))] = true;
        }
        if (!p.latin) break;
    }
    for (int x = 0; x < n && p.involutary; ++x) {
        for (int y = 0; y < n; ++y) {
            if (q.mul(q.mul(y, x), x) != y) {
                p.involutary = false;
                break;
            }
        }
    }
    p.strongly_non_commutative = n >= 2;
    for (int x = 0; x < n && p.strongly_non_commutative; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            bool found = false;
            for (int a = 0; a < n && !found; ++a) {
                for (int b = 0; b < n; ++b) {
                    if (q.mul(a, b) == x && q.mul(b, a) == y) {
                        found = true;
                        break;
                    }
                }
            }
            if (!found) {
                p.strongly_non_commutative = false;
                break;
            }
        }
    }
    // Connectivity: orbit of element 0 under the group generated by all S_y.
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> frontier = {0};
    seen[0] = true;
    int reached = 1;
    while (!frontier.empty()) {
        const int x = frontier.back();
        frontier.pop_back();
        for (int y = 0; y < n; ++y) {
            const int fwd = q.mul(x, y);
            if (!seen[static_cast<std::size_t>(fwd)]) {
                seen[static_cast<std::size_t>(fwd)] = true;
                ++reached;
                frontier.push_back(fwd);
            }
            for (int w = 0; w < n; ++w) {
                if (q.mul(w, y) == x && !seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    ++reached;
                    frontier.push_back(w);
                }
            }
        }
    }
    p.connected = reached == n;
    return p;
}

bool is_quandle_automorphism(const FiniteQuandle& q, const std::vector<int>& perm) {
    const int n = q.size();
    if (static_cast<int>(perm.size()) != n) return false;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (perm[static_cast<std::size_t>(q.mul(i, j))] !=
                q.mul(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) {
                return false;
            }
        }
    }
    return true;
}

namespace {

// Backtracking over partial permutations. Elements are assigned in order of
// how constrained they are (fewest consistent images first); candidate images
// ascend so the final list is deterministic.
class AutomorphismSearch {
public:
    explicit AutomorphismSearch(const FiniteQuandle& q) : q_(q), n_(q.size()) {
        image_.assign(static_cast<std::size_t>(n_), -1);
        used_.assign(static_cast<std::size_t>(n_), false);
    }

    std::vector<QuandlePermutation> run() {
        extend(0);
        std::sort(result_.begin(), result_.end(),
                  [](const QuandlePermutation& a, const QuandlePermutation& b) { return a.perm < b.perm; });
        return result_;
    }

private:
    bool consistent(int x, int ix) const {
        for (int y = 0; y < n_; ++y) {
            const int iy = image_[static_cast<std::size_t>(y)];
            if (iy < 0) continue;
            const int xy = image_[static_cast<std::size_t>(q_.mul(x, y))];
            if (xy >= 0 && q_.mul(ix, iy) != xy) return false;
            const int yx = image_[static_cast<std::size_t>(q_.mul(y, x))];
            if (yx >= 0 && q_.mul(iy, ix) != yx) return false;
        }
        if (q_.mul(ix, ix) != ix) return false;
        return true;
    }

    int pick_next() const {
        int best = -1;
        int best_count = n_ + 1;
        for (int x = 0; x < n_; ++x) {
            if (image_[static_cast<std::size_t>(x)] >= 0) continue;
            int count = 0;
            for (int ix = 0; ix < n_; ++ix) {
                if (!used_[static_cast<std::size_t>(ix)] && consistent(x, ix)) ++count;
            }
            if (count < best_count) {
                best_count = count;
                best = x;
            }
        }
        return best;
    }

    void extend(int depth) {
        if (depth == n_) {
            QuandlePermutation p{image_};
            if (is_quandle_automorphism(q_, p.perm)) result_.push_back(std::move(p));
            return;
        }
        const int x = pick_next();
        for (int ix = 0; ix < n_; ++ix) {
            if (used_[static_cast<std::size_t>(ix)] || !consistent(x, ix)) continue;
            image_[static_cast<std::size_t>(x)] = ix;
            used_[static_cast<std::size_t>(ix)] = true;
            extend(depth + 1);
            image_[static_cast<std::size_t>(x)] = -1;
            used_[static_cast<std::size_t>(ix)] = false;
        }
    }

    const FiniteQuandle& q_;
    int n_;
    std::vector<int> image_;
    std::vector<bool> used_;
    std::vector<QuandlePermutation> result_;
};

}  // namespace

std::vector<QuandlePermutation> quandle_automorphisms(const FiniteQuandle& q, int bound) {
    if (q.size() > bound) {
        throw BudgetExceededError("automorphism search bound " + std::to_string(bound) +
                                  " exceeded by order " + std::to_string(q.size()));
    }
    return AutomorphismSearch(q).run();
}

bool is_2transitive(const FiniteQuandle& q, int bound) {
    const int n = q.size();
    if (n < 2) throw Error("2-transitivity needs n >= 2");
    const auto auts = quandle_automorphisms(q, bound);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            for (int u = 0; u < n; ++u) {
                for (int v = 0; v < n; ++v) {
                    if (u == v) continue;
                    bool found = false;
                    for (const auto& a : auts) {
                        if (a.perm[static_cast<std::size_t>(x)] == u &&
                            a.perm[static_cast<std::size_t>(y)] == v) {
                            found = true;
                            break;
                        }
                    }
                    if (!found) return false;
                }
            }
        }
    }
    return true;
}

bool are_isomorphic(const FiniteQuandle& a, const FiniteQuandle& b) {
    if (a.size() != b.size()) return false;
    std::vector<int> p(static_cast<std::size_t>(a.size()));
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < a.size() && ok; ++i) {
            for (int j = 0; j < a.size(); ++j) {
                if (p[static_cast<std::size_t>(a.mul(i, j))] !=
                    b.mul(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)])) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

}  // namespace quandlekit
