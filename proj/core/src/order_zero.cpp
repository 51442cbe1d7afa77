#include "quandlekit/order_zero.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "quandlekit/rng.hpp"

namespace quandlekit {

std::string LinearOrder::str(const FiniteQuandle& q) const {
    std::string out;
    for (std::size_t i = 0; i < ranking.size(); ++i) {
        if (i) out += " < ";
        out += q.has_labels() ? q.label(ranking[i]) : "q" + std::to_string(ranking[i]);
    }
    return out;
}

namespace {

// rank_of[e] = position of e among the already placed elements, -1 otherwise.
// Placed elements are the smallest ones, in order, so any unplaced element is
// larger than every placed one.
bool prefix_consistent(const FiniteQuandle& q, OrderSide side, const std::vector<int>& placed,
                       const std::vector<int>& rank_of) {
    const int n = q.size();
    for (std::size_t px = 0; px < placed.size(); ++px) {
        for (std::size_t py = px + 1; py < placed.size(); ++py) {
            const int x = placed[px];  // x < y in the candidate order
            const int y = placed[py];
            for (int z = 0; z < n; ++z) {
                const int xz = side == OrderSide::right ? q.mul(x, z) : q.mul(z, x);
                const int yz = side == OrderSide::right ? q.mul(y, z) : q.mul(z, y);
                if (xz == yz) return false;  // strict inequality is impossible
                const int rx = rank_of[static_cast<std::size_t>(xz)];
                const int ry = rank_of[static_cast<std::size_t>(yz)];
                if (rx >= 0 && ry >= 0 && rx > ry) return false;
                if (rx < 0 && ry >= 0) return false;  // xz unplaced means xz > yz
            }
        }
    }
    return true;
}

bool order_satisfies(const FiniteQuandle& q, OrderSide side, const std::vector<int>& ranking) {
    const int n = q.size();
    std::vector<int> rank_of(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < ranking.size(); ++i) rank_of[static_cast<std::size_t>(ranking[i])] = static_cast<int>(i);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (rank_of[static_cast<std::size_t>(x)] >= rank_of[static_cast<std::size_t>(y)]) continue;
            for (int z = 0; z < n; ++z) {
                const int xz = side == OrderSide::right ? q.mul(x, z) : q.mul(z, x);
                const int yz = side == OrderSide::right ? q.mul(y, z) : q.mul(z, y);
                if (rank_of[static_cast<std::size_t>(xz)] >= rank_of[static_cast<std::size_t>(yz)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

std::optional<LinearOrder> find_order(const FiniteQuandle& q, OrderSide side, int bound) {
    const int n = q.size();
    if (n > bound) {
        throw BudgetExceededError("order search bound " + std::to_string(bound) +
                                  " exceeded by order " + std::to_string(n));
    }
    std::vector<int> placed;
    std::vector<int> rank_of(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);

    std::optional<LinearOrder> found;
    auto rec = [&](auto&& self) -> bool {
        if (static_cast<int>(placed.size()) == n) {
            found = LinearOrder{side, placed};
            return true;
        }
        for (int e = 0; e < n; ++e) {
            if (used[static_cast<std::size_t>(e)]) continue;
            placed.push_back(e);
            rank_of[static_cast<std::size_t>(e)] = static_cast<int>(placed.size()) - 1;
            used[static_cast<std::size_t>(e)] = true;
            if (prefix_consistent(q, side, placed, rank_of) && self(self)) return true;
            used[static_cast<std::size_t>(e)] = false;
            rank_of[static_cast<std::size_t>(e)] = -1;
            placed.pop_back();
        }
        return false;
    };
    rec(rec);
    return found;
}

std::optional<LinearOrder> find_order_bruteforce(const FiniteQuandle& q, OrderSide side) {
    const int n = q.size();
    std::vector<int> ranking(static_cast<std::size_t>(n));
    std::iota(ranking.begin(), ranking.end(), 0);
    do {
        if (order_satisfies(q, side, ranking)) return LinearOrder{side, ranking};
    } while (std::next_permutation(ranking.begin(), ranking.end()));
    return std::nullopt;
}

namespace {

UniqueProductReport census_report(const std::vector<Integer>& a, const std::vector<Integer>& b,
                                  const std::function<Integer(const Integer&, const Integer&)>& mul,
                                  bool with_order_witnesses) {
    UniqueProductReport report;
    if (a.empty() || b.empty()) throw Error("unique_products needs non-empty subsets");
    for (const auto& x : a) {
        for (const auto& y : b) {
            report.census[mul(x, y)].emplace_back(x, y);
        }
    }
    for (const auto& [p, reps] : report.census) {
        if (reps.size() == 1) report.unique_products.push_back(p);
    }
    report.up = !report.unique_products.empty();
    report.tup = a.size() + b.size() > 2 ? report.unique_products.size() >= 2 : report.up;
    if (with_order_witnesses) {
        const Integer a_max = *std::max_element(a.begin(), a.end());
        const Integer a_min = *std::min_element(a.begin(), a.end());
        for (const auto& y : b) {
            const Integer p = mul(a_max, y);
            if (report.census.at(p).size() == 1 && !report.a_max_witness) {
                report.a_max_witness = std::make_pair(y, p);
            }
            const Integer p2 = mul(a_min, y);
            if (report.census.at(p2).size() == 1 && !report.a_min_witness) {
                report.a_min_witness = std::make_pair(y, p2);
            }
        }
    }
    return report;
}

}  // namespace

UniqueProductReport unique_products(const IntQuandle& q, const std::vector<Integer>& a,
                                    const std::vector<Integer>& b) {
    return census_report(a, b, [&q](const Integer& x, const Integer& y) { return q.mul(x, y); }, true);
}

UniqueProductReport unique_products(const FiniteQuandle& q, const std::vector<int>& a,
                                    const std::vector<int>& b) {
    std::vector<Integer> ai, bi;
    for (int x : a) ai.push_back(Integer(x));
    for (int y : b) bi.push_back(Integer(y));
    auto mul = [&q](const Integer& x, const Integer& y) {
        return Integer(q.mul(static_cast<int>(x.to_long_long()), static_cast<int>(y.to_long_long())));
    };
    return census_report(ai, bi, mul, false);
}

std::optional<InertWitness> inert_witness(const FiniteQuandle& q, int max_size) {
    const int n = q.size();
    if (max_size > n) max_size = n;
    // subsets ordered by size, then lexicographically
    for (int size = 2; size <= max_size; ++size) {
        std::vector<int> pick(static_cast<std::size_t>(size));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            for (int x = 0; x < n; ++x) {
                for (int y = 0; y < n; ++y) {
                    if (x == y) continue;
                    std::vector<int> ax, ay;
                    for (int a : pick) {
                        ax.push_back(q.mul(a, x));
                        ay.push_back(q.mul(a, y));
                    }
                    std::sort(ax.begin(), ax.end());
                    std::sort(ay.begin(), ay.end());
                    if (ax == ay) return InertWitness{pick, x, y};
                }
            }
            // next combination
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) {
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
    return std::nullopt;
}

namespace {

std::optional<ZeroDivisorWitness> witness_trivial_subquandle(const QuandlePtr& q,
                                                             const CoefficientRing& ring) {
    const int n = q->size();
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (q->mul(x, y) == x && q->mul(y, x) == y) {
                RingElement u = RingElement::basis(q, ring, x) - RingElement::basis(q, ring, y);
                return ZeroDivisorWitness{u, u, "trivial-subquandle",
                                          "{" + std::to_string(x) + ", " + std::to_string(y) +
                                              "} is a trivial subquandle; u = v = difference"};
            }
        }
    }
    return std::nullopt;
}

bool is_subquandle(const FiniteQuandle& q, const std::vector<int>& s) {
    for (int a : s) {
        for (int b : s) {
            const int p = q.mul(a, b);
            if (std::find(s.begin(), s.end(), p) == s.end()) return false;
        }
    }
    return true;
}

std::optional<ZeroDivisorWitness> witness_finite_subquandle(const QuandlePtr& q,
                                                            const CoefficientRing& ring) {
    const int n = q->size();
    // smallest subquandle with >= 2 elements, by size then lexicographically
    for (int size = 2; size <= n; ++size) {
        std::vector<int> pick(static_cast<std::size_t>(size));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            if (is_subquandle(*q, pick)) {
                RingElement sum = RingElement::zero(q, ring);
                for (int a : pick) sum = sum + RingElement::basis(q, ring, a);
                RingElement diff = RingElement::basis(q, ring, pick[0]) -
                                   RingElement::basis(q, ring, pick[1]);
                std::string set = "{";
                for (std::size_t i = 0; i < pick.size(); ++i) {
                    set += (i ? ", " : "") + std::to_string(pick[static_cast<std::size_t>(i)]);
                }
                set += "}";
                return ZeroDivisorWitness{sum, diff, "finite-subquandle",
                                          "A = " + set + " is a subquandle; (sum A)(x - y) = 0"};
            }
            int i = size - 1;
            while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - size + i) --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) {
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }
    return std::nullopt;
}

std::optional<ZeroDivisorWitness> witness_not_semi_latin(const QuandlePtr& q,
                                                         const CoefficientRing& ring) {
    const int n = q->size();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int z = y + 1; z < n; ++z) {
                if (q->mul(x, y) == q->mul(x, z)) {
                    RingElement u = RingElement::basis(q, ring, x);
                    RingElement v = RingElement::basis(q, ring, y) - RingElement::basis(q, ring, z);
                    return ZeroDivisorWitness{u, v, "not-semi-latin",
                                              "L_x collapses y and z at x = " + std::to_string(x) +
                                                  ", y = " + std::to_string(y) + ", z = " +
                                                  std::to_string(z)};
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<ZeroDivisorWitness> witness_inert(const QuandlePtr& q, const CoefficientRing& ring) {
    if (auto w = inert_witness(*q, q->size())) {
        RingElement sum = RingElement::zero(q, ring);
        for (int a : w->set) sum = sum + RingElement::basis(q, ring, a);
        RingElement diff = RingElement::basis(q, ring, w->x) - RingElement::basis(q, ring, w->y);
        return ZeroDivisorWitness{sum, diff, "inert",
                                  "A*x and A*y agree as multisets for x = " + std::to_string(w->x) +
                                      ", y = " + std::to_string(w->y)};
    }
    return std::nullopt;
}

}  // namespace

std::optional<ZeroDivisorWitness> zero_divisor_witness(QuandlePtr quandle,
                                                       const CoefficientRing& ring,
                                                       ZeroDivisorStrategy strategy) {
    std::vector<std::optional<ZeroDivisorWitness>> found;
    switch (strategy) {
        case ZeroDivisorStrategy::trivial_subquandle:
            found.push_back(witness_trivial_subquandle(quandle, ring));
            break;
        case ZeroDivisorStrategy::finite_subquandle:
            found.push_back(witness_finite_subquandle(quandle, ring));
            break;
        case ZeroDivisorStrategy::not_semi_latin:
            found.push_back(witness_not_semi_latin(quandle, ring));
            break;
        case ZeroDivisorStrategy::inert:
            found.push_back(witness_inert(quandle, ring));
            break;
        case ZeroDivisorStrategy::automatic:
            found.push_back(witness_trivial_subquandle(quandle, ring));
            found.push_back(witness_finite_subquandle(quandle, ring));
            found.push_back(witness_not_semi_latin(quandle, ring));
            found.push_back(witness_inert(quandle, ring));
            break;
    }
    for (auto& w : found) {
        if (!w) continue;
        if (w->u.is_zero() || w->v.is_zero()) continue;
        if ((w->u * w->v).is_zero()) return w;  // re-verified by ring multiplication
    }
    return std::nullopt;
}

namespace {

IntRingElement random_int_element(Rng& rng, const IntQuandle&, const CoefficientRing& ring,
                                  int max_support, long long coeff_bound, long long label_range) {
    IntRingElement e(ring);
    const int support = static_cast<int>(rng.next_in(1, max_support));
    for (int s = 0; s < support; ++s) {
        long long c = rng.next_in(1, coeff_bound);
        if (rng.next_bool()) c = -c;
        e.add_term(Integer(rng.next_in(-label_range, label_range)), Scalar::of(ring, Integer(c)));
    }
    return e;
}

}  // namespace

NoZeroDivisorSampleReport up_sample_no_zero_divisors(const IntQuandle& q, std::uint64_t trials,
                                                     int max_support, long long coeff_bound,
                                                     std::uint64_t seed) {
    Rng rng(seed);
    const CoefficientRing ring = CoefficientRing::integers();
    NoZeroDivisorSampleReport report;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const IntRingElement u = random_int_element(rng, q, ring, max_support, coeff_bound, 50);
        const IntRingElement v = random_int_element(rng, q, ring, max_support, coeff_bound, 50);
        if (u.is_zero() || v.is_zero()) continue;
        ++report.trials;
        const IntRingElement p = u.mul(q, v);
        if (p.is_zero()) {
            ++report.zero_products;
            if (report.witness.empty()) report.witness = "u = " + u.str() + ", v = " + v.str();
            continue;
        }
        std::vector<Integer> a, b;
        for (const auto& [label, coeff] : u.coeffs()) {
            (void)coeff;
            a.push_back(label);
        }
        for (const auto& [label, coeff] : v.coeffs()) {
            (void)coeff;
            b.push_back(label);
        }
        if (unique_products(q, a, b).up) ++report.up_confirmed;
    }
    return report;
}

NoZeroDivisorSampleReport up_sample_no_zero_divisors_free(int rank, std::uint64_t trials,
                                                          int max_support, long long coeff_bound,
                                                          std::uint64_t seed, int max_word_len) {
    Rng rng(seed);
    NoZeroDivisorSampleReport report;
    for (std::uint64_t t = 0; t < trials; ++t) {
        // sparse elements of Z[FQ_rank]: normal form -> coefficient
        auto draw = [&]() {
            std::map<FreeQuandleElement, Integer> e;
            const int support = static_cast<int>(rng.next_in(1, max_support));
            for (int s = 0; s < support; ++s) {
                long long c = rng.next_in(1, coeff_bound);
                if (rng.next_bool()) c = -c;
                const auto key = random_fq_element(rng, rank, max_word_len);
                auto it = e.find(key);
                Integer next = (it == e.end()) ? Integer(c) : it->second + Integer(c);
                if (next.is_zero()) {
                    if (it != e.end()) e.erase(it);
                } else {
                    e[key] = next;
                }
            }
            return e;
        };
        const auto u = draw();
        const auto v = draw();
        if (u.empty() || v.empty()) continue;
        ++report.trials;
        std::map<FreeQuandleElement, Integer> product;
        for (const auto& [xu, cu] : u) {
            for (const auto& [xv, cv] : v) {
                const auto key = fq_multiply(xu, xv);
                auto it = product.find(key);
                Integer next = (it == product.end()) ? cu * cv : it->second + cu * cv;
                if (next.is_zero()) {
                    if (it != product.end()) product.erase(it);
                } else {
                    product[key] = next;
                }
            }
        }
        if (product.empty()) {
            ++report.zero_products;
            if (report.witness.empty()) report.witness = "zero product at trial " + std::to_string(t);
            continue;
        }
        // unique-product census on the supports
        std::map<FreeQuandleElement, int> counts;
        for (const auto& [xu, cu] : u) {
            (void)cu;
            for (const auto& [xv, cv] : v) {
                (void)cv;
                counts[fq_multiply(xu, xv)] += 1;
            }
        }
        bool has_unique = false;
        for (const auto& [key, count] : counts) {
            (void)key;
            if (count == 1) {
                has_unique = true;
                break;
            }
        }
        if (has_unique) ++report.up_confirmed;
    }
    return report;
}

}  // namespace quandlekit
