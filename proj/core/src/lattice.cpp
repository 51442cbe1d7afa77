#include "quandlekit/lattice.hpp"

#include <algorithm>

namespace quandlekit {

LatticeBasis::LatticeBasis(CoefficientRing ring, std::size_t dimension)
    : ring_(ring), dim_(dimension) {
    if (ring.kind() == RingKind::integers_mod && !ring.is_integral_domain()) {
        throw NotIntegralDomainError("row reduction over zmod:" + std::to_string(ring.modulus()));
    }
}

LatticeBasis LatticeBasis::spanning(const CoefficientRing& ring, std::size_t dimension,
                                    std::span<const std::vector<Scalar>> vectors) {
    LatticeBasis b(ring, dimension);
    for (const auto& v : vectors) {
        b.check_vector(v);
        b.rows_.push_back(v);
    }
    b.reduce();
    return b;
}

void LatticeBasis::check_vector(const std::vector<Scalar>& v) const {
    if (v.size() != dim_) {
        throw DimensionMismatchError("vector of length " + std::to_string(v.size()) +
                                     " against ambient dimension " + std::to_string(dim_));
    }
    for (const auto& c : v) {
        if (c.ring() != ring_) throw RingMismatchError(c.ring().str() + " entry in " + ring_.str() + " lattice");
    }
}

LatticeBasis LatticeBasis::inserted(const std::vector<Scalar>& v) const {
    check_vector(v);
    LatticeBasis next = *this;
    next.rows_.push_back(v);
    next.reduce();
    return next;
}

// Gaussian / Hermite reduction into canonical form. Over a field the pivot
// is scaled to 1 and eliminated above and below; over Z the pivot column is
// cleared below by gcd steps, made positive, and reduced above.
void LatticeBasis::reduce() {
    const bool over_field = ring_.kind() != RingKind::integers;
    std::size_t r = 0;
    for (std::size_t c = 0; c < dim_ && r < rows_.size(); ++c) {
        if (over_field) {
            std::size_t piv = rows_.size();
            for (std::size_t i = r; i < rows_.size(); ++i) {
                if (!rows_[i][c].is_zero()) {
                    piv = i;
                    break;
                }
            }
            if (piv == rows_.size()) continue;
            std::swap(rows_[r], rows_[piv]);
            const Scalar inv = rows_[r][c].inverse();
            for (auto& x : rows_[r]) x *= inv;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (i == r || rows_[i][c].is_zero()) continue;
                const Scalar f = rows_[i][c];
                for (std::size_t k = 0; k < dim_; ++k) rows_[i][k] -= f * rows_[r][k];
            }
            ++r;
        } else {
            // Clear column c below row r by repeated remainder steps.
            while (true) {
                std::size_t best = rows_.size();
                for (std::size_t i = r; i < rows_.size(); ++i) {
                    if (rows_[i][c].is_zero()) continue;
                    if (best == rows_.size() ||
                        rows_[i][c].numerator().abs() < rows_[best][c].numerator().abs()) {
                        best = i;
                    }
                }
                if (best == rows_.size()) break;  // column empty below r
                std::swap(rows_[r], rows_[best]);
                bool cleared = true;
                for (std::size_t i = r + 1; i < rows_.size(); ++i) {
                    if (rows_[i][c].is_zero()) continue;
                    const Integer q = rows_[i][c].numerator().floor_div(rows_[r][c].numerator());
                    const Scalar f = Scalar::of(ring_, q);
                    for (std::size_t k = 0; k < dim_; ++k) rows_[i][k] -= f * rows_[r][k];
                    if (!rows_[i][c].is_zero()) cleared = false;
                }
                if (cleared) break;
            }
            if (rows_[r][c].is_zero()) continue;
            if (rows_[r][c].numerator().is_negative()) {
                for (auto& x : rows_[r]) x = -x;
            }
            for (std::size_t i = 0; i < r; ++i) {
                const Integer q = rows_[i][c].numerator().floor_div(rows_[r][c].numerator());
                if (q.is_zero()) continue;
                const Scalar f = Scalar::of(ring_, q);
                for (std::size_t k = 0; k < dim_; ++k) rows_[i][k] -= f * rows_[r][k];
            }
            ++r;
        }
    }
    // Drop zero rows (everything at index >= r is zero by construction).
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r), rows_.end());
}

bool LatticeBasis::contains(const std::vector<Scalar>& v) const {
    check_vector(v);
    std::vector<Scalar> work = v;
    const bool over_field = ring_.kind() != RingKind::integers;
    for (const auto& row : rows_) {
        std::size_t c = 0;
        while (c < dim_ && row[c].is_zero()) ++c;
        if (c == dim_) continue;
        if (work[c].is_zero()) continue;
        Scalar f;
        if (over_field) {
            f = work[c];  // pivot is 1
        } else {
            if (!work[c].numerator().divisible_by(row[c].numerator())) return false;
            f = Scalar::of(ring_, work[c].numerator().quot(row[c].numerator()));
        }
        for (std::size_t k = 0; k < dim_; ++k) work[k] -= f * row[k];
    }
    return std::all_of(work.begin(), work.end(), [](const Scalar& x) { return x.is_zero(); });
}

std::vector<Scalar> to_scalar_vector(const CoefficientRing& ring, const std::vector<Integer>& v) {
    std::vector<Scalar> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(Scalar::of(ring, x));
    return out;
}

LatticeBasis hnf_insert(const LatticeBasis& basis, const std::vector<Integer>& v) {
    return basis.inserted(to_scalar_vector(basis.ring(), v));
}

bool lattice_contains(const LatticeBasis& basis, const std::vector<Integer>& v) {
    return basis.contains(to_scalar_vector(basis.ring(), v));
}

}  // namespace quandlekit
