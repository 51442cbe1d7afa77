#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "quandlekit/errors.hpp"

namespace quandlekit {

// Exact 128-bit integer with checked arithmetic. Overflow is a hard failure
// (OverflowError), never a silent wrap; bounded searches multiply certificate
// coefficients and a wrap would corrupt them.
class Integer {
public:
    constexpr Integer() : v_(0) {}
    constexpr Integer(long long v) : v_(v) {}  // NOLINT: implicit by design
    constexpr Integer(int v) : v_(v) {}        // NOLINT

    static Integer from_raw(__int128 v) {
        Integer r;
        r.v_ = v;
        return r;
    }

    __int128 raw() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return v_ < 0; }

    Integer operator-() const {
        if (v_ == kMin) throw OverflowError("negate");
        return from_raw(-v_);
    }

    Integer operator+(const Integer& o) const {
        __int128 r;
        if (__builtin_add_overflow(v_, o.v_, &r)) throw OverflowError("add");
        return from_raw(r);
    }
    Integer operator-(const Integer& o) const {
        __int128 r;
        if (__builtin_sub_overflow(v_, o.v_, &r)) throw OverflowError("sub");
        return from_raw(r);
    }
    Integer operator*(const Integer& o) const {
        __int128 r;
        if (__builtin_mul_overflow(v_, o.v_, &r)) throw OverflowError("mul");
        return from_raw(r);
    }
    Integer& operator+=(const Integer& o) { return *this = *this + o; }
    Integer& operator-=(const Integer& o) { return *this = *this - o; }
    Integer& operator*=(const Integer& o) { return *this = *this * o; }

    // Truncated division; divisor must be nonzero.
    Integer quot(const Integer& d) const {
        check_div(d);
        return from_raw(v_ / d.v_);
    }
    Integer rem(const Integer& d) const {
        check_div(d);
        return from_raw(v_ % d.v_);
    }
    // Floor division and the matching nonnegative-when-divisor-positive remainder.
    Integer floor_div(const Integer& d) const {
        check_div(d);
        __int128 q = v_ / d.v_;
        __int128 r = v_ % d.v_;
        if (r != 0 && ((r < 0) != (d.v_ < 0))) --q;
        return from_raw(q);
    }
    Integer floor_mod(const Integer& d) const { return *this - floor_div(d) * d; }

    bool divisible_by(const Integer& d) const {
        if (d.v_ == 0) return v_ == 0;
        if (v_ == kMin && d.v_ == -1) return true;
        return v_ % d.v_ == 0;
    }

    Integer abs() const { return v_ < 0 ? -*this : *this; }

    friend bool operator==(const Integer&, const Integer&) = default;
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const;
    static Integer parse(const std::string& text);

    long long to_long_long() const {
        if (v_ > INT64_MAX || v_ < INT64_MIN) throw OverflowError("to_long_long");
        return static_cast<long long>(v_);
    }

private:
    void check_div(const Integer& d) const {
        if (d.v_ == 0) throw Error("division by zero");
        if (v_ == kMin && d.v_ == -1) throw OverflowError("div");
    }

    static constexpr __int128 kMin = static_cast<__int128>(1) << 127;
    __int128 v_;
};

Integer gcd(Integer a, Integer b);

inline Integer operator*(long long a, const Integer& b) { return Integer(a) * b; }

}  // namespace quandlekit

template <>
struct std::hash<quandlekit::Integer> {
    std::size_t operator()(const quandlekit::Integer& v) const noexcept {
        auto r = v.raw();
        auto lo = static_cast<std::uint64_t>(r);
        auto hi = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) >> 64);
        return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
    }
};
