#include "quandlekit/checked_int.hpp"

#include <algorithm>

namespace quandlekit {

std::string Integer::str() const {
    if (v_ == 0) return "0";
    unsigned __int128 mag;
    bool neg = v_ < 0;
    if (neg) {
        mag = static_cast<unsigned __int128>(-(v_ + 1)) + 1;
    } else {
        mag = static_cast<unsigned __int128>(v_);
    }
    std::string digits;
    while (mag != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
        mag /= 10;
    }
    if (neg) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Integer Integer::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty integer literal");
    std::size_t i = 0;
    bool neg = false;
    if (text[0] == '+' || text[0] == '-') {
        neg = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) throw ParseError("sign without digits in '" + text + "'");
    Integer acc = 0;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') throw ParseError("bad digit in integer literal '" + text + "'");
        acc = acc * Integer(10) + Integer(c - '0');
    }
    return neg ? -acc : acc;
}

Integer gcd(Integer a, Integer b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        Integer r = a.rem(b);
        a = b;
        b = r;
    }
    return a;
}

}  // namespace quandlekit
