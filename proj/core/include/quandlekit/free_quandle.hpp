#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "quandlekit/errors.hpp"

namespace quandlekit {

// One letter of a free-group word over r generators.
struct Letter {
    int gen;
    bool inverse;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Freely reduced word; concatenation cancels adjacent inverse pairs eagerly.
using Word = std::vector<Letter>;

Word reduce_concat(const Word& a, const Word& b);
Word inverse_word(const Word& w);

// Element a^w of the free quandle FQ_r in normal form: w freely reduced and
// not starting with the element's own generator (the defining relation
// a^w = a^{aw} strips leading powers of a).
class FreeQuandleElement {
public:
    FreeQuandleElement(int rank, int gen, Word conjugator);

    static FreeQuandleElement generator(int rank, int gen) {
        return FreeQuandleElement(rank, gen, {});
    }

    int rank() const { return rank_; }
    int gen() const { return gen_; }
    const Word& word() const { return word_; }

    friend bool operator==(const FreeQuandleElement&, const FreeQuandleElement&) = default;
    friend auto operator<=>(const FreeQuandleElement&, const FreeQuandleElement&) = default;

    // Literal form "a2^[+0 -1 +0]": generator index, then the conjugating
    // word as signed generator indices; "a2^[]" for an unconjugated generator.
    std::string str() const;
    static FreeQuandleElement parse(int rank, const std::string& text);

private:
    int rank_;
    int gen_;
    Word word_;
};

// a^w * b^u = a^{w u^{-1} b u}, renormalized.
FreeQuandleElement fq_multiply(const FreeQuandleElement& x, const FreeQuandleElement& y);

// Unique z with z * y = x, via a^{w u^{-1} b^{-1} u}.
FreeQuandleElement fq_right_divide(const FreeQuandleElement& x, const FreeQuandleElement& y);

bool fq_equal(const FreeQuandleElement& x, const FreeQuandleElement& y);

struct SemiLatinReport {
    std::uint64_t trials = 0;
    std::uint64_t violations = 0;
    std::string witness;  // empty unless a violation was found
};

FreeQuandleElement random_fq_element(class Rng& rng, int rank, int max_word_len);

// Samples z*x vs z*y for x != y; the theorem says injective, so any violation
// flags an implementation bug.
SemiLatinReport fq_semi_latin_sample(int rank, std::uint64_t trials, int max_word_len,
                                     std::uint64_t seed);

}  // namespace quandlekit
