#include "quandlekit/free_quandle.hpp"

#include <sstream>

#include "quandlekit/rng.hpp"

namespace quandlekit {

Word reduce_concat(const Word& a, const Word& b) {
    Word out;
    out.reserve(a.size() + b.size());
    auto push = [&out](const Letter& l) {
        if (!out.empty() && out.back().gen == l.gen && out.back().inverse != l.inverse) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    };
    for (const auto& l : a) push(l);
    for (const auto& l : b) push(l);
    return out;
}

Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(Letter{it->gen, !it->inverse});
    return out;
}

FreeQuandleElement::FreeQuandleElement(int rank, int gen, Word conjugator)
    : rank_(rank), gen_(gen) {
    if (rank < 1) throw Error("free quandle rank must be >= 1");
    if (gen < 0 || gen >= rank) throw Error("generator index out of range");
    for (const auto& l : conjugator) {
        if (l.gen < 0 || l.gen >= rank) throw Error("word letter out of range");
    }
    word_ = reduce_concat({}, conjugator);
    // normal form: strip leading letters equal to the base generator
    std::size_t lead = 0;
    while (lead < word_.size() && word_[lead].gen == gen_) ++lead;
    word_.erase(word_.begin(), word_.begin() + static_cast<std::ptrdiff_t>(lead));
}

std::string FreeQuandleElement::str() const {
    std::ostringstream out;
    out << "a" << gen_ << "^[";
    for (std::size_t i = 0; i < word_.size(); ++i) {
        if (i) out << " ";
        out << (word_[i].inverse ? "-" : "+") << word_[i].gen;
    }
    out << "]";
    return out.str();
}

FreeQuandleElement FreeQuandleElement::parse(int rank, const std::string& text) {
    // a<gen>^[<sign><idx> ...]
    if (text.size() < 4 || text[0] != 'a') throw ParseError("bad free quandle literal '" + text + "'");
    auto caret = text.find('^');
    if (caret == std::string::npos || caret + 1 >= text.size() || text[caret + 1] != '[' ||
        text.back() != ']') {
        throw ParseError("bad free quandle literal '" + text + "'");
    }
    int gen = 0;
    try {
        gen = std::stoi(text.substr(1, caret - 1));
    } catch (const std::exception&) {
        throw ParseError("bad generator index in '" + text + "'");
    }
    Word w;
    std::istringstream ss(text.substr(caret + 2, text.size() - caret - 3));
    std::string tok;
    while (ss >> tok) {
        if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-')) {
            throw ParseError("bad word letter '" + tok + "' in '" + text + "'");
        }
        int idx = 0;
        try {
            idx = std::stoi(tok.substr(1));
        } catch (const std::exception&) {
            throw ParseError("bad word letter '" + tok + "' in '" + text + "'");
        }
        w.push_back(Letter{idx, tok[0] == '-'});
    }
    return FreeQuandleElement(rank, gen, std::move(w));
}

FreeQuandleElement fq_multiply(const FreeQuandleElement& x, const FreeQuandleElement& y) {
    if (x.rank() != y.rank()) throw Error("free quandle rank mismatch");
    // w u^{-1} b u
    Word w = reduce_concat(x.word(), inverse_word(y.word()));
    w = reduce_concat(w, Word{Letter{y.gen(), false}});
    w = reduce_concat(w, y.word());
    return FreeQuandleElement(x.rank(), x.gen(), std::move(w));
}

FreeQuandleElement fq_right_divide(const FreeQuandleElement& x, const FreeQuandleElement& y) {
    if (x.rank() != y.rank()) throw Error("free quandle rank mismatch");
    Word w = reduce_concat(x.word(), inverse_word(y.word()));
    w = reduce_concat(w, Word{Letter{y.gen(), true}});
    w = reduce_concat(w, y.word());
    return FreeQuandleElement(x.rank(), x.gen(), std::move(w));
}

bool fq_equal(const FreeQuandleElement& x, const FreeQuandleElement& y) { return x == y; }

FreeQuandleElement random_fq_element(Rng& rng, int rank, int max_word_len) {
    const int gen = static_cast<int>(rng.next_in(0, rank - 1));
    const int len = static_cast<int>(rng.next_in(0, max_word_len));
    Word w;
    for (int i = 0; i < len; ++i) {
        w.push_back(Letter{static_cast<int>(rng.next_in(0, rank - 1)), rng.next_bool()});
    }
    return FreeQuandleElement(rank, gen, std::move(w));
}

SemiLatinReport fq_semi_latin_sample(int rank, std::uint64_t trials, int max_word_len,
                                     std::uint64_t seed) {
    if (rank < 1) throw Error("rank must be >= 1");
    Rng rng(seed);
    SemiLatinReport report;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const auto z = random_fq_element(rng, rank, max_word_len);
        const auto x = random_fq_element(rng, rank, max_word_len);
        const auto y = random_fq_element(rng, rank, max_word_len);
        if (x == y) continue;
        ++report.trials;
        if (fq_multiply(z, x) == fq_multiply(z, y)) {
            ++report.violations;
            if (report.witness.empty()) {
                report.witness = "z=" + z.str() + " x=" + x.str() + " y=" + y.str();
            }
        }
    }
    return report;
}

}  // namespace quandlekit
