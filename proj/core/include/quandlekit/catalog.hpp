#pragma once

#include <string>
#include <vector>

#include "quandlekit/int_quandle.hpp"
#include "quandlekit/quandle.hpp"

namespace quandlekit::catalog {

enum class Kind { finite, integer_rule, free_quandle };

struct Entry {
    std::string name;
    Kind kind;
    int order;  // -1 for infinite
    std::string note;
};

// Registry of the named objects used throughout the toolkit. Append-only in
// code, never at runtime; names are case-insensitive.
const std::vector<Entry>& entries();

// Canonical spelling of a known name; throws UnknownNameError otherwise.
std::string normalize_name(const std::string& name);
bool has(const std::string& name);
Kind kind(const std::string& name);

// Finite entries (T1..T6, R3..R6, Cs4, Conj(S3), Core(Z5), Alex(Z5,2)).
QuandlePtr quandle(const std::string& name);

// Integer-rule entries (CoreZ, AlexZ(-1)).
IntQuandle int_quandle(const std::string& name);

// Free quandle entries (FQ1..FQ3); returns the rank.
int free_rank(const std::string& name);

// All finite entries of order <= max_order, deduplicated by name.
std::vector<std::pair<std::string, QuandlePtr>> finite_quandles(int max_order = 6);

}  // namespace quandlekit::catalog
