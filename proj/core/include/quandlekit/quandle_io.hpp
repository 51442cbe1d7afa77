#pragma once

#include <iosfwd>
#include <string>

#include "quandlekit/quandle.hpp"

namespace quandlekit {

// Quandle table file format:
//   line 1:        n
//   lines 2..n+1:  n whitespace-separated 0-based indices
//   optional:      "labels: name0 name1 ..."
// Lines starting with '#' are comments. write_quandle/read_quandle round-trip
// bit-exactly.
FiniteQuandle read_quandle(std::istream& in);
FiniteQuandle read_quandle_file(const std::string& path);

std::string format_quandle(const FiniteQuandle& q);
void write_quandle_file(const FiniteQuandle& q, const std::string& path);

}  // namespace quandlekit
