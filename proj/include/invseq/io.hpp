#pragma once

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "invseq/grid.hpp"

namespace invseq::io {

// Space-separated terms on one line.
std::string emit_plain(const std::vector<Int>& terms);

// "n a(n)" lines for n >= offset, one per term.
std::string emit_bfile(const std::vector<Int>& terms, int offset = 1);

// {"patterns": key, "terms": [...]}; terms are JSON strings when they do not
// fit in 64 bits.
std::string emit_json(const std::string& key, const std::vector<Int>& terms);

// Parses "n a(n)" lines; blank lines and lines starting with '#' are skipped.
// Throws ParseError on malformed lines or non-consecutive indices.
std::vector<std::pair<int, Int>> parse_bfile(std::istream& in);

// Rebuilds t_0..t_N from a parsed b-file whose first index is `offset`;
// indices below the offset are filled with t_0 = 1.
std::vector<Int> terms_from_bfile(const std::vector<std::pair<int, Int>>& rows, int offset = 1);

}  // namespace invseq::io
