#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "triavg/exactnum.hpp"

namespace triavg {

enum class OutputFormat { BFile, Csv, Json, Plain };

std::optional<OutputFormat> format_from_name(std::string_view name);

/// Writes terms[i] as index `offset + i`.
///   bfile: '#'-prefixed header lines, then "index value\n" per term
///   csv:   "index,value\n" per term
///   json:  [{"n": index, "value": "decimal"}, ...]
///   plain: values separated by single spaces, then "\n"
void write_terms(std::ostream& out, const std::vector<BigInt>& terms, OutputFormat format,
                 const std::vector<std::string>& header = {}, std::size_t offset = 0);

struct BFileEntry {
  std::size_t index;
  BigInt value;
};

/// Parses b-file text: leading '#' comment lines and blank lines are skipped;
/// every other line must be exactly "index SP value". Throws
/// std::invalid_argument with the line number on malformed input.
std::vector<BFileEntry> parse_bfile(std::istream& in);

}  // namespace triavg
