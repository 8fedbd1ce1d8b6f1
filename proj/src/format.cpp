#include "triavg/format.hpp"

#include <charconv>
#include <stdexcept>

#include <json.hpp>

namespace triavg {

std::optional<OutputFormat> format_from_name(std::string_view name) {
  if (name == "bfile") return OutputFormat::BFile;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  if (name == "plain") return OutputFormat::Plain;
  return std::nullopt;
}

void write_terms(std::ostream& out, const std::vector<BigInt>& terms, OutputFormat format,
                 const std::vector<std::string>& header, std::size_t offset) {
  switch (format) {
    case OutputFormat::BFile:
      for (const auto& line : header) out << "# " << line << '\n';
      for (std::size_t i = 0; i < terms.size(); ++i) {
        out << offset + i << ' ' << to_string(terms[i]) << '\n';
      }
      break;
    case OutputFormat::Csv:
      for (std::size_t i = 0; i < terms.size(); ++i) {
        out << offset + i << ',' << to_string(terms[i]) << '\n';
      }
      break;
    case OutputFormat::Json: {
      auto arr = nlohmann::json::array();
      for (std::size_t i = 0; i < terms.size(); ++i) {
        arr.push_back({{"n", offset + i}, {"value", to_string(terms[i])}});
      }
      out << arr.dump() << '\n';
      break;
    }
    case OutputFormat::Plain:
      for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out << ' ';
        out << to_string(terms[i]);
      }
      out << '\n';
      break;
  }
}

std::vector<BFileEntry> parse_bfile(std::istream& in) {
  std::vector<BFileEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto fail = [&] {
      throw std::invalid_argument("malformed b-file line " + std::to_string(line_no) + ": '" +
                                  line + "'");
    };
    const auto space = line.find(' ');
    if (space == std::string::npos || space == 0) fail();

    std::size_t index = 0;
    const char* first = line.data();
    const char* last = line.data() + space;
    auto [ptr, ec] = std::from_chars(first, last, index);
    if (ec != std::errc() || ptr != last) fail();

    try {
      entries.push_back({index, parse_bigint(line.substr(space + 1))});
    } catch (const std::invalid_argument&) {
      fail();
    }
  }
  return entries;
}

}  // namespace triavg
