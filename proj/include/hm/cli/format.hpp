#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hm::cli {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Space-aligned columns, header underlined with dashes.
void write_table(std::ostream& out, const Table& t);
/// RFC 4180: CRLF line ends; fields with comma, quote, CR or LF are quoted.
void write_csv(std::ostream& out, const Table& t);
std::string csv_field(std::string_view field);

}  // namespace hm::cli
