#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace abcyl::cli {

using Json = nlohmann::ordered_json;

/// Empty cells serialize as an empty CSV field and as JSON null.
using Cell = std::variant<std::monostate, double, long long, bool, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

/// %.17g, so that doubles round-trip.
std::string format_number(double x);

void write_csv(std::ostream& os, const Table& table);

/// Array of objects keyed by the header.
Json table_to_json(const Table& table);

}  // namespace abcyl::cli
