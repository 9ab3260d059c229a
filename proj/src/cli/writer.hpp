#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace casimir::cli {

using Json = nlohmann::ordered_json;

/// Shortest form carrying 17 significant digits, '.' separator regardless of
/// locale. Non-finite values become "nan", "inf" or "-inf".
std::string format_number(double x);

/// A numeric table. Cells are JSON scalars so the same rows feed both writers.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
};

/// What a command emits: the JSON document and its CSV flattening.
struct Output {
  Json document = Json::object();
  std::vector<Table> tables;
};

/// Two-space indented JSON. Arrays of scalars stay on one line; doubles use
/// format_number (non-finite ones become null).
void write_json(std::ostream& os, const Json& doc);

/// Header row then data rows, comma separated, '\n' line endings. Several
/// tables are separated by one empty line.
void write_csv(std::ostream& os, const std::vector<Table>& tables);

}  // namespace casimir::cli
