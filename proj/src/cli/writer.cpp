#include "cli/writer.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace casimir::cli {

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

void write_scalar(std::ostream& os, const Json& j) {
  if (j.is_number_float()) {
    const double x = j.get<double>();
    os << (std::isfinite(x) ? format_number(x) : "null");
  } else {
    // integers, strings (with escaping), booleans, null
    os << j.dump();
  }
}

void write_value(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) os << ",\n";
      first = false;
      os << pad << Json(key).dump() << ": ";
      write_value(os, value, indent + 2);
    }
    os << '\n' << close << '}';
  } else if (j.is_array()) {
    bool flat = true;
    for (const auto& e : j) flat = flat && is_scalar(e);
    if (flat) {
      os << '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ", ";
        write_scalar(os, j[i]);
      }
      os << ']';
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) os << ",\n";
      os << pad;
      write_value(os, j[i], indent + 2);
    }
    os << '\n' << close << ']';
  } else {
    write_scalar(os, j);
  }
}

std::string csv_cell(const Json& j) {
  if (j.is_number_float()) return format_number(j.get<double>());
  if (j.is_number_integer() || j.is_number_unsigned()) return j.dump();
  if (j.is_boolean()) return j.get<bool>() ? "1" : "0";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "";
  throw std::logic_error("csv cell must be a scalar");
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_json(std::ostream& os, const Json& doc) {
  write_value(os, doc, 0);
  os << '\n';
}

void write_csv(std::ostream& os, const std::vector<Table>& tables) {
  for (std::size_t t = 0; t < tables.size(); ++t) {
    if (t) os << '\n';
    const Table& table = tables[t];
    for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
    os << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
      os << '\n';
    }
  }
}

}  // namespace casimir::cli
