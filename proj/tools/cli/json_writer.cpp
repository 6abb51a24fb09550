#include "cli/json_writer.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qseries::cli {

namespace {

void indent(std::ostream& out, int depth) {
  for (int i = 0; i < depth; ++i) out << "  ";
}

std::string format_float(double value) {
  if (!std::isfinite(value)) {
    throw std::logic_error("non-finite float reached the JSON writer");
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write(const nlohmann::json& value, std::ostream& out, int depth) {
  switch (value.type()) {
    case nlohmann::json::value_t::object: {
      if (value.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out << ",\n";
        first = false;
        indent(out, depth + 1);
        out << nlohmann::json(key).dump() << ": ";
        write(item, out, depth + 1);
      }
      out << "\n";
      indent(out, depth);
      out << "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (value.empty()) {
        out << "[]";
        return;
      }
      out << "[\n";
      bool first = true;
      for (const auto& item : value) {
        if (!first) out << ",\n";
        first = false;
        indent(out, depth + 1);
        write(item, out, depth + 1);
      }
      out << "\n";
      indent(out, depth);
      out << "]";
      return;
    }
    case nlohmann::json::value_t::number_float:
      out << format_float(value.get<double>());
      return;
    default:
      out << value.dump();
      return;
  }
}

}  // namespace

void write_canonical_json(const nlohmann::json& value, std::ostream& out) {
  write(value, out, 0);
  out << "\n";
}

std::string canonical_json(const nlohmann::json& value) {
  std::ostringstream out;
  write_canonical_json(value, out);
  return out.str();
}

nlohmann::json float_value(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return value;
}

}  // namespace qseries::cli
