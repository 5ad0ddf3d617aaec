#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "zssusy/cli.hpp"

namespace zssusy::cli {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

std::string json_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    return std::isfinite(*d) ? format_double(*d) : "null";
  }
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return json_string(std::get<std::string>(c));
}

}  // namespace

std::string render(const Table& t, Format format) {
  std::string out;
  if (format == Format::csv) {
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
      out += (j ? "," : "") + t.columns[j];
    }
    out += '\n';
    for (const auto& row : t.rows) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        out += (j ? "," : "") + csv_cell(row[j]);
      }
      out += '\n';
    }
    return out;
  }
  out = "[";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    out += i ? ",\n  {" : "\n  {";
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
      out += (j ? ", " : "") + json_string(t.columns[j]) + ": " +
             json_cell(t.rows[i][j]);
    }
    out += "}";
  }
  out += t.rows.empty() ? "]\n" : "\n]\n";
  return out;
}

void write_table(const Table& table, Format format, const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << render(table, format);
  f.close();
  if (!f) throw std::runtime_error("failed writing " + path);
}

std::string default_output_path(const std::string& stem, Format format) {
  const char* dir = std::getenv("ZSSUSY_OUT_DIR");
  const std::filesystem::path base = dir && *dir ? dir : ".";
  return (base / (stem + (format == Format::csv ? ".csv" : ".json"))).string();
}

}  // namespace zssusy::cli
