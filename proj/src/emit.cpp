#include "gpq/emit.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace gpq {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Table& Table::cell(double v) {
  pending_.emplace_back(v);
  return *this;
}

Table& Table::cell(std::int64_t v) {
  pending_.emplace_back(v);
  return *this;
}

Table& Table::cell(const std::string& v) {
  if (v.find_first_of(",\"\n") != std::string::npos)
    throw std::invalid_argument("table strings must be CSV-safe");
  pending_.emplace_back(v);
  return *this;
}

void Table::end_row() {
  if (pending_.size() != columns_.size())
    throw std::logic_error("row arity does not match the header");
  rows_.push_back(std::move(pending_));
  pending_.clear();
}

namespace {

std::string cell_text(const std::variant<std::int64_t, double, std::string>& c) {
  if (std::holds_alternative<std::int64_t>(c)) return std::to_string(std::get<std::int64_t>(c));
  if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
  return std::get<std::string>(c);
}

}  // namespace

std::string Table::csv() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < columns_.size(); ++i)
    out << (i ? "," : "") << columns_[i];
  out << "\n";
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << "\n";
  }
  return out.str();
}

std::string Table::json() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    out << (r ? ",\n " : "\n ") << "{";
    for (std::size_t i = 0; i < rows_[r].size(); ++i) {
      out << (i ? "," : "") << "\"" << columns_[i] << "\":";
      if (std::holds_alternative<std::string>(rows_[r][i]))
        out << "\"" << std::get<std::string>(rows_[r][i]) << "\"";
      else
        out << cell_text(rows_[r][i]);
    }
    out << "}";
  }
  out << "\n]\n";
  return out.str();
}

std::string Table::render(const std::string& format) const {
  if (format == "csv") return csv();
  if (format == "json") return json();
  throw std::invalid_argument("unknown format: " + format);
}

void Table::write(const std::string& path, const std::string& format) const {
  const std::string body = render(format);
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output path: " + path);
  out << body;
}

}  // namespace gpq
