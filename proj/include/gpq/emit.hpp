#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace gpq {

/** Row-oriented result table with deterministic CSV and JSON renderings.
 * CSV is the canonical format (doubles as %.12g); JSON mirrors it one object
 * per row. */
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  Table& cell(double v);
  Table& cell(std::int64_t v);
  Table& cell(int v) { return cell(static_cast<std::int64_t>(v)); }
  Table& cell(const std::string& v);
  void end_row();

  std::string csv() const;
  std::string json() const;
  std::string render(const std::string& format) const;  // "csv" or "json"

  /** Render to the file, or to stdout when path is empty. */
  void write(const std::string& path, const std::string& format) const;

  std::size_t row_count() const { return rows_.size(); }

 private:
  using Cell = std::variant<std::int64_t, double, std::string>;
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
  std::vector<Cell> pending_;
};

std::string format_double(double v);  // %.12g

}  // namespace gpq
