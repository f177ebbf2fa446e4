#pragma once

#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace diosum::cli {

enum class Format { csv, json };

using Cell = std::variant<std::monostate, std::string, std::int64_t, std::uint64_t, double, bool>;

template <class T>
Cell maybe(const std::optional<T>& v) {
  if (!v) return {};
  return Cell(*v);
}

/// Named cells of one output row. Columns that are never set come out empty
/// (CSV) or null (JSON).
class Row {
 public:
  Row& set(const std::string& column, Cell value) {
    cells_[column] = std::move(value);
    return *this;
  }
  const std::map<std::string, Cell>& cells() const { return cells_; }

 private:
  std::map<std::string, Cell> cells_;
};

/// Writes rows with a fixed column order: CSV with a header row, or one JSON
/// object per line. Rows are flushed as they arrive.
class TableWriter {
 public:
  TableWriter(Format format, std::vector<std::string> columns, std::FILE* out = stdout);
  void write(const Row& row);

 private:
  Format format_;
  std::vector<std::string> columns_;
  std::FILE* out_;
};

/// RFC 4180 quoting: fields containing a comma, quote, CR or LF are wrapped in
/// quotes with embedded quotes doubled.
std::string csv_field(std::string_view text);

}  // namespace diosum::cli
