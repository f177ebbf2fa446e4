#include "table.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace diosum::cli {

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

namespace {

std::string csv_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(const std::string& s) const { return csv_field(s); }
    std::string operator()(std::int64_t v) const { return fmt::format("{}", v); }
    std::string operator()(std::uint64_t v) const { return fmt::format("{}", v); }
    std::string operator()(double v) const { return fmt::format("{}", v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json json_cell(const Cell& cell) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(std::uint64_t v) const { return v; }
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      return v;
    }
    nlohmann::ordered_json operator()(bool v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

TableWriter::TableWriter(Format format, std::vector<std::string> columns, std::FILE* out)
    : format_(format), columns_(std::move(columns)), out_(out) {
  if (format_ != Format::csv) return;
  std::string header;
  for (std::size_t i = 0; i < columns_.size(); ++i) header += (i ? "," : "") + csv_field(columns_[i]);
  fmt::print(out_, "{}\n", header);
  std::fflush(out_);
}

void TableWriter::write(const Row& row) {
  for (const auto& [name, _] : row.cells()) {
    bool known = false;
    for (const auto& c : columns_) known = known || c == name;
    if (!known) throw std::logic_error("unknown column " + name);
  }
  const auto& cells = row.cells();
  if (format_ == Format::csv) {
    std::string line;
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (i) line += ',';
      const auto it = cells.find(columns_[i]);
      if (it != cells.end()) line += csv_cell(it->second);
    }
    fmt::print(out_, "{}\n", line);
  } else {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& c : columns_) {
      const auto it = cells.find(c);
      obj[c] = it == cells.end() ? nlohmann::ordered_json(nullptr) : json_cell(it->second);
    }
    fmt::print(out_, "{}\n", obj.dump());
  }
  std::fflush(out_);
}

}  // namespace diosum::cli
