#include "antipal_cli/format.hpp"

#include <algorithm>
#include <stdexcept>

#include "antipal_cli/cli.hpp"

namespace antipal::cli {

Format parse_format(const std::string& name) {
  if (name == "table") return Format::kTable;
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  if (name == "bfile") return Format::kBfile;
  throw std::invalid_argument("unknown format \"" + name +
                              "\" (expected table, csv, json or bfile)");
}

std::string render_aligned(const Grid& grid) {
  std::vector<std::size_t> width(grid.header.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  };
  widen(grid.header);
  for (const auto& row : grid.rows) widen(row);

  std::string out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += "  ";
      out.append(width[i] - row[i].size(), ' ');
      out += row[i];
    }
    out += '\n';
  };
  emit(grid.header);
  for (const auto& row : grid.rows) emit(row);
  return out;
}

std::string render_csv(const Grid& grid) {
  std::string out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  };
  emit(grid.header);
  for (const auto& row : grid.rows) emit(row);
  return out;
}

Json to_json(const BigCount& value) {
  if (fits_json_safe_integer(value)) return Json(value.get_si());
  return Json(value.get_str());
}

}  // namespace antipal::cli
