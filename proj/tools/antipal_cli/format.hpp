#pragma once

#include <string>
#include <vector>

#include "antipal/bigint.hpp"
#include "json.hpp"

namespace antipal::cli {

using Json = nlohmann::ordered_json;

/// Header plus rows of already-formatted cells.
struct Grid {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Right-aligned columns separated by two spaces.
std::string render_aligned(const Grid& grid);
/// Comma-separated, header first.
std::string render_csv(const Grid& grid);

/// JSON number when it survives a round trip through double, else a
/// decimal string.
Json to_json(const BigCount& value);

}  // namespace antipal::cli
