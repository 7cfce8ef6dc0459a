#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "racg/graph.hpp"

namespace racg::io {

enum class Format { EdgeList, Json, Dot };

std::string_view to_string(Format f);
/// Accepts "edge-list", "json" and "dot".
std::optional<Format> parse_format_name(std::string_view name);
/// .json and .dot/.gv by extension, everything else is an edge list.
Format format_for_path(const std::filesystem::path& path);

/// Raw parse result before graph validation.
struct InputDocument {
  Format format = Format::EdgeList;
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::optional<std::string> name;
  /// Only JSON documents carry colours (two-coloured graphs).
  std::map<std::string, std::string> colors;
};

/// Throws ParseError with the line and column of the first offending token.
InputDocument parse_document(std::string_view text, Format format);
SimplicialGraph to_graph(const InputDocument& doc);
SimplicialGraph parse_input(std::string_view text, Format format);

std::string read_file(const std::filesystem::path& path);
InputDocument load_document(const std::filesystem::path& path,
                            std::optional<Format> format = std::nullopt);
SimplicialGraph load_graph(const std::filesystem::path& path,
                           std::optional<Format> format = std::nullopt);

/// Inverse of parse_input for every format. Edge lists need labels without
/// whitespace or '#'.
std::string serialize(const SimplicialGraph& g, Format format);

}  // namespace racg::io
