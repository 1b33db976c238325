#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "cluster_forge/multifunction.hpp"
#include "cluster_forge/scene.hpp"

namespace cluster_forge {

/// Parses a scene document. Syntax errors become SceneError with the line and
/// column; semantic errors carry the JSON path of the offending field. Does
/// not run validate_scene.
Scene parse_scene(std::string_view text);
Scene load_scene(const std::filesystem::path& path);

/// Expands a value-set spec ({"points"}, {"interval"}, {"grid"}, {"union"})
/// at the given resolution. `where` prefixes error field paths.
SampledSet expand_set_spec(const nlohmann::json& spec, double resolution, std::size_t dimension,
                           const std::string& where);

/// FNV-1a 64-bit hash.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

/// One JSON object per line: {"x": [...], "y": [...], "prov": {...}}.
std::string function_to_jsonl(const FunctionSample& f);
FunctionSample function_from_jsonl(std::string_view text);

/// JSON text with every floating-point number written as %.17g.
std::string dump_json(const nlohmann::ordered_json& j, int indent = 2);

/// %.17g
std::string format_double(double v);

}  // namespace cluster_forge
