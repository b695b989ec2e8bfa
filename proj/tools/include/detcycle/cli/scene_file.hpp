#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "detcycle/deformation/scene.hpp"

namespace detcycle::cli {

// Scene files are a TOML subset:
//
//   [ring]              variables = ["x", "y"]
//   [artinian]          generators = ["e"]   order = 2
//   [options]           monomial_order = "lex"       degree_bound = 8   seed = 7
//   [chart.<name>]      parameters = ["x", "y"]      lifting = "x + e*y"
//   [overlap.<a>.<b>]   inverted = ["y + 1"]         (three names for a triple overlap)
//
// Values are double-quoted strings, non-negative integers, or arrays of
// strings (which may span lines). '#' starts a comment outside strings.
// Every diagnostic carries "origin:line: key".
deformation::Scene parse_scene(std::string_view text, const std::string& origin = "<scene>");
deformation::Scene load_scene(const std::filesystem::path& path);

// Canonical rendering; parse_scene(render_scene(s)) renders identically.
std::string render_scene(const deformation::Scene& scene);

}  // namespace detcycle::cli
