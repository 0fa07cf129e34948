#pragma once

// Whitespace-separated text mesh format:
//
//   N NT
//   x y            (N lines)
//   i j k          (NT lines, 1-based vertex indices, counterclockwise)
//   m1 m2 m3       (NT lines, markers 0/1/2; slot i = edge opposite vertex i)
//
// Anything after the last marker row other than whitespace is rejected.

#include <iosfwd>
#include <string>
#include <string_view>

#include "bdmfem/mesh.hpp"

namespace bdmfem {

/// Parses the text format. Only syntax is checked here; run validate_mesh on
/// the result. Throws ParseError with the offending line.
Mesh parse_mesh(std::istream& in);
Mesh read_mesh(const std::string& path);

void write_mesh(std::ostream& out, const Mesh& mesh);
void write_mesh(const std::string& path, const Mesh& mesh);

/// 13-node, 16-element mesh of (-1,1)^2 with Neumann data on y = 1.
Mesh builtin_paper_mesh();

/// Resolves "builtin:paper" or a file path.
Mesh load_mesh(std::string_view spec);

}  // namespace bdmfem
