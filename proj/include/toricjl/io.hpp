// Text formats: complex files, inline character assignments, bundled fixtures.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "toricjl/errors.hpp"
#include "toricjl/simplicial.hpp"
#include "toricjl/zcover.hpp"

namespace toricjl {

/// Complex file: a `vertices: a b c ...` header, then one maximal face per
/// line as whitespace-separated labels; `#` starts a comment. Throws ParseError.
SimplicialComplex parse_complex(std::istream& in);
SimplicialComplex parse_complex(const std::string& text);
SimplicialComplex read_complex_file(const std::filesystem::path& path);
std::string format_complex(const SimplicialComplex& l, const std::string& comment = "");

/// `diag` for ν, or `label=int[,label=int...]`; unmentioned vertices get
/// weight 0 and a message in `warnings`.
Character parse_character(const std::string& spec, const SimplicialComplex& l, std::vector<std::string>& warnings);
/// Comma-separated vertex labels, e.g. `a,c`; empty string is ∅.
VertexSet parse_vertex_set(const std::string& spec, const SimplicialComplex& l);

std::vector<std::string> fixture_names();
/// path3, cycle4, 2k2, simplex<n>, rp2, rp2-flag, triangle-boundary.
SimplicialComplex fixture(const std::string& name);

}  // namespace toricjl
