#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matsec/matroid.hpp"
#include "matsec/multigraph.hpp"

namespace matsec {

// Result of loading a matroid instance file. The graph is kept when the
// declaration was `graph ...` so graph-based algorithms can use it.
struct ParsedMatroid {
  MatroidPtr matroid;
  std::string kind;  // uniform | partition | graph | matrix | dsum
  std::optional<Multigraph> graph;
  std::vector<std::string> element_names;  // index form "0","1",... unless named edges
};

// Plain-text instance format, one declaration per file. Blank lines and
// lines starting with '#' are ignored. Declarations:
//
//   uniform <n> <r>
//   partition
//   part <cap> <ids...>            (one line per part; ids partition 0..n-1)
//   graph <nvertices>
//   <edge-name> <u> <v>            (one line per edge; ids in declaration order)
//   matrix <R>x<C> [gf2]
//   <C rational literals>          (R rows; entries are `p/q`, integers, or decimals)
//   dsum
//   <path>                         (one included file per line, relative to this file)
//
// Unknown directives are rejected.
ParsedMatroid parse_matroid_file(const std::string& path);
ParsedMatroid parse_matroid_text(const std::string& text, const std::string& base_dir = ".");

}  // namespace matsec
