#include "matsec/matroid_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "matsec/errors.hpp"
#include "matsec/families.hpp"
#include "matsec/minor.hpp"
#include "matsec/rational.hpp"

namespace matsec {

namespace {

std::vector<std::vector<std::string>> tokenize(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

int parse_int(const std::string& tok, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("expected integer for ") + what + ", got '" + tok + "'");
  }
}

std::string dir_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  if (slash == std::string::npos) return ".";
  return path.substr(0, slash);
}

ParsedMatroid parse_lines(const std::vector<std::vector<std::string>>& lines,
                          const std::string& base_dir);

ParsedMatroid parse_uniform(const std::vector<std::vector<std::string>>& lines) {
  if (lines.size() != 1 || lines[0].size() != 3)
    throw ParseError("uniform declaration is a single line: uniform <n> <r>");
  int n = parse_int(lines[0][1], "n");
  int r = parse_int(lines[0][2], "r");
  if (n < 0 || r < 0 || r > n) throw ParseError("uniform needs 0 <= r <= n");
  ParsedMatroid out;
  out.matroid = std::make_shared<UniformMatroid>(n, r);
  out.kind = "uniform";
  for (int i = 0; i < n; ++i) out.element_names.push_back(std::to_string(i));
  return out;
}

ParsedMatroid parse_partition(const std::vector<std::vector<std::string>>& lines) {
  std::vector<std::vector<int>> parts;
  std::vector<int> caps;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto& t = lines[i];
    if (t[0] != "part") throw ParseError("expected 'part <cap> <ids...>', got '" + t[0] + "'");
    if (t.size() < 2) throw ParseError("part line needs a capacity");
    caps.push_back(parse_int(t[1], "capacity"));
    std::vector<int> ids;
    for (size_t j = 2; j < t.size(); ++j) ids.push_back(parse_int(t[j], "element id"));
    if (caps.back() > static_cast<int>(ids.size()))
      throw ParseError("capacity " + t[1] + " exceeds part size " +
                       std::to_string(ids.size()));
    parts.push_back(std::move(ids));
  }
  ParsedMatroid out;
  out.matroid = std::make_shared<PartitionMatroid>(parts, caps);  // validates the partition
  out.kind = "partition";
  for (int i = 0; i < out.matroid->size(); ++i) out.element_names.push_back(std::to_string(i));
  return out;
}

ParsedMatroid parse_graph(const std::vector<std::vector<std::string>>& lines) {
  if (lines[0].size() != 2) throw ParseError("graph declaration: graph <nvertices>");
  Multigraph g;
  g.vertices = parse_int(lines[0][1], "vertex count");
  if (g.vertices < 0) throw ParseError("negative vertex count");
  ParsedMatroid out;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto& t = lines[i];
    if (t.size() != 3) throw ParseError("edge line: <edge-name> <u> <v>");
    int u = parse_int(t[1], "endpoint");
    int v = parse_int(t[2], "endpoint");
    if (u < 0 || u >= g.vertices || v < 0 || v >= g.vertices)
      throw ParseError("edge endpoint out of range in '" + t[0] + "'");
    g.add_edge(u, v);
    out.element_names.push_back(t[0]);
  }
  out.matroid = std::make_shared<GraphicMatroid>(g);
  out.kind = "graph";
  out.graph = std::move(g);
  return out;
}

ParsedMatroid parse_matrix(const std::vector<std::vector<std::string>>& lines) {
  const auto& head = lines[0];
  if (head.size() < 2 || head.size() > 3)
    throw ParseError("matrix declaration: matrix <R>x<C> [gf2]");
  auto x = head[1].find('x');
  if (x == std::string::npos) throw ParseError("matrix dimensions must look like RxC");
  int r = parse_int(head[1].substr(0, x), "row count");
  int c = parse_int(head[1].substr(x + 1), "column count");
  if (r < 0 || c < 0) throw ParseError("negative matrix dimension");
  bool gf2 = false;
  if (head.size() == 3) {
    if (head[2] != "gf2") throw ParseError("unknown matrix flag '" + head[2] + "'");
    gf2 = true;
  }
  if (static_cast<int>(lines.size()) != r + 1)
    throw ParseError("matrix expects exactly " + std::to_string(r) + " row lines");
  std::vector<std::vector<Rat>> rows;
  for (int i = 1; i <= r; ++i) {
    const auto& t = lines[i];
    if (static_cast<int>(t.size()) != c)
      throw ParseError("matrix row " + std::to_string(i) + " has " +
                       std::to_string(t.size()) + " entries, expected " + std::to_string(c));
    std::vector<Rat> row;
    for (const auto& tok : t) row.push_back(parse_rat(tok));
    rows.push_back(std::move(row));
  }
  ParsedMatroid out;
  out.matroid = std::make_shared<LinearMatroid>(std::move(rows), gf2);
  out.kind = "matrix";
  for (int i = 0; i < c; ++i) out.element_names.push_back(std::to_string(i));
  return out;
}

ParsedMatroid parse_dsum(const std::vector<std::vector<std::string>>& lines,
                         const std::string& base_dir) {
  if (lines[0].size() != 1) throw ParseError("dsum declaration is the bare word 'dsum'");
  if (lines.size() == 1) throw ParseError("dsum needs at least one included file");
  std::vector<MatroidPtr> parts;
  ParsedMatroid out;
  for (size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != 1) throw ParseError("dsum include lines hold a single path");
    std::string path = lines[i][0];
    if (!path.empty() && path[0] != '/') path = base_dir + "/" + path;
    ParsedMatroid inner = parse_matroid_file(path);
    int offset = 0;
    for (const auto& p : parts) offset += p->size();
    for (const auto& name : inner.element_names)
      out.element_names.push_back(std::to_string(offset) + ":" + name);
    parts.push_back(inner.matroid);
  }
  out.matroid = direct_sum(std::move(parts));
  out.kind = "dsum";
  return out;
}

ParsedMatroid parse_lines(const std::vector<std::vector<std::string>>& lines,
                          const std::string& base_dir) {
  if (lines.empty()) throw ParseError("empty matroid file");
  const std::string& directive = lines[0][0];
  if (directive == "uniform") return parse_uniform(lines);
  if (directive == "partition") return parse_partition(lines);
  if (directive == "graph") return parse_graph(lines);
  if (directive == "matrix") return parse_matrix(lines);
  if (directive == "dsum") return parse_dsum(lines, base_dir);
  throw ParseError("unknown directive '" + directive + "'");
}

}  // namespace

ParsedMatroid parse_matroid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matroid file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matroid_text(buf.str(), dir_of(path));
}

ParsedMatroid parse_matroid_text(const std::string& text, const std::string& base_dir) {
  return parse_lines(tokenize(text), base_dir);
}

}  // namespace matsec
