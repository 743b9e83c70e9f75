#include "neutro/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace neutro {

ParseError::ParseError(std::size_t line_number, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_number) + ": " +
                         message),
      line(line_number) {}

namespace {

std::optional<Kind> parse_kind(const std::string& token) {
  if (token == "real") return Kind::Real;
  if (token == "indet") return Kind::Indeterminate;
  return std::nullopt;
}

// Split a graph file into (line number, tokens) records, dropping blanks
// and comments.
std::vector<std::pair<std::size_t, std::vector<std::string>>> tokenize(
    const std::string& text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string word;
    while (ls >> word) tokens.push_back(word);
    if (tokens.empty() || tokens.front()[0] == '#') continue;
    out.emplace_back(lineno, std::move(tokens));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Graph parse_graph(const std::string& text) {
  Graph g;
  for (const auto& [lineno, tokens] : tokenize(text)) {
    if (tokens[0] == "vertex") {
      if (tokens.size() != 3) {
        throw ParseError(lineno, "expected: vertex <id> <real|indet>");
      }
      const auto kind = parse_kind(tokens[2]);
      if (!kind) throw ParseError(lineno, "bad kind '" + tokens[2] + "'");
      if (g.has_vertex(tokens[1])) {
        throw ParseError(lineno, "duplicate vertex '" + tokens[1] + "'");
      }
      g.add_vertex(tokens[1], *kind);
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 4) {
        throw ParseError(lineno, "expected: edge <id> <id> <real|indet>");
      }
      const auto kind = parse_kind(tokens[3]);
      if (!kind) throw ParseError(lineno, "bad kind '" + tokens[3] + "'");
      for (int i : {1, 2}) {
        if (!g.has_vertex(tokens[i])) {
          throw ParseError(lineno, "undeclared endpoint '" + tokens[i] + "'");
        }
      }
      if (tokens[1] == tokens[2]) {
        throw ParseError(lineno, "self-loop " + tokens[1] + "-" + tokens[2]);
      }
      if (g.has_edge(tokens[1], tokens[2])) {
        throw ParseError(lineno, "duplicate edge " + tokens[1] + "-" + tokens[2]);
      }
      g.add_edge(tokens[1], tokens[2], *kind);
    } else {
      throw ParseError(lineno, "unknown keyword '" + tokens[0] + "'");
    }
  }
  return g;
}

std::string render_graph(const Graph& g) {
  std::ostringstream out;
  for (const auto& v : g.vertex_ids()) {
    out << "vertex " << v << ' ' << to_string(g.vertex_kind(v)) << '\n';
  }
  for (const auto& e : g.edges()) {
    out << "edge " << e.a << ' ' << e.b << ' ' << to_string(e.kind) << '\n';
  }
  return out.str();
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }

namespace {

// "{a,b,c}" -> sorted unique element list; empty set rejected.
std::vector<std::string> parse_brace_set(std::size_t lineno,
                                         const std::string& id) {
  if (id.size() < 2 || id.front() != '{' || id.back() != '}') {
    throw ParseError(lineno, "subset id must look like {a,b}: '" + id + "'");
  }
  std::vector<std::string> elems;
  std::string body = id.substr(1, id.size() - 2);
  std::istringstream in(body);
  std::string elem;
  while (std::getline(in, elem, ',')) {
    if (elem.empty()) throw ParseError(lineno, "empty element in '" + id + "'");
    elems.push_back(elem);
  }
  if (elems.empty()) throw ParseError(lineno, "empty subset '" + id + "'");
  std::sort(elems.begin(), elems.end());
  if (std::adjacent_find(elems.begin(), elems.end()) != elems.end()) {
    throw ParseError(lineno, "repeated element in '" + id + "'");
  }
  return elems;
}

}  // namespace

SubsetGraph parse_subset_graph(const std::string& text) {
  // First collect element-set vertices and edges, then assign masks once the
  // base (union of all elements) is known.
  std::vector<std::vector<std::string>> vertex_sets;
  std::vector<std::pair<std::size_t, std::size_t>> edge_pairs;
  std::map<std::vector<std::string>, std::size_t> index;
  for (const auto& [lineno, tokens] : tokenize(text)) {
    if (tokens[0] == "vertex") {
      if (tokens.size() != 3) {
        throw ParseError(lineno, "expected: vertex <id> <real|indet>");
      }
      if (!parse_kind(tokens[2])) {
        throw ParseError(lineno, "bad kind '" + tokens[2] + "'");
      }
      auto elems = parse_brace_set(lineno, tokens[1]);
      if (index.count(elems)) {
        throw ParseError(lineno, "duplicate vertex '" + tokens[1] + "'");
      }
      index[elems] = vertex_sets.size();
      vertex_sets.push_back(std::move(elems));
    } else if (tokens[0] == "edge") {
      if (tokens.size() != 4) {
        throw ParseError(lineno, "expected: edge <id> <id> <real|indet>");
      }
      if (!parse_kind(tokens[3])) {
        throw ParseError(lineno, "bad kind '" + tokens[3] + "'");
      }
      std::size_t at[2];
      for (int i : {1, 2}) {
        auto elems = parse_brace_set(lineno, tokens[i]);
        auto it = index.find(elems);
        if (it == index.end()) {
          throw ParseError(lineno, "undeclared endpoint '" + tokens[i] + "'");
        }
        at[i - 1] = it->second;
      }
      if (at[0] == at[1]) {
        throw ParseError(lineno, "self-loop " + tokens[1] + "-" + tokens[2]);
      }
      auto pair = std::minmax(at[0], at[1]);
      if (std::find(edge_pairs.begin(), edge_pairs.end(),
                    std::pair{pair.first, pair.second}) != edge_pairs.end()) {
        throw ParseError(lineno, "duplicate edge " + tokens[1] + "-" + tokens[2]);
      }
      edge_pairs.emplace_back(pair.first, pair.second);
    } else {
      throw ParseError(lineno, "unknown keyword '" + tokens[0] + "'");
    }
  }

  SubsetGraph out;
  std::set<std::string> base;
  for (const auto& vs : vertex_sets) base.insert(vs.begin(), vs.end());
  out.base.assign(base.begin(), base.end());
  if (out.base.size() > 31) {
    throw std::invalid_argument("subset base larger than 31 elements");
  }
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < out.base.size(); ++i) pos[out.base[i]] = i;
  std::vector<std::uint32_t> masks;
  for (const auto& vs : vertex_sets) {
    std::uint32_t mask = 0;
    for (const auto& e : vs) mask |= std::uint32_t{1} << pos.at(e);
    masks.push_back(mask);
  }
  out.vertices = masks;
  std::sort(out.vertices.begin(), out.vertices.end());
  for (const auto& [i, j] : edge_pairs) {
    const auto [lo, hi] = std::minmax(masks[i], masks[j]);
    out.edges.emplace_back(lo, hi);
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

std::string render_subset_graph(const SubsetGraph& s) {
  std::ostringstream out;
  for (const auto mask : s.vertices) {
    out << "vertex " << s.label(mask) << " real\n";
  }
  for (const auto& [lo, hi] : s.edges) {
    out << "edge " << s.label(lo) << ' ' << s.label(hi) << " real\n";
  }
  return out.str();
}

SubsetGraph load_subset_graph(const std::string& path) {
  return parse_subset_graph(read_file(path));
}

namespace {

std::string quoted(const std::string& id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  for (const auto& v : g.vertex_ids()) {
    out << "  " << quoted(v);
    if (g.vertex_kind(v) == Kind::Indeterminate) out << " [style=dashed]";
    out << ";\n";
  }
  for (const auto& e : g.edges()) {
    out << "  " << quoted(e.a) << " -- " << quoted(e.b);
    if (e.kind == Kind::Indeterminate) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const SubsetGraph& s) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  for (const auto mask : s.vertices) out << "  " << quoted(s.label(mask)) << ";\n";
  for (const auto& [lo, hi] : s.edges) {
    out << "  " << quoted(s.label(lo)) << " -- " << quoted(s.label(hi)) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string hasse_dot(const Space& s) {
  const Hasse h = hasse(s);
  std::ostringstream out;
  out << "digraph H {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < h.labels.size(); ++i) {
    out << "  s" << i << " [label=" << quoted(h.labels[i]) << "];\n";
  }
  std::map<std::size_t, std::vector<std::size_t>> by_size;
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    by_size[s.members[i].vertices().size() + s.members[i].edges().size()]
        .push_back(i);
  }
  for (const auto& [size, ids] : by_size) {
    out << "  { rank=same;";
    for (std::size_t i : ids) out << " s" << i << ';';
    out << " }\n";
  }
  for (const auto& [lo, hi] : h.covers) {
    out << "  s" << lo << " -> s" << hi << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace neutro
