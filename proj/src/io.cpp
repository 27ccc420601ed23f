#include "ldsets/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "ldsets/error.hpp"

namespace ldsets {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t number(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": '" + std::string(token) + "' is not a vertex id");
  }
  return value;
}

}  // namespace

Digraph parse_instance(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Arc> arcs;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto fields = tokens(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    if (!n) {
      if (fields.size() != 1) throw ParseError("line " + std::to_string(line_no) + ": header must be a single n");
      const auto value = number(fields[0], line_no);
      if (value > (1u << 24)) throw ParseError("line " + std::to_string(line_no) + ": order too large");
      n = static_cast<std::size_t>(value);
      continue;
    }
    if (fields.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
    const auto u = number(fields[0], line_no);
    const auto v = number(fields[1], line_no);
    if (u >= *n || v >= *n) throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range");
    if (u == v) throw ParseError("line " + std::to_string(line_no) + ": loop at vertex " + std::to_string(u));
    arcs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!n) throw ParseError("missing header line with the vertex count");
  return Digraph::build(*n, arcs);
}

Digraph read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string render_instance(const Digraph& d) {
  std::ostringstream out;
  out << d.order() << '\n';
  for (const auto& [u, v] : d.arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string render_dot(const Digraph& d, const std::optional<VertexList>& highlight) {
  std::ostringstream out;
  out << "digraph D {\n";
  for (Vertex v = 0; v < d.order(); ++v) {
    out << "  " << v;
    if (highlight && std::binary_search(highlight->begin(), highlight->end(), v)) {
      out << " [style=filled, fillcolor=gray]";
    }
    out << ";\n";
  }
  for (const auto& [u, v] : d.arcs()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string join_vertices(const VertexList& set) {
  std::ostringstream out;
  for (std::size_t i = 0; i < set.size(); ++i) out << (i ? " " : "") << set[i];
  return out.str();
}

}  // namespace ldsets
