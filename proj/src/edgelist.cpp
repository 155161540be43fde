#include "hlmenger/edgelist.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "hlmenger/error.hpp"

namespace hlmenger {

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  if (g.has_labels()) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) out << "l " << v << ' ' << g.labels()[v] << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + msg);
}

std::uint64_t number(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(line_no, "expected a number, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::uint64_t> n_vertices, n_edges;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  std::vector<char> labelled;
  std::size_t label_count = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tok = split_tokens(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (n_vertices) fail(line_no, "duplicate header");
      if (tok.size() != 3) fail(line_no, "header must be 'p <n_vertices> <n_edges>'");
      n_vertices = number(tok[1], line_no);
      n_edges = number(tok[2], line_no);
      if (*n_vertices > 0xFFFFFFFFull) fail(line_no, "vertex count too large");
      labels.assign(*n_vertices, std::string());
      labelled.assign(*n_vertices, 0);
      continue;
    }
    if (!n_vertices) fail(line_no, "record before 'p' header");
    if (tok[0] == "e") {
      if (tok.size() != 3) fail(line_no, "edge must be 'e <u> <v>'");
      auto a = number(tok[1], line_no), b = number(tok[2], line_no);
      if (a >= *n_vertices || b >= *n_vertices) {
        throw Error(ErrorCode::VertexOutOfRange, "line " + std::to_string(line_no) + ": edge (" + std::to_string(a) +
                                                     "," + std::to_string(b) + ") out of range");
      }
      edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    } else if (tok[0] == "l") {
      if (tok.size() != 3) fail(line_no, "label must be 'l <v> <label>'");
      auto v = number(tok[1], line_no);
      if (v >= *n_vertices) fail(line_no, "label for vertex " + std::to_string(v) + " out of range");
      if (labelled[v]) fail(line_no, "duplicate label for vertex " + std::to_string(v));
      labelled[v] = 1;
      labels[v] = std::string(tok[2]);
      ++label_count;
    } else {
      fail(line_no, "unknown record '" + std::string(tok[0]) + "'");
    }
  }
  if (!n_vertices) throw Error(ErrorCode::Parse, "missing 'p' header");
  if (edges.size() != *n_edges) {
    throw Error(ErrorCode::Parse, "header declares " + std::to_string(*n_edges) + " edges, found " +
                                      std::to_string(edges.size()));
  }
  if (label_count != 0 && label_count != *n_vertices) {
    throw Error(ErrorCode::Parse, "labels given for " + std::to_string(label_count) + " of " +
                                      std::to_string(*n_vertices) + " vertices");
  }
  if (label_count == 0) labels.clear();
  return Graph(static_cast<std::size_t>(*n_vertices), edges, std::move(labels));
}

}  // namespace hlmenger
