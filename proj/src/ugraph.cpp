#include "indexcap/ugraph.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

#include "indexcap/error.hpp"

namespace indexcap {

UGraph::UGraph(std::size_t num_vertices) : rows_(num_vertices, Bitset(num_vertices)) {}

std::size_t UGraph::num_edges() const {
  std::size_t twice = 0;
  for (const auto& row : rows_) twice += row.count();
  return twice / 2;
}

void UGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) throw std::invalid_argument("vertex out of range");
  if (u == v) throw std::invalid_argument("self-loop");
  rows_[u].set(v);
  rows_[v].set(u);
}

void UGraph::remove_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) throw std::invalid_argument("vertex out of range");
  rows_[u].reset(v);
  rows_[v].reset(u);
}

std::vector<std::pair<std::size_t, std::size_t>> UGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v = rows_[u].next(u); v < size(); v = rows_[u].next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

UGraph UGraph::complement() const {
  UGraph out(size());
  for (std::size_t u = 0; u < size(); ++u) {
    Bitset row = rows_[u].complement();
    row.reset(u);
    out.rows_[u] = std::move(row);
  }
  return out;
}

UGraph UGraph::induced(const std::vector<std::size_t>& vertices) const {
  UGraph out(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (adjacent(vertices[a], vertices[b])) out.add_edge(a, b);
    }
  }
  return out;
}

bool UGraph::is_symmetric() const {
  for (std::size_t u = 0; u < size(); ++u) {
    if (rows_[u].test(u)) return false;
    for (std::size_t v = rows_[u].first(); v < size(); v = rows_[u].next(v)) {
      if (!rows_[v].test(u)) return false;
    }
  }
  return true;
}

std::string to_dimacs(const UGraph& g) {
  std::ostringstream out;
  out << "p edge " << g.size() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

UGraph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t declared_edges = 0;
  std::size_t edge_lines = 0;
  UGraph g;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string kind;
    if (!(tokens >> kind) || kind == "c") continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (kind == "p") {
      std::string format;
      long long vertices = -1;
      long long edges = -1;
      if (have_header || !(tokens >> format >> vertices >> edges) ||
          (format != "edge" && format != "col") || vertices < 0 || edges < 0) {
        throw InputError(where + "expected a single 'p edge <V> <E>' header");
      }
      g = UGraph(static_cast<std::size_t>(vertices));
      declared_edges = static_cast<std::size_t>(edges);
      have_header = true;
    } else if (kind == "e") {
      long long u = 0;
      long long v = 0;
      if (!have_header) throw InputError(where + "edge before 'p' header");
      if (!(tokens >> u >> v)) throw InputError(where + "expected 'e <u> <v>'");
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > g.size() ||
          static_cast<std::size_t>(v) > g.size()) {
        throw InputError(where + "vertex out of range");
      }
      if (u == v) throw InputError(where + "self-loop");
      g.add_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
      ++edge_lines;
    } else {
      throw InputError(where + "unknown line type '" + kind + "'");
    }
  }
  if (!have_header) throw InputError("missing 'p edge <V> <E>' header");
  // Some writers list each edge once per direction and count both.
  if (g.num_edges() != declared_edges && edge_lines != declared_edges) {
    throw InputError("header declares " + std::to_string(declared_edges) +
                     " edges, found " + std::to_string(g.num_edges()) + " distinct");
  }
  return g;
}

namespace graphs {

UGraph complete(std::size_t n) {
  UGraph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

UGraph edgeless(std::size_t n) { return UGraph(n); }

UGraph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  UGraph g(n);
  for (std::size_t u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

UGraph path(std::size_t n) {
  UGraph g(n);
  for (std::size_t u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

UGraph complete_bipartite(std::size_t a, std::size_t b) {
  UGraph g(a + b);
  for (std::size_t u = 0; u < a; ++u) {
    for (std::size_t v = 0; v < b; ++v) g.add_edge(u, a + v);
  }
  return g;
}

UGraph petersen() {
  UGraph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

UGraph hypercube(int d) {
  const std::size_t n = std::size_t{1} << d;
  UGraph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (int b = 0; b < d; ++b) {
      std::size_t v = u ^ (std::size_t{1} << b);
      if (u < v) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace graphs

}  // namespace indexcap
