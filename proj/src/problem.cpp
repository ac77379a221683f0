#include "indexcap/problem.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "indexcap/error.hpp"

namespace indexcap {

namespace {

int popcount(NodeSet s) { return std::popcount(s); }

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

int parse_int(std::string_view token, std::size_t line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw InputError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                     std::string(token) + "'");
  }
  return value;
}

// Union of the nodes reachable in one step in either direction.
std::vector<NodeSet> undirected_neighbors(const Problem& p) {
  const int n = p.size();
  std::vector<NodeSet> nb(n, 0);
  for (int j = 0; j < n; ++j) {
    nb[j] |= p.side_info(j);
    for (NodeSet a = p.side_info(j); a != 0; a &= a - 1) {
      nb[std::countr_zero(a)] |= node_bit(j);
    }
  }
  return nb;
}

// Connected components of an undirected adjacency given as node sets; each
// component is reported as a node set, ordered by smallest member.
std::vector<NodeSet> components(const std::vector<NodeSet>& nb) {
  const int n = static_cast<int>(nb.size());
  std::vector<NodeSet> out;
  NodeSet seen = 0;
  for (int s = 0; s < n; ++s) {
    if (seen & node_bit(s)) continue;
    NodeSet comp = node_bit(s);
    NodeSet frontier = comp;
    while (frontier != 0) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      NodeSet fresh = nb[v] & ~comp;
      comp |= fresh;
      frontier |= fresh;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

int string_position(int n, int from, int to) {
  return from * (n - 1) + (to < from ? to : to - 1);
}

}  // namespace

Problem::Problem(std::vector<NodeSet> side_info) : side_info_(std::move(side_info)) {
  const int n = size();
  if (n < 1 || n > kMaxNodes) {
    throw InputError("message count must be in [1, 64], got " + std::to_string(n));
  }
  for (int j = 0; j < n; ++j) {
    if (side_info_[j] & node_bit(j)) {
      throw InputError("receiver " + std::to_string(j + 1) +
                       " lists its own message as side information");
    }
    if (side_info_[j] & ~all_nodes(n)) {
      throw InputError("receiver " + std::to_string(j + 1) +
                       " lists a message outside 1.." + std::to_string(n));
    }
  }
}

Problem Problem::from_lists(const std::vector<std::vector<int>>& one_indexed) {
  const int n = static_cast<int>(one_indexed.size());
  std::vector<NodeSet> sets(one_indexed.size(), 0);
  for (int j = 0; j < n; ++j) {
    for (int i : one_indexed[j]) {
      if (i < 1 || i > n) {
        throw InputError("side-information index " + std::to_string(i) +
                         " out of range 1.." + std::to_string(n));
      }
      sets[j] |= node_bit(i - 1);
    }
  }
  return Problem(std::move(sets));
}

Problem Problem::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1 || n > kMaxNodes) throw InputError("message count must be in [1, 64]");
  std::vector<NodeSet> sets(static_cast<std::size_t>(n), 0);
  for (auto [from, to] : edges) {
    if (from < 0 || from >= n || to < 0 || to >= n) {
      throw InputError("edge endpoint out of range");
    }
    sets[to] |= node_bit(from);
  }
  return Problem(std::move(sets));
}

int Problem::num_edges() const {
  int total = 0;
  for (NodeSet a : side_info_) total += popcount(a);
  return total;
}

std::vector<std::pair<int, int>> Problem::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int from = 0; from < size(); ++from) {
    for (int to = 0; to < size(); ++to) {
      if (has_edge(from, to)) out.emplace_back(from, to);
    }
  }
  return out;
}

NodeSet Problem::successors(int from) const {
  NodeSet out = 0;
  for (int to = 0; to < size(); ++to) {
    if (has_edge(from, to)) out |= node_bit(to);
  }
  return out;
}

Problem Problem::induced(NodeSet nodes) const {
  nodes &= all_nodes(size());
  if (nodes == 0) throw InputError("induced subproblem on an empty node set");
  std::vector<int> index(size(), -1);
  int k = 0;
  for (int v = 0; v < size(); ++v) {
    if (nodes & node_bit(v)) index[v] = k++;
  }
  std::vector<NodeSet> sets(static_cast<std::size_t>(k), 0);
  for (int j = 0; j < size(); ++j) {
    if (index[j] < 0) continue;
    for (NodeSet a = side_info_[j] & nodes; a != 0; a &= a - 1) {
      sets[index[j]] |= node_bit(index[std::countr_zero(a)]);
    }
  }
  return Problem(std::move(sets));
}

Problem Problem::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != size()) {
    throw InputError("permutation size does not match the problem");
  }
  std::vector<NodeSet> sets(side_info_.size(), 0);
  for (int j = 0; j < size(); ++j) {
    for (NodeSet a = side_info_[j]; a != 0; a &= a - 1) {
      sets[perm[j]] |= node_bit(perm[std::countr_zero(a)]);
    }
  }
  return Problem(std::move(sets));
}

Problem Problem::without_edge(int from, int to) const {
  auto sets = side_info_;
  sets[to] &= ~node_bit(from);
  return Problem(std::move(sets));
}

Problem Problem::with_edge(int from, int to) const {
  auto sets = side_info_;
  sets[to] |= node_bit(from);
  return Problem(std::move(sets));
}

void validate_partition(const Partition2& part, int n) {
  if (part.left == 0 || part.right == 0) {
    throw InputError("partition blocks must be nonempty");
  }
  if (part.left & part.right) throw InputError("partition blocks overlap");
  if ((part.left | part.right) != all_nodes(n)) {
    throw InputError("partition blocks must cover exactly the nodes 1.." +
                     std::to_string(n));
  }
}

std::string_view to_string(InteractionTag tag) {
  switch (tag) {
    case InteractionTag::NoEdges: return "NoEdges";
    case InteractionTag::OneWay: return "OneWay";
    case InteractionTag::CompleteBipartite: return "CompleteBipartite";
    case InteractionTag::DegradedReducible: return "DegradedReducible";
    case InteractionTag::Irreducible: return "Irreducible";
  }
  return "?";
}

Problem parse_problem(std::string_view text) {
  int n = -1;
  std::vector<NodeSet> sets;
  std::vector<bool> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";

    if (n < 0) {
      if (line.substr(0, 1) != "n") throw InputError(where + "expected 'n=<count>'");
      std::string_view rest = trim(line.substr(1));
      if (rest.empty() || rest.front() != '=') {
        throw InputError(where + "expected 'n=<count>'");
      }
      n = parse_int(trim(rest.substr(1)), line_no);
      if (n < 1 || n > kMaxNodes) {
        throw InputError(where + "n must be in [1, 64], got " + std::to_string(n));
      }
      sets.assign(static_cast<std::size_t>(n), 0);
      seen.assign(static_cast<std::size_t>(n), false);
      continue;
    }

    auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw InputError(where + "expected '<receiver>: <messages...>'");
    }
    int j = parse_int(trim(line.substr(0, colon)), line_no);
    if (j < 1 || j > n) {
      throw InputError(where + "receiver " + std::to_string(j) + " out of range 1.." +
                       std::to_string(n));
    }
    if (seen[j - 1]) {
      throw InputError(where + "duplicate line for receiver " + std::to_string(j));
    }
    seen[j - 1] = true;
    std::istringstream tokens{std::string(line.substr(colon + 1))};
    std::string token;
    while (tokens >> token) {
      int i = parse_int(token, line_no);
      if (i < 1 || i > n) {
        throw InputError(where + "message " + std::to_string(i) + " out of range 1.." +
                         std::to_string(n));
      }
      if (i == j) {
        throw InputError(where + "receiver " + std::to_string(j) +
                         " lists its own message as side information");
      }
      if (sets[j - 1] & node_bit(i - 1)) {
        throw InputError(where + "message " + std::to_string(i) + " listed twice");
      }
      sets[j - 1] |= node_bit(i - 1);
    }
  }
  if (n < 0) throw InputError("missing 'n=<count>' line");
  for (int j = 0; j < n; ++j) {
    if (!seen[j]) throw InputError("missing line for receiver " + std::to_string(j + 1));
  }
  return Problem(std::move(sets));
}

std::string format_problem(const Problem& p) {
  std::ostringstream out;
  out << "n=" << p.size() << '\n';
  for (int j = 0; j < p.size(); ++j) {
    out << j + 1 << ':';
    for (NodeSet a = p.side_info(j); a != 0; a &= a - 1) {
      out << ' ' << std::countr_zero(a) + 1;
    }
    out << '\n';
  }
  return out.str();
}

Problem degraded_reduce(const Problem& p) {
  std::vector<NodeSet> sets = p.side_info();
  const int n = p.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        if ((sets[j] & node_bit(i)) && (sets[i] & ~sets[j]) == 0) {
          sets[j] &= ~node_bit(i);
          changed = true;
        }
      }
    }
  }
  return Problem(std::move(sets));
}

std::vector<int> strongly_connected_components(const Problem& p) {
  const int n = p.size();
  std::vector<NodeSet> succ(n);
  for (int v = 0; v < n; ++v) succ[v] = p.successors(v);

  // Reachability closure; n <= 64 keeps this cheap and avoids recursion.
  std::vector<NodeSet> reach(n);
  for (int v = 0; v < n; ++v) {
    NodeSet r = node_bit(v);
    NodeSet frontier = r;
    while (frontier != 0) {
      int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      NodeSet fresh = succ[u] & ~r;
      r |= fresh;
      frontier |= fresh;
    }
    reach[v] = r;
  }

  std::vector<NodeSet> sccs;
  NodeSet assigned = 0;
  for (int v = 0; v < n; ++v) {
    if (assigned & node_bit(v)) continue;
    NodeSet comp = 0;
    for (int u = 0; u < n; ++u) {
      if ((reach[v] & node_bit(u)) && (reach[u] & node_bit(v))) comp |= node_bit(u);
    }
    assigned |= comp;
    sccs.push_back(comp);
  }

  // Kahn's algorithm over the condensation; among ready components pick the
  // one holding the smallest node.
  const int k = static_cast<int>(sccs.size());
  std::vector<int> comp_of(n);
  for (int c = 0; c < k; ++c) {
    for (NodeSet s = sccs[c]; s != 0; s &= s - 1) comp_of[std::countr_zero(s)] = c;
  }
  std::vector<int> indegree(k, 0);
  std::vector<std::vector<bool>> arc(k, std::vector<bool>(k, false));
  for (auto [from, to] : p.edges()) {
    int a = comp_of[from];
    int b = comp_of[to];
    if (a != b && !arc[a][b]) {
      arc[a][b] = true;
      ++indegree[b];
    }
  }
  std::vector<int> order_id(k, -1);
  for (int step = 0; step < k; ++step) {
    int pick = -1;
    for (int c = 0; c < k; ++c) {
      if (order_id[c] < 0 && indegree[c] == 0) {
        pick = c;  // sccs are already ordered by smallest member
        break;
      }
    }
    order_id[pick] = step;
    for (int c = 0; c < k; ++c) {
      if (arc[pick][c]) --indegree[c];
    }
  }
  std::vector<int> out(n);
  for (int v = 0; v < n; ++v) out[v] = order_id[comp_of[v]];
  return out;
}

Problem remove_acyclic_edges(const Problem& p) {
  auto comp = strongly_connected_components(p);
  std::vector<NodeSet> sets = p.side_info();
  for (int j = 0; j < p.size(); ++j) {
    for (NodeSet a = sets[j]; a != 0; a &= a - 1) {
      int i = std::countr_zero(a);
      if (comp[i] != comp[j]) sets[j] &= ~node_bit(i);
    }
  }
  return Problem(std::move(sets));
}

InteractionClass classify_interaction(const Problem& p) {
  const int n = p.size();
  InteractionClass out;

  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if ((p.side_info(j) & node_bit(i)) && (p.side_info(i) & ~p.side_info(j)) == 0) {
        out.tag = InteractionTag::DegradedReducible;
        out.degraded = DegradedPair{i, j};
        return out;
      }
    }
  }
  if (n < 2) return out;

  auto weak = components(undirected_neighbors(p));
  if (weak.size() >= 2) {
    out.tag = InteractionTag::NoEdges;
    out.partition = Partition2{weak.front(), all_nodes(n) & ~weak.front()};
    return out;
  }

  auto comp = strongly_connected_components(p);
  if (*std::max_element(comp.begin(), comp.end()) >= 1) {
    NodeSet source = 0;
    for (int v = 0; v < n; ++v) {
      if (comp[v] == 0) source |= node_bit(v);
    }
    out.tag = InteractionTag::OneWay;
    out.partition = Partition2{source, all_nodes(n) & ~source};
    return out;
  }

  // Nodes joined unless both directions are present: a complete bipartite
  // split exists iff this graph is disconnected.
  std::vector<NodeSet> missing(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && !(p.has_edge(u, v) && p.has_edge(v, u))) missing[u] |= node_bit(v);
    }
  }
  auto blocks = components(missing);
  if (blocks.size() >= 2) {
    out.tag = InteractionTag::CompleteBipartite;
    out.partition = Partition2{blocks.front(), all_nodes(n) & ~blocks.front()};
    return out;
  }
  return out;
}

std::string CanonicalForm::to_string() const {
  const int len = n * (n - 1);
  std::string s(static_cast<std::size_t>(len), '0');
  for (int k = 0; k < len; ++k) {
    if ((bits >> (len - 1 - k)) & 1U) s[k] = '1';
  }
  return s;
}

std::uint64_t adjacency_mask(const Problem& p) {
  const int n = p.size();
  if (n > kMaxCanonicalLimit) {
    throw InputError("adjacency bitstring needs n <= 8, got " + std::to_string(n));
  }
  const int len = n * (n - 1);
  std::uint64_t mask = 0;
  for (auto [from, to] : p.edges()) {
    mask |= std::uint64_t{1} << (len - 1 - string_position(n, from, to));
  }
  return mask;
}

Problem problem_from_mask(int n, std::uint64_t mask) {
  if (n < 1 || n > kMaxCanonicalLimit) {
    throw InputError("adjacency bitstring needs 1 <= n <= 8");
  }
  const int len = n * (n - 1);
  std::vector<NodeSet> sets(static_cast<std::size_t>(n), 0);
  for (int from = 0; from < n; ++from) {
    for (int to = 0; to < n; ++to) {
      if (from != to && ((mask >> (len - 1 - string_position(n, from, to))) & 1U)) {
        sets[to] |= node_bit(from);
      }
    }
  }
  return Problem(std::move(sets));
}

CanonicalForm canonical_form(const Problem& p, int max_n) {
  const int n = p.size();
  const int limit = std::min(max_n, kMaxCanonicalLimit);
  if (n > limit) {
    throw InputError("canonical form limited to n <= " + std::to_string(limit) +
                     ", got " + std::to_string(n));
  }
  const int len = n * (n - 1);
  auto edges = p.edges();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t mask = 0;
    for (auto [from, to] : edges) {
      mask |= std::uint64_t{1} << (len - 1 - string_position(n, perm[from], perm[to]));
    }
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return CanonicalForm{n, best};
}

}  // namespace indexcap
