#include "indexcap/confusion.hpp"

#include <bit>
#include <charconv>
#include <string>

#include "indexcap/error.hpp"
#include "indexcap/products.hpp"

namespace indexcap {

namespace {

constexpr int kMaxTotalBits = 62;

UGraph relabel(const UGraph& g, const std::vector<std::uint64_t>& map) {
  UGraph out(g.size());
  for (std::size_t u = 0; u < g.size(); ++u) {
    Bitset& row = out.mutable_row(map[u]);
    g.neighbors(u).for_each([&](std::size_t v) { row.set(map[v]); });
  }
  return out;
}

UGraph product_of(Product kind, const UGraph& g1, const UGraph& g2,
                  const SolverLimits& limits) {
  switch (kind) {
    case Product::Disjunctive: return disjunctive_product(g1, g2, limits);
    case Product::Lexicographic: return lexicographic_product(g1, g2, limits);
    case Product::Cartesian: return cartesian_product(g1, g2, limits);
    case Product::None: break;
  }
  throw std::logic_error("no product for Product::None");
}

}  // namespace

LengthTuple::LengthTuple(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  for (int len : lengths_) {
    if (len < 0) throw InputError("message lengths must be non-negative");
    total_ += len;
    if (total_ > kMaxTotalBits) {
      throw InputError("total message length above " + std::to_string(kMaxTotalBits) +
                       " bits");
    }
  }
}

LengthTuple LengthTuple::uniform(int n, int length) {
  return LengthTuple(std::vector<int>(static_cast<std::size_t>(n), length));
}

LengthTuple LengthTuple::restricted(NodeSet nodes) const {
  std::vector<int> out;
  for (int j = 0; j < size(); ++j) {
    if (nodes & node_bit(j)) out.push_back(lengths_[j]);
  }
  return LengthTuple(std::move(out));
}

LengthTuple parse_lengths(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view token =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                         : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw InputError("malformed length tuple '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return LengthTuple(std::move(out));
}

VertexCodec::VertexCodec(const LengthTuple& t) : lengths_(t.lengths()) {
  offsets_.reserve(lengths_.size());
  for (int len : lengths_) {
    offsets_.push_back(total_bits_);
    total_bits_ += len;
  }
}

std::uint64_t VertexCodec::message_mask(int j) const {
  if (lengths_[j] == 0) return 0;
  return ((std::uint64_t{1} << lengths_[j]) - 1) << offsets_[j];
}

std::uint64_t VertexCodec::messages_mask(NodeSet nodes) const {
  std::uint64_t mask = 0;
  for (int j = 0; j < static_cast<int>(lengths_.size()); ++j) {
    if (nodes & node_bit(j)) mask |= message_mask(j);
  }
  return mask;
}

std::uint64_t VertexCodec::encode(const MessageTuple& x) const {
  if (x.size() != lengths_.size()) {
    throw InputError("message tuple has " + std::to_string(x.size()) +
                     " entries, expected " + std::to_string(lengths_.size()));
  }
  std::uint64_t v = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (lengths_[j] < 64 && (x[j] >> lengths_[j]) != 0) {
      throw InputError("message " + std::to_string(j + 1) + " does not fit in " +
                       std::to_string(lengths_[j]) + " bits");
    }
    v |= x[j] << offsets_[j];
  }
  return v;
}

MessageTuple VertexCodec::decode(std::uint64_t vertex) const {
  MessageTuple x(lengths_.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    x[j] = (vertex & message_mask(static_cast<int>(j))) >> offsets_[j];
  }
  return x;
}

void validate_lengths(const Problem& p, const LengthTuple& t) {
  if (t.size() != p.size()) {
    throw InputError("length tuple has " + std::to_string(t.size()) +
                     " entries for a problem with " + std::to_string(p.size()) +
                     " messages");
  }
}

void check_vertex_budget(const LengthTuple& t, const SolverLimits& limits) {
  if (t.total() >= 63 || (std::uint64_t{1} << t.total()) > limits.max_vertices) {
    throw BudgetError("confusion graph needs 2^" + std::to_string(t.total()) +
                      " vertices, above the budget of " +
                      std::to_string(limits.max_vertices));
  }
}

bool confusable_at(const Problem& p, const LengthTuple& t, const MessageTuple& x,
                   const MessageTuple& z, int j) {
  validate_lengths(p, t);
  VertexCodec codec(t);
  // encode() validates arity and ranges.
  std::uint64_t diff = codec.encode(x) ^ codec.encode(z);
  if (j < 0 || j >= p.size()) throw InputError("receiver out of range");
  return (diff & codec.message_mask(j)) != 0 &&
         (diff & codec.messages_mask(p.side_info(j))) == 0;
}

UGraph build_confusion_graph(const Problem& p, const LengthTuple& t,
                             const SolverLimits& limits) {
  validate_lengths(p, t);
  check_vertex_budget(t, limits);
  VertexCodec codec(t);
  const std::uint64_t num_vertices = codec.num_vertices();
  const std::uint64_t all = num_vertices - 1;

  // Confusability only depends on x XOR z, so collect the admissible
  // differences once: d is one iff for some receiver j it touches message j
  // and leaves every message in A_j alone.
  std::vector<std::uint64_t> differences;
  Bitset seen(num_vertices);
  for (int j = 0; j < p.size(); ++j) {
    const std::uint64_t own = codec.message_mask(j);
    if (own == 0) continue;
    const std::uint64_t free = all & ~codec.messages_mask(p.side_info(j));
    for (std::uint64_t d = free; d != 0; d = (d - 1) & free) {
      if ((d & own) != 0 && !seen.test(d)) {
        seen.set(d);
        differences.push_back(d);
      }
    }
  }

  UGraph g(num_vertices);
  for (std::uint64_t u = 0; u < num_vertices; ++u) {
    Bitset& row = g.mutable_row(u);
    for (std::uint64_t d : differences) row.set(u ^ d);
  }
  return g;
}

std::string_view to_string(Product product) {
  switch (product) {
    case Product::Disjunctive: return "Disjunctive";
    case Product::Lexicographic: return "Lexicographic";
    case Product::Cartesian: return "Cartesian";
    case Product::None: return "None";
  }
  return "?";
}

CrossPattern cross_pattern(const Problem& p, const Partition2& part) {
  validate_partition(part, p.size());
  int forward = 0;
  int backward = 0;
  for (auto [from, to] : p.edges()) {
    bool from_left = (part.left & node_bit(from)) != 0;
    bool to_left = (part.left & node_bit(to)) != 0;
    if (from_left && !to_left) ++forward;
    if (!from_left && to_left) ++backward;
  }
  const int pairs = std::popcount(part.left) * std::popcount(part.right);
  if (forward == 0 && backward == 0) return CrossPattern::None;
  if (forward == pairs && backward == pairs) return CrossPattern::CompleteBothWays;
  if (backward == 0) return CrossPattern::LeftToRight;
  if (forward == 0) return CrossPattern::RightToLeft;
  return CrossPattern::Mixed;
}

Problem complete_left_to_right(const Problem& p, const Partition2& part) {
  validate_partition(part, p.size());
  std::vector<NodeSet> sets = p.side_info();
  for (int j = 0; j < p.size(); ++j) {
    if (part.right & node_bit(j)) sets[j] |= part.left;
  }
  return Problem(std::move(sets));
}

std::vector<std::uint64_t> product_vertex_map(const LengthTuple& t,
                                              const Partition2& part) {
  validate_partition(part, t.size());
  VertexCodec whole(t);
  VertexCodec left(t.restricted(part.left));
  VertexCodec right(t.restricted(part.right));
  const std::uint64_t right_size = right.num_vertices();
  std::vector<std::uint64_t> map(whole.num_vertices());
  for (std::uint64_t v = 0; v < map.size(); ++v) {
    MessageTuple x = whole.decode(v);
    MessageTuple xl;
    MessageTuple xr;
    for (int j = 0; j < t.size(); ++j) {
      (part.left & node_bit(j) ? xl : xr).push_back(x[j]);
    }
    map[v] = left.encode(xl) * right_size + right.encode(xr);
  }
  return map;
}

Product verify_factorization(const Problem& p, const Partition2& part,
                             const LengthTuple& t, const SolverLimits& limits) {
  validate_lengths(p, t);
  const CrossPattern pattern = cross_pattern(p, part);
  const Problem effective =
      pattern == CrossPattern::LeftToRight ? complete_left_to_right(p, part) : p;

  const UGraph whole = build_confusion_graph(effective, t, limits);
  const UGraph g1 = build_confusion_graph(effective.induced(part.left),
                                          t.restricted(part.left), limits);
  const UGraph g2 = build_confusion_graph(effective.induced(part.right),
                                          t.restricted(part.right), limits);
  const UGraph paired = relabel(whole, product_vertex_map(t, part));

  std::vector<Product> order;
  switch (pattern) {
    case CrossPattern::None: order.push_back(Product::Disjunctive); break;
    case CrossPattern::LeftToRight: order.push_back(Product::Lexicographic); break;
    case CrossPattern::CompleteBothWays: order.push_back(Product::Cartesian); break;
    default: break;
  }
  for (Product k : {Product::Disjunctive, Product::Lexicographic, Product::Cartesian}) {
    if (order.empty() || order.front() != k) order.push_back(k);
  }
  for (Product k : order) {
    if (product_of(k, g1, g2, limits) == paired) return k;
  }
  return Product::None;
}

}  // namespace indexcap
