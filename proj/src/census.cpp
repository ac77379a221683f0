#include "indexcap/census.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <string>

#include "indexcap/error.hpp"
#include "indexcap/parallel.hpp"

namespace indexcap {

namespace {

constexpr std::size_t kBlocks = 256;

void check_census_size(int n) {
  if (n < 1 || n > kMaxCensusNodes) {
    throw InputError("census supports 1 <= n <= " + std::to_string(kMaxCensusNodes) +
                     ", got " + std::to_string(n));
  }
}

int string_position(int n, int from, int to) {
  return from * (n - 1) + (to < from ? to : to - 1);
}

std::uint64_t row_bits(int n, std::uint64_t mask, int node) {
  const int len = n * (n - 1);
  const std::uint64_t row_mask = (std::uint64_t{1} << (n - 1)) - 1;
  return (mask >> (len - (node + 1) * (n - 1))) & row_mask;
}

// Runs `block(lo, hi, out)` over [0, count) split into blocks and returns the
// sorted union of the outputs.
template <typename Block>
std::vector<std::uint64_t> collect_blocks(std::uint64_t count, unsigned threads,
                                          Block block) {
  const std::uint64_t blocks = std::min<std::uint64_t>(kBlocks, std::max<std::uint64_t>(count, 1));
  const std::uint64_t step = (count + blocks - 1) / blocks;
  std::vector<std::vector<std::uint64_t>> parts(blocks);
  parallel_for(blocks, threads, [&](std::size_t b) {
    const std::uint64_t lo = std::min(count, b * step);
    const std::uint64_t hi = std::min(count, lo + step);
    block(lo, hi, parts[b]);
    std::sort(parts[b].begin(), parts[b].end());
    parts[b].erase(std::unique(parts[b].begin(), parts[b].end()), parts[b].end());
  });
  std::vector<std::uint64_t> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint64_t> dedup_masks(int n, unsigned threads) {
  const Canonicalizer canon(n);
  const std::uint64_t count = std::uint64_t{1} << (n * (n - 1));
  return collect_blocks(count, threads,
                        [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& out) {
                          for (std::uint64_t m = lo; m < hi; ++m) out.push_back(canon.canonical(m));
                        });
}

// A canonical mask puts a node of minimum out-degree d first and sends its
// out-neighbours to the end, so row 0 reads 0...01...1 with d ones. Only
// relabellings that move a degree-d node to the front can beat it.
std::vector<std::uint64_t> orderly_masks(int n, unsigned threads) {
  if (n == 1) return {0};
  const Canonicalizer canon(n);
  const int len = n * (n - 1);
  const int rest_bits = len - (n - 1);
  std::vector<std::uint64_t> out;
  for (int d = 0; d <= n - 1; ++d) {
    const std::uint64_t head = ((std::uint64_t{1} << d) - 1) << rest_bits;
    auto part = collect_blocks(
        std::uint64_t{1} << rest_bits, threads,
        [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& found) {
          int min_nodes[kMaxCensusNodes];
          for (std::uint64_t rest = lo; rest < hi; ++rest) {
            const std::uint64_t mask = head | rest;
            int count = 0;
            bool ok = true;
            for (int v = 0; v < n && ok; ++v) {
              const int deg = std::popcount(row_bits(n, mask, v));
              if (deg < d) ok = false;
              if (deg == d) min_nodes[count++] = v;
            }
            for (int k = 0; k < count && ok; ++k) {
              for (std::size_t perm : canon.moving_to_front(min_nodes[k])) {
                if (canon.apply(perm, mask) < mask) {
                  ok = false;
                  break;
                }
              }
            }
            if (ok) found.push_back(mask);
          }
        });
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void put_u64(std::ostream& os, std::uint64_t v) {
  unsigned char bytes[8];
  for (int k = 0; k < 8; ++k) bytes[k] = static_cast<unsigned char>(v >> (8 * k));
  os.write(reinterpret_cast<const char*>(bytes), 8);
}

std::uint64_t get_u64(std::istream& is) {
  unsigned char bytes[8];
  if (!is.read(reinterpret_cast<char*>(bytes), 8)) {
    throw InputError("truncated checkpoint file");
  }
  std::uint64_t v = 0;
  for (int k = 0; k < 8; ++k) v |= std::uint64_t{bytes[k]} << (8 * k);
  return v;
}

}  // namespace

std::string_view to_string(CensusMode mode) {
  return mode == CensusMode::OneShot ? "one-shot" : "recursive-fixpoint";
}

CensusMode parse_census_mode(std::string_view text) {
  if (text == "one-shot") return CensusMode::OneShot;
  if (text == "recursive-fixpoint") return CensusMode::RecursiveFixpoint;
  throw InputError("unknown census mode '" + std::string(text) +
                   "' (expected one-shot or recursive-fixpoint)");
}

Canonicalizer::Canonicalizer(int n) : n_(n), bits_(n * (n - 1)), chunks_((bits_ + 7) / 8) {
  check_census_size(n);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  by_front_.resize(static_cast<std::size_t>(n));
  const std::size_t stride = static_cast<std::size_t>(std::max(chunks_, 1)) * 256;
  do {
    const std::size_t base = table_.size();
    table_.resize(base + stride, 0);
    for (int bit = 0; bit < bits_; ++bit) {
      const int pos = bits_ - 1 - bit;
      const int from = pos / (n - 1);
      const int col = pos % (n - 1);
      const int to = col < from ? col : col + 1;
      const int image = bits_ - 1 - string_position(n, perm[from], perm[to]);
      const int chunk = bit / 8;
      for (int byte = 0; byte < 256; ++byte) {
        if ((byte >> (bit % 8)) & 1) {
          table_[base + static_cast<std::size_t>(chunk) * 256 + byte] |= std::uint32_t{1} << image;
        }
      }
    }
    const int front = static_cast<int>(std::find(perm.begin(), perm.end(), 0) - perm.begin());
    by_front_[front].push_back(num_perms_);
    ++num_perms_;
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::uint64_t Canonicalizer::apply(std::size_t perm_index, std::uint64_t mask) const {
  const std::uint32_t* t = table_.data() + perm_index * static_cast<std::size_t>(chunks_) * 256;
  std::uint64_t out = 0;
  for (int c = 0; c < chunks_; ++c, t += 256) out |= t[(mask >> (8 * c)) & 0xFF];
  return out;
}

std::uint64_t Canonicalizer::canonical(std::uint64_t mask) const {
  std::uint64_t best = mask;
  for (std::size_t p = 0; p < num_perms_; ++p) best = std::min(best, apply(p, mask));
  return best;
}

bool Canonicalizer::is_canonical(std::uint64_t mask) const {
  for (std::size_t p = 0; p < num_perms_; ++p) {
    if (apply(p, mask) < mask) return false;
  }
  return true;
}

std::vector<std::uint64_t> canonical_masks(int n, const CensusOptions& options) {
  check_census_size(n);
  if (options.checkpoint && std::filesystem::exists(*options.checkpoint)) {
    auto masks = read_checkpoint(*options.checkpoint);
    const Canonicalizer canon(n);
    const std::uint64_t limit = std::uint64_t{1} << (n * (n - 1));
    for (std::size_t k = 0; k < masks.size(); ++k) {
      if (masks[k] >= limit || (k > 0 && masks[k] <= masks[k - 1]) ||
          !canon.is_canonical(masks[k])) {
        throw InputError("checkpoint does not hold sorted canonical masks for n=" +
                         std::to_string(n));
      }
    }
    return masks;
  }
  const EnumerationStrategy strategy = options.strategy.value_or(
      n <= 5 ? EnumerationStrategy::Dedup : EnumerationStrategy::Orderly);
  auto masks = strategy == EnumerationStrategy::Dedup ? dedup_masks(n, options.threads)
                                                      : orderly_masks(n, options.threads);
  if (options.checkpoint) write_checkpoint(*options.checkpoint, masks);
  return masks;
}

std::vector<Problem> enumerate_problems(int n, const CensusOptions& options) {
  std::vector<Problem> out;
  for (std::uint64_t m : canonical_masks(n, options)) out.push_back(problem_from_mask(n, m));
  return out;
}

Decomposition decompose(const Problem& p) {
  const InteractionClass c = classify_interaction(p);
  switch (c.tag) {
    case InteractionTag::Irreducible:
      if (p.size() == 1) return {true, 0};
      return {false, p.size()};
    case InteractionTag::DegradedReducible:
      return decompose(degraded_reduce(p));
    default: {
      const Decomposition a = decompose(p.induced(c.partition->left));
      const Decomposition b = decompose(p.induced(c.partition->right));
      return {a.fully_decomposed && b.fully_decomposed,
              std::max(a.largest_irreducible, b.largest_irreducible)};
    }
  }
}

std::vector<InteractionClass> classify_all(const std::vector<Problem>& problems,
                                           unsigned threads) {
  std::vector<InteractionClass> out(problems.size());
  parallel_for(problems.size(), threads,
               [&](std::size_t i) { out[i] = classify_interaction(problems[i]); });
  return out;
}

CensusReport run_census(int n, CensusMode mode, const CensusOptions& options) {
  const auto problems = enumerate_problems(n, options);
  const auto classes = classify_all(problems, options.threads);
  CensusReport report;
  report.n = n;
  report.mode = mode;
  report.total_classes = problems.size();
  for (InteractionTag tag :
       {InteractionTag::NoEdges, InteractionTag::OneWay, InteractionTag::CompleteBipartite,
        InteractionTag::DegradedReducible, InteractionTag::Irreducible}) {
    report.class_counts[tag] = 0;
  }
  for (const auto& c : classes) ++report.class_counts[c.tag];
  const std::uint64_t reducible =
      report.total_classes - report.class_counts[InteractionTag::Irreducible];
  report.reducible_fraction = Rat(BigInt(reducible), BigInt(report.total_classes));
  if (mode == CensusMode::RecursiveFixpoint) {
    std::vector<char> full(problems.size(), 0);
    parallel_for(problems.size(), options.threads,
                 [&](std::size_t i) { full[i] = decompose(problems[i]).fully_decomposed; });
    report.fully_decomposed =
        static_cast<std::uint64_t>(std::count(full.begin(), full.end(), 1));
  }
  return report;
}

void write_checkpoint(const std::filesystem::path& path,
                      const std::vector<std::uint64_t>& masks) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw InputError("cannot write checkpoint " + path.string());
  for (std::uint64_t m : masks) put_u64(os, m);
  if (!os) throw InputError("failed writing checkpoint " + path.string());
}

std::vector<std::uint64_t> read_checkpoint(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary | std::ios::ate);
  if (!is) throw InputError("cannot read checkpoint " + path.string());
  const auto bytes = static_cast<std::uint64_t>(is.tellg());
  if (bytes % 8 != 0) throw InputError(path.string() + " is not a census checkpoint");
  is.seekg(0);
  std::vector<std::uint64_t> masks;
  masks.reserve(bytes / 8);
  for (std::uint64_t k = 0; k < bytes / 8; ++k) masks.push_back(get_u64(is));
  return masks;
}

}  // namespace indexcap
