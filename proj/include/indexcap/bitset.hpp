#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace indexcap {

/// Fixed-size dynamic bitset used for graph rows and vertex sets. Bits past
/// size() are always zero.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size)
      : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const { return size_; }
  std::size_t num_words() const { return words_.size(); }
  const Word* data() const { return words_.data(); }
  Word* data() { return words_.data(); }

  bool test(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) {
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }
  void set_all();
  void clear();

  std::size_t count() const;
  bool any() const;
  bool none() const { return !any(); }

  /// Index of the lowest set bit, or size() when empty.
  std::size_t first() const;
  /// Index of the lowest set bit strictly above `i`, or size() when none.
  std::size_t next(std::size_t i) const;

  Bitset& operator&=(const Bitset& other);
  Bitset& operator|=(const Bitset& other);
  /// this &= ~other
  Bitset& subtract(const Bitset& other);
  Bitset complement() const;

  bool intersects(const Bitset& other) const;
  bool is_subset_of(const Bitset& other) const;
  std::size_t intersection_count(const Bitset& other) const;

  std::vector<std::size_t> to_indices() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;
  /// Lexicographic order on the sorted index lists of the two sets.
  friend bool lex_less(const Bitset& a, const Bitset& b);

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

inline Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
inline Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

}  // namespace indexcap
