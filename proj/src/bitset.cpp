#include "indexcap/bitset.hpp"

#include <algorithm>

namespace indexcap {

void Bitset::set_all() {
  std::fill(words_.begin(), words_.end(), ~Word{0});
  if (size_ % kWordBits != 0) {
    words_.back() = (Word{1} << (size_ % kWordBits)) - 1;
  }
}

void Bitset::clear() { std::fill(words_.begin(), words_.end(), 0); }

std::size_t Bitset::count() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool Bitset::any() const {
  return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
}

std::size_t Bitset::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
  }
  return size_;
}

std::size_t Bitset::next(std::size_t i) const {
  ++i;
  if (i >= size_) return size_;
  std::size_t w = i / kWordBits;
  Word bits = words_[w] & (~Word{0} << (i % kWordBits));
  while (true) {
    if (bits != 0) {
      return w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
    }
    if (++w == words_.size()) return size_;
    bits = words_[w];
  }
}

Bitset& Bitset::operator&=(const Bitset& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

Bitset Bitset::complement() const {
  Bitset out(size_);
  out.set_all();
  out.subtract(*this);
  return out;
}

bool Bitset::intersects(const Bitset& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

bool Bitset::is_subset_of(const Bitset& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

std::size_t Bitset::intersection_count(const Bitset& other) const {
  std::size_t total = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    total += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
  }
  return total;
}

std::vector<std::size_t> Bitset::to_indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

bool lex_less(const Bitset& a, const Bitset& b) {
  // Compare sorted index lists: at the first differing element the set that
  // holds the smaller index is smaller; a proper prefix is smaller.
  std::size_t i = a.first();
  std::size_t j = b.first();
  while (i < a.size() && j < b.size()) {
    if (i != j) return i < j;
    i = a.next(i);
    j = b.next(j);
  }
  return i >= a.size() && j < b.size();
}

}  // namespace indexcap
