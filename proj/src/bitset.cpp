#include "homcount/bitset.hpp"

#include <algorithm>
#include <cassert>

namespace homcount {

void Bitset::fill() {
  std::fill(words_.begin(), words_.end(), ~Word{0});
  if (const auto tail = size_ % kWordBits; tail != 0 && !words_.empty()) {
    words_.back() &= (Word{1} << tail) - 1;
  }
}

void Bitset::clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

std::size_t Bitset::count() const {
  std::size_t total = 0;
  for (const Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool Bitset::none() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

Bitset& Bitset::operator&=(const Bitset& other) {
  assert(other.size_ == size_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::vector<std::size_t> Bitset::members() const {
  std::vector<std::size_t> out;
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t intersection_count(const Bitset& a, const Bitset& b) {
  assert(a.size() == b.size());
  const auto* wa = a.data();
  const auto* wb = b.data();
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.word_count(); ++i) {
    total += static_cast<std::size_t>(std::popcount(wa[i] & wb[i]));
  }
  return total;
}

std::size_t intersect_into(const Bitset& a, const Bitset& b, Bitset& out) {
  assert(a.size() == b.size() && out.size() == a.size());
  const auto* wa = a.data();
  const auto* wb = b.data();
  auto* wo = out.data();
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.word_count(); ++i) {
    wo[i] = wa[i] & wb[i];
    total += static_cast<std::size_t>(std::popcount(wo[i]));
  }
  return total;
}

}  // namespace homcount
