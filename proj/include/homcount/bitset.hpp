#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace homcount {

/// Word-packed fixed-size set over 0..size()-1.
///
/// Intersections are word-wise AND followed by popcount; this is the inner
/// loop of the census, eta and one-sided counters.
class Bitset {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }
  const Word* data() const { return words_.data(); }
  Word* data() { return words_.data(); }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void fill();
  void clear();

  std::size_t count() const;
  bool none() const;

  Bitset& operator&=(const Bitset& other);
  friend bool operator==(const Bitset& a, const Bitset& b) = default;

  /// Calls fn(index) for each member in increasing order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        fn(w * kWordBits + bit);
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> members() const;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// |a ∩ b| without materializing the intersection.
std::size_t intersection_count(const Bitset& a, const Bitset& b);

/// out = a ∩ b; returns |out|. All three must have equal size.
std::size_t intersect_into(const Bitset& a, const Bitset& b, Bitset& out);

}  // namespace homcount
