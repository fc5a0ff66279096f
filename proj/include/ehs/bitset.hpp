#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ehs {

/// Fixed-size dynamic bitset used for adjacency rows and vertex-set masks.
class Bitset {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}

  static Bitset full(std::size_t size);

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= word_type{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(word_type{1} << (i % kWordBits)); }

  std::size_t count() const noexcept;
  bool none() const noexcept;
  bool any() const noexcept { return !none(); }

  Bitset& operator&=(const Bitset& other) noexcept;
  Bitset& operator|=(const Bitset& other) noexcept;
  // Removes every member of `other`.
  Bitset& subtract(const Bitset& other) noexcept;
  // Flips every bit in [0, size).
  void flip() noexcept;

  bool is_subset_of(const Bitset& other) const noexcept;

  std::span<const word_type> words() const noexcept { return words_; }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      word_type bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        f(static_cast<int>(w * kWordBits + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<int> to_vector() const;

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

/// |a ∩ b| without materializing the intersection.
std::size_t intersection_count(const Bitset& a, const Bitset& b) noexcept;

}  // namespace ehs
