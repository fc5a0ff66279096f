#include "ehs/bitset.hpp"

#include <algorithm>

namespace ehs {

Bitset Bitset::full(std::size_t size) {
  Bitset b(size);
  b.flip();
  return b;
}

std::size_t Bitset::count() const noexcept {
  std::size_t total = 0;
  for (word_type w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool Bitset::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
}

Bitset& Bitset::operator&=(const Bitset& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

void Bitset::flip() noexcept {
  for (word_type& w : words_) w = ~w;
  const std::size_t tail = size_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (word_type{1} << tail) - 1;
}

bool Bitset::is_subset_of(const Bitset& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

std::vector<int> Bitset::to_vector() const {
  std::vector<int> out;
  out.reserve(count());
  for_each([&](int i) { out.push_back(i); });
  return out;
}

std::size_t intersection_count(const Bitset& a, const Bitset& b) noexcept {
  const auto wa = a.words();
  const auto wb = b.words();
  const std::size_t len = std::min(wa.size(), wb.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < len; ++i) total += static_cast<std::size_t>(std::popcount(wa[i] & wb[i]));
  return total;
}

}  // namespace ehs
