#include "causalql/element_set.hpp"

#include <bit>
#include <cassert>

namespace causalql {

namespace {
std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }
}  // namespace

ElementSet::ElementSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

ElementSet::ElementSet(std::size_t universe, std::initializer_list<ElementIndex> members)
    : ElementSet(universe, std::span<const ElementIndex>(members.begin(), members.size())) {}

ElementSet::ElementSet(std::size_t universe, std::span<const ElementIndex> members)
    : ElementSet(universe) {
  for (ElementIndex x : members) {
    assert(x < universe);
    insert(x);
  }
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim();
  return s;
}

ElementSet ElementSet::from_mask(std::size_t universe, std::uint64_t mask) {
  assert(universe <= 64);
  ElementSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  s.trim();
  return s;
}

void ElementSet::trim() {
  if (universe_ % 64 != 0 && !words_.empty())
    words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
}

std::size_t ElementSet::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::empty() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

bool ElementSet::subset_of(const ElementSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

ElementSet ElementSet::complement() const {
  ElementSet s = *this;
  for (auto& w : s.words_) w = ~w;
  s.trim();
  return s;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::optional<ElementIndex> ElementSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0)
      return static_cast<ElementIndex>(w * 64 + std::countr_zero(words_[w]));
  return std::nullopt;
}

std::optional<ElementIndex> ElementSet::next(ElementIndex x) const {
  std::size_t pos = static_cast<std::size_t>(x) + 1;
  if (pos >= universe_) return std::nullopt;
  std::size_t w = pos / 64;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (pos % 64));
  while (true) {
    if (bits != 0) return static_cast<ElementIndex>(w * 64 + std::countr_zero(bits));
    if (++w == words_.size()) return std::nullopt;
    bits = words_[w];
  }
}

std::vector<ElementIndex> ElementSet::members() const {
  std::vector<ElementIndex> out;
  out.reserve(size());
  for_each([&](ElementIndex x) { out.push_back(x); });
  return out;
}

std::size_t ElementSet::hash() const {
  std::size_t h = universe_ * 0x9e3779b97f4a7c15ull;
  for (auto w : words_) h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
  if (a.universe_ != b.universe_) return a.universe_ <=> b.universe_;
  // Find the lowest element present in exactly one of the two sets. The set
  // holding it is lexicographically smaller, unless the other set has no
  // members beyond it (then the other is a proper prefix).
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff == 0) continue;
    const auto bit = static_cast<ElementIndex>(w * 64 + std::countr_zero(diff));
    const bool a_has = a.contains(bit);
    const ElementSet& other = a_has ? b : a;
    const bool other_continues = other.next(bit).has_value();
    const bool a_smaller = a_has == other_continues;
    return a_smaller ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool size_then_lex_less(const ElementSet& a, const ElementSet& b) {
  const auto sa = a.size();
  const auto sb = b.size();
  if (sa != sb) return sa < sb;
  return a < b;
}

}  // namespace causalql
