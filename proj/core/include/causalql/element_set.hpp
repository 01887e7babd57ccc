#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace causalql {

/// Position of an element in the canonical order of a net (conditions first,
/// then events, each group sorted by name).
using ElementIndex = std::uint32_t;

/// A subset of a fixed universe {0, ..., universe-1}, stored as a bitset.
///
/// Ordering is lexicographic on the sorted member list, so a std::set or a
/// sorted vector of ElementSets enumerates them in a reproducible order that
/// does not depend on how they were built.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);
  ElementSet(std::size_t universe, std::initializer_list<ElementIndex> members);
  ElementSet(std::size_t universe, std::span<const ElementIndex> members);

  static ElementSet full(std::size_t universe);
  /// Bits of `mask` name the members; requires universe <= 64.
  static ElementSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const { return universe_; }
  std::size_t size() const;
  bool empty() const;

  bool contains(ElementIndex x) const {
    return (words_[x / 64] >> (x % 64)) & 1u;
  }
  void insert(ElementIndex x) { words_[x / 64] |= std::uint64_t{1} << (x % 64); }
  void erase(ElementIndex x) { words_[x / 64] &= ~(std::uint64_t{1} << (x % 64)); }

  bool subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;
  ElementSet complement() const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator-=(const ElementSet& other);

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  std::optional<ElementIndex> first() const;
  /// Smallest member strictly greater than `x`.
  std::optional<ElementIndex> next(ElementIndex x) const;
  std::vector<ElementIndex> members() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        fn(static_cast<ElementIndex>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  /// Low 64 bits; exact when universe <= 64.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }
  std::size_t hash() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) = default;
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b);

 private:
  void trim();

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

/// Size first, then lexicographic; the order used for lattice elements.
bool size_then_lex_less(const ElementSet& a, const ElementSet& b);

}  // namespace causalql
