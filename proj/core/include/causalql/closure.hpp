#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "causalql/element_set.hpp"
#include "causalql/poset.hpp"

namespace causalql {

enum class ClosureSource : std::uint8_t { phi, biortho, given };

struct ClosedSet {
  ElementSet members;
  ClosureSource provenance = ClosureSource::given;

  friend bool operator==(const ClosedSet&, const ClosedSet&) = default;
};

/// A' = {x | x co y for every y in A}. ortho(∅) = X.
ElementSet ortho(const Poset& p, const ElementSet& a);

/// A'' over the concurrency relation.
ClosedSet biortho(const Poset& p, const ElementSet& a);

/// A == A''.
bool is_closed(const Poset& p, const ElementSet& a);

/// The four rules defining causally closed sets, in checking order.
enum class ClosureRule : std::uint8_t {
  preset_complete,    // (i)   •e ⊆ C ⇒ e ∈ C
  postset_complete,   // (ii)  e• ⊆ C ⇒ e ∈ C
  event_neighbours,   // (iii) e ∈ C ⇒ •e ∪ e• ⊆ C
  convex,             // (iv)  x, y ∈ C, x li y ⇒ [x, y] ⊆ C
};

std::string_view rule_name(ClosureRule rule);

/// Least causally closed superset of `a`, computed as a fixpoint that applies
/// rules (i) to (iv) in that order until nothing changes.
ClosedSet causal_closure(const Poset& p, const ElementSet& a);

struct CausalClosedness {
  bool closed = true;
  std::optional<ClosureRule> violated;
  /// Offending event for rules (i)-(iii); lower end of the pair for (iv).
  ElementIndex witness = 0;
  /// Upper end of the offending pair for rule (iv).
  ElementIndex witness_upper = 0;
};

CausalClosedness is_causally_closed(const Poset& p, const ElementSet& a);

/// β(A): members of A joined by an arc (either direction) to an element
/// outside A.
ElementSet border(const Poset& p, const ElementSet& a);

inline constexpr std::size_t default_sweep_bound = 16;

struct ClosureDivergence {
  ElementSet subset;
  ElementSet phi;
  ElementSet biortho;
};

struct CoincidenceReport {
  std::uint64_t subsets_checked = 0;
  /// First subset (in increasing bitmask order) where the closures differ.
  std::optional<ClosureDivergence> divergence;

  bool coincide() const { return !divergence.has_value(); }
};

/// Compares φ(A) with A'' for every A ⊆ X. Throws BoundExceededError when
/// |X| > bound.
CoincidenceReport closures_coincide(const Poset& p, std::size_t bound = default_sweep_bound);

/// Every closed set A = A'', found by closing all 2^|X| subsets. Sorted by
/// size, then lexicographically. Throws BoundExceededError when |X| > bound.
std::vector<ElementSet> closed_sets_by_sweep(const Poset& p,
                                             std::size_t bound = default_sweep_bound);

}  // namespace causalql
