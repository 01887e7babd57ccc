#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "causalql/element_set.hpp"
#include "causalql/net.hpp"

namespace causalql {

/// The partial order (X, ⊑) with ⊑ the reflexive-transitive closure of the
/// arc relation, plus the arc relation itself (presets and postsets) so that
/// the causal closure rules can run on the poset alone.
///
/// Usually derived from a Net. from_arcs builds posets that do not come from a
/// causal net (used to exercise non-K-dense inputs); there the arcs play the
/// role of F and the kinds are whatever the caller declares.
class Poset {
 public:
  static Poset from_arcs(std::vector<std::string> names, std::vector<ElementKind> kinds,
                         std::span<const std::pair<ElementIndex, ElementIndex>> arcs);

  std::size_t size() const { return names_.size(); }
  const std::string& name(ElementIndex x) const { return names_[x]; }
  ElementKind kind(ElementIndex x) const { return kinds_[x]; }
  bool is_condition(ElementIndex x) const { return kinds_[x] == ElementKind::condition; }
  ElementIndex index_of(std::string_view name) const;

  bool leq(ElementIndex x, ElementIndex y) const { return up_[x].contains(y); }
  bool li(ElementIndex x, ElementIndex y) const { return leq(x, y) || leq(y, x); }
  bool co(ElementIndex x, ElementIndex y) const { return co_[x].contains(y); }

  /// {y | x ⊑ y}, reflexive.
  const ElementSet& up(ElementIndex x) const { return up_[x]; }
  /// {y | y ⊑ x}, reflexive.
  const ElementSet& down(ElementIndex x) const { return down_[x]; }
  /// {y | x co y}; never contains x.
  const ElementSet& co_neighbours(ElementIndex x) const { return co_[x]; }
  /// {y | x li y}; always contains x.
  ElementSet li_neighbours(ElementIndex x) const { return up_[x] | down_[x]; }

  const ElementSet& preset(ElementIndex x) const { return preset_[x]; }
  const ElementSet& postset(ElementIndex x) const { return postset_[x]; }

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet all() const { return ElementSet::full(size()); }
  ElementSet conditions() const;
  ElementSet events() const;

  /// Builds a set from element names; throws UnknownElementError.
  ElementSet set_of(std::initializer_list<std::string_view> names) const;
  ElementSet set_of(std::span<const std::string> names) const;
  /// Parses "p,q,r" (whitespace around names allowed; empty string is ∅).
  ElementSet parse_set(std::string_view csv) const;
  std::vector<std::string> names_of(const ElementSet& s) const;
  /// "{p, q}" in canonical order.
  std::string format(const ElementSet& s) const;

 private:
  Poset() = default;

  std::vector<std::string> names_;
  std::vector<ElementKind> kinds_;
  std::unordered_map<std::string, ElementIndex> index_;
  std::vector<ElementSet> preset_;
  std::vector<ElementSet> postset_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<ElementSet> co_;
};

Poset derive_poset(const Net& net);

inline bool li(const Poset& p, ElementIndex x, ElementIndex y) { return p.li(x, y); }
inline bool co(const Poset& p, ElementIndex x, ElementIndex y) { return p.co(x, y); }

/// [x, y] = {z | x ⊑ z ⊑ y}; empty unless x ⊑ y.
ElementSet interval(const Poset& p, ElementIndex x, ElementIndex y);

bool is_convex(const Poset& p, const ElementSet& s);

/// up(S) ∩ down(S): the union of all intervals between members of S.
ElementSet convex_hull(const Poset& p, const ElementSet& s);

struct FinitenessReport {
  bool interval_finite = true;
  bool degree_finite = true;
  /// Largest |preset(x)| or |postset(x)|.
  std::size_t max_degree = 0;
  /// Largest |[x, y]|.
  std::size_t max_interval = 0;
};

FinitenessReport finiteness_report(const Poset& p);

/// Maximal antichains (cliques of co ∪ id) of the sub-poset on `within`
/// (default: all of X), sorted lexicographically.
std::vector<ElementSet> enumerate_cuts(const Poset& p,
                                       const std::optional<ElementSet>& within = std::nullopt);

/// Maximal chains (cliques of li) of the sub-poset on `within`, sorted.
std::vector<ElementSet> enumerate_lines(const Poset& p,
                                        const std::optional<ElementSet>& within = std::nullopt);

struct KDensityReport {
  bool k_dense = true;
  std::size_t cuts = 0;
  std::size_t lines = 0;
  /// Every intersecting (cut, line) pair met in exactly one point.
  bool single_point_meets = true;
  /// First (cut, line) pair with empty intersection, in enumeration order.
  std::optional<std::pair<ElementSet, ElementSet>> witness;
};

KDensityReport is_k_dense(const Poset& p);

bool is_coset(const Poset& p, const ElementSet& s);
bool is_b_coset(const Poset& p, const ElementSet& s);
bool is_chain(const Poset& p, const ElementSet& s);

/// Maximal coset of the sub-poset on `within`.
bool is_cut(const Poset& p, const ElementSet& s,
            const std::optional<ElementSet>& within = std::nullopt);
/// Maximal chain of the sub-poset on `within`.
bool is_line(const Poset& p, const ElementSet& s,
             const std::optional<ElementSet>& within = std::nullopt);

/// A cut made of conditions only. Does not check maximality.
bool is_b_cut(const Poset& p, const ElementSet& cut);

/// Greedy extension over the canonical element order; throws
/// InvalidArgumentError when `s` is not a coset.
ElementSet extend_to_cut(const Poset& p, const ElementSet& s);

/// All maximal cliques of the graph `adjacency` restricted to `within`.
/// adjacency[x] must not contain x and must be symmetric. Sorted output.
std::vector<ElementSet> maximal_cliques(std::span<const ElementSet> adjacency,
                                        const ElementSet& within);

}  // namespace causalql
