#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "causalql/closure.hpp"
#include "causalql/element_set.hpp"
#include "causalql/poset.hpp"

namespace causalql {

/// Position of a closed set inside a Lattice.
using LatticeIndex = std::uint32_t;

/// The ortholattice (L, ⊆, ∅, X, ') of biorthogonally closed subsets of a
/// poset. Elements are sorted by size, then lexicographically, so bottom is
/// index 0 and top is the last index.
class Lattice {
 public:
  /// Takes ownership of `closed_sets`; each must satisfy A = A''. Throws
  /// InvalidArgumentError otherwise, or when ∅ or X is missing.
  static Lattice from_closed_sets(Poset poset, std::vector<ElementSet> closed_sets);

  const Poset& poset() const { return poset_; }
  std::size_t size() const { return elements_.size(); }
  const ElementSet& at(LatticeIndex i) const { return elements_[i]; }
  const std::vector<ElementSet>& elements() const { return elements_; }

  LatticeIndex bottom() const { return 0; }
  LatticeIndex top() const { return static_cast<LatticeIndex>(elements_.size() - 1); }

  std::optional<LatticeIndex> find(const ElementSet& s) const;
  /// Throws InvalidArgumentError for sets that are not lattice members.
  LatticeIndex index_of(const ElementSet& s) const;

  bool leq(LatticeIndex a, LatticeIndex b) const { return elements_[a].subset_of(elements_[b]); }
  LatticeIndex meet(LatticeIndex a, LatticeIndex b) const;
  LatticeIndex join(LatticeIndex a, LatticeIndex b) const;
  LatticeIndex ortho(LatticeIndex a) const { return ortho_[a]; }

  std::string format(LatticeIndex a) const { return poset_.format(elements_[a]); }

 private:
  Lattice() = default;
  void index();

  Poset poset_ = Poset::from_arcs({}, {}, {});
  std::vector<ElementSet> elements_;
  std::vector<LatticeIndex> ortho_;
  std::vector<std::pair<ElementSet, LatticeIndex>> lookup_;  // sorted by set
  std::vector<LatticeIndex> meet_table_;                     // size()^2 when cached
  std::vector<LatticeIndex> join_table_;
};

struct LatticeOptions {
  /// Upper limit on cosets visited while collecting closures.
  std::size_t max_cosets = 2'000'000;
};

/// Closes every coset of the poset and collects the distinct results together
/// with ∅ and X, then saturates under intersection with the sets {x}' so that
/// non-K-dense posets also get every closed set. Throws BoundExceededError
/// past options.max_cosets.
Lattice build_lattice(const Poset& p, const LatticeOptions& options = {});

inline LatticeIndex meet(const Lattice& l, LatticeIndex a, LatticeIndex b) { return l.meet(a, b); }
inline LatticeIndex join(const Lattice& l, LatticeIndex a, LatticeIndex b) { return l.join(a, b); }
inline LatticeIndex ortho_c(const Lattice& l, LatticeIndex a) { return l.ortho(a); }

struct LawViolation {
  std::string law;
  std::vector<LatticeIndex> elements;
  std::optional<ElementSet> line;
};

struct LawReport {
  std::uint64_t checked = 0;
  std::optional<LawViolation> violation;

  bool passed() const { return !violation.has_value(); }
};

/// Involution, complement laws, antitonicity and both De Morgan laws over all
/// elements and pairs.
LawReport check_ortholattice(const Lattice& l);

/// x ≤ y ⇒ y = x ∨ (y ∧ x') over all comparable pairs.
LawReport check_orthomodular(const Lattice& l);

/// Compares the lattice against closed_sets_by_sweep. Law "sweep_missing"
/// names a closed set the lattice lacks; "sweep_extra" one it should not have.
LawReport check_against_sweep(const Lattice& l, std::size_t bound = default_sweep_bound);

bool are_orthogonal(const Lattice& l, LatticeIndex a, LatticeIndex b);

struct Compatibility {
  bool compatible = false;
  /// (x1, z, y1): mutually orthogonal with a = x1 ∨ z and b = y1 ∨ z.
  std::optional<std::array<LatticeIndex, 3>> witness;
  /// a = (a ∧ b) ∨ (a ∧ b'), computed independently of the witness search.
  bool characterization = false;
};

Compatibility are_compatible(const Lattice& l, LatticeIndex a, LatticeIndex b);

/// Witness-based compatibility for every pair; row-major size()^2.
std::vector<bool> compatibility_matrix(const Lattice& l);

/// For every pairwise compatible triple: x comp (y ∨ z).
LawReport check_regular(const Lattice& l);

struct TwoValuedState {
  std::vector<std::uint8_t> values;  // indexed by LatticeIndex
  ElementSet line;

  std::uint8_t operator()(LatticeIndex a) const { return values[a]; }
};

/// value(A) = 1 iff A meets the line. Throws InvalidArgumentError when `line`
/// is not a maximal chain.
TwoValuedState line_state(const Lattice& l, const ElementSet& line);

/// Checks s(1) = 1 and s(⋁ F) = Σ s(a) for pairwise orthogonal families F.
/// Without a bound, families are enumerated exhaustively when the lattice has
/// at most 64 elements; otherwise families up to `family_bound` (default 4)
/// are checked together with one greedy maximal family per element.
LawReport verify_state(const Lattice& l, const TwoValuedState& s,
                       std::optional<std::size_t> family_bound = std::nullopt);

/// For every line λ and member A, exactly one of λ ∩ A, λ ∩ A' is nonempty.
LawReport check_line_crossing_xor(const Lattice& l);

struct BcutReport {
  LawReport laws;
  /// Nonempty members whose sub-poset has no cut made of conditions only.
  std::size_t members_without_bcut = 0;
};

/// For every nonempty member A and every B-cut τ of A: τ'' = A.
BcutReport check_bcut_generates(const Lattice& l);

struct BooleanBlock {
  std::vector<LatticeIndex> atoms;
  /// All joins of subsets of atoms, ascending.
  std::vector<LatticeIndex> carrier;
  bool closed = false;
  bool distributive = false;
};

/// Atoms {b}'' for b in τ. Throws InvalidArgumentError if τ is not a B-cut of
/// the whole poset or the atoms are not orthogonal or do not join to X.
BooleanBlock boolean_from_bcut(const Lattice& l, const ElementSet& bcut);

/// Same, with the atoms given directly.
BooleanBlock boolean_from_partition(const Lattice& l, std::vector<LatticeIndex> parts);

/// Cover pairs (a, b): a ⊂ b with nothing strictly between. Sorted.
std::vector<std::pair<LatticeIndex, LatticeIndex>> hasse(const Lattice& l);

/// Graphviz digraph of the Hasse diagram, bottom at the bottom.
void write_hasse_dot(const Lattice& l, std::ostream& out);

}  // namespace causalql
