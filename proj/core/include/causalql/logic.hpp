#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "causalql/element_set.hpp"
#include "causalql/lattice.hpp"

namespace causalql {

/// Immutable propositional formula. Copies share structure.
class Formula {
 public:
  enum class Kind : std::uint8_t { atom, negation, conjunction, disjunction, implication };

  static Formula atom(std::string name);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);

  Kind kind() const { return node_->kind; }
  /// Atom name; empty for compound formulas.
  const std::string& name() const { return node_->name; }
  /// Operand of a negation, left operand of a binary connective.
  const Formula& lhs() const { return node_->children[0]; }
  const Formula& rhs() const { return node_->children[1]; }

  std::size_t depth() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Grammar, loosest binding first:
///   formula := disj ("->" formula)?
///   disj    := conj ("|" conj)*
///   conj    := unary ("&" unary)*
///   unary   := "!" unary | "(" formula ")" | atom
/// Atoms match [A-Za-z_][A-Za-z0-9_]*. Throws ParseError with the column.
Formula parse_formula(std::string_view text);

/// Prints with the fewest parentheses that parse back to the same tree.
std::string to_string(const Formula& f);

/// Atom name -> lattice element.
using Binding = std::map<std::string, LatticeIndex, std::less<>>;

struct Interpretation {
  Binding binding;
  ElementSet line;
};

/// Throws InvalidArgumentError for an unbound atom.
LatticeIndex interpret(const Formula& f, const Binding& h, const Lattice& l);

/// i(f) ∩ λ ≠ ∅. Throws InvalidArgumentError when J.line is not a line.
bool satisfies(const Interpretation& j, const Formula& f, const Lattice& l);

/// The four satisfaction clauses, in the order they are usually listed.
enum class Clause : std::uint8_t { conjunction, negation, disjunction, implication };

/// only_if: J ⊨ (compound) ⇒ (stated condition); if_: the converse.
enum class Direction : std::uint8_t { only_if, if_ };

std::string_view clause_name(Clause c);
std::string_view direction_name(Direction d);

struct ClauseTally {
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;

  bool holds() const { return checked == passed; }
};

struct ClauseCounterexample {
  Clause clause;
  Direction direction;
  /// A representative compound formula and binding producing this case.
  std::string formula;
  Binding binding;
  ElementSet line;
  LatticeIndex left = 0;   // i(f)
  LatticeIndex right = 0;  // i(g); equals left for negation
};

struct SatisfactionLawReport {
  std::array<std::array<ClauseTally, 2>, 4> tallies{};
  /// One entry per distinct (clause, direction, i(f), i(g), line), in the
  /// order first encountered.
  std::vector<ClauseCounterexample> counterexamples;

  const ClauseTally& tally(Clause c, Direction d) const {
    return tallies[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)];
  }
};

struct LawCheckOptions {
  /// Compound formulas have depth <= max_depth; operands depth <= max_depth-1.
  std::size_t max_depth = 3;
  std::vector<std::string> atoms = {"f", "g", "h"};
  /// Refuse to run when |L|^|atoms| exceeds this.
  std::uint64_t max_bindings = 200'000;
};

/// Tests the four satisfaction clauses over every line, every binding of the
/// atoms into the lattice and every compound formula up to the depth limit.
/// Tallies count formula instances; clause outcomes depend only on the
/// operand values, so each binding groups operands by value first.
SatisfactionLawReport check_satisfaction_laws(const Lattice& l, const LawCheckOptions& options = {});

}  // namespace causalql
