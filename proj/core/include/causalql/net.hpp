#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "causalql/element_set.hpp"
#include "causalql/errors.hpp"

namespace causalql {

enum class ElementKind : std::uint8_t { condition, event };

struct Arc {
  std::string source;
  std::string target;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// The literal content of a net document, before any axiom is checked.
struct NetDescription {
  std::vector<std::string> conditions;
  std::vector<std::string> events;
  std::vector<Arc> arcs;
};

/// Reads the JSON net format:
///   { "conditions": [...], "events": [...], "arcs": [[src, dst], ...] }
/// Rejects syntax errors, malformed names, repeated names inside a list and
/// repeated arcs. Does not check any net axiom.
NetDescription parse_net(std::string_view text);

/// Serializes in the same format, keys and lists in the given order.
std::string write_net(const NetDescription& desc);

/// The axioms checked by validate_net, in checking order.
enum class NetAxiom : std::uint8_t {
  disjointness,         // B and E share no name
  no_isolated_element,  // every element touches an arc
  arc_kind,             // arcs go condition->event or event->condition
  condition_branching,  // |pre(b)| <= 1 and |post(b)| <= 1
  acyclicity,           // F+ irreflexive
};

std::string_view axiom_name(NetAxiom axiom);

class NetAxiomError : public Error {
 public:
  NetAxiomError(NetAxiom axiom, const std::string& detail);

  NetAxiom axiom() const { return axiom_; }

 private:
  NetAxiom axiom_;
};

/// A validated causal net. Elements are indexed in canonical order:
/// conditions sorted by name, then events sorted by name.
class Net {
 public:
  std::size_t size() const { return names_.size(); }
  std::size_t num_conditions() const { return num_conditions_; }
  std::size_t num_events() const { return size() - num_conditions_; }
  std::size_t num_arcs() const { return arcs_.size(); }

  const std::string& name(ElementIndex x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  ElementKind kind(ElementIndex x) const {
    return x < num_conditions_ ? ElementKind::condition : ElementKind::event;
  }
  std::optional<ElementIndex> find(std::string_view name) const;
  /// Throws UnknownElementError.
  ElementIndex index_of(std::string_view name) const;

  const ElementSet& preset(ElementIndex x) const { return preset_[x]; }
  const ElementSet& postset(ElementIndex x) const { return postset_[x]; }
  ElementSet preset(std::string_view name) const { return preset_[index_of(name)]; }
  ElementSet postset(std::string_view name) const { return postset_[index_of(name)]; }

  /// Arcs as index pairs, sorted.
  const std::vector<std::pair<ElementIndex, ElementIndex>>& arcs() const { return arcs_; }

  ElementSet conditions() const;
  ElementSet events() const;

 private:
  friend Net validate_net(const NetDescription& desc);

  std::vector<std::string> names_;
  std::size_t num_conditions_ = 0;
  std::unordered_map<std::string, ElementIndex> index_;
  std::vector<ElementSet> preset_;
  std::vector<ElementSet> postset_;
  std::vector<std::pair<ElementIndex, ElementIndex>> arcs_;
};

/// Checks every axiom in NetAxiom order and throws NetAxiomError naming the
/// first one that fails.
Net validate_net(const NetDescription& desc);

/// No two distinct elements share both preset and postset.
bool is_simple(const Net& net);

/// Every event has at least one precondition and one postcondition.
/// Diagnostic only; nets with source or sink events are still valid, but the
/// causal closure of the empty set is then nonempty.
bool is_t_restricted(const Net& net);

/// Inverse of parsing a validated net, in canonical order.
NetDescription describe(const Net& net);

}  // namespace causalql
