#include "causalql/net.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace causalql {

namespace {

using json = nlohmann::json;

bool is_valid_name(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin() + 1, s.end(), [&](char c) { return alpha(c) || digit(c); });
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void structure_error(const std::string& what) { throw ParseError(what, 0, 0); }

std::string read_name(const json& value, const char* where) {
  if (!value.is_string()) structure_error(std::string(where) + ": expected a string");
  auto name = value.get<std::string>();
  if (!is_valid_name(name)) structure_error(std::string(where) + ": invalid name '" + name + "'");
  return name;
}

std::vector<std::string> read_names(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) structure_error(std::string("missing key \"") + key + "\"");
  if (!it->is_array()) structure_error(std::string("\"") + key + "\" must be an array");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const auto& v : *it) {
    auto name = read_name(v, key);
    if (!seen.insert(name).second) throw DuplicateNameError(name, 0, 0);
    names.push_back(std::move(name));
  }
  return names;
}

}  // namespace

NetDescription parse_net(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // byte is 1-based and points just past the offending character
    auto [line, column] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(std::string("syntax error: ") + e.what(), line, column);
  }
  if (!doc.is_object()) structure_error("net document must be a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "conditions" && key != "events" && key != "arcs")
      structure_error("unexpected key \"" + key + "\"");

  NetDescription desc;
  desc.conditions = read_names(doc, "conditions");
  desc.events = read_names(doc, "events");

  auto arcs = doc.find("arcs");
  if (arcs == doc.end()) structure_error("missing key \"arcs\"");
  if (!arcs->is_array()) structure_error("\"arcs\" must be an array");
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& a : *arcs) {
    if (!a.is_array() || a.size() != 2) structure_error("each arc must be a [source, target] pair");
    Arc arc{read_name(a[0], "arcs"), read_name(a[1], "arcs")};
    if (!seen.emplace(arc.source, arc.target).second)
      structure_error("duplicate arc [" + arc.source + ", " + arc.target + "]");
    desc.arcs.push_back(std::move(arc));
  }

  std::set<std::string> all;
  for (const auto& n : desc.conditions) all.insert(n);
  for (const auto& n : desc.events) all.insert(n);
  for (const auto& arc : desc.arcs)
    for (const auto* end : {&arc.source, &arc.target})
      if (!all.contains(*end)) structure_error("arc endpoint '" + *end + "' is not declared");
  return desc;
}

std::string write_net(const NetDescription& desc) {
  nlohmann::ordered_json doc;
  doc["conditions"] = desc.conditions;
  doc["events"] = desc.events;
  auto arcs = nlohmann::ordered_json::array();
  for (const auto& a : desc.arcs) arcs.push_back({a.source, a.target});
  doc["arcs"] = std::move(arcs);
  return doc.dump();
}

std::string_view axiom_name(NetAxiom axiom) {
  switch (axiom) {
    case NetAxiom::disjointness: return "disjointness";
    case NetAxiom::no_isolated_element: return "isolated_element";
    case NetAxiom::arc_kind: return "arc_kind";
    case NetAxiom::condition_branching: return "condition_branching";
    case NetAxiom::acyclicity: return "acyclicity";
  }
  return "unknown";
}

NetAxiomError::NetAxiomError(NetAxiom axiom, const std::string& detail)
    : Error(std::string(axiom_name(axiom)) + ": " + detail), axiom_(axiom) {}

std::optional<ElementIndex> Net::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementIndex Net::index_of(std::string_view name) const {
  if (auto x = find(name)) return *x;
  throw UnknownElementError(std::string(name));
}

ElementSet Net::conditions() const {
  ElementSet s(size());
  for (ElementIndex x = 0; x < num_conditions_; ++x) s.insert(x);
  return s;
}

ElementSet Net::events() const { return conditions().complement(); }

Net validate_net(const NetDescription& desc) {
  for (const auto* list : {&desc.conditions, &desc.events}) {
    std::set<std::string> seen;
    for (const auto& n : *list)
      if (!seen.insert(n).second) throw DuplicateNameError(n, 0, 0);
  }

  std::set<std::string> conditions(desc.conditions.begin(), desc.conditions.end());
  std::set<std::string> events(desc.events.begin(), desc.events.end());
  for (const auto& c : conditions)
    if (events.contains(c))
      throw NetAxiomError(NetAxiom::disjointness, "'" + c + "' is both a condition and an event");

  std::set<std::string> touched;
  for (const auto& a : desc.arcs) {
    touched.insert(a.source);
    touched.insert(a.target);
  }
  for (const auto* group : {&conditions, &events})
    for (const auto& n : *group)
      if (!touched.contains(n))
        throw NetAxiomError(NetAxiom::no_isolated_element, "'" + n + "' has no arcs");

  Net net;
  net.num_conditions_ = conditions.size();
  net.names_.assign(conditions.begin(), conditions.end());
  net.names_.insert(net.names_.end(), events.begin(), events.end());
  for (ElementIndex i = 0; i < net.names_.size(); ++i) net.index_.emplace(net.names_[i], i);

  const std::size_t n = net.names_.size();
  net.preset_.assign(n, ElementSet(n));
  net.postset_.assign(n, ElementSet(n));
  std::set<std::pair<ElementIndex, ElementIndex>> arcs;
  for (const auto& a : desc.arcs) {
    auto src = net.find(a.source);
    auto dst = net.find(a.target);
    if (!src || !dst)
      throw NetAxiomError(NetAxiom::arc_kind,
                          "arc [" + a.source + ", " + a.target + "] leaves B u E");
    if (net.kind(*src) == net.kind(*dst))
      throw NetAxiomError(NetAxiom::arc_kind, "arc [" + a.source + ", " + a.target +
                                                  "] joins two elements of the same kind");
    arcs.emplace(*src, *dst);
    net.postset_[*src].insert(*dst);
    net.preset_[*dst].insert(*src);
  }
  net.arcs_.assign(arcs.begin(), arcs.end());

  for (ElementIndex b = 0; b < net.num_conditions_; ++b) {
    if (net.preset_[b].size() > 1)
      throw NetAxiomError(NetAxiom::condition_branching,
                          "condition '" + net.names_[b] + "' has several input events");
    if (net.postset_[b].size() > 1)
      throw NetAxiomError(NetAxiom::condition_branching,
                          "condition '" + net.names_[b] + "' has several output events");
  }

  // Kahn's algorithm; anything left unprocessed lies on a cycle.
  std::vector<std::size_t> indegree(n);
  for (ElementIndex x = 0; x < n; ++x) indegree[x] = net.preset_[x].size();
  std::vector<ElementIndex> ready;
  for (ElementIndex x = 0; x < n; ++x)
    if (indegree[x] == 0) ready.push_back(x);
  std::size_t processed = 0;
  while (!ready.empty()) {
    const ElementIndex x = ready.back();
    ready.pop_back();
    ++processed;
    net.postset_[x].for_each([&](ElementIndex y) {
      if (--indegree[y] == 0) ready.push_back(y);
    });
  }
  if (processed != n) {
    ElementIndex on_cycle = 0;
    while (indegree[on_cycle] == 0) ++on_cycle;
    throw NetAxiomError(NetAxiom::acyclicity, "'" + net.names_[on_cycle] + "' lies on a cycle");
  }
  return net;
}

bool is_simple(const Net& net) {
  std::set<std::pair<ElementSet, ElementSet>> seen;
  for (ElementIndex x = 0; x < net.size(); ++x)
    if (!seen.emplace(net.preset(x), net.postset(x)).second) return false;
  return true;
}

bool is_t_restricted(const Net& net) {
  for (ElementIndex e = static_cast<ElementIndex>(net.num_conditions()); e < net.size(); ++e)
    if (net.preset(e).empty() || net.postset(e).empty()) return false;
  return true;
}

NetDescription describe(const Net& net) {
  NetDescription d;
  for (ElementIndex x = 0; x < net.size(); ++x)
    (net.kind(x) == ElementKind::condition ? d.conditions : d.events).push_back(net.name(x));
  for (auto [s, t] : net.arcs()) d.arcs.push_back({net.name(s), net.name(t)});
  return d;
}

}  // namespace causalql
