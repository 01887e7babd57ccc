#include "causalql/poset.hpp"

#include <algorithm>
#include <sstream>

namespace causalql {

Poset Poset::from_arcs(std::vector<std::string> names, std::vector<ElementKind> kinds,
                       std::span<const std::pair<ElementIndex, ElementIndex>> arcs) {
  if (names.size() != kinds.size())
    throw InvalidArgumentError("poset: names and kinds differ in length");
  Poset p;
  const std::size_t n = names.size();
  p.names_ = std::move(names);
  p.kinds_ = std::move(kinds);
  for (ElementIndex i = 0; i < n; ++i)
    if (!p.index_.emplace(p.names_[i], i).second)
      throw InvalidArgumentError("poset: duplicate name '" + p.names_[i] + "'");

  p.preset_.assign(n, ElementSet(n));
  p.postset_.assign(n, ElementSet(n));
  for (auto [s, t] : arcs) {
    if (s >= n || t >= n) throw InvalidArgumentError("poset: arc endpoint out of range");
    p.postset_[s].insert(t);
    p.preset_[t].insert(s);
  }

  // Topological order, then up-sets accumulated from the sinks backwards.
  std::vector<std::size_t> indegree(n);
  for (ElementIndex x = 0; x < n; ++x) indegree[x] = p.preset_[x].size();
  std::vector<ElementIndex> order;
  order.reserve(n);
  for (ElementIndex x = 0; x < n; ++x)
    if (indegree[x] == 0) order.push_back(x);
  for (std::size_t i = 0; i < order.size(); ++i)
    p.postset_[order[i]].for_each([&](ElementIndex y) {
      if (--indegree[y] == 0) order.push_back(y);
    });
  if (order.size() != n) throw InvalidArgumentError("poset: arc relation has a cycle");

  p.up_.assign(n, ElementSet(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const ElementIndex x = *it;
    p.up_[x].insert(x);
    p.postset_[x].for_each([&](ElementIndex y) { p.up_[x] |= p.up_[y]; });
  }
  p.down_.assign(n, ElementSet(n));
  for (ElementIndex x = 0; x < n; ++x)
    p.up_[x].for_each([&](ElementIndex y) { p.down_[y].insert(x); });
  p.co_.reserve(n);
  for (ElementIndex x = 0; x < n; ++x) p.co_.push_back((p.up_[x] | p.down_[x]).complement());
  return p;
}

Poset derive_poset(const Net& net) {
  std::vector<ElementKind> kinds;
  kinds.reserve(net.size());
  for (ElementIndex x = 0; x < net.size(); ++x) kinds.push_back(net.kind(x));
  return Poset::from_arcs(net.names(), std::move(kinds), net.arcs());
}

ElementIndex Poset::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw UnknownElementError(std::string(name));
  return it->second;
}

ElementSet Poset::conditions() const {
  ElementSet s(size());
  for (ElementIndex x = 0; x < size(); ++x)
    if (is_condition(x)) s.insert(x);
  return s;
}

ElementSet Poset::events() const { return conditions().complement(); }

ElementSet Poset::set_of(std::initializer_list<std::string_view> names) const {
  ElementSet s(size());
  for (auto n : names) s.insert(index_of(n));
  return s;
}

ElementSet Poset::set_of(std::span<const std::string> names) const {
  ElementSet s(size());
  for (const auto& n : names) s.insert(index_of(n));
  return s;
}

ElementSet Poset::parse_set(std::string_view csv) const {
  ElementSet s(size());
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  if (trim(csv).empty()) return s;
  std::size_t start = 0;
  while (true) {
    const auto comma = csv.find(',', start);
    const auto token = trim(csv.substr(start, comma == std::string_view::npos ? csv.npos : comma - start));
    if (token.empty()) throw ParseError("empty element name in list '" + std::string(csv) + "'", 0, start + 1);
    s.insert(index_of(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return s;
}

std::vector<std::string> Poset::names_of(const ElementSet& s) const {
  std::vector<std::string> out;
  s.for_each([&](ElementIndex x) { out.push_back(names_[x]); });
  return out;
}

std::string Poset::format(const ElementSet& s) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  s.for_each([&](ElementIndex x) {
    if (!first) os << ", ";
    first = false;
    os << names_[x];
  });
  os << '}';
  return os.str();
}

ElementSet interval(const Poset& p, ElementIndex x, ElementIndex y) {
  return p.up(x) & p.down(y);
}

ElementSet convex_hull(const Poset& p, const ElementSet& s) {
  ElementSet ups(p.size());
  ElementSet downs(p.size());
  s.for_each([&](ElementIndex x) {
    ups |= p.up(x);
    downs |= p.down(x);
  });
  return ups & downs;
}

bool is_convex(const Poset& p, const ElementSet& s) { return convex_hull(p, s) == s; }

FinitenessReport finiteness_report(const Poset& p) {
  FinitenessReport r;
  for (ElementIndex x = 0; x < p.size(); ++x) {
    r.max_degree = std::max({r.max_degree, p.preset(x).size(), p.postset(x).size()});
    p.up(x).for_each([&](ElementIndex y) {
      r.max_interval = std::max(r.max_interval, interval(p, x, y).size());
    });
  }
  return r;
}

namespace {

// Bron–Kerbosch with Tomita pivoting over bitsets.
void expand(std::span<const ElementSet> adj, ElementSet& clique, ElementSet candidates,
            ElementSet excluded, std::vector<ElementSet>& out) {
  if (candidates.empty()) {
    if (excluded.empty()) out.push_back(clique);
    return;
  }
  ElementIndex pivot = 0;
  std::size_t best = 0;
  bool have_pivot = false;
  auto consider = [&](ElementIndex u) {
    const std::size_t covered = (candidates & adj[u]).size();
    if (!have_pivot || covered > best) {
      pivot = u;
      best = covered;
      have_pivot = true;
    }
  };
  candidates.for_each(consider);
  excluded.for_each(consider);

  const ElementSet branch = candidates - adj[pivot];
  branch.for_each([&](ElementIndex v) {
    clique.insert(v);
    expand(adj, clique, candidates & adj[v], excluded & adj[v], out);
    clique.erase(v);
    candidates.erase(v);
    excluded.insert(v);
  });
}

std::vector<ElementSet> li_graph(const Poset& p) {
  std::vector<ElementSet> adj;
  adj.reserve(p.size());
  for (ElementIndex x = 0; x < p.size(); ++x) {
    auto s = p.li_neighbours(x);
    s.erase(x);
    adj.push_back(std::move(s));
  }
  return adj;
}

std::vector<ElementSet> co_graph(const Poset& p) {
  std::vector<ElementSet> adj;
  adj.reserve(p.size());
  for (ElementIndex x = 0; x < p.size(); ++x) adj.push_back(p.co_neighbours(x));
  return adj;
}

bool is_clique(std::span<const ElementSet> adj, const ElementSet& s) {
  bool ok = true;
  s.for_each([&](ElementIndex x) {
    auto others = s;
    others.erase(x);
    if (!others.subset_of(adj[x])) ok = false;
  });
  return ok;
}

bool is_maximal_clique(std::span<const ElementSet> adj, const ElementSet& s, const ElementSet& within) {
  if (!s.subset_of(within) || !is_clique(adj, s)) return false;
  // Some outside vertex adjacent to every member would extend it.
  ElementSet extenders = within - s;
  s.for_each([&](ElementIndex x) { extenders &= adj[x]; });
  return extenders.empty();
}

}  // namespace

std::vector<ElementSet> maximal_cliques(std::span<const ElementSet> adjacency,
                                        const ElementSet& within) {
  std::vector<ElementSet> out;
  if (within.empty()) return out;
  ElementSet clique(within.universe());
  expand(adjacency, clique, within, ElementSet(within.universe()), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElementSet> enumerate_cuts(const Poset& p, const std::optional<ElementSet>& within) {
  const auto adj = co_graph(p);
  return maximal_cliques(adj, within.value_or(p.all()));
}

std::vector<ElementSet> enumerate_lines(const Poset& p, const std::optional<ElementSet>& within) {
  const auto adj = li_graph(p);
  return maximal_cliques(adj, within.value_or(p.all()));
}

KDensityReport is_k_dense(const Poset& p) {
  KDensityReport r;
  const auto cuts = enumerate_cuts(p);
  const auto lines = enumerate_lines(p);
  r.cuts = cuts.size();
  r.lines = lines.size();
  for (const auto& c : cuts) {
    for (const auto& l : lines) {
      const auto meet = c & l;
      if (meet.empty()) {
        if (r.k_dense) r.witness.emplace(c, l);
        r.k_dense = false;
      } else if (meet.size() != 1) {
        r.single_point_meets = false;
      }
    }
  }
  return r;
}

bool is_coset(const Poset& p, const ElementSet& s) {
  bool ok = true;
  s.for_each([&](ElementIndex x) {
    auto others = s;
    others.erase(x);
    if (!others.subset_of(p.co_neighbours(x))) ok = false;
  });
  return ok;
}

bool is_b_coset(const Poset& p, const ElementSet& s) {
  return s.subset_of(p.conditions()) && is_coset(p, s);
}

bool is_chain(const Poset& p, const ElementSet& s) {
  bool ok = true;
  s.for_each([&](ElementIndex x) {
    if (!s.subset_of(p.li_neighbours(x))) ok = false;
  });
  return ok;
}

bool is_cut(const Poset& p, const ElementSet& s, const std::optional<ElementSet>& within) {
  if (s.empty()) return within && within->empty();
  const auto adj = co_graph(p);
  return is_maximal_clique(adj, s, within.value_or(p.all()));
}

bool is_line(const Poset& p, const ElementSet& s, const std::optional<ElementSet>& within) {
  if (s.empty()) return within && within->empty();
  const auto adj = li_graph(p);
  return is_maximal_clique(adj, s, within.value_or(p.all()));
}

bool is_b_cut(const Poset& p, const ElementSet& cut) {
  return !cut.empty() && cut.subset_of(p.conditions());
}

ElementSet extend_to_cut(const Poset& p, const ElementSet& s) {
  if (!is_coset(p, s)) throw InvalidArgumentError("extend_to_cut: " + p.format(s) + " is not a coset");
  ElementSet cut = s;
  ElementSet candidates = p.all() - s;
  s.for_each([&](ElementIndex x) { candidates &= p.co_neighbours(x); });
  while (auto x = candidates.first()) {
    cut.insert(*x);
    candidates &= p.co_neighbours(*x);
  }
  return cut;
}

}  // namespace causalql
