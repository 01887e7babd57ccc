#include "causalql/closure.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace causalql {

ElementSet ortho(const Poset& p, const ElementSet& a) {
  ElementSet out = p.all();
  a.for_each([&](ElementIndex y) { out &= p.co_neighbours(y); });
  return out;
}

ClosedSet biortho(const Poset& p, const ElementSet& a) {
  return {ortho(p, ortho(p, a)), ClosureSource::biortho};
}

bool is_closed(const Poset& p, const ElementSet& a) { return biortho(p, a).members == a; }

std::string_view rule_name(ClosureRule rule) {
  switch (rule) {
    case ClosureRule::preset_complete: return "preset_complete";
    case ClosureRule::postset_complete: return "postset_complete";
    case ClosureRule::event_neighbours: return "event_neighbours";
    case ClosureRule::convex: return "convex";
  }
  return "unknown";
}

ClosedSet causal_closure(const Poset& p, const ElementSet& a) {
  const ElementSet events = p.events();
  ElementSet c = a;
  bool changed = true;
  while (changed) {
    const ElementSet before = c;
    events.for_each([&](ElementIndex e) {
      if (p.preset(e).subset_of(c)) c.insert(e);
    });
    events.for_each([&](ElementIndex e) {
      if (p.postset(e).subset_of(c)) c.insert(e);
    });
    (c & events).for_each([&](ElementIndex e) {
      c |= p.preset(e);
      c |= p.postset(e);
    });
    c = convex_hull(p, c);
    changed = c != before;
  }
  return {std::move(c), ClosureSource::phi};
}

CausalClosedness is_causally_closed(const Poset& p, const ElementSet& a) {
  CausalClosedness r;
  auto fail = [&](ClosureRule rule, ElementIndex x, ElementIndex y = 0) {
    r.closed = false;
    r.violated = rule;
    r.witness = x;
    r.witness_upper = y;
    return r;
  };
  const ElementSet events = p.events();
  for (auto e = events.first(); e; e = events.next(*e))
    if (!a.contains(*e) && p.preset(*e).subset_of(a)) return fail(ClosureRule::preset_complete, *e);
  for (auto e = events.first(); e; e = events.next(*e))
    if (!a.contains(*e) && p.postset(*e).subset_of(a)) return fail(ClosureRule::postset_complete, *e);
  for (auto e = events.first(); e; e = events.next(*e))
    if (a.contains(*e) && !(p.preset(*e) | p.postset(*e)).subset_of(a))
      return fail(ClosureRule::event_neighbours, *e);
  for (auto x = a.first(); x; x = a.next(*x)) {
    const ElementSet above = p.up(*x) & a;
    for (auto y = above.first(); y; y = above.next(*y))
      if (!interval(p, *x, *y).subset_of(a)) return fail(ClosureRule::convex, *x, *y);
  }
  return r;
}

ElementSet border(const Poset& p, const ElementSet& a) {
  ElementSet out(p.size());
  a.for_each([&](ElementIndex x) {
    if (!(p.preset(x) | p.postset(x)).subset_of(a)) out.insert(x);
  });
  return out;
}

namespace {

void require_bound(const Poset& p, std::size_t bound) {
  if (p.size() > bound)
    throw BoundExceededError("subset sweep over " + std::to_string(p.size()) +
                             " elements exceeds the bound of " + std::to_string(bound));
  if (p.size() > 63) throw BoundExceededError("subset sweep is limited to 63 elements");
}

}  // namespace

CoincidenceReport closures_coincide(const Poset& p, std::size_t bound) {
  require_bound(p, bound);
  CoincidenceReport r;
  const std::uint64_t count = std::uint64_t{1} << p.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const auto subset = ElementSet::from_mask(p.size(), mask);
    auto phi = causal_closure(p, subset).members;
    auto bi = biortho(p, subset).members;
    ++r.subsets_checked;
    if (phi != bi) {
      r.divergence = ClosureDivergence{subset, std::move(phi), std::move(bi)};
      break;
    }
  }
  return r;
}

std::vector<ElementSet> closed_sets_by_sweep(const Poset& p, std::size_t bound) {
  require_bound(p, bound);
  std::unordered_set<ElementSet, ElementSetHash> seen;
  const std::uint64_t count = std::uint64_t{1} << p.size();
  for (std::uint64_t mask = 0; mask < count; ++mask)
    seen.insert(biortho(p, ElementSet::from_mask(p.size(), mask)).members);
  std::vector<ElementSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), size_then_lex_less);
  return out;
}

}  // namespace causalql
