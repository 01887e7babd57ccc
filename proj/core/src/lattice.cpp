#include "causalql/lattice.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <unordered_set>

namespace causalql {

namespace {

constexpr std::size_t max_cached_table = 1024;

}  // namespace

Lattice Lattice::from_closed_sets(Poset poset, std::vector<ElementSet> closed_sets) {
  Lattice l;
  l.poset_ = std::move(poset);
  std::sort(closed_sets.begin(), closed_sets.end(), size_then_lex_less);
  closed_sets.erase(std::unique(closed_sets.begin(), closed_sets.end()), closed_sets.end());
  for (const auto& s : closed_sets) {
    if (s.universe() != l.poset_.size())
      throw InvalidArgumentError("lattice: element over the wrong universe");
    if (!is_closed(l.poset_, s))
      throw InvalidArgumentError("lattice: " + l.poset_.format(s) + " is not closed");
  }
  l.elements_ = std::move(closed_sets);
  if (l.elements_.empty() || !l.elements_.front().empty() || l.elements_.back() != l.poset_.all())
    throw InvalidArgumentError("lattice: bottom and top must both be present");
  l.index();
  return l;
}

void Lattice::index() {
  lookup_.clear();
  lookup_.reserve(elements_.size());
  for (LatticeIndex i = 0; i < elements_.size(); ++i) lookup_.emplace_back(elements_[i], i);
  std::sort(lookup_.begin(), lookup_.end());

  ortho_.resize(elements_.size());
  for (LatticeIndex i = 0; i < elements_.size(); ++i) {
    auto o = find(causalql::ortho(poset_, elements_[i]));
    if (!o) throw InvalidArgumentError("lattice: orthocomplement of " + format(i) + " is missing");
    ortho_[i] = *o;
  }

  meet_table_.clear();
  join_table_.clear();
  const std::size_t n = elements_.size();
  if (n <= max_cached_table) {
    std::vector<LatticeIndex> meets(n * n);
    std::vector<LatticeIndex> joins(n * n);
    for (LatticeIndex a = 0; a < n; ++a) {
      for (LatticeIndex b = a; b < n; ++b) {
        meets[a * n + b] = meets[b * n + a] = meet(a, b);
        joins[a * n + b] = joins[b * n + a] = join(a, b);
      }
    }
    meet_table_ = std::move(meets);
    join_table_ = std::move(joins);
  }
}

std::optional<LatticeIndex> Lattice::find(const ElementSet& s) const {
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), s,
                             [](const auto& entry, const ElementSet& key) { return entry.first < key; });
  if (it == lookup_.end() || it->first != s) return std::nullopt;
  return it->second;
}

LatticeIndex Lattice::index_of(const ElementSet& s) const {
  if (s.universe() != poset_.size()) throw InvalidArgumentError("lattice: set over the wrong universe");
  if (auto i = find(s)) return *i;
  throw InvalidArgumentError(poset_.format(s) + " is not a member of the lattice");
}

LatticeIndex Lattice::meet(LatticeIndex a, LatticeIndex b) const {
  if (!meet_table_.empty()) return meet_table_[a * elements_.size() + b];
  return index_of(elements_[a] & elements_[b]);
}

LatticeIndex Lattice::join(LatticeIndex a, LatticeIndex b) const {
  if (!join_table_.empty()) return join_table_[a * elements_.size() + b];
  return index_of(biortho(poset_, elements_[a] | elements_[b]).members);
}

Lattice build_lattice(const Poset& p, const LatticeOptions& options) {
  std::unordered_set<ElementSet, ElementSetHash> closed;
  closed.insert(p.empty_set());
  closed.insert(p.all());
  std::size_t visited = 0;

  // Depth-first over cosets, each grown only with larger indices so that every
  // coset is visited once.
  std::vector<ElementSet> later;
  for (ElementIndex x = 0; x < p.size(); ++x) {
    ElementSet s(p.size());
    for (ElementIndex y = x + 1; y < p.size(); ++y) s.insert(y);
    later.push_back(std::move(s));
  }
  ElementSet coset = p.empty_set();
  std::function<void(const ElementSet&)> grow = [&](const ElementSet& candidates) {
    for (auto x = candidates.first(); x; x = candidates.next(*x)) {
      if (++visited > options.max_cosets)
        throw BoundExceededError("lattice construction visited more than " +
                                 std::to_string(options.max_cosets) + " cosets");
      coset.insert(*x);
      closed.insert(biortho(p, coset).members);
      grow(candidates & p.co_neighbours(*x) & later[*x]);
      coset.erase(*x);
    }
  };
  grow(p.all());

  // Every closed set is an intersection of sets {x}' = co(x). On K-dense nets
  // the coset closures already contain them all; elsewhere this fills the gaps.
  std::vector<ElementSet> pending(closed.begin(), closed.end());
  while (!pending.empty()) {
    ElementSet s = std::move(pending.back());
    pending.pop_back();
    for (ElementIndex x = 0; x < p.size(); ++x) {
      ElementSet t = s & p.co_neighbours(x);
      if (closed.insert(t).second) pending.push_back(std::move(t));
    }
  }

  return Lattice::from_closed_sets(p, std::vector<ElementSet>(closed.begin(), closed.end()));
}

LawReport check_ortholattice(const Lattice& l) {
  LawReport r;
  auto fail = [&](const char* law, std::vector<LatticeIndex> elems) {
    r.violation = LawViolation{law, std::move(elems), std::nullopt};
  };
  const auto n = static_cast<LatticeIndex>(l.size());
  for (LatticeIndex x = 0; x < n && r.passed(); ++x) {
    ++r.checked;
    const LatticeIndex xo = l.ortho(x);
    if (l.ortho(xo) != x) fail("involution", {x});
    else if (l.meet(x, xo) != l.bottom()) fail("complement_meet", {x});
    else if (l.join(x, xo) != l.top()) fail("complement_join", {x});
  }
  for (LatticeIndex x = 0; x < n && r.passed(); ++x) {
    for (LatticeIndex y = 0; y < n && r.passed(); ++y) {
      ++r.checked;
      const LatticeIndex xo = l.ortho(x);
      const LatticeIndex yo = l.ortho(y);
      if (l.leq(x, y) && !l.leq(yo, xo)) fail("antitone", {x, y});
      else if (l.ortho(l.join(x, y)) != l.meet(xo, yo)) fail("de_morgan_join", {x, y});
      else if (l.ortho(l.meet(x, y)) != l.join(xo, yo)) fail("de_morgan_meet", {x, y});
    }
  }
  return r;
}

LawReport check_orthomodular(const Lattice& l) {
  LawReport r;
  const auto n = static_cast<LatticeIndex>(l.size());
  for (LatticeIndex x = 0; x < n; ++x) {
    for (LatticeIndex y = 0; y < n; ++y) {
      if (!l.leq(x, y)) continue;
      ++r.checked;
      if (l.join(x, l.meet(y, l.ortho(x))) != y) {
        r.violation = LawViolation{"orthomodular", {x, y}, std::nullopt};
        return r;
      }
    }
  }
  return r;
}

LawReport check_against_sweep(const Lattice& l, std::size_t bound) {
  LawReport r;
  const auto swept = closed_sets_by_sweep(l.poset(), bound);
  for (const auto& s : swept) {
    ++r.checked;
    if (!l.find(s)) {
      r.violation = LawViolation{"sweep_missing", {}, s};
      return r;
    }
  }
  if (swept.size() != l.size()) {
    for (LatticeIndex i = 0; i < l.size(); ++i) {
      if (!std::binary_search(swept.begin(), swept.end(), l.at(i), size_then_lex_less)) {
        r.violation = LawViolation{"sweep_extra", {i}, std::nullopt};
        return r;
      }
    }
  }
  return r;
}

bool are_orthogonal(const Lattice& l, LatticeIndex a, LatticeIndex b) {
  return l.at(a).subset_of(l.at(l.ortho(b)));
}

Compatibility are_compatible(const Lattice& l, LatticeIndex a, LatticeIndex b) {
  Compatibility c;
  c.characterization = l.join(l.meet(a, b), l.meet(a, l.ortho(b))) == a;
  const auto n = static_cast<LatticeIndex>(l.size());
  for (LatticeIndex z = 0; z < n && !c.compatible; ++z) {
    if (!l.leq(z, a) || !l.leq(z, b)) continue;
    for (LatticeIndex x1 = 0; x1 < n && !c.compatible; ++x1) {
      if (!l.leq(x1, a) || !are_orthogonal(l, x1, z) || l.join(x1, z) != a) continue;
      for (LatticeIndex y1 = 0; y1 < n; ++y1) {
        if (!l.leq(y1, b) || !are_orthogonal(l, y1, z) || !are_orthogonal(l, x1, y1)) continue;
        if (l.join(y1, z) != b) continue;
        c.compatible = true;
        c.witness = std::array<LatticeIndex, 3>{x1, z, y1};
        break;
      }
    }
  }
  return c;
}

std::vector<bool> compatibility_matrix(const Lattice& l) {
  const auto n = static_cast<LatticeIndex>(l.size());
  std::vector<bool> m(static_cast<std::size_t>(n) * n);
  for (LatticeIndex a = 0; a < n; ++a)
    for (LatticeIndex b = a; b < n; ++b)
      m[a * n + b] = m[b * n + a] = are_compatible(l, a, b).compatible;
  return m;
}

LawReport check_regular(const Lattice& l) {
  LawReport r;
  const auto n = static_cast<LatticeIndex>(l.size());
  const auto comp = compatibility_matrix(l);
  auto compatible = [&](LatticeIndex a, LatticeIndex b) { return comp[a * n + b]; };
  for (LatticeIndex x = 0; x < n; ++x) {
    for (LatticeIndex y = 0; y < n; ++y) {
      if (!compatible(x, y)) continue;
      for (LatticeIndex z = 0; z < n; ++z) {
        if (!compatible(x, z) || !compatible(y, z)) continue;
        ++r.checked;
        if (!compatible(x, l.join(y, z))) {
          r.violation = LawViolation{"regular", {x, y, z}, std::nullopt};
          return r;
        }
      }
    }
  }
  return r;
}

TwoValuedState line_state(const Lattice& l, const ElementSet& line) {
  if (line.universe() != l.poset().size() || !is_line(l.poset(), line))
    throw InvalidArgumentError(l.poset().format(line) + " is not a line");
  TwoValuedState s;
  s.line = line;
  s.values.reserve(l.size());
  for (const auto& a : l.elements()) s.values.push_back(a.intersects(line) ? 1 : 0);
  return s;
}

namespace {

// Orthogonality neighbourhoods over lattice indices; a ⊥ a only for bottom.
std::vector<ElementSet> orthogonality_graph(const Lattice& l) {
  const auto n = static_cast<LatticeIndex>(l.size());
  std::vector<ElementSet> adj(n, ElementSet(n));
  for (LatticeIndex a = 0; a < n; ++a)
    for (LatticeIndex b = 0; b < n; ++b)
      if (a != b && are_orthogonal(l, a, b)) adj[a].insert(b);
  return adj;
}

}  // namespace

LawReport verify_state(const Lattice& l, const TwoValuedState& s,
                       std::optional<std::size_t> family_bound) {
  LawReport r;
  if (s.values.size() != l.size()) throw InvalidArgumentError("state does not match the lattice");
  ++r.checked;
  if (s(l.top()) != 1) {
    r.violation = LawViolation{"normalized", {l.top()}, s.line};
    return r;
  }

  const auto n = static_cast<LatticeIndex>(l.size());
  const bool exhaustive = !family_bound && l.size() <= 64;
  const std::size_t bound = exhaustive ? l.size() : family_bound.value_or(4);
  const auto adj = orthogonality_graph(l);
  std::vector<ElementSet> later(n, ElementSet(n));
  for (LatticeIndex a = 0; a < n; ++a)
    for (LatticeIndex b = a + 1; b < n; ++b) later[a].insert(b);

  std::vector<LatticeIndex> family;
  std::function<bool(const ElementSet&, LatticeIndex, unsigned)> extend =
      [&](const ElementSet& candidates, LatticeIndex joined, unsigned sum) {
        ++r.checked;
        if (s(joined) != sum) {
          r.violation = LawViolation{"additivity", family, s.line};
          return false;
        }
        if (family.size() == bound) return true;
        for (auto a = candidates.first(); a; a = candidates.next(*a)) {
          family.push_back(*a);
          const ElementSet next = candidates & adj[*a] & later[*a];
          const bool ok = extend(next, l.join(joined, *a), sum + s(*a));
          family.pop_back();
          if (!ok) return false;
        }
        return true;
      };
  if (!extend(ElementSet::full(n), l.bottom(), 0)) return r;

  if (!exhaustive) {
    // One greedy maximal family per starting element.
    for (LatticeIndex start = 0; start < n; ++start) {
      family.assign(1, start);
      ElementSet candidates = adj[start];
      LatticeIndex joined = start;
      unsigned sum = s(start);
      while (auto a = candidates.first()) {
        family.push_back(*a);
        joined = l.join(joined, *a);
        sum += s(*a);
        candidates &= adj[*a];
      }
      ++r.checked;
      if (s(joined) != sum) {
        r.violation = LawViolation{"additivity", family, s.line};
        return r;
      }
    }
  }
  return r;
}

LawReport check_line_crossing_xor(const Lattice& l) {
  LawReport r;
  for (const auto& line : enumerate_lines(l.poset())) {
    for (LatticeIndex a = 0; a < l.size(); ++a) {
      ++r.checked;
      const bool meets_a = l.at(a).intersects(line);
      const bool meets_ortho = l.at(l.ortho(a)).intersects(line);
      if (meets_a == meets_ortho) {
        r.violation = LawViolation{"line_crossing_xor", {a}, line};
        return r;
      }
    }
  }
  return r;
}

BcutReport check_bcut_generates(const Lattice& l) {
  BcutReport r;
  const Poset& p = l.poset();
  for (LatticeIndex a = 0; a < l.size(); ++a) {
    if (l.at(a).empty()) continue;
    bool any = false;
    for (const auto& cut : enumerate_cuts(p, l.at(a))) {
      if (!is_b_cut(p, cut)) continue;
      any = true;
      ++r.laws.checked;
      if (biortho(p, cut).members != l.at(a)) {
        r.laws.violation = LawViolation{"bcut_generates", {a}, cut};
        return r;
      }
    }
    if (!any) ++r.members_without_bcut;
  }
  return r;
}

namespace {

constexpr std::size_t max_block_atoms = 12;
constexpr std::size_t max_triple_checked_carrier = 256;

}  // namespace

BooleanBlock boolean_from_partition(const Lattice& l, std::vector<LatticeIndex> parts) {
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  for (auto a : parts)
    if (a >= l.size()) throw InvalidArgumentError("block atom is not a lattice member");
  if (parts.empty()) throw InvalidArgumentError("a Boolean block needs at least one atom");
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      if (!are_orthogonal(l, parts[i], parts[j]))
        throw InvalidArgumentError(l.format(parts[i]) + " and " + l.format(parts[j]) +
                                   " are not orthogonal");
  LatticeIndex total = l.bottom();
  for (auto a : parts) total = l.join(total, a);
  if (total != l.top()) throw InvalidArgumentError("block atoms do not join to the top element");
  if (parts.size() > max_block_atoms)
    throw BoundExceededError("Boolean block with " + std::to_string(parts.size()) +
                             " atoms exceeds the limit of " + std::to_string(max_block_atoms));

  BooleanBlock block;
  block.atoms = parts;
  const std::size_t k = parts.size();
  std::vector<LatticeIndex> by_mask(std::size_t{1} << k);
  by_mask[0] = l.bottom();
  for (std::size_t mask = 1; mask < by_mask.size(); ++mask) {
    const auto low = static_cast<std::size_t>(__builtin_ctzll(mask));
    by_mask[mask] = l.join(by_mask[mask & (mask - 1)], parts[low]);
  }
  block.carrier = by_mask;
  std::sort(block.carrier.begin(), block.carrier.end());
  block.carrier.erase(std::unique(block.carrier.begin(), block.carrier.end()), block.carrier.end());

  const auto& c = block.carrier;
  auto in_carrier = [&](LatticeIndex x) { return std::binary_search(c.begin(), c.end(), x); };
  block.closed = true;
  for (auto a : c) {
    if (!in_carrier(l.ortho(a))) block.closed = false;
    for (auto b : c)
      if (!in_carrier(l.meet(a, b)) || !in_carrier(l.join(a, b))) block.closed = false;
  }

  block.distributive = true;
  if (c.size() <= max_triple_checked_carrier) {
    for (auto a : c)
      for (auto b : c)
        for (auto d : c) {
          if (l.meet(a, l.join(b, d)) != l.join(l.meet(a, b), l.meet(a, d)) ||
              l.join(a, l.meet(b, d)) != l.meet(l.join(a, b), l.join(a, d)))
            block.distributive = false;
        }
  } else {
    // Too many triples: show instead that subset -> join is a Boolean algebra
    // isomorphism from the powerset of the atoms, which implies distributivity.
    const std::size_t full = by_mask.size() - 1;
    block.distributive = c.size() == by_mask.size();
    for (std::size_t s = 0; s <= full && block.distributive; ++s) {
      if (l.ortho(by_mask[s]) != by_mask[full & ~s]) block.distributive = false;
      for (std::size_t t = 0; t <= full && block.distributive; ++t)
        if (l.meet(by_mask[s], by_mask[t]) != by_mask[s & t] ||
            l.join(by_mask[s], by_mask[t]) != by_mask[s | t])
          block.distributive = false;
    }
  }
  return block;
}

BooleanBlock boolean_from_bcut(const Lattice& l, const ElementSet& bcut) {
  const Poset& p = l.poset();
  if (bcut.universe() != p.size() || !is_cut(p, bcut) || !is_b_cut(p, bcut))
    throw InvalidArgumentError(p.format(bcut) + " is not a B-cut");
  std::vector<LatticeIndex> atoms;
  bcut.for_each([&](ElementIndex b) {
    atoms.push_back(l.index_of(biortho(p, ElementSet(p.size(), {b})).members));
  });
  return boolean_from_partition(l, std::move(atoms));
}

std::vector<std::pair<LatticeIndex, LatticeIndex>> hasse(const Lattice& l) {
  const auto n = static_cast<LatticeIndex>(l.size());
  std::vector<ElementSet> above(n, ElementSet(n));
  std::vector<ElementSet> below(n, ElementSet(n));
  for (LatticeIndex a = 0; a < n; ++a)
    for (LatticeIndex b = 0; b < n; ++b)
      if (a != b && l.leq(a, b)) {
        above[a].insert(b);
        below[b].insert(a);
      }
  std::vector<std::pair<LatticeIndex, LatticeIndex>> covers;
  for (LatticeIndex a = 0; a < n; ++a)
    above[a].for_each([&](ElementIndex b) {
      if (!above[a].intersects(below[b])) covers.emplace_back(a, static_cast<LatticeIndex>(b));
    });
  return covers;
}

void write_hasse_dot(const Lattice& l, std::ostream& out) {
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (LatticeIndex a = 0; a < l.size(); ++a) out << "  n" << a << " [label=\"" << l.format(a) << "\"];\n";
  for (auto [a, b] : hasse(l)) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
}

}  // namespace causalql
