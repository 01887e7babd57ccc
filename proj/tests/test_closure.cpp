#include <doctest.h>

#include "causalql/closure.hpp"
#include "support/net_generator.hpp"
#include "support/oracle.hpp"

using namespace causalql;
using causalql::testing::BruteForce;
using causalql::testing::Mask;

namespace {

Poset example() { return derive_poset(validate_net(testing::example_net_description())); }

ElementSet from_mask(const Poset& p, Mask m) { return ElementSet::from_mask(p.size(), m); }

}  // namespace

TEST_CASE("orthogonal complement") {
  Poset p = example();
  CHECK(ortho(p, p.set_of({"p"})) == p.set_of({"q"}));
  CHECK(ortho(p, p.empty_set()) == p.all());
  CHECK(ortho(p, p.all()).empty());
  CHECK(ortho(p, p.set_of({"r"})) == p.set_of({"s"}));
}

TEST_CASE("biorthogonal closure") {
  Poset p = example();
  auto pq = biortho(p, p.set_of({"p", "q"}));
  CHECK(pq.members == p.set_of({"p", "q", "e", "r", "s"}));
  CHECK(pq.provenance == ClosureSource::biortho);
  CHECK(biortho(p, p.empty_set()).members.empty());
  CHECK(biortho(p, p.set_of({"e"})).members == p.all());

  CHECK(is_closed(p, p.set_of({"p"})));
  CHECK(is_closed(p, p.set_of({"r"})));
  CHECK(is_closed(p, p.all()));
  CHECK_FALSE(is_closed(p, p.set_of({"p", "q"})));
}

TEST_CASE("causal closure") {
  Poset p = example();
  auto c = causal_closure(p, p.set_of({"p", "r"}));
  CHECK(c.members == p.set_of({"p", "q", "e", "r", "s"}));
  CHECK(c.provenance == ClosureSource::phi);
  CHECK(causal_closure(p, p.empty_set()).members.empty());
  CHECK(causal_closure(p, p.set_of({"p", "q"})).members == p.all());
  CHECK(causal_closure(p, p.set_of({"p"})).members == p.set_of({"p"}));
}

TEST_CASE("causal closedness reports the first violated rule") {
  Poset p = example();
  CHECK(is_causally_closed(p, p.all()).closed);

  auto e = is_causally_closed(p, p.set_of({"e"}));
  CHECK_FALSE(e.closed);
  CHECK(e.violated == ClosureRule::event_neighbours);
  CHECK(p.name(e.witness) == "e");

  auto pr = is_causally_closed(p, p.set_of({"p", "r"}));
  CHECK(pr.violated == ClosureRule::convex);
  CHECK(p.name(pr.witness) == "p");
  CHECK(p.name(pr.witness_upper) == "r");

  auto pq = is_causally_closed(p, p.set_of({"p", "q"}));
  CHECK(pq.violated == ClosureRule::preset_complete);
  auto rs = is_causally_closed(p, p.set_of({"r", "s"}));
  CHECK(rs.violated == ClosureRule::postset_complete);
}

TEST_CASE("border") {
  Poset p = example();
  CHECK(border(p, p.set_of({"p", "e", "r"})) == p.set_of({"e"}));
  CHECK(border(p, p.all()).empty());
  CHECK(border(p, p.set_of({"p"})) == p.set_of({"p"}));

  CHECK(border(p, p.set_of({"p", "q"})) == p.set_of({"p", "q"}));
}

TEST_CASE("closures coincide on the worked example") {
  auto r = closures_coincide(example());
  CHECK(r.coincide());
  CHECK(r.subsets_checked == 32);
}

TEST_CASE("closures diverge on the N-shaped poset") {
  Poset n = testing::n_shaped_poset();
  auto r = closures_coincide(n);
  REQUIRE_FALSE(r.coincide());
  // no events, so φ is the convex hull; {b}' = {a} and {a}' = {b, d}
  CHECK(n.format(r.divergence->subset) == "{b}");
  CHECK(r.divergence->phi == r.divergence->subset);
  CHECK(n.format(r.divergence->biortho) == "{b, d}");
}

TEST_CASE("sweep bound") {
  std::vector<std::pair<ElementIndex, ElementIndex>> arcs;
  for (ElementIndex i = 0; i + 1 < 17; ++i) arcs.emplace_back(i, i + 1);
  std::vector<std::string> names;
  for (int i = 0; i < 17; ++i) names.push_back("x" + std::to_string(i));
  Poset big = Poset::from_arcs(names, std::vector<ElementKind>(17, ElementKind::condition), arcs);
  CHECK_THROWS_AS(closures_coincide(big), BoundExceededError);
  // all conditions, so φ({x0}) = {x0} while {x0}'' = X
  auto r = closures_coincide(big, 17);
  CHECK_FALSE(r.coincide());
  CHECK(big.format(r.divergence->subset) == "{x0}");
}

TEST_CASE("source events put their postconditions in every causally closed set") {
  // e has no precondition: rule (i) applies vacuously
  Poset p = derive_poset(validate_net({{"b"}, {"e"}, {{"e", "b"}}}));
  CHECK(causal_closure(p, p.empty_set()).members == p.all());
  CHECK_FALSE(closures_coincide(p).coincide());
}

TEST_CASE("closure operator laws and oracle agreement (property)") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 40; ++round) {
    Poset p = derive_poset(validate_net(testing::random_causal_net(rng, {.max_elements = 10})));
    auto oracle = BruteForce::from_poset(p);
    const auto cc = oracle.causally_closed_sets();
    const Mask all = oracle.all();
    for (Mask m = 0;; ++m) {
      const auto a = from_mask(p, m);
      const auto phi = causal_closure(p, a).members;
      const auto bi = biortho(p, a).members;
      const auto o = ortho(p, a);

      CHECK(testing::to_mask(phi) == BruteForce::phi_by_intersection(cc, m, all));
      CHECK(testing::to_mask(bi) == oracle.biortho(m));
      CHECK(is_causally_closed(p, a).closed == oracle.causally_closed(m));

      CHECK(a.subset_of(phi));
      CHECK(a.subset_of(bi));
      CHECK(causal_closure(p, phi).members == phi);
      CHECK(biortho(p, bi).members == bi);
      CHECK(ortho(p, ortho(p, o)) == o);

      // monotone and antitone against a random superset
      const auto bigger = a | from_mask(p, static_cast<Mask>(rng()) & all);
      CHECK(phi.subset_of(causal_closure(p, bigger).members));
      CHECK(bi.subset_of(biortho(p, bigger).members));
      CHECK(ortho(p, bigger).subset_of(o));

      if (oracle.causally_closed(m)) CHECK(border(p, a).subset_of(p.conditions()));
      if (m == all) break;
    }
  }
}
