#include <doctest.h>

#include "causalql/poset.hpp"
#include "support/net_generator.hpp"
#include "support/oracle.hpp"

using namespace causalql;
using causalql::testing::BruteForce;

namespace {

Poset example() { return derive_poset(validate_net(testing::example_net_description())); }
Poset chain() { return derive_poset(validate_net(testing::chain_net_description())); }

std::vector<std::string> formatted(const Poset& p, const std::vector<ElementSet>& sets) {
  std::vector<std::string> out;
  for (const auto& s : sets) out.push_back(p.format(s));
  return out;
}

}  // namespace

TEST_CASE("derived order on the worked example") {
  Poset p = example();
  auto i = [&](const char* n) { return p.index_of(n); };
  CHECK(p.leq(i("p"), i("e")));
  CHECK(p.leq(i("e"), i("r")));
  CHECK(p.leq(i("p"), i("r")));
  for (ElementIndex x = 0; x < p.size(); ++x) CHECK(p.leq(x, x));
  CHECK_FALSE(p.leq(i("p"), i("q")));
  CHECK_FALSE(p.leq(i("q"), i("p")));

  CHECK(co(p, i("p"), i("q")));
  CHECK(co(p, i("r"), i("s")));
  CHECK(li(p, i("p"), i("s")));
  for (ElementIndex x = 0; x < p.size(); ++x) {
    CHECK(li(p, x, x));
    CHECK_FALSE(co(p, x, x));
  }
}

TEST_CASE("intervals and convexity") {
  Poset p = example();
  auto i = [&](const char* n) { return p.index_of(n); };
  CHECK(interval(p, i("p"), i("r")) == p.set_of({"p", "e", "r"}));
  CHECK(interval(p, i("q"), i("q")) == p.set_of({"q"}));
  CHECK(interval(p, i("r"), i("p")).empty());
  CHECK_FALSE(is_convex(p, p.set_of({"p", "r"})));
  CHECK(is_convex(p, p.empty_set()));
  for (ElementIndex x = 0; x < p.size(); ++x) CHECK(is_convex(p, ElementSet(p.size(), {x})));
  CHECK(is_convex(p, p.set_of({"p", "e", "r"})));
}

TEST_CASE("finiteness report") {
  auto r = finiteness_report(example());
  CHECK(r.interval_finite);
  CHECK(r.degree_finite);
  CHECK(r.max_degree == 2);
  CHECK(r.max_interval == 3);
  CHECK(finiteness_report(chain()).max_interval == 3);
}

TEST_CASE("cuts and lines of the worked example") {
  Poset p = example();
  CHECK(formatted(p, enumerate_cuts(p)) == std::vector<std::string>{"{p, q}", "{r, s}", "{e}"});
  CHECK(formatted(p, enumerate_cuts(p, p.set_of({"p"}))) == std::vector<std::string>{"{p}"});
  CHECK(formatted(p, enumerate_cuts(p, p.set_of({"p", "e", "r"}))) ==
        std::vector<std::string>{"{p}", "{r}", "{e}"});

  CHECK(formatted(p, enumerate_lines(p)) ==
        std::vector<std::string>{"{p, r, e}", "{p, s, e}", "{q, r, e}", "{q, s, e}"});
  CHECK(formatted(p, enumerate_lines(p, p.set_of({"p", "q"}))) == std::vector<std::string>{"{p}", "{q}"});
  Poset c = chain();
  CHECK(enumerate_lines(c).size() == 1);
  CHECK(enumerate_lines(c).front() == c.all());
  CHECK(enumerate_cuts(c).size() == 3);
}

TEST_CASE("cosets, B-cuts and cut extension") {
  Poset p = example();
  CHECK(is_b_cut(p, p.set_of({"p", "q"})));
  CHECK_FALSE(is_b_cut(p, p.set_of({"e"})));
  CHECK(is_b_cut(p, p.set_of({"r", "s"})));

  CHECK(is_coset(p, p.set_of({"p", "q"})));
  CHECK(is_b_coset(p, p.set_of({"p", "q"})));
  CHECK(is_coset(p, p.empty_set()));
  CHECK(is_b_coset(p, p.empty_set()));
  CHECK_FALSE(is_coset(p, p.set_of({"p", "e"})));

  CHECK(extend_to_cut(p, p.set_of({"p"})) == p.set_of({"p", "q"}));
  CHECK(extend_to_cut(p, p.set_of({"r", "s"})) == p.set_of({"r", "s"}));
  CHECK(extend_to_cut(p, p.empty_set()) == enumerate_cuts(p).front());
  CHECK_THROWS_AS(extend_to_cut(p, p.set_of({"p", "e"})), InvalidArgumentError);
}

TEST_CASE("is_cut and is_line validate maximality") {
  Poset p = example();
  CHECK(is_cut(p, p.set_of({"p", "q"})));
  CHECK_FALSE(is_cut(p, p.set_of({"p"})));
  CHECK(is_line(p, p.set_of({"q", "e", "s"})));
  CHECK_FALSE(is_line(p, p.set_of({"q", "e"})));
  CHECK_FALSE(is_line(p, p.set_of({"p", "q", "e"})));
}

TEST_CASE("K-density") {
  auto r = is_k_dense(example());
  CHECK(r.k_dense);
  CHECK(r.cuts == 3);
  CHECK(r.lines == 4);
  CHECK(r.single_point_meets);
  CHECK(is_k_dense(chain()).k_dense);

  // Two independent chains are K-dense.
  auto two = derive_poset(validate_net({{"b1", "c1", "b2", "c2"}, {"e1", "e2"},
                                        {{"b1", "e1"}, {"e1", "c1"}, {"b2", "e2"}, {"e2", "c2"}}}));
  CHECK(is_k_dense(two).k_dense);

  Poset n = testing::n_shaped_poset();
  auto bad = is_k_dense(n);
  CHECK_FALSE(bad.k_dense);
  REQUIRE(bad.witness.has_value());
  CHECK_FALSE(bad.witness->first.intersects(bad.witness->second));
  CHECK(n.format(bad.witness->first) == "{a, d}");
  CHECK(n.format(bad.witness->second) == "{b, c}");
}

TEST_CASE("li and co partition distinct pairs (property)") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    Poset p = derive_poset(validate_net(testing::random_causal_net(rng)));
    for (ElementIndex x = 0; x < p.size(); ++x)
      for (ElementIndex y = 0; y < p.size(); ++y) {
        if (x != y) CHECK(li(p, x, y) != co(p, x, y));
        CHECK(li(p, x, y) == li(p, y, x));
        CHECK(co(p, x, y) == co(p, y, x));
      }
  }
}

TEST_CASE("order and enumerations agree with brute force (property)") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 80; ++i) {
    Poset p = i % 4 == 3 ? testing::random_poset(rng, 9, 0.25)
                         : derive_poset(validate_net(testing::random_causal_net(rng)));
    auto oracle = BruteForce::from_poset(p);
    for (ElementIndex x = 0; x < p.size(); ++x)
      for (ElementIndex y = 0; y < p.size(); ++y) CHECK(p.leq(x, y) == oracle.leq(x, y));

    auto cuts = enumerate_cuts(p);
    auto lines = enumerate_lines(p);
    CHECK(testing::to_masks(cuts) == oracle.cuts(oracle.all()));
    CHECK(testing::to_masks(lines) == oracle.lines(oracle.all()));
    CHECK(std::is_sorted(cuts.begin(), cuts.end()));

    // restricted to a random subset
    testing::Mask within = static_cast<testing::Mask>(rng()) & oracle.all();
    ElementSet w(p.size());
    for (ElementIndex x = 0; x < p.size(); ++x)
      if (within >> x & 1u) w.insert(x);
    CHECK(testing::to_masks(enumerate_cuts(p, w)) == oracle.cuts(within));
    CHECK(testing::to_masks(enumerate_lines(p, w)) == oracle.lines(within));

    for (const auto& c : cuts)
      for (const auto& l : lines)
        if (c.intersects(l)) CHECK((c & l).size() == 1);

    // every coset extends to an enumerated cut containing it
    for (testing::Mask m = 0; m <= oracle.all(); ++m) {
      if (!oracle.is_co_clique(m)) continue;
      ElementSet s(p.size());
      for (ElementIndex x = 0; x < p.size(); ++x)
        if (m >> x & 1u) s.insert(x);
      auto cut = extend_to_cut(p, s);
      CHECK(s.subset_of(cut));
      CHECK(std::binary_search(cuts.begin(), cuts.end(), cut));
    }
  }
}
