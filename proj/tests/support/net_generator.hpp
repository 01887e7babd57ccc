#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "causalql/net.hpp"
#include "causalql/poset.hpp"

namespace causalql::testing {

struct GeneratorOptions {
  std::size_t min_elements = 3;
  std::size_t max_elements = 12;
  /// Allow events without preconditions or without postconditions.
  bool allow_source_and_sink_events = false;
};

/// Random causal net grown event by event: each new event consumes a few
/// open conditions (conditions without an output event) and produces fresh
/// ones. Conditions therefore never branch and the flow relation is acyclic.
NetDescription random_causal_net(std::mt19937_64& rng, const GeneratorOptions& options = {});

/// Random poset that need not come from a causal net: a random DAG over
/// `size` elements, all declared as conditions.
Poset random_poset(std::mt19937_64& rng, std::size_t size, double edge_probability);

/// The N-shaped poset a < c, b < c, b < d. Not K-dense: the cut {a, d} misses
/// the line {b, c}.
Poset n_shaped_poset();

NetDescription example_net_description();
NetDescription chain_net_description();

}  // namespace causalql::testing
