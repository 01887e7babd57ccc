#include "net_generator.hpp"

#include <algorithm>

namespace causalql::testing {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

NetDescription random_causal_net(std::mt19937_64& rng, const GeneratorOptions& options) {
  const std::size_t target = uniform(rng, options.min_elements, options.max_elements);
  NetDescription d;
  std::vector<std::string> open;           // conditions with no output event yet
  std::vector<bool> has_input;             // indexed like d.conditions
  auto new_condition = [&](bool produced) {
    d.conditions.push_back("b" + std::to_string(d.conditions.size()));
    has_input.push_back(produced);
    open.push_back(d.conditions.back());
    return d.conditions.back();
  };
  auto size = [&] { return d.conditions.size() + d.events.size(); };

  for (std::size_t i = 0, n = uniform(rng, 1, 2); i < n; ++i) new_condition(false);

  while (size() + 2 <= target) {
    // Occasionally start a fresh initial condition to create concurrency.
    if (size() + 3 <= target && uniform(rng, 0, 3) == 0) new_condition(false);

    const std::string event = "e" + std::to_string(d.events.size());
    std::size_t consume = std::min(open.size(), uniform(rng, 1, 3));
    if (options.allow_source_and_sink_events && uniform(rng, 0, 4) == 0) consume = 0;
    if (consume == 0 && !options.allow_source_and_sink_events) break;
    std::shuffle(open.begin(), open.end(), rng);
    std::vector<std::string> pre(open.end() - static_cast<std::ptrdiff_t>(consume), open.end());
    open.resize(open.size() - consume);

    std::size_t room = target - size() - 1;
    std::size_t produce = std::min(room, uniform(rng, 1, 3));
    if (options.allow_source_and_sink_events && !pre.empty() && uniform(rng, 0, 4) == 0) produce = 0;
    if (produce == 0 && pre.empty()) break;
    if (produce == 0 && !options.allow_source_and_sink_events) {
      // No room for a postcondition: put the consumed conditions back.
      open.insert(open.end(), pre.begin(), pre.end());
      break;
    }

    d.events.push_back(event);
    for (const auto& b : pre) d.arcs.push_back({b, event});
    for (std::size_t i = 0; i < produce; ++i) d.arcs.push_back({event, new_condition(true)});
  }

  // Initial conditions that were never consumed would be isolated.
  std::vector<std::string> isolated;
  for (std::size_t i = 0; i < d.conditions.size(); ++i) {
    if (has_input[i]) continue;
    const auto& b = d.conditions[i];
    const bool used = std::any_of(d.arcs.begin(), d.arcs.end(), [&](const Arc& a) { return a.source == b; });
    if (!used) isolated.push_back(b);
  }
  std::erase_if(d.conditions, [&](const std::string& b) {
    return std::find(isolated.begin(), isolated.end(), b) != isolated.end();
  });
  if (d.events.empty()) return random_causal_net(rng, options);
  return d;
}

Poset random_poset(std::mt19937_64& rng, std::size_t size, double edge_probability) {
  std::vector<std::string> names;
  std::vector<ElementKind> kinds(size, ElementKind::condition);
  for (std::size_t i = 0; i < size; ++i) names.push_back("x" + std::to_string(i));
  std::vector<std::pair<ElementIndex, ElementIndex>> arcs;
  std::bernoulli_distribution coin(edge_probability);
  // Edges only go from lower to higher index, so the relation is acyclic.
  for (ElementIndex i = 0; i < size; ++i)
    for (ElementIndex j = i + 1; j < size; ++j)
      if (coin(rng)) arcs.emplace_back(i, j);
  return Poset::from_arcs(std::move(names), std::move(kinds), arcs);
}

Poset n_shaped_poset() {
  std::vector<std::pair<ElementIndex, ElementIndex>> arcs = {{0, 2}, {1, 2}, {1, 3}};
  return Poset::from_arcs({"a", "b", "c", "d"}, std::vector<ElementKind>(4, ElementKind::condition), arcs);
}

NetDescription example_net_description() {
  return {{"p", "q", "r", "s"}, {"e"}, {{"p", "e"}, {"q", "e"}, {"e", "r"}, {"e", "s"}}};
}

NetDescription chain_net_description() {
  return {{"b", "b2"}, {"e"}, {{"b", "e"}, {"e", "b2"}}};
}

}  // namespace causalql::testing
