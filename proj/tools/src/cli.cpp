#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "causalql/closure.hpp"
#include "causalql/errors.hpp"
#include "causalql/lattice.hpp"
#include "causalql/logic.hpp"
#include "causalql/net.hpp"
#include "causalql/poset.hpp"

namespace causalql::cli {

namespace {

using json = nlohmann::ordered_json;

// Unreadable input or unwritable output.
struct IoError : Error {
  using Error::Error;
};

struct Options {
  std::string net_path;
  std::optional<std::string> output;
  bool timing = false;

  std::optional<std::string> dot;
  bool sweep_check = false;
  std::size_t sweep_bound = default_sweep_bound;

  std::string cut;

  std::string formula;
  std::vector<std::string> binds;
  std::string line;

  std::size_t depth = 3;
  std::string atoms = "f,g,h";
  std::size_t max_counterexamples = 20;
};

struct Loaded {
  Net net;
  Poset poset;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return buf.str();
}

json names(const Poset& p, const ElementSet& s) { return p.names_of(s); }

json names(const Lattice& l, LatticeIndex a) { return names(l.poset(), l.at(a)); }

json net_digest(const Net& net) {
  return {{"conditions", net.num_conditions()}, {"events", net.num_events()}, {"arcs", net.num_arcs()}};
}

void add_violation(json& violations, std::string_view check, const Lattice& l, const LawReport& r) {
  if (r.passed()) return;
  json v = {{"check", check}, {"law", r.violation->law}};
  json elems = json::array();
  for (auto a : r.violation->elements) elems.push_back(names(l, a));
  v["elements"] = std::move(elems);
  if (r.violation->line) v["line"] = names(l.poset(), *r.violation->line);
  violations.push_back(std::move(v));
}

std::vector<std::string> split(std::string_view csv) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    auto end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    auto item = csv.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) out.emplace_back(item);
    start = end + 1;
  }
  return out;
}

json cmd_validate(const Loaded& in) {
  return {{"valid", true}, {"simple", is_simple(in.net)}, {"t_restricted", is_t_restricted(in.net)}};
}

json cmd_analyze(const Loaded& in) {
  const Poset& p = in.poset;
  const auto cuts = enumerate_cuts(p);
  const auto lines = enumerate_lines(p);
  const auto k = is_k_dense(p);
  const auto fin = finiteness_report(p);

  json jcuts = json::array();
  for (const auto& c : cuts) jcuts.push_back({{"members", names(p, c)}, {"b_cut", is_b_cut(p, c)}});
  json jlines = json::array();
  for (const auto& l : lines) jlines.push_back(names(p, l));
  json witness = nullptr;
  if (k.witness) witness = {{"cut", names(p, k.witness->first)}, {"line", names(p, k.witness->second)}};

  return {{"cuts", std::move(jcuts)},
          {"lines", std::move(jlines)},
          {"k_dense", k.k_dense},
          {"single_point_meets", k.single_point_meets},
          {"witness", std::move(witness)},
          {"finiteness",
           {{"interval_finite", fin.interval_finite},
            {"degree_finite", fin.degree_finite},
            {"max_degree", fin.max_degree},
            {"max_interval", fin.max_interval}}},
          {"simple", is_simple(in.net)},
          {"t_restricted", is_t_restricted(in.net)}};
}

json cmd_lattice(const Loaded& in, const Options& opt, json& violations) {
  const Poset& p = in.poset;
  // Fail on the sweep bound before doing any other work.
  if (opt.sweep_check && p.size() > opt.sweep_bound)
    throw BoundExceededError("sweep check over " + std::to_string(p.size()) + " elements exceeds bound " +
                             std::to_string(opt.sweep_bound));

  const Lattice l = build_lattice(p);
  json elems = json::array();
  for (LatticeIndex a = 0; a < l.size(); ++a) elems.push_back(names(l, a));
  json covers = json::array();
  const auto h = hasse(l);
  for (auto [a, b] : h) covers.push_back({a, b});

  const auto ol = check_ortholattice(l);
  const auto om = check_orthomodular(l);
  const auto reg = check_regular(l);
  add_violation(violations, "ortholattice", l, ol);
  add_violation(violations, "orthomodular", l, om);
  add_violation(violations, "regular", l, reg);

  json result = {{"size", l.size()},
                 {"elements", std::move(elems)},
                 {"hasse_covers", h.size()},
                 {"hasse", std::move(covers)},
                 {"ortholattice", ol.passed()},
                 {"orthomodular", om.passed()},
                 {"regular", reg.passed()}};

  if (opt.sweep_check) {
    const auto co = closures_coincide(p, opt.sweep_bound);
    const auto sw = check_against_sweep(l, opt.sweep_bound);
    add_violation(violations, "sweep", l, sw);
    json divergence = nullptr;
    if (co.divergence) {
      divergence = {{"subset", names(p, co.divergence->subset)},
                    {"phi", names(p, co.divergence->phi)},
                    {"biortho", names(p, co.divergence->biortho)}};
      violations.push_back({{"check", "closures_coincide"}, {"law", "phi_equals_biortho"},
                            {"elements", json::array({names(p, co.divergence->subset)})}});
    }
    result["sweep"] = {{"bound", opt.sweep_bound},
                       {"subsets_checked", co.subsets_checked},
                       {"closures_coincide", co.coincide()},
                       {"divergence", std::move(divergence)},
                       {"lattice_matches_sweep", sw.passed()}};
  }

  if (opt.dot) {
    std::ofstream dot(*opt.dot);
    if (!dot) throw IoError("cannot write '" + *opt.dot + "'");
    write_hasse_dot(l, dot);
    if (!dot) throw IoError("cannot write '" + *opt.dot + "'");
    result["dot"] = *opt.dot;
  }
  return result;
}

json cmd_states(const Loaded& in, json& violations) {
  const Lattice l = build_lattice(in.poset);
  json states = json::array();
  std::size_t verified = 0;
  for (const auto& line : enumerate_lines(in.poset)) {
    const auto s = line_state(l, line);
    const auto check = verify_state(l, s);
    add_violation(violations, "state", l, check);
    verified += check.passed();
    json values = json::array();
    for (LatticeIndex a = 0; a < l.size(); ++a) values.push_back({{"element", names(l, a)}, {"value", s(a)}});
    states.push_back({{"line", names(in.poset, line)}, {"values", std::move(values)}, {"verified", check.passed()}});
  }
  return {{"lattice_size", l.size()}, {"state_count", states.size()}, {"verified", verified}, {"states", std::move(states)}};
}

json cmd_boolean(const Loaded& in, const Options& opt) {
  const Poset& p = in.poset;
  const auto cut = p.parse_set(opt.cut);
  if (!is_cut(p, cut) || !is_b_cut(p, cut)) throw InvalidArgumentError(p.format(cut) + " is not a B-cut");
  const Lattice l = build_lattice(p);
  const auto block = boolean_from_bcut(l, cut);
  json atoms = json::array();
  for (auto a : block.atoms) atoms.push_back(names(l, a));
  json carrier = json::array();
  for (auto a : block.carrier) carrier.push_back(names(l, a));
  return {{"cut", names(p, cut)},
          {"atoms", std::move(atoms)},
          {"carrier_size", block.carrier.size()},
          {"carrier", std::move(carrier)},
          {"closed", block.closed},
          {"distributive", block.distributive}};
}

json cmd_eval(const Loaded& in, const Options& opt) {
  const Poset& p = in.poset;
  const Formula f = parse_formula(opt.formula);
  const Lattice l = build_lattice(p);

  Binding h;
  json jbinding = json::object();
  for (const auto& b : opt.binds) {
    const auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ParseError("binding '" + b + "' is not of the form atom=elements", 0, 0);
    const auto atom = b.substr(0, eq);
    const auto set = p.parse_set(std::string_view(b).substr(eq + 1));
    const auto idx = l.find(set);
    if (!idx) throw InvalidArgumentError("binding " + atom + " = " + p.format(set) + " is not a closed set");
    h[atom] = *idx;
    jbinding[atom] = names(p, set);
  }

  Interpretation j{std::move(h), p.parse_set(opt.line)};
  const LatticeIndex value = interpret(f, j.binding, l);
  const bool truth = satisfies(j, f, l);
  return {{"formula", to_string(f)},
          {"binding", std::move(jbinding)},
          {"line", names(p, j.line)},
          {"value", names(l, value)},
          {"satisfied", truth}};
}

json cmd_laws(const Loaded& in, const Options& opt) {
  const Lattice l = build_lattice(in.poset);
  LawCheckOptions lo;
  lo.max_depth = opt.depth;
  lo.atoms = split(opt.atoms);
  const auto report = check_satisfaction_laws(l, lo);

  json tallies = json::array();
  for (auto c : {Clause::conjunction, Clause::negation, Clause::disjunction, Clause::implication})
    for (auto d : {Direction::only_if, Direction::if_}) {
      const auto& t = report.tally(c, d);
      tallies.push_back({{"clause", clause_name(c)},
                         {"direction", direction_name(d)},
                         {"checked", t.checked},
                         {"passed", t.passed},
                         {"holds", t.holds()}});
    }
  json examples = json::array();
  for (const auto& c : report.counterexamples) {
    if (examples.size() >= opt.max_counterexamples) break;
    json binding = json::object();
    for (const auto& [atom, v] : c.binding) binding[atom] = names(l, v);
    examples.push_back({{"clause", clause_name(c.clause)},
                        {"direction", direction_name(c.direction)},
                        {"formula", c.formula},
                        {"binding", std::move(binding)},
                        {"line", names(in.poset, c.line)},
                        {"left", names(l, c.left)},
                        {"right", names(l, c.right)}});
  }
  return {{"lattice_size", l.size()},
          {"tallies", std::move(tallies)},
          {"counterexample_count", report.counterexamples.size()},
          {"counterexamples", std::move(examples)}};
}

json echo(const std::string& name, const Options& opt) {
  json args = {{"net", opt.net_path}};
  if (name == "lattice") {
    args["sweep_check"] = opt.sweep_check;
    args["sweep_bound"] = opt.sweep_bound;
    if (opt.dot) args["dot"] = *opt.dot;
  } else if (name == "boolean") {
    args["cut"] = opt.cut;
  } else if (name == "eval") {
    args["formula"] = opt.formula;
    args["bind"] = opt.binds;
    args["line"] = opt.line;
  } else if (name == "laws") {
    args["depth"] = opt.depth;
    args["atoms"] = opt.atoms;
  }
  return {{"name", name}, {"arguments", std::move(args)}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Causal nets, their closure lattices and quantum-logic evaluation", "causalql"};
  app.require_subcommand(1);
  app.add_option("-o,--output", opt.output, "Write the JSON report here instead of stdout");
  app.add_flag("--timing", opt.timing, "Add wall-clock timing to the report");

  auto with_net = [&](CLI::App* sub) {
    sub->add_option("net", opt.net_path, "Net JSON file")->required();
    return sub;
  };
  with_net(app.add_subcommand("validate", "Check the net axioms"));
  with_net(app.add_subcommand("analyze", "Cuts, lines and K-density"));
  auto* lattice = with_net(app.add_subcommand("lattice", "Build the lattice of closed sets"));
  lattice->add_option("--dot", opt.dot, "Write the Hasse diagram as Graphviz DOT");
  lattice->add_flag("--sweep-check", opt.sweep_check, "Cross-check against the full subset sweep");
  lattice->add_option("--sweep-bound", opt.sweep_bound, "Largest net the subset sweep accepts")
      ->capture_default_str();
  with_net(app.add_subcommand("states", "Two-valued states from lines"));
  auto* boolean = with_net(app.add_subcommand("boolean", "Boolean block generated by a B-cut"));
  boolean->add_option("--cut", opt.cut, "Comma-separated condition names")->required();
  auto* eval = with_net(app.add_subcommand("eval", "Evaluate a formula under a line"));
  eval->add_option("--formula", opt.formula, "Formula, e.g. \"f | !g\"")->required();
  eval->add_option("--bind", opt.binds, "atom=element,... (repeatable)");
  eval->add_option("--line", opt.line, "Comma-separated element names of a line")->required();
  auto* laws = with_net(app.add_subcommand("laws", "Check the satisfaction clauses"));
  laws->add_option("--depth", opt.depth, "Maximum formula depth")->capture_default_str()->check(CLI::Range(1, 4));
  laws->add_option("--atoms", opt.atoms, "Comma-separated atom names")->capture_default_str();
  laws->add_option("--max-counterexamples", opt.max_counterexamples, "Counterexamples to list")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  json report = {{"command", echo(command, opt)}, {"net", nullptr}, {"result", nullptr}};
  json violations = json::array();
  int code = exit_ok;
  const auto started = std::chrono::steady_clock::now();

  auto fail = [&](int c, std::string_view kind, const std::exception& e) {
    code = c;
    report["error"] = {{"kind", kind}, {"message", e.what()}};
    err << "causalql: " << e.what() << '\n';
  };

  try {
    const auto desc = parse_net(read_file(opt.net_path));
    Net net = validate_net(desc);
    report["net"] = net_digest(net);
    Loaded in{net, derive_poset(net)};
    if (command == "validate") report["result"] = cmd_validate(in);
    else if (command == "analyze") report["result"] = cmd_analyze(in);
    else if (command == "lattice") report["result"] = cmd_lattice(in, opt, violations);
    else if (command == "states") report["result"] = cmd_states(in, violations);
    else if (command == "boolean") report["result"] = cmd_boolean(in, opt);
    else if (command == "eval") report["result"] = cmd_eval(in, opt);
    else if (command == "laws") report["result"] = cmd_laws(in, opt);
  } catch (const NetAxiomError& e) {
    fail(exit_violation, "net_axiom", e);
    if (command == "validate") report["result"] = {{"valid", false}};
    violations.push_back({{"check", "net_axioms"}, {"law", axiom_name(e.axiom())}, {"message", e.what()}});
  } catch (const ParseError& e) {
    fail(exit_input, "parse", e);
    if (e.line() != 0) report["error"]["position"] = {{"line", e.line()}, {"column", e.column()}};
  } catch (const IoError& e) {
    fail(exit_input, "io", e);
  } catch (const UnknownElementError& e) {
    fail(exit_violation, "unknown_element", e);
  } catch (const InvalidArgumentError& e) {
    fail(exit_violation, "invalid_argument", e);
  } catch (const BoundExceededError& e) {
    fail(exit_bound, "bound_exceeded", e);
  }

  report["violations"] = std::move(violations);
  report["exit_code"] = code;
  if (opt.timing) {
    const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - started;
    report["timing"] = {{"wall_ms", took.count()}};
  }

  const std::string text = report.dump(2) + "\n";
  if (opt.output) {
    std::ofstream file(*opt.output, std::ios::binary);
    if (!(file << text)) {
      err << "causalql: cannot write '" << *opt.output << "'\n";
      return exit_input;
    }
  } else {
    out << text;
  }
  return code;
}

}  // namespace causalql::cli
