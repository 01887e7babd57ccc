#include "causalql/logic.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace causalql {

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Kind::atom, std::move(name), {}}));
}

Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<const Node>(Node{Kind::negation, {}, {std::move(operand)}}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::conjunction, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::disjunction, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::implication, {}, {std::move(lhs), std::move(rhs)}}));
}

std::size_t Formula::depth() const {
  std::size_t d = 0;
  for (const auto& c : node_->children) d = std::max(d, c.depth() + 1);
  return d;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->name == b.node_->name &&
         a.node_->children == b.node_->children;
}

namespace {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty formula");
    Formula f = implication();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("formula: " + what + " at column " + std::to_string(pos_ + 1), 1, pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept("->")) return Formula::implication(std::move(lhs), implication());
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept("|")) f = Formula::disjunction(std::move(f), conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept("&")) f = Formula::conjunction(std::move(f), unary());
    return f;
  }

  Formula unary() {
    if (accept("!")) return Formula::negation(unary());
    if (accept("(")) {
      Formula f = implication();
      if (!accept(")")) fail("expected ')'");
      return f;
    }
    skip_space();
    auto ident_start = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto ident_char = [&](char c) { return ident_start(c) || (c >= '0' && c <= '9'); };
    if (pos_ == text_.size()) fail("unexpected end of formula");
    if (!ident_start(text_[pos_])) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return Formula::atom(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::implication: return 1;
    case Formula::Kind::disjunction: return 2;
    case Formula::Kind::conjunction: return 3;
    case Formula::Kind::negation: return 4;
    case Formula::Kind::atom: return 5;
  }
  return 0;
}

void print(const Formula& f, int min_prec, std::string& out) {
  const int prec = precedence(f.kind());
  const bool paren = prec < min_prec;
  if (paren) out += '(';
  switch (f.kind()) {
    case Formula::Kind::atom: out += f.name(); break;
    case Formula::Kind::negation:
      out += '!';
      print(f.lhs(), 4, out);
      break;
    case Formula::Kind::conjunction:
      print(f.lhs(), 3, out);
      out += " & ";
      print(f.rhs(), 4, out);
      break;
    case Formula::Kind::disjunction:
      print(f.lhs(), 2, out);
      out += " | ";
      print(f.rhs(), 3, out);
      break;
    case Formula::Kind::implication:
      print(f.lhs(), 2, out);
      out += " -> ";
      print(f.rhs(), 1, out);
      break;
  }
  if (paren) out += ')';
}

}  // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

std::string to_string(const Formula& f) {
  std::string out;
  print(f, 0, out);
  return out;
}

LatticeIndex interpret(const Formula& f, const Binding& h, const Lattice& l) {
  switch (f.kind()) {
    case Formula::Kind::atom: {
      auto it = h.find(f.name());
      if (it == h.end()) throw InvalidArgumentError("unbound atom '" + f.name() + "'");
      if (it->second >= l.size()) throw InvalidArgumentError("atom '" + f.name() + "' is bound outside the lattice");
      return it->second;
    }
    case Formula::Kind::negation: return l.ortho(interpret(f.lhs(), h, l));
    case Formula::Kind::conjunction: return l.meet(interpret(f.lhs(), h, l), interpret(f.rhs(), h, l));
    case Formula::Kind::disjunction: return l.join(interpret(f.lhs(), h, l), interpret(f.rhs(), h, l));
    case Formula::Kind::implication:
      return l.join(l.ortho(interpret(f.lhs(), h, l)), interpret(f.rhs(), h, l));
  }
  throw InvalidArgumentError("malformed formula");
}

bool satisfies(const Interpretation& j, const Formula& f, const Lattice& l) {
  if (j.line.universe() != l.poset().size() || !is_line(l.poset(), j.line))
    throw InvalidArgumentError(l.poset().format(j.line) + " is not a line");
  return l.at(interpret(f, j.binding, l)).intersects(j.line);
}

std::string_view clause_name(Clause c) {
  switch (c) {
    case Clause::conjunction: return "conjunction";
    case Clause::negation: return "negation";
    case Clause::disjunction: return "disjunction";
    case Clause::implication: return "implication";
  }
  return "unknown";
}

std::string_view direction_name(Direction d) { return d == Direction::only_if ? "only_if" : "if"; }

namespace {

struct PoolEntry {
  Formula formula;
  Formula::Kind kind;
  std::size_t atom = 0;
  std::size_t lhs = 0;
  std::size_t rhs = 0;
};

// All formulas of depth <= max_depth over the atoms, shallowest first.
std::vector<PoolEntry> formula_pool(const std::vector<std::string>& atoms, std::size_t max_depth) {
  std::vector<PoolEntry> pool;
  for (std::size_t a = 0; a < atoms.size(); ++a)
    pool.push_back({Formula::atom(atoms[a]), Formula::Kind::atom, a});
  std::size_t prev_begin = 0;
  for (std::size_t d = 1; d <= max_depth; ++d) {
    const std::size_t prev_end = pool.size();
    for (std::size_t i = prev_begin; i < prev_end; ++i)
      pool.push_back({Formula::negation(pool[i].formula), Formula::Kind::negation, 0, i});
    for (auto kind : {Formula::Kind::conjunction, Formula::Kind::disjunction, Formula::Kind::implication}) {
      for (std::size_t i = 0; i < prev_end; ++i) {
        for (std::size_t j = 0; j < prev_end; ++j) {
          if (i < prev_begin && j < prev_begin) continue;  // depth would be < d
          const Formula& x = pool[i].formula;
          const Formula& y = pool[j].formula;
          Formula f = kind == Formula::Kind::conjunction   ? Formula::conjunction(x, y)
                      : kind == Formula::Kind::disjunction ? Formula::disjunction(x, y)
                                                           : Formula::implication(x, y);
          pool.push_back({std::move(f), kind, 0, i, j});
        }
      }
    }
    prev_begin = prev_end;
  }
  return pool;
}

}  // namespace

SatisfactionLawReport check_satisfaction_laws(const Lattice& l, const LawCheckOptions& options) {
  if (options.atoms.empty()) throw InvalidArgumentError("law check needs at least one atom");
  if (options.max_depth == 0) throw InvalidArgumentError("law check needs max_depth >= 1");
  const std::size_t n = l.size();
  std::uint64_t bindings = 1;
  for (std::size_t i = 0; i < options.atoms.size(); ++i) {
    bindings *= n;
    if (bindings > options.max_bindings)
      throw BoundExceededError("satisfaction-law sweep needs more than " +
                               std::to_string(options.max_bindings) + " bindings");
  }

  SatisfactionLawReport report;
  const auto pool = formula_pool(options.atoms, options.max_depth - 1);
  const auto lines = enumerate_lines(l.poset());
  const auto comp = compatibility_matrix(l);
  std::set<std::tuple<Clause, Direction, LatticeIndex, LatticeIndex, std::size_t>> seen;

  std::vector<LatticeIndex> assignment(options.atoms.size(), 0);
  std::vector<LatticeIndex> value(pool.size());
  std::vector<std::uint64_t> count(n);
  std::vector<std::size_t> representative(n);
  std::vector<LatticeIndex> distinct;
  std::vector<char> meets(n);

  for (std::uint64_t b = 0; b < bindings; ++b) {
    // Mixed radix, last atom varying fastest.
    std::uint64_t rest = b;
    for (std::size_t k = options.atoms.size(); k-- > 0;) {
      assignment[k] = static_cast<LatticeIndex>(rest % n);
      rest /= n;
    }
    std::fill(count.begin(), count.end(), 0);
    distinct.clear();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const auto& e = pool[i];
      switch (e.kind) {
        case Formula::Kind::atom: value[i] = assignment[e.atom]; break;
        case Formula::Kind::negation: value[i] = l.ortho(value[e.lhs]); break;
        case Formula::Kind::conjunction: value[i] = l.meet(value[e.lhs], value[e.rhs]); break;
        case Formula::Kind::disjunction: value[i] = l.join(value[e.lhs], value[e.rhs]); break;
        case Formula::Kind::implication: value[i] = l.join(l.ortho(value[e.lhs]), value[e.rhs]); break;
      }
      if (count[value[i]]++ == 0) {
        representative[value[i]] = i;
        distinct.push_back(value[i]);
      }
    }

    auto binding_map = [&] {
      Binding h;
      for (std::size_t k = 0; k < options.atoms.size(); ++k) h.emplace(options.atoms[k], assignment[k]);
      return h;
    };

    for (std::size_t li = 0; li < lines.size(); ++li) {
      const auto& line = lines[li];
      for (LatticeIndex v = 0; v < n; ++v) meets[v] = l.at(v).intersects(line);

      auto record = [&](Clause clause, Direction dir, bool holds, std::uint64_t weight, LatticeIndex a,
                        LatticeIndex c) {
        auto& t = report.tallies[static_cast<std::size_t>(clause)][static_cast<std::size_t>(dir)];
        t.checked += weight;
        if (holds) {
          t.passed += weight;
          return;
        }
        if (!seen.emplace(clause, dir, a, c, li).second) return;
        const Formula& f = pool[representative[a]].formula;
        const Formula& g = pool[representative[c]].formula;
        Formula compound = clause == Clause::negation      ? Formula::negation(f)
                           : clause == Clause::conjunction ? Formula::conjunction(f, g)
                           : clause == Clause::disjunction ? Formula::disjunction(f, g)
                                                           : Formula::implication(f, g);
        report.counterexamples.push_back({clause, dir, to_string(compound), binding_map(), line, a, c});
      };

      for (LatticeIndex a : distinct) {
        const bool sat_not = meets[l.ortho(a)];
        const bool sat_f = meets[a];
        record(Clause::negation, Direction::only_if, !sat_not || !sat_f, count[a], a, a);
        record(Clause::negation, Direction::if_, sat_f || sat_not, count[a], a, a);
      }
      for (LatticeIndex a : distinct) {
        for (LatticeIndex c : distinct) {
          const std::uint64_t w = count[a] * count[c];
          const bool fa = meets[a];
          const bool fc = meets[c];

          const bool sat_and = meets[l.meet(a, c)];
          record(Clause::conjunction, Direction::only_if, !sat_and || (fa && fc), w, a, c);
          record(Clause::conjunction, Direction::if_, !(fa && fc) || sat_and, w, a, c);

          const bool sat_or = meets[l.join(a, c)];
          const bool or_condition = comp[a * n + c] && (fa || fc);
          record(Clause::disjunction, Direction::only_if, !sat_or || or_condition, w, a, c);
          record(Clause::disjunction, Direction::if_, !or_condition || sat_or, w, a, c);

          const bool sat_imp = meets[l.join(l.ortho(a), c)];
          const bool imp_condition = l.leq(a, c);
          record(Clause::implication, Direction::only_if, !sat_imp || imp_condition, w, a, c);
          record(Clause::implication, Direction::if_, !imp_condition || sat_imp, w, a, c);
        }
      }
    }
  }
  return report;
}

}  // namespace causalql
