#include "o2/grammar.hpp"

#include <algorithm>
#include <stdexcept>

namespace o2 {

const Rule* Mcfg::find_rule(const std::string& label) const {
  for (const Rule& r : rules)
    if (r.label == label) return &r;
  return nullptr;
}

int Mcfg::grammar_fanout() const {
  int f = 0;
  for (const auto& [nt, fo] : fanout) f = std::max(f, fo);
  return f;
}

namespace {

std::vector<Symbol> syms(std::initializer_list<Symbol> xs) { return xs; }

Symbol var(const char* name) { return Variable{name}; }

Rule leaf_rule(const char* label, Letter first, Letter second) {
  return Rule{label, "I", {{Symbol{first}}, {Symbol{second}}}, {}};
}

Mcfg make_g2() {
  Mcfg g;
  g.alphabet_pairs = 2;
  g.fanout = {{"S", 1}, {"I", 2}};
  g.variables = {"v", "w", "x", "y"};
  g.start = "S";

  g.rules.push_back(Rule{"r_0", "I", {{}, {}}, {}});
  g.rules.push_back(leaf_rule("r_a", kA, kAbar));
  g.rules.push_back(leaf_rule("r_A", kAbar, kA));
  g.rules.push_back(leaf_rule("r_b", kB, kBbar));
  g.rules.push_back(leaf_rule("r_B", kBbar, kB));

  RhsEntry vw{"I", {Variable{"v"}, Variable{"w"}}};
  RhsEntry xy{"I", {Variable{"x"}, Variable{"y"}}};
  g.rules.push_back(Rule{"r_l", "I",
                         {syms({var("v"), var("x"), var("w")}), syms({var("y")})},
                         {vw, xy}});
  g.rules.push_back(Rule{"r_r", "I",
                         {syms({var("v")}), syms({var("x"), var("w"), var("y")})},
                         {vw, xy}});
  g.rules.push_back(Rule{"r_n", "I",
                         {syms({var("v"), var("x")}), syms({var("y"), var("w")})},
                         {vw, xy}});
  g.rules.push_back(Rule{"r_s", "I",
                         {syms({var("v"), var("x")}), syms({var("w"), var("y")})},
                         {vw, xy}});
  g.rules.push_back(Rule{"r_z", "S", {syms({var("v"), var("w")})}, {vw}});
  return g;
}

}  // namespace

const Mcfg& g2() {
  static const Mcfg g = make_g2();
  return g;
}

std::optional<GrammarViolation> validate_grammar(const Mcfg& g) {
  if (g.fanout.empty() || g.variables.empty() || g.rules.empty())
    return GrammarViolation{0, "", "carrier sets must be non-empty"};
  if (!g.fanout.contains(g.start))
    return GrammarViolation{0, "", "start symbol is not a nonterminal"};
  for (const std::string& v : g.variables)
    if (g.fanout.contains(v))
      return GrammarViolation{0, "", "variable '" + v + "' collides with a nonterminal"};
  if (g.fanout.at(g.start) != 1)
    return GrammarViolation{4, "", "f(S) must be 1"};

  for (const Rule& r : g.rules) {
    if (!g.fanout.contains(r.lhs))
      return GrammarViolation{5, r.label, "unknown lhs nonterminal '" + r.lhs + "'"};
    // constraint 1: rhs variables pairwise distinct
    std::set<std::string> rhs_vars;
    for (const RhsEntry& e : r.rhs) {
      if (!g.fanout.contains(e.nonterminal))
        return GrammarViolation{5, r.label,
                                "unknown rhs nonterminal '" + e.nonterminal + "'"};
      for (const Variable& x : e.args) {
        if (!g.variables.contains(x.name))
          return GrammarViolation{2, r.label, "variable '" + x.name +
                                                  "' not in the grammar's variable set"};
        if (!rhs_vars.insert(x.name).second)
          return GrammarViolation{1, r.label,
                                  "duplicate variable '" + x.name + "' on the rhs"};
      }
    }
    // constraints 2-3: lhs args over X_r + Sigma, each rhs variable used once
    std::map<std::string, int> uses;
    for (const auto& arg : r.lhs_args)
      for (const Symbol& s : arg)
        if (const Variable* x = std::get_if<Variable>(&s)) {
          if (!rhs_vars.contains(x->name))
            return GrammarViolation{2, r.label, "lhs variable '" + x->name +
                                                    "' does not occur on the rhs"};
          ++uses[x->name];
        }
    for (const std::string& x : rhs_vars) {
      int n = uses.contains(x) ? uses.at(x) : 0;
      if (n != 1)
        return GrammarViolation{3, r.label, "variable '" + x + "' occurs " +
                                                std::to_string(n) +
                                                " times in the lhs arguments"};
    }
    // arity consistency
    if (static_cast<int>(r.lhs_args.size()) != g.fanout.at(r.lhs))
      return GrammarViolation{5, r.label, "lhs argument count does not match fanout"};
    for (const RhsEntry& e : r.rhs)
      if (static_cast<int>(e.args.size()) != g.fanout.at(e.nonterminal))
        return GrammarViolation{5, r.label, "rhs argument count for '" +
                                                e.nonterminal +
                                                "' does not match fanout"};
  }
  return std::nullopt;
}

RuleInstance instantiate(const Rule& r, const std::map<std::string, Word>& assignment) {
  std::set<std::string> needed;
  for (const RhsEntry& e : r.rhs)
    for (const Variable& x : e.args) needed.insert(x.name);
  for (const auto& [name, _] : assignment)
    if (!needed.contains(name))
      throw std::invalid_argument("instantiate: extra variable '" + name + "'");
  for (const std::string& name : needed)
    if (!assignment.contains(name))
      throw std::invalid_argument("instantiate: missing variable '" + name + "'");

  RuleInstance inst;
  for (const auto& arg : r.lhs_args) {
    Word flat;
    for (const Symbol& s : arg) {
      if (const Letter* t = std::get_if<Letter>(&s))
        flat.push_back(*t);
      else {
        const Word& sub = assignment.at(std::get<Variable>(s).name);
        flat.insert(flat.end(), sub.begin(), sub.end());
      }
    }
    inst.lhs.push_back(std::move(flat));
  }
  for (const RhsEntry& e : r.rhs) {
    std::vector<Word> tuple;
    for (const Variable& x : e.args) tuple.push_back(assignment.at(x.name));
    inst.rhs.push_back(std::move(tuple));
  }
  return inst;
}

namespace {

std::optional<Rejection> check_node(const Mcfg& g, const DerivationTree& t,
                                    const std::string& path) {
  const Rule* r = g.find_rule(t.rule);
  if (!r) return Rejection{path, "unknown rule '" + t.rule + "'"};
  if (t.children.size() != r->rhs.size())
    return Rejection{path, "rule '" + t.rule + "' expects " +
                               std::to_string(r->rhs.size()) + " children, got " +
                               std::to_string(t.children.size())};
  if (t.args.size() != r->lhs_args.size())
    return Rejection{path, "argument tuple width " + std::to_string(t.args.size()) +
                               " does not match fanout " +
                               std::to_string(r->lhs_args.size())};
  for (std::size_t i = 0; i < t.children.size(); ++i)
    if (auto rej = check_node(g, t.children[i], path + "/" + std::to_string(i)))
      return rej;

  std::map<std::string, Word> assignment;
  for (std::size_t i = 0; i < r->rhs.size(); ++i) {
    const RhsEntry& e = r->rhs[i];
    const Rule* cr = g.find_rule(t.children[i].rule);
    if (cr && cr->lhs != e.nonterminal)
      return Rejection{path + "/" + std::to_string(i),
                       "child derives '" + cr->lhs + "' where '" + e.nonterminal +
                           "' is required"};
    if (t.children[i].args.size() != e.args.size())
      return Rejection{path + "/" + std::to_string(i),
                       "child argument tuple width does not match fanout of '" +
                           e.nonterminal + "'"};
    for (std::size_t j = 0; j < e.args.size(); ++j)
      assignment[e.args[j].name] = t.children[i].args[j];
  }
  RuleInstance inst = instantiate(*r, assignment);
  if (inst.lhs != t.args) {
    std::string got, want;
    for (const Word& w : t.args) got += "\"" + format_word(w) + "\" ";
    for (const Word& w : inst.lhs) want += "\"" + format_word(w) + "\" ";
    return Rejection{path, "instance mismatch for rule '" + t.rule +
                               "': node has " + got + "but substitution yields " + want};
  }
  return std::nullopt;
}

}  // namespace

std::optional<Rejection> check_derivation(const Mcfg& g, const DerivationTree& t) {
  return check_node(g, t, "root");
}

std::vector<Word> yield_of(const DerivationTree& t) { return t.args; }

}  // namespace o2
