#ifndef O2_GRAMMAR_HPP
#define O2_GRAMMAR_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "o2/words.hpp"

namespace o2 {

struct Variable {
  std::string name;
  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// A symbol of a rule's left-hand argument: terminal letter or variable.
using Symbol = std::variant<Letter, Variable>;

struct RhsEntry {
  std::string nonterminal;
  std::vector<Variable> args;
};

struct Rule {
  std::string label;
  std::string lhs;                             // nonterminal
  std::vector<std::vector<Symbol>> lhs_args;   // one sequence per fanout slot
  std::vector<RhsEntry> rhs;
};

struct Mcfg {
  int alphabet_pairs = 2;                // pairs of Sigma_n
  std::map<std::string, int> fanout;     // nonterminals -> fanout
  std::set<std::string> variables;
  std::vector<Rule> rules;
  std::string start;

  const Rule* find_rule(const std::string& label) const;
  int grammar_fanout() const;
  int rank(const Rule& r) const { return static_cast<int>(r.rhs.size()); }
};

struct GrammarViolation {
  int constraint = 0;        // 1..4 as in the MCFG definition, 5 = arity
  std::string rule;          // offending rule label, empty for global checks
  std::string message;
};

/// nullopt = ok; otherwise the first violated constraint in rule order.
std::optional<GrammarViolation> validate_grammar(const Mcfg& g);

/// The fixed 2-MCFG over {a, A, b, B} with nonterminals S, I and the ten
/// rules r_0, r_a, r_A, r_b, r_B, r_l, r_r, r_n, r_s, r_z.
const Mcfg& g2();

struct RuleInstance {
  std::vector<Word> lhs;
  std::vector<std::vector<Word>> rhs;
};

/// Substitutes each variable everywhere it occurs. The assignment must be
/// defined on exactly the rule's variables; throws std::invalid_argument
/// otherwise.
RuleInstance instantiate(const Rule& r, const std::map<std::string, Word>& assignment);

struct DerivationTree {
  std::string rule;
  std::vector<Word> args;
  std::vector<DerivationTree> children;

  friend bool operator==(const DerivationTree&, const DerivationTree&) = default;
};

struct Rejection {
  std::string path;      // e.g. "root/1/0"
  std::string reason;
};

/// nullopt = the tree is a valid derivation in g (first failure in
/// depth-first, left-to-right order otherwise).
std::optional<Rejection> check_derivation(const Mcfg& g, const DerivationTree& t);

std::vector<Word> yield_of(const DerivationTree& t);

}  // namespace o2

#endif
