#ifndef O2_PARSER_HPP
#define O2_PARSER_HPP

#include <functional>
#include <optional>
#include <utility>

#include "o2/decompose.hpp"
#include "o2/grammar.hpp"

namespace o2 {

enum class Strategy {
  guided,  // bump-cancellation recursion with search fallback
  search,  // exhaustive split enumeration only
};

struct ParseStats {
  std::size_t guided_fallbacks = 0;  // bump recursion exhausted, search used
  std::size_t border_cases = 0;      // individual lift attempts that reported one
};

/// A balanced decomposition of the proper pair (v, w); both words
/// non-empty, vw balanced, |vw| > 2. Throws NotBalancedError /
/// TooShortError / std::invalid_argument on precondition violations and
/// InternalIncompletenessError if no decomposition is found (which the
/// theory rules out).
BalDecomposition decompose_pair(const Word& v, const Word& w, Strategy strategy,
                                ParseStats* stats = nullptr);

struct BuildStep {
  std::string rule;
  std::pair<Word, Word> first_child;
  std::pair<Word, Word> second_child;
};

/// Maps a canonical decomposition of (v, w) onto the grammar rule whose
/// instantiation on the two child pairs yields I(v, w). When one side of
/// the pair is empty no decomposition is needed and d may be omitted.
BuildStep build_step(const Word& v, const Word& w,
                     const std::optional<BalDecomposition>& d);

/// Derivation tree for word (which must lie in O2), rooted at the start
/// symbol, with the fixed top split (first letter, rest).
DerivationTree parse(const Word& word, Strategy strategy, ParseStats* stats = nullptr);

using DecompositionProvider =
    std::function<BalDecomposition(const Word&, const Word&)>;

/// Tree assembly over an arbitrary decomposition source; the provider is
/// called for every proper pair with |vw| > 2.
DerivationTree parse_with(const Word& word, const DecompositionProvider& provider);

}  // namespace o2

#endif
