#ifndef O2_ORACLE_HPP
#define O2_ORACLE_HPP

#include <optional>
#include <vector>

#include "o2/decompose.hpp"
#include "o2/grammar.hpp"

namespace o2 {

// Brute-force references over Sigma_2. Nothing here is optimized beyond
// prefix-balance pruning; these are the ground truth the constructive
// path is tested against.

/// Every word of O2 with |w| <= max_len, each exactly once, in
/// length-then-lexicographic order (a < A < b < B).
std::vector<Word> enumerate_balanced(std::size_t max_len);

/// All canonical rule-shaped bal-decompositions of (v, w): each word cut
/// into at most 3 contiguous parts, at most 4 parts total, at most 2 per
/// component. Empty result is valid (e.g. for |vw| = 2).
std::vector<BalDecomposition> search_decompositions(const Word& v, const Word& w);

/// First result of the enumeration above without materializing the rest.
std::optional<BalDecomposition> first_search_decomposition(const Word& v, const Word& w);

/// Search-only parser: uses first_search_decomposition at every level.
/// Throws NotBalancedError for words outside O2.
DerivationTree reference_parse(const Word& word);

}  // namespace o2

#endif
