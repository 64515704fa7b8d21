#ifndef O2_GENERATE_HPP
#define O2_GENERATE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "o2/words.hpp"

namespace o2 {

/// Uniform sample from O2 ∩ Sigma_2^length (length must be even): the
/// a-pair count k is drawn with multinomial weighting, then the multiset
/// {a^k, A^k, b^(m-k), B^(m-k)} is shuffled.
Word sample_balanced_word(std::size_t length, std::mt19937_64& rng);

/// `count` words of the given length, deterministic per seed.
std::vector<Word> generate_words(std::size_t length, std::size_t count,
                                 std::uint64_t seed);

struct FuzzReport {
  bool ok = true;
  std::size_t words_checked = 0;
  std::string failing_word;  // shortest failure observed
  std::string detail;
};

/// Differential fuzzing: random O2 words of even lengths up to max_len are
/// parsed with both strategies; every tree is re-checked against the
/// grammar and round-tripped through both serializations.
FuzzReport fuzz_run(std::size_t max_len, std::size_t count, std::uint64_t seed);

}  // namespace o2

#endif
