#ifndef O2_WORDS_HPP
#define O2_WORDS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace o2 {

/// One symbol of the alphabet: pair index i >= 1 plus a polarity bit.
/// (1,false) prints as "a", (1,true) as "A", (2,false) as "b", (2,true)
/// as "B"; higher pairs use the token forms "a<i>" / "A<i>".
struct Letter {
  int pair = 1;
  bool conj = false;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Signed occurrence difference per pair, index 0 holding pair 1.
using Balance = std::vector<std::int64_t>;

/// A minimal non-short factor [start, end] (inclusive) of some word,
/// with its direction letter.
struct Bump {
  std::size_t start = 0;
  std::size_t end = 0;
  Letter direction;

  std::size_t length() const { return end - start + 1; }

  friend bool operator==(const Bump&, const Bump&) = default;
};

Letter conjugate(Letter x);

// Convenience letters for the O2 surface alphabet.
inline constexpr Letter kA{1, false};
inline constexpr Letter kAbar{1, true};
inline constexpr Letter kB{2, false};
inline constexpr Letter kBbar{2, true};

/// Throws std::invalid_argument if some letter has pair index > n.
Balance balance(const Word& w, int n);
bool is_balanced(const Word& w, int n = 2);

bool is_short(const Word& w);

/// All bumps of w, sorted by start index. Single left-to-right scan.
std::vector<Bump> bumps(const Word& w);

/// Inclusive slice w[i..min(j, |w|-1)]; empty when j < i or i >= |w|.
Word factor(const Word& w, std::size_t i, std::size_t j);

/// Prefix of length `count` (clamped).
Word prefix(const Word& w, std::size_t count);

/// Suffix starting at index i (clamped).
Word suffix(const Word& w, std::size_t i);

/// Deletes the in-range listed positions; out-of-range indices ignored.
Word remove_indices(const Word& w, const std::vector<std::size_t>& indices);

Word reverse(const Word& w);

bool is_prefix(const Word& p, const Word& q);

Word concat(const Word& u, const Word& v);

/// Parses the ASCII syntax: a A b B, or a<i>/A<i> for general pairs.
/// Throws std::invalid_argument on malformed input.
Word parse_word(const std::string& text);

std::string format_word(const Word& w);
std::string format_letter(Letter x);

}  // namespace o2

#endif
