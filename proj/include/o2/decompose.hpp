#ifndef O2_DECOMPOSE_HPP
#define O2_DECOMPOSE_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "o2/words.hpp"

namespace o2 {

/// One factor, referenced as a half-open slice [start, end) of a source word.
struct Slice {
  std::size_t src = 0;
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
  friend bool operator==(const Slice&, const Slice&) = default;
  friend auto operator<=>(const Slice&, const Slice&) = default;
};

/// A two-component partition of the factors of a proper factorisation of a
/// word list. Components are kept canonical: slices sorted by (src, start),
/// and the component holding the overall first slice listed first.
struct BalDecomposition {
  std::vector<Slice> components[2];

  friend bool operator==(const BalDecomposition&, const BalDecomposition&) = default;

  void canonicalize();
  /// `[(src,start,end),...] | [(src,start,end),...]`
  std::string dump() const;
};

Word slice_word(const std::vector<Word>& sources, const Slice& s);
Word component_word(const std::vector<Word>& sources, const std::vector<Slice>& comp);

/// Full invariant check: slices of each source are non-empty, pairwise
/// disjoint and cover it; components non-empty with at most |sources|
/// factors; each component concat strictly shorter than the total and
/// balanced. nullopt = valid.
std::optional<std::string> validate_decomposition(const std::vector<Word>& sources,
                                                  const BalDecomposition& d);

/// Short-case construction: (x, y) non-empty, short, with xy balanced and
/// |xy| > 2. Tries the two end-letter pairings first, then searches
/// ultra-proper prefix pairs by increasing |p|+|q|, then |p|.
/// Throws std::invalid_argument on precondition violations.
BalDecomposition decompose_short(const Word& x, const Word& y);

/// remove_indices(w, {bp.start, bp.end}); throws if bp is not a bump of w.
Word cancel_bump(const Word& w, const Bump& bp);

/// Globally minimal-length bump across the pair; ties broken by word 0
/// before word 1, then smallest start. nullopt iff both words are short.
std::optional<std::pair<int, Bump>> find_min_bump(const Word& s0, const Word& s1);

/// Replacement lifting: substitutes s for the (possibly empty) factor
/// [i, i-1+delta] of sources[entry]; requires balance(s) equal to the
/// replaced factor's balance. The slice containing position i absorbs the
/// substitution; all other slices keep their identity re-indexed.
BalDecomposition replace_in_decomposition(const std::vector<Word>& sources,
                                          const BalDecomposition& d,
                                          std::size_t entry, std::size_t i,
                                          int delta, const Word& s);

/// What remained when sliding could not reinstate a canceled bump: the
/// Lemma-style boundary shape of the bump plus any conj(beta)^j alpha
/// prefix pattern found in reverse(s0), s1 or reverse(s1).
struct BorderCase {
  bool bump_is_left_factor = false;
  bool bump_is_right_factor = false;
  struct PatternMatch {
    int source = 0;  // 0 = reverse(s0), 1 = s1, 2 = reverse(s1)
    std::size_t repeat = 0;
  };
  std::vector<PatternMatch> patterns;
};

using LiftResult = std::variant<BalDecomposition, BorderCase>;

/// Observer invoked with every intermediate sliding state (each one a valid
/// bal-decomposition of the reduced pair).
using SlideObserver = std::function<void(const std::vector<Word>&, const BalDecomposition&)>;

/// Reinstates the two letters of bump bp (canceled from the designated
/// word) into d_reduced, a valid bal-decomposition of the reduced pair.
/// Inserts directly when both letters land in one component; otherwise
/// performs balance-preserving boundary slides (one letter per move,
/// capped at the total input length) before giving up with a BorderCase.
LiftResult lift_decomposition(const Word& s0, const Word& s1, int which,
                              const Bump& bp, const BalDecomposition& d_reduced,
                              const SlideObserver& on_step = nullptr);

}  // namespace o2

#endif
