#include "o2/parser.hpp"

#include <algorithm>
#include <stdexcept>

#include "o2/errors.hpp"
#include "o2/oracle.hpp"

namespace o2 {

namespace {

BalDecomposition whole_word_pair(const Word& v, const Word& w) {
  BalDecomposition d;
  d.components[0] = {Slice{0, 0, v.size()}};
  d.components[1] = {Slice{1, 0, w.size()}};
  return d;
}

}  // namespace

BalDecomposition decompose_pair(const Word& v, const Word& w, Strategy strategy,
                                ParseStats* stats) {
  if (v.empty() || w.empty())
    throw std::invalid_argument("decompose_pair: factors must be non-empty");
  if (!is_balanced(concat(v, w)))
    throw NotBalancedError("decompose_pair: vw is not balanced");
  const std::size_t total = v.size() + w.size();
  if (total <= 2) throw TooShortError("decompose_pair: |vw| <= 2");

  if (strategy == Strategy::search) {
    if (auto d = first_search_decomposition(v, w)) return *d;
    throw InternalIncompletenessError(
        "decompose_pair: exhaustive search found no decomposition of (" +
        format_word(v) + ", " + format_word(w) + ")");
  }

  // Both words balanced: pair them whole, one per component.
  if (is_balanced(v)) return whole_word_pair(v, w);
  if (is_short(v) && is_short(w)) return decompose_short(v, w);

  // Cancel a bump, decompose the reduced pair, lift the result back.
  std::vector<std::pair<int, Bump>> candidates;
  {
    int which = 0;
    for (const Word* s : {&v, &w}) {
      for (const Bump& b : bumps(*s)) candidates.push_back({which, b});
      ++which;
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& a, const auto& b) {
                     return std::tuple(a.second.length(), a.first, a.second.start) <
                            std::tuple(b.second.length(), b.first, b.second.start);
                   });

  // Recursion floor: canceling a bump from a length-4 pair leaves a
  // length-2 pair, which admits no decomposition, so the non-short
  // length-4 pairs are resolved by direct enumeration.
  if (total == 4) {
    if (auto d = first_search_decomposition(v, w)) return *d;
    throw InternalIncompletenessError("decompose_pair: length-4 pair (" +
                                      format_word(v) + ", " + format_word(w) +
                                      ") has no decomposition");
  }

  {
    for (const auto& [which, bp] : candidates) {
      const Word& host = which == 0 ? v : w;
      Word reduced = remove_indices(host, {bp.start, bp.end});
      Word r0 = which == 0 ? reduced : v;
      Word r1 = which == 1 ? reduced : w;
      BalDecomposition d_red = decompose_pair(r0, r1, Strategy::guided, stats);
      LiftResult res = lift_decomposition(v, w, which, bp, d_red);
      if (auto* d = std::get_if<BalDecomposition>(&res)) return *d;
      if (stats) ++stats->border_cases;
    }
  }

  if (stats) ++stats->guided_fallbacks;
  if (auto d = first_search_decomposition(v, w)) return *d;
  throw InternalIncompletenessError(
      "decompose_pair: no decomposition of (" + format_word(v) + ", " +
      format_word(w) + ") — this contradicts the completeness theorem");
}

namespace {

struct ChildCandidate {
  Word first, second;
};

std::vector<ChildCandidate> child_candidates(const std::vector<Word>& sources,
                                             const std::vector<Slice>& comp) {
  std::vector<ChildCandidate> out;
  if (comp.size() == 1) {
    Word f0 = slice_word(sources, comp[0]);
    out.push_back({f0, {}});
    out.push_back({{}, f0});
  } else {
    Word f0 = slice_word(sources, comp[0]);
    Word f1 = slice_word(sources, comp[1]);
    out.push_back({f0, f1});
    out.push_back({f1, f0});
    out.push_back({concat(f0, f1), {}});
    out.push_back({{}, concat(f0, f1)});
  }
  return out;
}

}  // namespace

BuildStep build_step(const Word& v, const Word& w,
                     const std::optional<BalDecomposition>& d) {
  // Pairs with an empty side need no decomposition: peel the first letter.
  if (w.empty() || v.empty()) {
    if (v.empty() && w.empty())
      throw std::invalid_argument("build_step: both sides empty");
    if (w.empty())
      return BuildStep{"r_l", {Word{v.front()}, suffix(v, 1)}, {{}, {}}};
    return BuildStep{"r_r", {{}, {}}, {Word{w.front()}, suffix(w, 1)}};
  }
  if (!d) throw std::invalid_argument("build_step: decomposition required");
  std::vector<Word> sources = {v, w};
  if (auto err = validate_decomposition(sources, *d))
    throw std::invalid_argument("build_step: invalid decomposition: " + *err);

  auto c1s = child_candidates(sources, d->components[0]);
  auto c2s = child_candidates(sources, d->components[1]);

  struct Template {
    const char* rule;
    // assembles (lhs0, lhs1) from child pairs
    std::pair<Word, Word> (*make)(const ChildCandidate&, const ChildCandidate&);
  };
  static const Template templates[] = {
      {"r_n",
       [](const ChildCandidate& c1, const ChildCandidate& c2) {
         return std::pair{concat(c1.first, c2.first), concat(c2.second, c1.second)};
       }},
      {"r_s",
       [](const ChildCandidate& c1, const ChildCandidate& c2) {
         return std::pair{concat(c1.first, c2.first), concat(c1.second, c2.second)};
       }},
      {"r_l",
       [](const ChildCandidate& c1, const ChildCandidate& c2) {
         return std::pair{concat(concat(c1.first, c2.first), c1.second), c2.second};
       }},
      {"r_r",
       [](const ChildCandidate& c1, const ChildCandidate& c2) {
         return std::pair{c1.first, concat(concat(c2.first, c1.second), c2.second)};
       }},
  };

  for (const Template& t : templates)
    for (int swap_components : {0, 1})
      for (const ChildCandidate& a : (swap_components ? c2s : c1s))
        for (const ChildCandidate& b : (swap_components ? c1s : c2s)) {
          auto [lhs0, lhs1] = t.make(a, b);
          if (lhs0 == v && lhs1 == w)
            return BuildStep{t.rule, {a.first, a.second}, {b.first, b.second}};
        }
  throw std::invalid_argument("build_step: decomposition matches no rule pattern: " +
                              d->dump());
}

namespace {

DerivationTree parse_pair(const Word& v, const Word& w,
                          const DecompositionProvider& provider) {
  const std::size_t total = v.size() + w.size();
  if (total == 0) return DerivationTree{"r_0", {{}, {}}, {}};
  if (total == 2 && !v.empty() && !w.empty()) {
    if (v.front() != conjugate(w.front()))
      throw std::logic_error("parse_pair: unbalanced base pair");
    const Letter x = v.front();
    const char* label = x.pair == 1 ? (x.conj ? "r_A" : "r_a") : (x.conj ? "r_B" : "r_b");
    return DerivationTree{label, {v, w}, {}};
  }
  BuildStep step;
  if (v.empty() || w.empty())
    step = build_step(v, w, std::nullopt);
  else
    step = build_step(v, w, provider(v, w));
  DerivationTree node{step.rule, {v, w}, {}};
  node.children.push_back(
      parse_pair(step.first_child.first, step.first_child.second, provider));
  node.children.push_back(
      parse_pair(step.second_child.first, step.second_child.second, provider));
  return node;
}

}  // namespace

DerivationTree parse_with(const Word& word, const DecompositionProvider& provider) {
  if (!is_balanced(word, 2)) throw NotBalancedError("parse: word is not in O2");
  DerivationTree root{"r_z", {word}, {}};
  if (word.empty())
    root.children.push_back(parse_pair({}, {}, provider));
  else
    root.children.push_back(parse_pair(Word{word.front()}, suffix(word, 1), provider));
  return root;
}

DerivationTree parse(const Word& word, Strategy strategy, ParseStats* stats) {
  return parse_with(word, [strategy, stats](const Word& v, const Word& w) {
    return decompose_pair(v, w, strategy, stats);
  });
}

}  // namespace o2
