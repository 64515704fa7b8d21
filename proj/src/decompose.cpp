#include "o2/decompose.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "o2/errors.hpp"

namespace o2 {

void BalDecomposition::canonicalize() {
  std::sort(components[0].begin(), components[0].end());
  std::sort(components[1].begin(), components[1].end());
  if (!components[0].empty() && !components[1].empty() &&
      components[1].front() < components[0].front())
    std::swap(components[0], components[1]);
}

std::string BalDecomposition::dump() const {
  auto one = [](const std::vector<Slice>& comp) {
    std::string out = "[";
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (i) out += ",";
      out += "(" + std::to_string(comp[i].src) + "," + std::to_string(comp[i].start) +
             "," + std::to_string(comp[i].end) + ")";
    }
    return out + "]";
  };
  return one(components[0]) + " | " + one(components[1]);
}

Word slice_word(const std::vector<Word>& sources, const Slice& s) {
  const Word& w = sources.at(s.src);
  return Word(w.begin() + static_cast<std::ptrdiff_t>(s.start),
              w.begin() + static_cast<std::ptrdiff_t>(s.end));
}

Word component_word(const std::vector<Word>& sources, const std::vector<Slice>& comp) {
  Word out;
  for (const Slice& s : comp) {
    Word part = slice_word(sources, s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

namespace {

int alphabet_bound(const std::vector<Word>& sources) {
  int n = 2;
  for (const Word& w : sources)
    for (const Letter& x : w) n = std::max(n, x.pair);
  return n;
}

}  // namespace

std::optional<std::string> validate_decomposition(const std::vector<Word>& sources,
                                                  const BalDecomposition& d) {
  std::size_t total = 0;
  for (const Word& w : sources) total += w.size();

  // per-source coverage and disjointness
  std::vector<std::vector<Slice>> by_src(sources.size());
  for (int c = 0; c < 2; ++c) {
    if (d.components[c].empty()) return "component " + std::to_string(c) + " is empty";
    if (d.components[c].size() > sources.size())
      return "component " + std::to_string(c) + " has more factors than source words";
    for (const Slice& s : d.components[c]) {
      if (s.src >= sources.size()) return "slice source index out of range";
      if (s.start >= s.end) return "empty or inverted slice " + d.dump();
      if (s.end > sources[s.src].size()) return "slice exceeds its source word";
      by_src[s.src].push_back(s);
    }
  }
  for (std::size_t i = 0; i < sources.size(); ++i) {
    std::sort(by_src[i].begin(), by_src[i].end());
    std::size_t pos = 0;
    for (const Slice& s : by_src[i]) {
      if (s.start != pos)
        return "slices of source " + std::to_string(i) + " do not tile it";
      pos = s.end;
    }
    if (pos != sources[i].size())
      return "slices of source " + std::to_string(i) + " do not cover it";
  }

  const int n = alphabet_bound(sources);
  for (int c = 0; c < 2; ++c) {
    Word w = component_word(sources, d.components[c]);
    if (w.size() >= total) return "component " + std::to_string(c) + " not strictly shorter";
    if (!is_balanced(w, n)) return "component " + std::to_string(c) + " not balanced";
  }
  return std::nullopt;
}

BalDecomposition decompose_short(const Word& x, const Word& y) {
  if (x.empty() || y.empty())
    throw std::invalid_argument("decompose_short: factors must be non-empty");
  if (!is_short(x) || !is_short(y))
    throw std::invalid_argument("decompose_short: factors must be short");
  const std::size_t total = x.size() + y.size();
  if (total <= 2) throw std::invalid_argument("decompose_short: |xy| <= 2");
  const int n = alphabet_bound({x, y});
  if (!is_balanced(concat(x, y), n))
    throw std::invalid_argument("decompose_short: xy not balanced");

  auto finish = [&](BalDecomposition d) {
    d.canonicalize();
    if (auto err = validate_decomposition({x, y}, d))
      throw std::logic_error("decompose_short produced invalid decomposition: " + *err);
    return d;
  };

  // End-letter cases of the short lemma, in its stated order.
  if (conjugate(x.front()) == y.back()) {
    BalDecomposition d;
    d.components[0] = {Slice{0, 0, 1}, Slice{1, y.size() - 1, y.size()}};
    if (x.size() > 1) d.components[1].push_back(Slice{0, 1, x.size()});
    if (y.size() > 1) d.components[1].push_back(Slice{1, 0, y.size() - 1});
    return finish(d);
  }
  if (x.back() == conjugate(y.front())) {
    BalDecomposition d;
    d.components[0] = {Slice{0, x.size() - 1, x.size()}, Slice{1, 0, 1}};
    if (x.size() > 1) d.components[1].push_back(Slice{0, 0, x.size() - 1});
    if (y.size() > 1) d.components[1].push_back(Slice{1, 1, y.size()});
    return finish(d);
  }

  // Ultra-proper prefix pairs by increasing |p|+|q|, then |p|.
  for (std::size_t len = 2; len < total; ++len) {
    for (std::size_t lp = 1; lp < x.size() && lp < len; ++lp) {
      std::size_t lq = len - lp;
      if (lq < 1 || lq >= y.size()) continue;
      if (is_balanced(concat(prefix(x, lp), prefix(y, lq)), n)) {
        BalDecomposition d;
        d.components[0] = {Slice{0, 0, lp}, Slice{1, 0, lq}};
        d.components[1] = {Slice{0, lp, x.size()}, Slice{1, lq, y.size()}};
        return finish(d);
      }
    }
  }
  throw std::logic_error("decompose_short: no decomposition found");
}

Word cancel_bump(const Word& w, const Bump& bp) {
  std::vector<Bump> all = bumps(w);
  if (std::find(all.begin(), all.end(), bp) == all.end())
    throw std::invalid_argument("cancel_bump: not a bump of the word");
  return remove_indices(w, {bp.start, bp.end});
}

std::optional<std::pair<int, Bump>> find_min_bump(const Word& s0, const Word& s1) {
  std::optional<std::pair<int, Bump>> best;
  int which = 0;
  for (const Word* w : {&s0, &s1}) {
    for (const Bump& b : bumps(*w)) {
      if (!best || b.length() < best->second.length() ||
          (b.length() == best->second.length() && which == best->first &&
           b.start < best->second.start))
        best = {which, b};
    }
    ++which;
  }
  return best;
}

BalDecomposition replace_in_decomposition(const std::vector<Word>& sources,
                                          const BalDecomposition& d,
                                          std::size_t entry, std::size_t i,
                                          int delta, const Word& s) {
  if (delta != 0 && delta != 1)
    throw std::invalid_argument("replace_in_decomposition: delta must be 0 or 1");
  if (entry >= sources.size())
    throw std::invalid_argument("replace_in_decomposition: entry out of range");
  if (i >= sources[entry].size())
    throw std::invalid_argument("replace_in_decomposition: position out of range");
  if (auto err = validate_decomposition(sources, d))
    throw std::invalid_argument("replace_in_decomposition: invalid decomposition: " + *err);

  const Word& src = sources[entry];
  Word replaced = delta == 1 ? Word{src[i]} : Word{};
  const int n = std::max(alphabet_bound(sources), alphabet_bound({s}));
  if (balance(s, n) != balance(replaced, n))
    throw std::invalid_argument(
        "replace_in_decomposition: replacement not balance-equivalent to the "
        "replaced factor");

  // new entry word: prefix through i - delta, then s, then from i + 1
  Word modified = prefix(src, i + 1 - static_cast<std::size_t>(delta));
  modified.insert(modified.end(), s.begin(), s.end());
  Word tail = suffix(src, i + 1);
  modified.insert(modified.end(), tail.begin(), tail.end());

  std::vector<Word> new_sources = sources;
  new_sources[entry] = modified;

  const std::ptrdiff_t shift =
      static_cast<std::ptrdiff_t>(s.size()) - static_cast<std::ptrdiff_t>(delta);
  BalDecomposition out = d;
  for (auto& comp : out.components) {
    for (auto it = comp.begin(); it != comp.end();) {
      Slice& sl = *it;
      if (sl.src != entry) {
        ++it;
        continue;
      }
      if (sl.start <= i && i < sl.end) {
        sl.end = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(sl.end) + shift);
        if (sl.start == sl.end) {
          it = comp.erase(it);
          continue;
        }
      } else if (sl.start > i) {
        sl.start = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(sl.start) + shift);
        sl.end = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(sl.end) + shift);
      }
      ++it;
    }
  }
  out.canonicalize();
  if (auto err = validate_decomposition(new_sources, out))
    throw std::runtime_error("replace_in_decomposition: replacement degenerated: " + *err);
  return out;
}

namespace {

// Reinstates the two canceled letters (full positions r1 < r2 of the
// entry) by assigning each to a component and rebuilding the entry's
// slices as maximal same-component runs. Covers absorption into an
// existing slice as well as fresh single-letter factors; the full
// validator arbitrates every candidate.
std::optional<BalDecomposition> try_reinstate(const std::vector<Word>& full_sources,
                                              const BalDecomposition& d,
                                              std::size_t entry, std::size_t r1,
                                              std::size_t r2) {
  const std::size_t full_len = full_sources[entry].size();
  std::vector<int> comp_of(full_len, -1);
  for (int c = 0; c < 2; ++c)
    for (const Slice& s : d.components[c]) {
      if (s.src != entry) continue;
      for (std::size_t p = s.start; p < s.end; ++p) {
        std::size_t f = p + (p >= r1 ? 1u : 0u);
        f += (f >= r2 ? 1u : 0u);
        comp_of[f] = c;
      }
    }

  static const int kChoices[4][2] = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
  for (const auto& choice : kChoices) {
    comp_of[r1] = choice[0];
    comp_of[r2] = choice[1];
    BalDecomposition lifted;
    for (int c = 0; c < 2; ++c)
      for (const Slice& s : d.components[c])
        if (s.src != entry) lifted.components[c].push_back(s);
    std::size_t f = 0;
    while (f < full_len) {
      std::size_t g = f;
      while (g < full_len && comp_of[g] == comp_of[f]) ++g;
      lifted.components[comp_of[f]].push_back(Slice{entry, f, g});
      f = g;
    }
    lifted.canonicalize();
    if (!validate_decomposition(full_sources, lifted)) return lifted;
  }
  return std::nullopt;
}

// Degenerate lift: the bump's end letters form one balanced component on
// their own, everything else the other. Needed when no reduced
// decomposition separates material for both components.
std::optional<BalDecomposition> bump_as_component(const std::vector<Word>& full_sources,
                                                 std::size_t entry, std::size_t r1,
                                                 std::size_t r2) {
  const std::size_t len = full_sources[entry].size();
  BalDecomposition d;
  if (r2 == r1 + 1)
    d.components[0] = {Slice{entry, r1, r2 + 1}};
  else
    d.components[0] = {Slice{entry, r1, r1 + 1}, Slice{entry, r2, r2 + 1}};
  for (const auto& run : {std::pair{std::size_t{0}, r1}, {r1 + 1, r2}, {r2 + 1, len}})
    if (run.first < run.second) d.components[1].push_back(Slice{entry, run.first, run.second});
  std::size_t other = 1 - entry;
  if (!full_sources[other].empty())
    d.components[1].push_back(Slice{other, 0, full_sources[other].size()});
  d.canonicalize();
  if (!validate_decomposition(full_sources, d)) return d;
  return std::nullopt;
}

struct Boundary {
  std::size_t entry;
  std::size_t pos;   // cut position: left slice ends here, right starts here
  int left_comp;
  int right_comp;
};

std::vector<Boundary> cross_boundaries(const BalDecomposition& d, std::size_t n_sources) {
  std::vector<Boundary> out;
  for (std::size_t e = 0; e < n_sources; ++e) {
    std::vector<std::pair<Slice, int>> slices;
    for (int c = 0; c < 2; ++c)
      for (const Slice& s : d.components[c])
        if (s.src == e) slices.push_back({s, c});
    std::sort(slices.begin(), slices.end(),
              [](const auto& a, const auto& b) { return a.first.start < b.first.start; });
    for (std::size_t k = 0; k + 1 < slices.size(); ++k)
      if (slices[k].second != slices[k + 1].second)
        out.push_back({e, slices[k].first.end, slices[k].second, slices[k + 1].second});
  }
  return out;
}

// Balance change of component 0 caused by one boundary shift.
std::map<int, int> shift_delta(const std::vector<Word>& sources, const Boundary& b,
                               bool rightwards) {
  Letter moved = rightwards ? sources[b.entry][b.pos] : sources[b.entry][b.pos - 1];
  int gains = rightwards ? b.left_comp : b.right_comp;  // component gaining the letter
  std::map<int, int> delta;
  int unit = moved.conj ? -1 : 1;
  delta[moved.pair] = (gains == 0 ? unit : -unit);
  return delta;
}

// Applies one boundary shift in place; returns false if the boundary no
// longer exists in the expected shape.
bool apply_shift(BalDecomposition& d, const Boundary& b, bool rightwards) {
  Slice* left = nullptr;
  Slice* right = nullptr;
  int left_comp = -1, right_comp = -1;
  std::size_t left_idx = 0, right_idx = 0;
  for (int c = 0; c < 2; ++c)
    for (std::size_t k = 0; k < d.components[c].size(); ++k) {
      Slice& s = d.components[c][k];
      if (s.src != b.entry) continue;
      if (s.end == b.pos) { left = &s; left_comp = c; left_idx = k; }
      if (s.start == b.pos) { right = &s; right_comp = c; right_idx = k; }
    }
  if (!left || !right || left_comp != b.left_comp || right_comp != b.right_comp)
    return false;
  if (rightwards) {
    left->end = b.pos + 1;
    right->start = b.pos + 1;
    if (right->start == right->end)
      d.components[right_comp].erase(d.components[right_comp].begin() +
                                     static_cast<std::ptrdiff_t>(right_idx));
  } else {
    if (b.pos == 0) return false;
    left->end = b.pos - 1;
    right->start = b.pos - 1;
    if (left->start == left->end)
      d.components[left_comp].erase(d.components[left_comp].begin() +
                                    static_cast<std::ptrdiff_t>(left_idx));
  }
  return !d.components[0].empty() && !d.components[1].empty();
}

BorderCase make_border_case(const Word& s0, const Word& s1, int which, const Bump& bp) {
  const Word& wb = which == 0 ? s0 : s1;
  const Word& other = which == 0 ? s1 : s0;
  BorderCase bc;
  bc.bump_is_left_factor = bp.start == 0;
  bc.bump_is_right_factor = !wb.empty() && bp.end == wb.size() - 1;
  if (bp.length() > 2) {
    Letter beta = wb[bp.start + 1];
    Letter alpha = bp.direction;
    std::size_t k = bp.length() - 1;  // the lemma's 1 + k = bump span
    const Word candidates[3] = {reverse(wb), other, reverse(other)};
    for (int src = 0; src < 3; ++src) {
      const Word& c = candidates[src];
      std::size_t run = 0;
      while (run < c.size() && c[run] == conjugate(beta)) ++run;
      if (run >= 1 && run < k && run < c.size() && c[run] == alpha)
        bc.patterns.push_back({src, run});
    }
  }
  return bc;
}

}  // namespace

LiftResult lift_decomposition(const Word& s0, const Word& s1, int which,
                              const Bump& bp, const BalDecomposition& d_reduced,
                              const SlideObserver& on_step) {
  if (which != 0 && which != 1)
    throw std::invalid_argument("lift_decomposition: which must be 0 or 1");
  const Word& wb = which == 0 ? s0 : s1;
  std::vector<Bump> all = bumps(wb);
  if (std::find(all.begin(), all.end(), bp) == all.end())
    throw std::invalid_argument("lift_decomposition: not a bump of the designated word");
  if (!is_balanced(concat(s0, s1)))
    throw std::invalid_argument("lift_decomposition: pair not balanced");

  std::vector<Word> full_sources = {s0, s1};
  std::vector<Word> reduced_sources = full_sources;
  reduced_sources[static_cast<std::size_t>(which)] =
      remove_indices(wb, {bp.start, bp.end});
  if (auto err = validate_decomposition(reduced_sources, d_reduced))
    throw std::invalid_argument("lift_decomposition: invalid reduced decomposition: " +
                                *err);

  const std::size_t entry = static_cast<std::size_t>(which);
  const std::size_t g1 = bp.start;
  const std::size_t g2 = bp.end;

  BalDecomposition start = d_reduced;
  start.canonicalize();
  if (auto lifted = try_reinstate(full_sources, start, entry, g1, g2)) return *lifted;
  if (auto lifted = bump_as_component(full_sources, entry, g1, g2)) return *lifted;

  // Sliding: balance-preserving paired boundary moves over the reduced
  // decomposition until the canceled letters can be reinstated into one
  // component. One letter crosses a boundary per shift; total shifts are
  // capped at the input length.
  const std::size_t move_cap = s0.size() + s1.size();
  std::deque<std::pair<BalDecomposition, std::size_t>> queue;
  std::set<std::string> visited;
  queue.push_back({start, 0});
  visited.insert(start.dump());
  std::size_t explored = 0;
  const std::size_t state_cap = 200000;

  while (!queue.empty() && explored < state_cap) {
    auto [state, depth] = queue.front();
    queue.pop_front();
    ++explored;
    if (depth * 2 >= move_cap) continue;

    std::vector<Boundary> bounds = cross_boundaries(state, reduced_sources.size());
    for (std::size_t i = 0; i < bounds.size(); ++i)
      for (std::size_t j = 0; j < bounds.size(); ++j) {
        if (i == j) continue;
        for (bool dir1 : {true, false})
          for (bool dir2 : {true, false}) {
            std::map<int, int> delta = shift_delta(reduced_sources, bounds[i], dir1);
            for (auto& [pair, d2] : shift_delta(reduced_sources, bounds[j], dir2))
              delta[pair] += d2;
            bool zero = true;
            for (auto& [pair, dv] : delta)
              if (dv != 0) zero = false;
            if (!zero) continue;

            BalDecomposition next = state;
            if (!apply_shift(next, bounds[i], dir1)) continue;
            if (!apply_shift(next, bounds[j], dir2)) continue;
            next.canonicalize();
            if (validate_decomposition(reduced_sources, next)) continue;
            if (!visited.insert(next.dump()).second) continue;
            if (on_step) on_step(reduced_sources, next);
            if (auto lifted = try_reinstate(full_sources, next, entry, g1, g2))
              return *lifted;
            queue.push_back({next, depth + 1});
          }
      }
  }

  return make_border_case(s0, s1, which, bp);
}

}  // namespace o2
