#include "o2/words.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>

namespace o2 {

Letter conjugate(Letter x) { return Letter{x.pair, !x.conj}; }

Balance balance(const Word& w, int n) {
  if (n < 1) throw std::invalid_argument("balance: n must be >= 1");
  Balance deltas(static_cast<std::size_t>(n), 0);
  for (const Letter& x : w) {
    if (x.pair < 1 || x.pair > n)
      throw std::invalid_argument("balance: letter pair index " +
                                  std::to_string(x.pair) +
                                  " outside alphabet bound n=" +
                                  std::to_string(n));
    deltas[static_cast<std::size_t>(x.pair - 1)] += x.conj ? -1 : 1;
  }
  return deltas;
}

bool is_balanced(const Word& w, int n) {
  int max_pair = n;
  for (const Letter& x : w) max_pair = std::max(max_pair, x.pair);
  Balance b = balance(w, max_pair);
  return std::all_of(b.begin(), b.end(), [](std::int64_t d) { return d == 0; });
}

namespace {

int max_pair(const Word& w) {
  int n = 0;
  for (const Letter& x : w) n = std::max(n, x.pair);
  return n;
}

// last[2 * pair + polarity], addressed through a stack buffer when the
// alphabet is small
struct LastSeen {
  static constexpr int kSmall = 16;
  std::ptrdiff_t small[2 * (kSmall + 1)];
  std::vector<std::ptrdiff_t> big;
  std::ptrdiff_t* data;

  explicit LastSeen(int n) {
    if (n <= kSmall) {
      data = small;
      std::fill(small, small + 2 * (n + 1), -1);
    } else {
      big.assign(2 * static_cast<std::size_t>(n + 1), -1);
      data = big.data();
    }
  }
  std::ptrdiff_t& at(int pair, bool conj) {
    return data[2 * pair + (conj ? 1 : 0)];
  }
};

}  // namespace

bool is_short(const Word& w) {
  LastSeen seen(max_pair(w));
  for (const Letter& x : w) {
    if (seen.at(x.pair, !x.conj) >= 0) return false;
    seen.at(x.pair, x.conj) = 0;
  }
  return true;
}

std::vector<Bump> bumps(const Word& w) {
  // [i,j] is a bump iff w[i] = conj(w[j]), i is the last occurrence of
  // pair(w[j]) before j, and the open interior is short. The interior
  // shortness test uses a running maximum of conflict positions:
  // conflict(v) = last u < v with w[u] = conj(w[v]); the interior
  // (i, j) contains a conjugate pair iff that maximum over v < j
  // exceeds i.
  std::vector<Bump> out;
  LastSeen last(max_pair(w));
  std::ptrdiff_t running_conflict = -1;  // max conflict(v) over v so far
  for (std::size_t j = 0; j < w.size(); ++j) {
    const Letter x = w[j];
    const std::ptrdiff_t same = last.at(x.pair, x.conj);
    const std::ptrdiff_t opposite = last.at(x.pair, !x.conj);
    // candidate opening: latest same-pair position, which must hold the
    // conjugate letter, with a short interior
    if (opposite >= 0 && opposite > same && running_conflict <= opposite)
      out.push_back(Bump{static_cast<std::size_t>(opposite), j, conjugate(x)});
    if (opposite >= 0) running_conflict = std::max(running_conflict, opposite);
    last.at(x.pair, x.conj) = static_cast<std::ptrdiff_t>(j);
  }
  return out;
}

Word factor(const Word& w, std::size_t i, std::size_t j) {
  if (w.empty() || i >= w.size() || j < i) return {};
  std::size_t end = std::min(j, w.size() - 1);
  return Word(w.begin() + static_cast<std::ptrdiff_t>(i),
              w.begin() + static_cast<std::ptrdiff_t>(end + 1));
}

Word prefix(const Word& w, std::size_t count) {
  count = std::min(count, w.size());
  return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(count));
}

Word suffix(const Word& w, std::size_t i) {
  i = std::min(i, w.size());
  return Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
}

Word remove_indices(const Word& w, const std::vector<std::size_t>& indices) {
  std::vector<bool> drop(w.size(), false);
  for (std::size_t i : indices)
    if (i < w.size()) drop[i] = true;
  Word out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!drop[i]) out.push_back(w[i]);
  return out;
}

Word reverse(const Word& w) { return Word(w.rbegin(), w.rend()); }

bool is_prefix(const Word& p, const Word& q) {
  return p.size() <= q.size() && std::equal(p.begin(), p.end(), q.begin());
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word parse_word(const std::string& text) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    bool conj_bit;
    if (c == 'a' || c == 'A')
      conj_bit = (c == 'A');
    else if (c == 'b' || c == 'B') {
      if (i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))
        throw std::invalid_argument("parse_word: numbered tokens use a<i>/A<i>");
      out.push_back(Letter{2, c == 'B'});
      ++i;
      continue;
    } else {
      throw std::invalid_argument(std::string("parse_word: bad character '") +
                                  c + "'");
    }
    ++i;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      int pair = std::stoi(text.substr(start, i - start));
      if (pair < 1)
        throw std::invalid_argument("parse_word: pair index must be >= 1");
      out.push_back(Letter{pair, conj_bit});
    } else {
      out.push_back(Letter{1, conj_bit});
    }
  }
  return out;
}

std::string format_letter(Letter x) {
  switch (x.pair) {
    case 1:
      return x.conj ? "A" : "a";
    case 2:
      return x.conj ? "B" : "b";
    default:
      return (x.conj ? "A" : "a") + std::to_string(x.pair);
  }
}

std::string format_word(const Word& w) {
  std::string out;
  for (const Letter& x : w) out += format_letter(x);
  return out;
}

}  // namespace o2
