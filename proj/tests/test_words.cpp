#include "doctest.h"
#include "o2/words.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

using namespace o2;

namespace {

// Words over Sigma_2 of a given length, via base-4 counting.
void for_each_word(std::size_t len, const std::function<void(const Word&)>& f) {
  static const Letter sigma[4] = {kA, kAbar, kB, kBbar};
  Word w(len);
  std::vector<int> digits(len, 0);
  for (;;) {
    for (std::size_t i = 0; i < len; ++i) w[i] = sigma[digits[i]];
    f(w);
    std::size_t i = 0;
    while (i < len && digits[i] == 3) digits[i++] = 0;
    if (i == len) return;
    ++digits[i];
  }
}

// Definition-level shortness: no pair contributes both polarities.
bool short_by_definition(const Word& w) {
  bool plain[3] = {}, conj[3] = {};
  for (const Letter& x : w) (x.conj ? conj : plain)[x.pair] = true;
  return !(plain[1] && conj[1]) && !(plain[2] && conj[2]);
}

}  // namespace

TEST_CASE("conjugate is an involution and flips polarity only") {
  for (Letter x : {kA, kAbar, kB, kBbar, Letter{7, false}}) {
    CHECK(conjugate(x).pair == x.pair);
    CHECK(conjugate(x).conj != x.conj);
    CHECK(conjugate(conjugate(x)) == x);
  }
}

TEST_CASE("parse/format round-trip and surface syntax") {
  CHECK(parse_word("aAbB") == Word{kA, kAbar, kB, kBbar});
  CHECK(format_word(parse_word("abBA")) == "abBA");
  CHECK(parse_word("") == Word{});
  CHECK(parse_word("a3A12") == Word{Letter{3, false}, Letter{12, true}});
  CHECK(format_word(Word{Letter{3, false}, Letter{12, true}}) == "a3A12");
  CHECK_THROWS_AS(parse_word("ac"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("b3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("a0"), std::invalid_argument);
}

TEST_CASE("balance examples") {
  CHECK(balance(parse_word("abB"), 2) == Balance{1, 0});
  CHECK(balance(parse_word("aabBA"), 2) == Balance{1, 0});
  CHECK(balance(Word{}, 2) == Balance{0, 0});
  CHECK(balance(parse_word("a3"), 3) == Balance{0, 0, 1});
  CHECK_THROWS_AS(balance(parse_word("a3"), 2), std::invalid_argument);
}

TEST_CASE("balance is additive under concatenation") {
  const Word u = parse_word("abBa");
  const Word v = parse_word("AABb");
  Balance sum = balance(u, 2);
  Balance bv = balance(v, 2);
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += bv[i];
  CHECK(balance(concat(u, v), 2) == sum);
}

TEST_CASE("is_balanced membership") {
  CHECK(is_balanced(Word{}));
  CHECK(is_balanced(parse_word("aA")));
  CHECK(is_balanced(parse_word("abBA")));
  CHECK(!is_balanced(parse_word("ab")));
  CHECK(!is_balanced(parse_word("aab")));
  // letters beyond n=2 widen the alphabet instead of throwing
  CHECK(!is_balanced(parse_word("a3")));
  CHECK(is_balanced(parse_word("a3A3")));
}

TEST_CASE("is_short basics") {
  CHECK(is_short(Word{}));
  CHECK(is_short(parse_word("aabb")));
  CHECK(is_short(parse_word("aB")));
  CHECK(!is_short(parse_word("aA")));
  CHECK(!is_short(parse_word("abBa")));
}

TEST_CASE("bump examples") {
  CHECK(bumps(parse_word("abbA")) == std::vector<Bump>{{0, 3, kA}});
  CHECK(bumps(parse_word("aAbB")) == std::vector<Bump>{{0, 1, kA}, {2, 3, kB}});
  CHECK(bumps(parse_word("abBA")) == std::vector<Bump>{{1, 2, kB}});
  CHECK(bumps(parse_word("aabb")).empty());
  CHECK(bumps(Word{}).empty());
}

TEST_CASE("exhaustive: bumps are exactly the minimal non-short factors") {
  for (std::size_t len = 0; len <= 9; ++len) {
    for_each_word(len, [&](const Word& w) {
      REQUIRE(is_short(w) == short_by_definition(w));
      auto found = bumps(w);
      REQUIRE(is_short(w) == found.empty());
      std::size_t k = 0;
      for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = i + 1; j < len; ++j) {
          Word f = factor(w, i, j);
          // minimal: non-short, and every proper factor short
          bool minimal = !short_by_definition(f) &&
                         short_by_definition(factor(w, i + 1, j)) &&
                         short_by_definition(factor(w, i, j - 1));
          if (!minimal) continue;
          REQUIRE(k < found.size());
          REQUIRE(found[k] == Bump{i, j, w[i]});
          ++k;
        }
      }
      REQUIRE(k == found.size());
    });
  }
}

TEST_CASE("bumps have the shape alpha beta^m conj(alpha)") {
  for (std::size_t len = 2; len <= 9; ++len) {
    for_each_word(len, [&](const Word& w) {
      for (const Bump& bp : bumps(w)) {
        Word f = factor(w, bp.start, bp.end);
        REQUIRE(f.front() == conjugate(f.back()));
        REQUIRE(bp.direction == f.front());
        for (std::size_t i = 1; i + 1 < f.size(); ++i) REQUIRE(f[i] == f[1]);
        if (f.size() > 2) REQUIRE(f[1].pair != f[0].pair);
      }
    });
  }
}

TEST_CASE("factor clamps inclusively") {
  const Word w = parse_word("abBbA");
  CHECK(format_word(factor(w, 1, 3)) == "bBb");
  CHECK(format_word(factor(w, 3, 99)) == "bA");
  CHECK(factor(w, 3, 2).empty());
  CHECK(factor(w, 9, 12).empty());
  CHECK(factor(Word{}, 0, 5).empty());
}

TEST_CASE("prefix, suffix, remove_indices, reverse") {
  const Word w = parse_word("abBbA");
  CHECK(format_word(prefix(w, 2)) == "ab");
  CHECK(format_word(prefix(w, 99)) == "abBbA");
  CHECK(format_word(suffix(w, 3)) == "bA");
  CHECK(suffix(w, 99).empty());
  CHECK(format_word(remove_indices(w, {2, 4})) == "abb");
  CHECK(format_word(remove_indices(w, {4, 2})) == "abb");
  CHECK(format_word(remove_indices(w, {99})) == "abBbA");
  CHECK(format_word(reverse(w)) == "AbBba");
  CHECK(is_prefix(parse_word("ab"), w));
  CHECK(!is_prefix(parse_word("aB"), w));
  CHECK(is_prefix(Word{}, w));
}
