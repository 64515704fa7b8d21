#include "doctest.h"
#include "o2/decompose.hpp"
#include "o2/oracle.hpp"

#include <stdexcept>

using namespace o2;

namespace {

Word W(const char* s) { return parse_word(s); }

}  // namespace

TEST_CASE("canonicalize orders slices and components") {
  BalDecomposition d;
  d.components[0] = {Slice{1, 0, 1}, Slice{0, 1, 2}};
  d.components[1] = {Slice{0, 0, 1}, Slice{1, 1, 2}};
  d.canonicalize();
  CHECK(d.components[0].front() == Slice{0, 0, 1});
  CHECK(d.components[1].front() == Slice{0, 1, 2});
  CHECK(d.dump() == "[(0,0,1),(1,1,2)] | [(0,1,2),(1,0,1)]");
}

TEST_CASE("slice_word and component_word") {
  std::vector<Word> src = {W("abBA"), W("bB")};
  CHECK(format_word(slice_word(src, Slice{0, 1, 3})) == "bB");
  CHECK(format_word(component_word(src, {Slice{0, 0, 1}, Slice{1, 0, 2}})) == "abB");
  CHECK(component_word(src, {}).empty());
}

TEST_CASE("validate_decomposition accepts the canonical example") {
  std::vector<Word> src = {W("ab"), W("BA")};
  BalDecomposition d;
  d.components[0] = {Slice{0, 0, 1}, Slice{1, 1, 2}};  // "a" "A"
  d.components[1] = {Slice{0, 1, 2}, Slice{1, 0, 1}};  // "b" "B"
  CHECK(!validate_decomposition(src, d).has_value());
}

TEST_CASE("validate_decomposition rejects each defect") {
  std::vector<Word> src = {W("ab"), W("BA")};
  BalDecomposition good;
  good.components[0] = {Slice{0, 0, 1}, Slice{1, 1, 2}};
  good.components[1] = {Slice{0, 1, 2}, Slice{1, 0, 1}};

  SUBCASE("empty component") {
    BalDecomposition d = good;
    d.components[1].clear();
    CHECK(validate_decomposition(src, d).has_value());
  }
  SUBCASE("too many factors in one component") {
    BalDecomposition d;
    d.components[0] = {Slice{0, 0, 1}, Slice{0, 1, 2}, Slice{1, 0, 2}};
    d.components[1] = {Slice{1, 0, 0}};
    CHECK(validate_decomposition(src, d).has_value());
  }
  SUBCASE("slices do not tile the source") {
    BalDecomposition d = good;
    d.components[0][0] = Slice{0, 0, 2};  // overlaps the "b" slice
    CHECK(validate_decomposition(src, d).has_value());
  }
  SUBCASE("gap in coverage") {
    BalDecomposition d = good;
    d.components[1][1] = Slice{1, 0, 0};
    CHECK(validate_decomposition(src, d).has_value());
  }
  SUBCASE("unbalanced component") {
    BalDecomposition d;
    d.components[0] = {Slice{0, 0, 1}, Slice{1, 0, 1}};  // "a" "B"
    d.components[1] = {Slice{0, 1, 2}, Slice{1, 1, 2}};  // "b" "A"
    CHECK(validate_decomposition(src, d).has_value());
  }
  SUBCASE("component equals the whole input") {
    std::vector<Word> one = {W("aA")};
    BalDecomposition d;
    d.components[0] = {Slice{0, 0, 2}};
    d.components[1] = {Slice{0, 0, 0}};
    CHECK(validate_decomposition(one, d).has_value());
  }
}

TEST_CASE("decompose_short worked examples") {
  {
    BalDecomposition d = decompose_short(W("ab"), W("BA"));
    std::vector<Word> src = {W("ab"), W("BA")};
    CHECK(format_word(component_word(src, d.components[0])) == "aA");
    CHECK(format_word(component_word(src, d.components[1])) == "bB");
  }
  {
    BalDecomposition d = decompose_short(W("aab"), W("BAA"));
    std::vector<Word> src = {W("aab"), W("BAA")};
    CHECK(format_word(component_word(src, d.components[0])) == "aA");
    CHECK(format_word(component_word(src, d.components[1])) == "abBA");
  }
}

TEST_CASE("decompose_short preconditions") {
  CHECK_THROWS_AS(decompose_short(W(""), W("aA")), std::invalid_argument);
  CHECK_THROWS_AS(decompose_short(W("aA"), W("b")), std::invalid_argument);  // x not short
  CHECK_THROWS_AS(decompose_short(W("a"), W("A")), std::invalid_argument);   // |xy| <= 2
  CHECK_THROWS_AS(decompose_short(W("ab"), W("ab")), std::invalid_argument); // not balanced
}

TEST_CASE("decompose_short: every short factorisation up to length 8") {
  for (const Word& w : enumerate_balanced(8)) {
    if (w.size() <= 2) continue;
    for (std::size_t cut = 1; cut < w.size(); ++cut) {
      Word x = prefix(w, cut), y = suffix(w, cut);
      if (!is_short(x) || !is_short(y)) continue;
      BalDecomposition d = decompose_short(x, y);
      CHECK(!validate_decomposition({x, y}, d).has_value());
      if (x.size() == 1) {
        // lemma: a one-letter x always matches an end-letter case
        bool end_case = conjugate(x.front()) == y.back() || x.back() == conjugate(y.front());
        CHECK(end_case);
      }
    }
  }
}

TEST_CASE("cancel_bump") {
  Word w = W("abBA");
  Bump bp{1, 2, kB};
  CHECK(format_word(cancel_bump(w, bp)) == "aA");
  CHECK_THROWS_AS(cancel_bump(w, Bump{0, 3, kA}), std::invalid_argument);
}

TEST_CASE("find_min_bump picks globally minimal, word 0 first") {
  CHECK(!find_min_bump(W("aabb"), W("BBAA")).has_value());
  auto r = find_min_bump(W("abbA"), W("bB"));
  REQUIRE(r.has_value());
  CHECK(r->first == 1);  // the length-2 bump in word 1 beats the length-4 one
  CHECK(r->second == Bump{0, 1, kB});
  auto tie = find_min_bump(W("aAbB"), W("aA"));
  REQUIRE(tie.has_value());
  CHECK(tie->first == 0);
  CHECK(tie->second == Bump{0, 1, kA});
}

TEST_CASE("replace_in_decomposition insertion example") {
  std::vector<Word> src = {W("ab"), W("BA")};
  BalDecomposition d;
  d.components[0] = {Slice{0, 0, 1}, Slice{1, 1, 2}};
  d.components[1] = {Slice{0, 1, 2}, Slice{1, 0, 1}};
  BalDecomposition out = replace_in_decomposition(src, d, 0, 0, 0, W("aA"));
  std::vector<Word> new_src = {W("aaAb"), W("BA")};
  CHECK(!validate_decomposition(new_src, out).has_value());
  CHECK(format_word(component_word(new_src, out.components[0])) == "aaAA");
  CHECK(format_word(component_word(new_src, out.components[1])) == "bB");
}

TEST_CASE("replace_in_decomposition letter replacement") {
  std::vector<Word> src = {W("ab"), W("BA")};
  BalDecomposition d;
  d.components[0] = {Slice{0, 0, 1}, Slice{1, 1, 2}};
  d.components[1] = {Slice{0, 1, 2}, Slice{1, 0, 1}};
  // replace the 'b' at (0, 1) with "abA" (same balance)
  BalDecomposition out = replace_in_decomposition(src, d, 0, 1, 1, W("abA"));
  std::vector<Word> new_src = {W("aabA"), W("BA")};
  CHECK(!validate_decomposition(new_src, out).has_value());
  CHECK(format_word(component_word(new_src, out.components[1])) == "abAB");
}

TEST_CASE("replace_in_decomposition preconditions") {
  std::vector<Word> src = {W("ab"), W("BA")};
  BalDecomposition d;
  d.components[0] = {Slice{0, 0, 1}, Slice{1, 1, 2}};
  d.components[1] = {Slice{0, 1, 2}, Slice{1, 0, 1}};
  CHECK_THROWS_AS(replace_in_decomposition(src, d, 0, 0, 2, W("aA")),
                  std::invalid_argument);
  CHECK_THROWS_AS(replace_in_decomposition(src, d, 5, 0, 0, W("aA")),
                  std::invalid_argument);
  CHECK_THROWS_AS(replace_in_decomposition(src, d, 0, 0, 0, W("a")),
                  std::invalid_argument);  // not balance-equivalent
  BalDecomposition bad = d;
  bad.components[1].clear();
  CHECK_THROWS_AS(replace_in_decomposition(src, bad, 0, 0, 0, W("aA")),
                  std::invalid_argument);
}

TEST_CASE("lift_decomposition direct reinstatement") {
  Word s0 = W("abBA"), s1 = W("aA");
  Bump bp{1, 2, kB};
  BalDecomposition reduced;  // over ("aA", "aA")
  reduced.components[0] = {Slice{0, 0, 2}};
  reduced.components[1] = {Slice{1, 0, 2}};
  LiftResult r = lift_decomposition(s0, s1, 0, bp, reduced);
  REQUIRE(std::holds_alternative<BalDecomposition>(r));
  const auto& d = std::get<BalDecomposition>(r);
  CHECK(!validate_decomposition({s0, s1}, d).has_value());
  CHECK(format_word(component_word({s0, s1}, d.components[0])) == "abBA");
}

TEST_CASE("lift_decomposition precondition checks") {
  Word s0 = W("abBA"), s1 = W("aA");
  BalDecomposition reduced;
  reduced.components[0] = {Slice{0, 0, 2}};
  reduced.components[1] = {Slice{1, 0, 2}};
  CHECK_THROWS_AS(lift_decomposition(s0, s1, 2, Bump{1, 2, kB}, reduced),
                  std::invalid_argument);
  CHECK_THROWS_AS(lift_decomposition(s0, s1, 0, Bump{0, 1, kA}, reduced),
                  std::invalid_argument);  // not a bump of s0
  BalDecomposition bad = reduced;
  bad.components[1].clear();
  CHECK_THROWS_AS(lift_decomposition(s0, s1, 0, Bump{1, 2, kB}, bad),
                  std::invalid_argument);
}

TEST_CASE("lift over all small reduced decompositions") {
  // Every min-bump cancellation over O2 pairs up to total length 8 must
  // either lift (to a valid decomposition) or report a border case; every
  // observed sliding state must itself be valid.
  std::size_t lifted = 0, borders = 0;
  for (const Word& w : enumerate_balanced(8)) {
    if (w.size() <= 2) continue;
    for (std::size_t cut = 1; cut < w.size(); ++cut) {
      Word v = prefix(w, cut), u = suffix(w, cut);
      auto mb = find_min_bump(v, u);
      if (!mb) continue;
      const auto& [which, bp] = *mb;
      Word reduced_word = cancel_bump(which == 0 ? v : u, bp);
      Word r0 = which == 0 ? reduced_word : v;
      Word r1 = which == 0 ? u : reduced_word;
      if (r0.size() + r1.size() <= 2 || r0.empty() || r1.empty()) continue;
      auto d = first_search_decomposition(r0, r1);
      if (!d) continue;
      std::size_t bad_steps = 0;
      LiftResult r = lift_decomposition(
          v, u, which, bp, *d, [&](const std::vector<Word>& srcs, const BalDecomposition& s) {
            if (validate_decomposition(srcs, s)) ++bad_steps;
          });
      CHECK(bad_steps == 0);
      if (auto* out = std::get_if<BalDecomposition>(&r)) {
        CHECK(!validate_decomposition({v, u}, *out).has_value());
        ++lifted;
      } else {
        // a length-2 bump always reinstates directly
        CHECK(bp.length() > 2);
        ++borders;
      }
    }
  }
  CHECK(lifted > 0);
  MESSAGE("lifted=", lifted, " borders=", borders);
}
