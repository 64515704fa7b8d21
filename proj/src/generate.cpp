#include "o2/generate.hpp"

#include <cmath>
#include <stdexcept>

#include "o2/grammar.hpp"
#include "o2/parser.hpp"
#include "o2/serialize.hpp"

namespace o2 {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t bounded(std::mt19937_64& rng, std::size_t n) {
  // rejection sampling, no modulo bias
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % n);
}

}  // namespace

Word sample_balanced_word(std::size_t length, std::mt19937_64& rng) {
  if (length % 2 != 0)
    throw std::invalid_argument("sample_balanced_word: no balanced word has odd length");
  const std::size_t m = length / 2;
  if (m == 0) return {};

  // P(k) proportional to (2m)! / (k!^2 (m-k)!^2), computed in log space
  std::vector<double> logw(m + 1);
  double max_logw = -1e300;
  for (std::size_t k = 0; k <= m; ++k) {
    logw[k] = -2.0 * std::lgamma(static_cast<double>(k) + 1.0) -
              2.0 * std::lgamma(static_cast<double>(m - k) + 1.0);
    max_logw = std::max(max_logw, logw[k]);
  }
  double sum = 0.0;
  std::vector<double> weight(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    weight[k] = std::exp(logw[k] - max_logw);
    sum += weight[k];
  }
  double u = uniform01(rng) * sum;
  std::size_t k = m;
  for (std::size_t i = 0; i <= m; ++i) {
    u -= weight[i];
    if (u <= 0.0) {
      k = i;
      break;
    }
  }

  Word out;
  out.reserve(length);
  out.insert(out.end(), k, kA);
  out.insert(out.end(), k, kAbar);
  out.insert(out.end(), m - k, kB);
  out.insert(out.end(), m - k, kBbar);
  for (std::size_t i = out.size(); i > 1; --i)
    std::swap(out[i - 1], out[bounded(rng, i)]);
  return out;
}

std::vector<Word> generate_words(std::size_t length, std::size_t count,
                                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Word> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_balanced_word(length, rng));
  return out;
}

FuzzReport fuzz_run(std::size_t max_len, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FuzzReport report;
  auto record = [&](const Word& w, const std::string& what) {
    report.ok = false;
    if (report.failing_word.empty() ||
        format_word(w).size() < report.failing_word.size()) {
      report.failing_word = format_word(w);
      report.detail = what;
    }
  };

  for (std::size_t i = 0; i < count; ++i) {
    std::size_t length = 2 * bounded(rng, max_len / 2 + 1);
    Word w = sample_balanced_word(length, rng);
    ++report.words_checked;
    for (Strategy s : {Strategy::guided, Strategy::search}) {
      const char* name = s == Strategy::guided ? "guided" : "search";
      DerivationTree t;
      try {
        t = parse(w, s);
      } catch (const std::exception& e) {
        record(w, std::string(name) + " parse threw: " + e.what());
        continue;
      }
      if (auto rej = check_derivation(g2(), t)) {
        record(w, std::string(name) + " tree rejected at " + rej->path + ": " +
                      rej->reason);
        continue;
      }
      if (yield_of(t) != std::vector<Word>{w}) {
        record(w, std::string(name) + " yield differs from input");
        continue;
      }
      if (tree_from_json(tree_to_json(t)) != t)
        record(w, std::string(name) + " JSON round-trip not lossless");
      if (tree_from_sexp(tree_to_sexp(t)) != t)
        record(w, std::string(name) + " s-expression round-trip not lossless");
    }
  }
  return report;
}

}  // namespace o2
