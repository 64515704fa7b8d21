#include "o2/oracle.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>

#include "o2/errors.hpp"
#include "o2/parser.hpp"

namespace o2 {

namespace {

// a < A < b < B
const std::array<Letter, 4> kSigma2 = {kA, kAbar, kB, kBbar};

void enumerate_rec(Word& current, std::size_t target_len, std::int64_t da,
                   std::int64_t db, std::vector<Word>& out) {
  if (current.size() == target_len) {
    if (da == 0 && db == 0) out.push_back(current);
    return;
  }
  const std::int64_t remaining =
      static_cast<std::int64_t>(target_len - current.size());
  if (std::abs(da) + std::abs(db) > remaining) return;  // cannot return to zero
  for (const Letter& x : kSigma2) {
    current.push_back(x);
    std::int64_t unit = x.conj ? -1 : 1;
    enumerate_rec(current, target_len, da + (x.pair == 1 ? unit : 0),
                  db + (x.pair == 2 ? unit : 0), out);
    current.pop_back();
  }
}

void require_sigma2(const Word& w, const char* who) {
  for (const Letter& x : w)
    if (x.pair > 2)
      throw std::invalid_argument(std::string(who) + ": word not over Sigma_2");
}

struct PairBalance {
  std::int64_t da = 0, db = 0;
  PairBalance operator+(const PairBalance& o) const { return {da + o.da, db + o.db}; }
  bool zero() const { return da == 0 && db == 0; }
};

std::vector<PairBalance> prefix_balances(const Word& w) {
  std::vector<PairBalance> pb(w.size() + 1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    pb[i + 1] = pb[i];
    std::int64_t unit = w[i].conj ? -1 : 1;
    (w[i].pair == 1 ? pb[i + 1].da : pb[i + 1].db) += unit;
  }
  return pb;
}

// Enumerates canonical rule-shaped decompositions of (v, w) in a fixed
// deterministic order: ascending part counts, then cut positions, then
// component assignment mask. The visitor returns false to stop.
template <typename Visitor>
void enumerate_decompositions(const Word& v, const Word& w, Visitor&& visit) {
  require_sigma2(v, "search_decompositions");
  require_sigma2(w, "search_decompositions");
  if (v.empty() || w.empty())
    throw std::invalid_argument("search_decompositions: words must be non-empty");

  const auto pb0 = prefix_balances(v);
  const auto pb1 = prefix_balances(w);
  auto span_balance = [](const std::vector<PairBalance>& pb, std::size_t a,
                         std::size_t b) {
    return PairBalance{pb[b].da - pb[a].da, pb[b].db - pb[a].db};
  };

  // cut position sets per word, by part count
  auto cuttings_for = [](std::size_t len, int parts) {
    std::vector<std::vector<std::size_t>> out;
    if (parts == 1) {
      out.push_back({});
    } else if (parts == 2) {
      for (std::size_t c = 1; c < len; ++c) out.push_back({c});
    } else {
      for (std::size_t c1 = 1; c1 < len; ++c1)
        for (std::size_t c2 = c1 + 1; c2 < len; ++c2) out.push_back({c1, c2});
    }
    return out;
  };

  for (int total_parts = 2; total_parts <= 4; ++total_parts) {
    for (int p0 = 1; p0 <= 3; ++p0) {
      int p1 = total_parts - p0;
      if (p1 < 1 || p1 > 3) continue;
      if (p0 > static_cast<int>(v.size()) || p1 > static_cast<int>(w.size())) continue;
      for (const auto& cuts0 : cuttings_for(v.size(), p0))
        for (const auto& cuts1 : cuttings_for(w.size(), p1)) {
          std::vector<Slice> parts;
          std::size_t prev = 0;
          for (std::size_t c : cuts0) {
            parts.push_back({0, prev, c});
            prev = c;
          }
          parts.push_back({0, prev, v.size()});
          prev = 0;
          for (std::size_t c : cuts1) {
            parts.push_back({1, prev, c});
            prev = c;
          }
          parts.push_back({1, prev, w.size()});

          // assignment mask over parts after the first (fixed to component 0)
          const int n_parts = total_parts;
          for (unsigned mask = 0; mask < (1u << (n_parts - 1)); ++mask) {
            int count[2] = {1, 0};
            PairBalance bal[2] = {span_balance(parts[0].src ? pb1 : pb0,
                                               parts[0].start, parts[0].end),
                                  {}};
            for (int k = 1; k < n_parts; ++k) {
              int c = (mask >> (k - 1)) & 1;
              ++count[c];
              bal[c] = bal[c] + span_balance(parts[static_cast<std::size_t>(k)].src
                                                 ? pb1
                                                 : pb0,
                                             parts[static_cast<std::size_t>(k)].start,
                                             parts[static_cast<std::size_t>(k)].end);
            }
            if (count[0] > 2 || count[1] < 1 || count[1] > 2) continue;
            if (!bal[0].zero() || !bal[1].zero()) continue;
            BalDecomposition d;
            for (int k = 0; k < n_parts; ++k) {
              int c = k == 0 ? 0 : (mask >> (k - 1)) & 1;
              d.components[c].push_back(parts[static_cast<std::size_t>(k)]);
            }
            d.canonicalize();
            if (!visit(d)) return;
          }
        }
    }
  }
}

}  // namespace

std::vector<Word> enumerate_balanced(std::size_t max_len) {
  std::vector<Word> out;
  Word current;
  for (std::size_t len = 0; len <= max_len; len += 2)
    enumerate_rec(current, len, 0, 0, out);
  return out;
}

std::vector<BalDecomposition> search_decompositions(const Word& v, const Word& w) {
  std::vector<BalDecomposition> out;
  enumerate_decompositions(v, w, [&](const BalDecomposition& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

std::optional<BalDecomposition> first_search_decomposition(const Word& v, const Word& w) {
  std::optional<BalDecomposition> out;
  enumerate_decompositions(v, w, [&](const BalDecomposition& d) {
    out = d;
    return false;
  });
  return out;
}

DerivationTree reference_parse(const Word& word) {
  return parse_with(word, [](const Word& v, const Word& w) {
    if (auto d = first_search_decomposition(v, w)) return *d;
    throw InternalIncompletenessError(
        "reference_parse: no decomposition of (" + format_word(v) + ", " +
        format_word(w) + ")");
  });
}

}  // namespace o2
