#include "o2parse.h"

#include <cstring>
#include <string>

#include "o2/errors.hpp"
#include "o2/generate.hpp"
#include "o2/grammar.hpp"
#include "o2/oracle.hpp"
#include "o2/parser.hpp"
#include "o2/serialize.hpp"

struct o2p_tree {
  o2::DerivationTree tree;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int fail(int status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
int guard(Fn&& fn) {
  try {
    return fn();
  } catch (const o2::NotBalancedError& e) {
    return fail(O2P_NOT_BALANCED, e.what());
  } catch (const o2::TooShortError& e) {
    return fail(O2P_TOO_SHORT, e.what());
  } catch (const o2::InternalIncompletenessError& e) {
    return fail(O2P_INTERNAL, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(O2P_SYNTAX, e.what());
  } catch (const std::exception& e) {
    return fail(O2P_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* o2p_status_name(int status) {
  switch (status) {
    case O2P_OK: return "ok";
    case O2P_NOT_BALANCED: return "not-balanced";
    case O2P_TOO_SHORT: return "too-short";
    case O2P_SYNTAX: return "syntax";
    case O2P_VERIFY_FAILED: return "verify-failed";
    case O2P_INVALID_ARG: return "invalid-arg";
    case O2P_INTERNAL: return "internal";
    default: return "unknown";
  }
}

const char* o2p_error_message(void) { return g_last_error.c_str(); }

void o2p_free(char* s) { delete[] s; }

int o2p_check(const char* word, int n, int* balanced) {
  if (!word || !balanced || n < 1) return fail(O2P_INVALID_ARG, "bad argument");
  return guard([&] {
    o2::Balance b = o2::balance(o2::parse_word(word), n);  // enforces the bound
    *balanced = 1;
    for (std::int64_t d : b)
      if (d != 0) *balanced = 0;
    return static_cast<int>(O2P_OK);
  });
}

int o2p_balance(const char* word, int n, long long* deltas) {
  if (!word || !deltas || n < 1) return fail(O2P_INVALID_ARG, "bad argument");
  return guard([&] {
    o2::Balance b = o2::balance(o2::parse_word(word), n);
    for (int i = 0; i < n; ++i) deltas[i] = b[static_cast<std::size_t>(i)];
    return static_cast<int>(O2P_OK);
  });
}

int o2p_bumps(const char* word, int n, char** out) {
  if (!word || !out || n < 1) return fail(O2P_INVALID_ARG, "bad argument");
  return guard([&] {
    o2::Word w = o2::parse_word(word);
    o2::balance(w, n);  // alphabet bound check
    std::string text;
    for (const o2::Bump& b : o2::bumps(w))
      text += o2::format_letter(b.direction) + ":[" + std::to_string(b.start) + "," +
              std::to_string(b.end) + "]\n";
    *out = dup_string(text);
    return static_cast<int>(O2P_OK);
  });
}

int o2p_parse(const char* word, const char* strategy, o2p_tree** out) {
  if (!word || !strategy || !out) return fail(O2P_INVALID_ARG, "bad argument");
  o2::Strategy s;
  if (std::strcmp(strategy, "guided") == 0)
    s = o2::Strategy::guided;
  else if (std::strcmp(strategy, "search") == 0)
    s = o2::Strategy::search;
  else
    return fail(O2P_INVALID_ARG, "strategy must be 'guided' or 'search'");
  return guard([&] {
    *out = new o2p_tree{o2::parse(o2::parse_word(word), s)};
    return static_cast<int>(O2P_OK);
  });
}

int o2p_tree_serialize(const o2p_tree* t, const char* format, char** out) {
  if (!t || !format || !out) return fail(O2P_INVALID_ARG, "bad argument");
  return guard([&] {
    if (std::strcmp(format, "json") == 0)
      *out = dup_string(o2::tree_to_json(t->tree));
    else if (std::strcmp(format, "sexp") == 0)
      *out = dup_string(o2::tree_to_sexp(t->tree));
    else
      return fail(O2P_INVALID_ARG, "format must be 'json' or 'sexp'");
    return static_cast<int>(O2P_OK);
  });
}

int o2p_tree_deserialize(const char* text, const char* format, o2p_tree** out) {
  if (!text || !format || !out) return fail(O2P_INVALID_ARG, "bad argument");
  return guard([&] {
    if (std::strcmp(format, "json") == 0)
      *out = new o2p_tree{o2::tree_from_json(text)};
    else if (std::strcmp(format, "sexp") == 0)
      *out = new o2p_tree{o2::tree_from_sexp(text)};
    else
      return fail(O2P_INVALID_ARG, "format must be 'json' or 'sexp'");
    return static_cast<int>(O2P_OK);
  });
}

int o2p_tree_verify(const o2p_tree* t, const char* expect_word) {
  if (!t) return fail(O2P_INVALID_ARG, "bad argument");
  return guard([&] {
    if (auto rej = o2::check_derivation(o2::g2(), t->tree))
      return fail(O2P_VERIFY_FAILED, "rejected at " + rej->path + ": " + rej->reason);
    if (expect_word) {
      if (t->tree.rule != "r_z" || t->tree.args.size() != 1)
        return fail(O2P_VERIFY_FAILED, "tree is not rooted at the start symbol");
      if (t->tree.args[0] != o2::parse_word(expect_word))
        return fail(O2P_VERIFY_FAILED, "yield does not match the expected word");
    }
    return static_cast<int>(O2P_OK);
  });
}

int o2p_tree_yield(const o2p_tree* t, char** out) {
  if (!t || !out) return fail(O2P_INVALID_ARG, "bad argument");
  std::string text;
  const auto words = o2::yield_of(t->tree);
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) text += "\t";
    text += o2::format_word(words[i]);
  }
  *out = dup_string(text);
  return O2P_OK;
}

void o2p_tree_free(o2p_tree* t) { delete t; }

int o2p_gen(unsigned long length, unsigned long count, unsigned long long seed,
            char** out) {
  if (!out) return fail(O2P_INVALID_ARG, "bad argument");
  return guard([&] {
    std::string text;
    for (const o2::Word& w : o2::generate_words(length, count, seed))
      text += o2::format_word(w) + "\n";
    *out = dup_string(text);
    return static_cast<int>(O2P_OK);
  });
}

int o2p_fuzz(unsigned long max_len, unsigned long count, unsigned long long seed,
             char** report) {
  if (!report) return fail(O2P_INVALID_ARG, "bad argument");
  return guard([&] {
    o2::FuzzReport r = o2::fuzz_run(max_len, count, seed);
    if (r.ok) {
      *report = dup_string("ok: " + std::to_string(r.words_checked) +
                           " words verified\n");
      return O2P_OK;
    }
    *report = dup_string("fail: " + r.failing_word + ": " + r.detail + "\n");
    return O2P_VERIFY_FAILED;
  });
}

}  // extern "C"
