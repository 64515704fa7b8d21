// Command-line front end; talks to the core only through the C API.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "o2parse.h"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;
constexpr int kExitInternal = 70;

int die(int status) {
  if (status == O2P_INTERNAL) {
    std::cerr << "BUG: completeness violation: " << o2p_error_message() << "\n";
    return kExitInternal;
  }
  std::cerr << "error (" << o2p_status_name(status) << "): " << o2p_error_message()
            << "\n";
  switch (status) {
    case O2P_NOT_BALANCED: return 2;
    case O2P_VERIFY_FAILED: return 3;
    case O2P_SYNTAX:
    case O2P_INVALID_ARG: return kExitUsage;
    default: return 1;
  }
}

unsigned long long default_seed() {
  if (const char* env = std::getenv("O2_SEED")) return std::stoull(env);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"membership, parsing and verification for two-pair balanced words"};
  app.require_subcommand(1);

  std::string word, file, format = "json", strategy = "guided", expect_word;
  int n = 2;
  bool verbose = false;
  unsigned long length = 0, count = 1, max_len = 64;
  unsigned long long seed = default_seed();

  auto* check = app.add_subcommand("check", "exit 0 iff the word is balanced");
  check->add_option("word", word)->required();
  check->add_option("--n", n, "alphabet pairs");
  check->add_flag("-v,--verbose", verbose, "print the balance tuple on stderr");

  auto* parse = app.add_subcommand("parse", "print a derivation for the word");
  parse->add_option("word", word)->required();
  parse->add_option("--format", format)->check(CLI::IsMember({"json", "sexp"}));
  parse->add_option("--strategy", strategy)->check(CLI::IsMember({"guided", "search"}));

  auto* verify = app.add_subcommand("verify", "re-check a serialized derivation");
  verify->add_option("file", file)->required();
  verify->add_option("--word", expect_word, "word the yield must equal");

  auto* gen = app.add_subcommand("gen", "print uniformly sampled balanced words");
  gen->add_option("--length", length)->required();
  gen->add_option("--count", count);
  gen->add_option("--seed", seed);

  auto* fuzz = app.add_subcommand("fuzz", "differential parse/verify fuzzing");
  fuzz->add_option("--max-len", max_len);
  fuzz->add_option("--count", count);
  fuzz->add_option("--seed", seed);

  auto* bumps = app.add_subcommand("bumps", "list the word's bumps");
  bumps->add_option("word", word)->required();
  bumps->add_option("--n", n, "alphabet pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (check->parsed()) {
    if (verbose) {
      std::vector<long long> deltas(static_cast<std::size_t>(n));
      if (int st = o2p_balance(word.c_str(), n, deltas.data()); st != O2P_OK)
        return die(st);
      std::cerr << "balance:";
      for (long long d : deltas) std::cerr << " " << d;
      std::cerr << "\n";
    }
    int balanced = 0;
    if (int st = o2p_check(word.c_str(), n, &balanced); st != O2P_OK) return die(st);
    return balanced ? 0 : 1;
  }

  if (parse->parsed()) {
    o2p_tree* tree = nullptr;
    if (int st = o2p_parse(word.c_str(), strategy.c_str(), &tree); st != O2P_OK)
      return die(st);
    char* text = nullptr;
    if (int st = o2p_tree_serialize(tree, format.c_str(), &text); st != O2P_OK) {
      o2p_tree_free(tree);
      return die(st);
    }
    std::cout << text << "\n";
    o2p_free(text);
    o2p_tree_free(tree);
    return 0;
  }

  if (verify->parsed()) {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "cannot open " << file << "\n";
      return kExitIo;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::size_t first = text.find_first_not_of(" \t\r\n");
    const char* fmt = (first != std::string::npos && text[first] == '(') ? "sexp" : "json";
    o2p_tree* tree = nullptr;
    if (int st = o2p_tree_deserialize(text.c_str(), fmt, &tree); st != O2P_OK)
      return die(st);
    int st = o2p_tree_verify(tree, expect_word.empty() ? nullptr : expect_word.c_str());
    o2p_tree_free(tree);
    if (st != O2P_OK) return die(st);
    std::cout << "ok\n";
    return 0;
  }

  if (gen->parsed()) {
    char* text = nullptr;
    if (int st = o2p_gen(length, count, seed, &text); st != O2P_OK) return die(st);
    std::cout << text;
    o2p_free(text);
    return 0;
  }

  if (fuzz->parsed()) {
    char* report = nullptr;
    int st = o2p_fuzz(max_len, count, seed, &report);
    if (report) {
      std::cout << report;
      o2p_free(report);
    }
    if (st == O2P_VERIFY_FAILED) return 3;
    if (st != O2P_OK) return die(st);
    return 0;
  }

  if (bumps->parsed()) {
    char* text = nullptr;
    if (int st = o2p_bumps(word.c_str(), n, &text); st != O2P_OK) return die(st);
    std::cout << text;
    o2p_free(text);
    return 0;
  }

  return kExitUsage;
}
