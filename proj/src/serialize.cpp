#include "o2/serialize.hpp"

#include <cctype>
#include <stdexcept>

#include "json.hpp"

namespace o2 {

namespace {

nlohmann::json to_json_value(const DerivationTree& t) {
  nlohmann::json node;
  node["rule"] = t.rule;
  node["args"] = nlohmann::json::array();
  for (const Word& w : t.args) node["args"].push_back(format_word(w));
  node["children"] = nlohmann::json::array();
  for (const DerivationTree& c : t.children)
    node["children"].push_back(to_json_value(c));
  return node;
}

DerivationTree from_json_value(const nlohmann::json& node) {
  if (!node.is_object() || !node.contains("rule") || !node.contains("args") ||
      !node.contains("children"))
    throw std::invalid_argument("tree_from_json: node must have rule/args/children");
  DerivationTree t;
  t.rule = node.at("rule").get<std::string>();
  for (const auto& a : node.at("args"))
    t.args.push_back(parse_word(a.get<std::string>()));
  for (const auto& c : node.at("children")) t.children.push_back(from_json_value(c));
  return t;
}

struct SexpReader {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  char peek() {
    skip_ws();
    if (pos >= text.size()) throw std::invalid_argument("tree_from_sexp: unexpected end");
    return text[pos];
  }

  void expect(char c) {
    if (peek() != c)
      throw std::invalid_argument(std::string("tree_from_sexp: expected '") + c + "'");
    ++pos;
  }

  std::string read_atom() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')' && text[pos] != '"')
      ++pos;
    if (pos == start) throw std::invalid_argument("tree_from_sexp: expected atom");
    return text.substr(start, pos - start);
  }

  std::string read_string() {
    expect('"');
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != '"') ++pos;
    if (pos >= text.size())
      throw std::invalid_argument("tree_from_sexp: unterminated string");
    std::string s = text.substr(start, pos - start);
    ++pos;
    return s;
  }

  DerivationTree read_node() {
    expect('(');
    DerivationTree t;
    t.rule = read_atom();
    while (true) {
      char c = peek();
      if (c == ')') {
        ++pos;
        return t;
      }
      if (c == '"') {
        if (!t.children.empty())
          throw std::invalid_argument("tree_from_sexp: argument after child");
        t.args.push_back(parse_word(read_string()));
      } else if (c == '(') {
        t.children.push_back(read_node());
      } else {
        throw std::invalid_argument("tree_from_sexp: unexpected token");
      }
    }
  }
};

}  // namespace

std::string tree_to_json(const DerivationTree& t) { return to_json_value(t).dump(); }

DerivationTree tree_from_json(const std::string& text) {
  try {
    return from_json_value(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("tree_from_json: ") + e.what());
  }
}

std::string tree_to_sexp(const DerivationTree& t) {
  std::string out = "(" + t.rule;
  for (const Word& w : t.args) out += " \"" + format_word(w) + "\"";
  for (const DerivationTree& c : t.children) out += " " + tree_to_sexp(c);
  out += ")";
  return out;
}

DerivationTree tree_from_sexp(const std::string& text) {
  SexpReader reader{text};
  DerivationTree t = reader.read_node();
  reader.skip_ws();
  if (reader.pos != text.size())
    throw std::invalid_argument("tree_from_sexp: trailing input");
  return t;
}

}  // namespace o2
