#include "iasi/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <variant>

#include "iasi/error.hpp"
#include "iasi/families.hpp"
#include "iasi/io.hpp"

namespace iasi {
namespace {

struct Token {
  enum Kind { ident, number, string, punct, end } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      auto j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::ident, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      auto j = i;
      while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '.')) ++j;
      out.push_back({Token::number, std::string(s.substr(i, j - i)), i});
      i = j;
    } else if (c == '"') {
      auto j = s.find('"', i + 1);
      if (j == std::string_view::npos)
        throw InvalidInput("unterminated string at position " + std::to_string(i));
      out.push_back({Token::string, std::string(s.substr(i + 1, j - i - 1)), i});
      i = j + 1;
    } else if (c == '(' || c == ')' || c == ',' || c == ':') {
      out.push_back({Token::punct, std::string(1, c), i});
      ++i;
    } else {
      throw InvalidInput("unexpected character '" + std::string(1, c) + "' at position " +
                         std::to_string(i));
    }
  }
  out.push_back({Token::end, "", s.size()});
  return out;
}

struct Number {
  std::string text;
};
using Value = std::variant<Built, Number, std::string>;

class Parser {
 public:
  Parser(std::string_view text, const ExprContext& ctx) : toks_(tokenize(text)), ctx_(ctx) {}

  Built parse() {
    auto b = expr();
    if (peek().kind != Token::end) fail("trailing input '" + peek().text + "'");
    return b;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(i_ + k, toks_.size() - 1)]; }
  bool is_punct(const Token& t, char c) const { return t.kind == Token::punct && t.text[0] == c; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw InvalidInput("expression: " + msg + " at position " + std::to_string(peek().pos));
  }

  void expect(char c) {
    if (!is_punct(peek(), c)) fail(std::string("expected '") + c + "'");
    ++i_;
  }

  Built expr() {
    const auto& t = peek();
    if (t.kind != Token::ident) fail("expected a graph expression");
    std::string name = t.text;
    ++i_;
    if (is_punct(peek(), '(')) {
      ++i_;
      std::vector<Value> args;
      if (!is_punct(peek(), ')')) {
        args.push_back(arg());
        while (is_punct(peek(), ',')) {
          ++i_;
          args.push_back(arg());
        }
      }
      expect(')');
      return apply(name, args);
    }
    if (is_punct(peek(), ':')) {
      ++i_;
      std::vector<long> params{integer(number_token())};
      while (is_punct(peek(), ',') && peek(1).kind == Token::number) {
        ++i_;
        params.push_back(integer(number_token()));
      }
      return family(name, std::move(params));
    }
    if (name.size() > 1 && (name[0] == 'K' || name[0] == 'C' || name[0] == 'P')) {
      long n = 0;
      auto [p, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
      if (ec == std::errc() && p == name.data() + name.size()) {
        auto f = name[0] == 'K' ? Family::complete : name[0] == 'C' ? Family::cycle : Family::path;
        return family(std::string(family_name(f)), {n});
      }
    }
    fail("unknown graph '" + name + "'");
  }

  Value arg() {
    const auto& t = peek();
    if (t.kind == Token::number) return Number{number_token()};
    if (t.kind == Token::string) {
      ++i_;
      return t.text;
    }
    return expr();
  }

  std::string number_token() {
    if (peek().kind != Token::number) fail("expected a number");
    return toks_[i_++].text;
  }

  long integer(const std::string& s) const {
    long x = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || p != s.data() + s.size())
      throw InvalidInput("expression: expected an integer, got '" + s + "'");
    return x;
  }

  Built family(const std::string& name, std::vector<long> params) const {
    auto f = family_from_name(name);
    if (!f) throw InvalidInput("expression: unknown family '" + name + "'");
    return {generate(FamilySpec{*f, std::move(params)}), std::nullopt};
  }

  static const Graph& graph_arg(const std::vector<Value>& args, std::size_t k, const std::string& op) {
    if (k >= args.size() || !std::holds_alternative<Built>(args[k]))
      throw InvalidInput("expression: " + op + " expects a graph as argument " + std::to_string(k + 1));
    return std::get<Built>(args[k]).graph;
  }
  long int_arg(const std::vector<Value>& args, std::size_t k, const std::string& op) const {
    if (k >= args.size() || !std::holds_alternative<Number>(args[k]))
      throw InvalidInput("expression: " + op + " expects a number as argument " + std::to_string(k + 1));
    return integer(std::get<Number>(args[k]).text);
  }
  static const std::string& str_arg(const std::vector<Value>& args, std::size_t k, const std::string& op) {
    if (k >= args.size() || !std::holds_alternative<std::string>(args[k]))
      throw InvalidInput("expression: " + op + " expects a quoted string as argument " +
                         std::to_string(k + 1));
    return std::get<std::string>(args[k]);
  }
  static void arity(const std::vector<Value>& args, std::size_t n, const std::string& op) {
    if (args.size() != n)
      throw InvalidInput("expression: " + op + " takes " + std::to_string(n) + " argument(s), got " +
                         std::to_string(args.size()));
  }

  Built apply(const std::string& op, const std::vector<Value>& args) const {
    auto result = [](OpResult r) { return Built{std::move(r.graph), std::move(r.provenance)}; };
    auto binary = [&](OpResult (*fn)(const Graph&, const Graph&)) {
      arity(args, 2, op);
      return result(fn(graph_arg(args, 0, op), graph_arg(args, 1, op)));
    };
    auto unary = [&](OpResult (*fn)(const Graph&)) {
      arity(args, 1, op);
      return result(fn(graph_arg(args, 0, op)));
    };
    if (op == "union") return binary(graph_union);
    if (op == "dunion") return binary(disjoint_union);
    if (op == "intersection") return binary(graph_intersection);
    if (op == "join") return binary(join);
    if (op == "cartesian" || op == "product") return binary(cartesian_product);
    if (op == "corona") return binary(corona);
    if (op == "complement") return unary(complement);
    if (op == "subdivide") return unary(complete_subdivision);
    if (op == "line") return unary(line_graph);
    if (op == "total") return unary(total_graph);
    if (op == "power") {
      arity(args, 2, op);
      return result(power(graph_arg(args, 0, op), int_arg(args, 1, op)));
    }
    if (op == "super_subdivide") {
      arity(args, 2, op);
      return result(super_subdivision(graph_arg(args, 0, op), int_arg(args, 1, op)));
    }
    if (op == "contract") {
      arity(args, 3, op);
      const auto& g = graph_arg(args, 0, op);
      return result(contract_edge(g, Edge(g.require(str_arg(args, 1, op)), g.require(str_arg(args, 2, op)))));
    }
    if (op == "smooth") {
      arity(args, 2, op);
      const auto& g = graph_arg(args, 0, op);
      return result(smooth_degree2(g, g.require(str_arg(args, 1, op))));
    }
    if (op == "rename") {
      arity(args, 2, op);
      return {rename(graph_arg(args, 0, op), str_arg(args, 1, op)), std::nullopt};
    }
    if (op == "named") {
      arity(args, 2, op);
      const auto& g = graph_arg(args, 0, op);
      std::vector<std::string> names;
      std::string_view list = str_arg(args, 1, op);
      while (true) {
        auto comma = list.find(',');
        names.emplace_back(list.substr(0, comma));
        if (comma == std::string_view::npos) break;
        list.remove_prefix(comma + 1);
      }
      if (names.size() != g.order())
        throw InvalidInput("expression: named() needs " + std::to_string(g.order()) + " names, got " +
                           std::to_string(names.size()));
      std::vector<Edge> edges(g.edges().begin(), g.edges().end());
      return {Graph(std::move(names), std::move(edges), g.label()), std::nullopt};
    }
    if (op == "load") {
      arity(args, 1, op);
      std::filesystem::path p = str_arg(args, 0, op);
      if (p.is_relative() && !ctx_.base_dir.empty()) p = ctx_.base_dir / p;
      return {load_graph(p), std::nullopt};
    }
    if (op == "gnp") {
      if (args.size() != 2 && args.size() != 3)
        throw InvalidInput("expression: gnp takes (n, p) or (n, p, seed)");
      auto n = int_arg(args, 0, op);
      if (n < 0) throw InvalidInput("expression: gnp needs n >= 0");
      if (!std::holds_alternative<Number>(args[1]))
        throw InvalidInput("expression: gnp expects a probability as argument 2");
      const auto& ptext = std::get<Number>(args[1]).text;
      double p = 0;
      auto [end, ec] = std::from_chars(ptext.data(), ptext.data() + ptext.size(), p);
      if (ec != std::errc() || end != ptext.data() + ptext.size() || !(p >= 0.0 && p <= 1.0))
        throw InvalidInput("expression: gnp probability must lie in [0, 1], got '" + ptext + "'");
      std::uint64_t seed = ctx_.seed;
      if (args.size() == 3) {
        auto s = int_arg(args, 2, op);
        if (s < 0) throw InvalidInput("expression: gnp seed must be >= 0");
        seed = static_cast<std::uint64_t>(s);
      }
      return {random_graph(static_cast<std::size_t>(n), p, seed), std::nullopt};
    }
    if (auto f = family_from_name(op)) {
      std::vector<long> params;
      for (std::size_t k = 0; k < args.size(); ++k) params.push_back(int_arg(args, k, op));
      return family(op, std::move(params));
    }
    throw InvalidInput("expression: unknown operation '" + op + "'");
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  const ExprContext& ctx_;
};

}  // namespace

Built build_expression(std::string_view text, const ExprContext& ctx) {
  return Parser(text, ctx).parse();
}

}  // namespace iasi
