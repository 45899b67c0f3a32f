#include "weyl/cli/parser.hpp"

#include <cctype>
#include <limits>
#include <vector>

namespace weyl::cli {

ParseError::ParseError(std::size_t offset, const std::string& message)
    : InputError("parse error at offset " + std::to_string(offset) + ": " + message), offset_(offset), detail_(message) {}

namespace {

enum class Tok { Number, Identifier, Plus, Minus, Star, Slash, Caret, LParen, RParen, End, Invalid };

struct Token {
  Tok kind;
  std::size_t offset;  // 1-based
  std::string text;
};

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  auto is_alpha = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; };
  while (pos < input.size()) {
    const char c = input[pos];
    const std::size_t start = pos;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (is_digit(c)) {
      while (pos < input.size() && is_digit(input[pos])) ++pos;
      tokens.push_back({Tok::Number, start + 1, std::string(input.substr(start, pos - start))});
      continue;
    }
    if (is_alpha(c)) {
      while (pos < input.size() && is_alpha(input[pos])) ++pos;
      while (pos < input.size() && is_digit(input[pos])) ++pos;
      tokens.push_back({Tok::Identifier, start + 1, std::string(input.substr(start, pos - start))});
      continue;
    }
    Tok kind = Tok::Invalid;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default: break;
    }
    tokens.push_back({kind, start + 1, std::string(1, c)});
    ++pos;
  }
  tokens.push_back({Tok::End, input.size() + 1, ""});
  return tokens;
}

std::string describe(const Token& tok) {
  switch (tok.kind) {
    case Tok::End: return "end of input";
    case Tok::Number: return "number '" + tok.text + "'";
    case Tok::Invalid: return "invalid character '" + tok.text + "'";
    default: return "'" + tok.text + "'";
  }
}

class Parser {
 public:
  Parser(std::string_view input, const ParseOptions& options) : tokens_(tokenize(input)), options_(options) {}

  std::unique_ptr<Expr> parse_all() {
    auto e = expr();
    if (peek().kind != Tok::End) fail_expected({"'+'", "'-'", "'*'", "'^'", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  [[noreturn]] void fail_expected(const std::vector<std::string>& expected) const {
    std::string list;
    for (const auto& e : expected) list += (list.empty() ? "" : ", ") + e;
    const std::string lead = expected.size() == 1 ? "expected " : "expected one of ";
    throw ParseError(peek().offset, lead + list + "; found " + describe(peek()));
  }

  std::vector<std::string> primary_starts() const {
    return {"number", options_.coordinate_prefix + "<k>", options_.derivative_prefix + "<k>", "'('", "'-'"};
  }

  static std::unique_ptr<Expr> binary(Expr::Kind kind, std::unique_ptr<Expr> lhs, std::unique_ptr<Expr> rhs) {
    auto node = std::make_unique<Expr>();
    node->kind = kind;
    node->offset = lhs->offset;
    node->lhs = std::move(lhs);
    node->rhs = std::move(rhs);
    return node;
  }

  std::unique_ptr<Expr> expr() {
    auto lhs = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const auto kind = advance().kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Subtract;
      lhs = binary(kind, std::move(lhs), term());
    }
    return lhs;
  }

  std::unique_ptr<Expr> term() {
    auto lhs = factor();
    while (peek().kind == Tok::Star) {
      advance();
      lhs = binary(Expr::Kind::Compose, std::move(lhs), factor());
    }
    return lhs;
  }

  std::unique_ptr<Expr> factor() {
    if (peek().kind == Tok::Minus) {
      auto node = std::make_unique<Expr>();
      node->kind = Expr::Kind::Negate;
      node->offset = advance().offset;
      node->lhs = factor();
      return node;
    }
    auto base = primary();
    if (peek().kind != Tok::Caret) return base;
    advance();
    if (peek().kind != Tok::Number) fail_expected({"positive integer exponent"});
    const Token& tok = advance();
    auto node = std::make_unique<Expr>();
    node->kind = Expr::Kind::Power;
    node->offset = base->offset;
    node->exponent = positive_int(tok, "exponent");
    node->lhs = std::move(base);
    return node;
  }

  std::unique_ptr<Expr> primary() {
    const Token& tok = peek();
    auto node = std::make_unique<Expr>();
    node->offset = tok.offset;
    switch (tok.kind) {
      case Tok::Number: {
        advance();
        Integer num(tok.text);
        Integer den = 1;
        if (peek().kind == Tok::Slash) {
          advance();
          if (peek().kind != Tok::Number) fail_expected({"positive integer denominator"});
          const Token& den_tok = advance();
          den = Integer(den_tok.text);
          if (den == 0) throw ParseError(den_tok.offset, "denominator must be positive");
        }
        node->kind = Expr::Kind::Number;
        node->value = Rational(num, den);
        node->value.canonicalize();
        return node;
      }
      case Tok::Identifier: {
        advance();
        generator(tok, *node);
        return node;
      }
      case Tok::LParen: {
        advance();
        auto inner = expr();
        if (peek().kind != Tok::RParen) fail_expected({"'+'", "'-'", "'*'", "'^'", "')'"});
        advance();
        inner->offset = tok.offset;
        return inner;
      }
      default:
        fail_expected(primary_starts());
    }
  }

  void generator(const Token& tok, Expr& node) const {
    const std::size_t digits = tok.text.find_first_of("0123456789");
    const std::string prefix = tok.text.substr(0, digits);
    if (prefix == options_.coordinate_prefix) {
      node.kind = Expr::Kind::Coordinate;
    } else if (prefix == options_.derivative_prefix) {
      node.kind = Expr::Kind::Derivative;
    } else {
      throw ParseError(tok.offset, "unknown generator '" + tok.text + "'; expected " +
                                       options_.coordinate_prefix + "<k> or " + options_.derivative_prefix + "<k>");
    }
    if (digits == std::string::npos) {
      throw ParseError(tok.offset + tok.text.size(), "missing index after '" + prefix + "'");
    }
    node.index = positive_int({Tok::Number, tok.offset + digits, tok.text.substr(digits)}, "generator index");
  }

  static unsigned positive_int(const Token& tok, const std::string& what) {
    const Integer value(tok.text);
    if (value == 0) throw ParseError(tok.offset, what + " must be at least 1");
    if (value > std::numeric_limits<int>::max()) throw ParseError(tok.offset, what + " is too large");
    return static_cast<unsigned>(value.get_ui());
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const ParseOptions& options_;
};

template <class T, class Number, class Generator>
T fold(const Expr& e, const Number& number, const Generator& generator) {
  switch (e.kind) {
    case Expr::Kind::Number: return number(e.value);
    case Expr::Kind::Coordinate:
    case Expr::Kind::Derivative: return generator(e.kind, e.index);
    case Expr::Kind::Negate: return number(Rational(-1)) * fold<T>(*e.lhs, number, generator);
    case Expr::Kind::Add: return fold<T>(*e.lhs, number, generator) + fold<T>(*e.rhs, number, generator);
    case Expr::Kind::Subtract: return fold<T>(*e.lhs, number, generator) - fold<T>(*e.rhs, number, generator);
    case Expr::Kind::Compose: return fold<T>(*e.lhs, number, generator) * fold<T>(*e.rhs, number, generator);
    case Expr::Kind::Power: {
      const T base = fold<T>(*e.lhs, number, generator);
      T result = base;
      for (unsigned i = 1; i < e.exponent; ++i) result = result * base;
      return result;
    }
  }
  throw std::logic_error("unhandled expression kind");
}

}  // namespace

std::unique_ptr<Expr> parse(std::string_view input, const ParseOptions& options) {
  return Parser(input, options).parse_all();
}

unsigned max_index(const Expr& expr) {
  unsigned m = expr.index;
  if (expr.lhs) m = std::max(m, max_index(*expr.lhs));
  if (expr.rhs) m = std::max(m, max_index(*expr.rhs));
  return m;
}

DiffOp eval_expr(const Expr& expr, std::size_t n) {
  if (max_index(expr) > n) throw InputError("generator index exceeds the variable count " + std::to_string(n));
  return fold<DiffOp>(
      expr, [n](const Rational& c) { return from_poly(Poly::constant(n, c)); },
      [n](Expr::Kind kind, unsigned index) {
        return kind == Expr::Kind::Coordinate ? from_poly(Poly::variable(n, index - 1))
                                              : DiffOp::derivative(n, index - 1);
      });
}

SymbolElem eval_symbol(const Expr& expr, std::size_t n) {
  if (max_index(expr) > n) throw InputError("generator index exceeds the variable count " + std::to_string(n));
  const Poly joint = fold<Poly>(
      expr, [n](const Rational& c) { return Poly::constant(2 * n, c); },
      [n](Expr::Kind kind, unsigned index) {
        return Poly::variable(2 * n, kind == Expr::Kind::Coordinate ? index - 1 : n + index - 1);
      });
  if (joint.is_zero()) return SymbolElem(n, 0);

  auto split = [n](const MultiIndex& m, std::size_t from) {
    return MultiIndex(std::vector<unsigned>(m.exponents().begin() + static_cast<std::ptrdiff_t>(from),
                                            m.exponents().begin() + static_cast<std::ptrdiff_t>(from + n)));
  };
  const unsigned grade = split(joint.terms().begin()->first, n).degree();
  SymbolElem out(n, grade);
  for (const auto& [m, c] : joint.terms()) {
    const MultiIndex xi = split(m, n);
    if (xi.degree() != grade) throw InputError("symbol expression is not homogeneous in the xi variables");
    out.add_term(xi, Poly::monomial(split(m, 0), c));
  }
  return out;
}

}  // namespace weyl::cli
