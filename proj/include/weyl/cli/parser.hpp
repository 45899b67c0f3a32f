#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "weyl/diff_op.hpp"
#include "weyl/rational.hpp"
#include "weyl/symbols.hpp"

namespace weyl::cli {

/// Malformed user input; the CLI reports it and exits with status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error with the 1-based byte offset of the offending token.
class ParseError : public InputError {
 public:
  ParseError(std::size_t offset, const std::string& message);
  std::size_t offset() const { return offset_; }
  /// The message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

/// Operator expression syntax tree. `*` is composition, so the tree is
/// evaluated in a noncommutative algebra.
struct Expr {
  enum class Kind { Number, Coordinate, Derivative, Negate, Add, Subtract, Compose, Power };

  Kind kind;
  std::size_t offset = 0;  ///< 1-based offset of the node's first token
  Rational value;          ///< Number
  unsigned index = 0;      ///< Coordinate, Derivative (1-based)
  unsigned exponent = 0;   ///< Power
  std::unique_ptr<Expr> lhs;
  std::unique_ptr<Expr> rhs;
};

struct ParseOptions {
  std::string coordinate_prefix = "t";
  /// Generator read as d/dt_i; the symbol parser sets it to the xi prefix.
  std::string derivative_prefix = "d";
};

/// Grammar, loosest binding first:
///   expr    := term (('+' | '-') term)*
///   term    := factor ('*' factor)*
///   factor  := '-' factor | primary ['^' posint]
///   primary := rational | <t>posint | <d>posint | '(' expr ')'
///   rational := int ['/' posint]
std::unique_ptr<Expr> parse(std::string_view input, const ParseOptions& options = {});

/// Largest generator index in the tree, 0 if none.
unsigned max_index(const Expr& expr);

/// Evaluates in the Weyl algebra on n variables.
DiffOp eval_expr(const Expr& expr, std::size_t n);

/// Evaluates commutatively in t and xi; the result must be homogeneous in xi
/// (InputError otherwise). The zero expression is the zero symbol of grade 0.
SymbolElem eval_symbol(const Expr& expr, std::size_t n);

}  // namespace weyl::cli
