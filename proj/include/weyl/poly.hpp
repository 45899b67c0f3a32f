#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "weyl/degree.hpp"
#include "weyl/multi_index.hpp"
#include "weyl/rational.hpp"

namespace weyl {

/// Sparse polynomial in t1..tn with rational coefficients.
///
/// Terms are kept in canonical form: no zero coefficient is ever stored and
/// every key has length n, so two polynomials are equal iff their term maps
/// are. Binary operations throw std::invalid_argument on mismatched n.
class Poly {
 public:
  /// Ascending graded-lex; the leading term is the last entry.
  using Terms = std::map<MultiIndex, Rational>;

  explicit Poly(std::size_t n = 1) : n_(n) {}

  static Poly constant(std::size_t n, const Rational& c);
  static Poly variable(std::size_t n, std::size_t var);
  static Poly monomial(const MultiIndex& exps, const Rational& c = 1);

  std::size_t num_vars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Degree degree() const;

  Rational coefficient(const MultiIndex& exps) const;
  /// Adds c * t^exps in place.
  void add_term(const MultiIndex& exps, const Rational& c);

  /// Throws std::domain_error on the zero polynomial.
  const Terms::value_type& leading_term() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a);

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Canonical rendering, descending graded-lex, e.g. `3*t1^2*t2 - 1/2*t2 + 4`.
  std::string to_string(std::string_view var_prefix = "t") const;

 private:
  void check_same_ring(const Poly& other) const;

  std::size_t n_;
  Terms terms_;
};

Poly pow(const Poly& base, unsigned exponent);

/// Formal partial derivative with respect to variable `var` (0-based).
Poly partial(const Poly& p, std::size_t var);

/// d^J p = (d/dt1)^{j1} ... (d/dtn)^{jn} p.
Poly partial(const Poly& p, const MultiIndex& derivative);

/// Evaluation at a point; a ring homomorphism R -> Q.
Rational eval(const Poly& p, std::span<const Rational> point);

/// Remainder of dividing p by the single divisor g in graded-lex order. Zero
/// exactly when g divides p. Throws std::domain_error when g is zero.
Poly reduce_by(const Poly& p, const Poly& g);

/// Renders c * t^exps with |c| taken and the sign dropped; used by the term
/// printers of every rendered type.
std::string render_monomial(const MultiIndex& exps, std::string_view var_prefix);

}  // namespace weyl
