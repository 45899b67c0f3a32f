#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>

#include "weyl/degree.hpp"
#include "weyl/multi_index.hpp"
#include "weyl/poly.hpp"

namespace weyl {

/// Differential operator sum_J f_J d^J in normal form: every coefficient is a
/// polynomial standing to the left of the derivatives. Normal forms are
/// unique, so equality of operators is structural equality.
class DiffOp {
 public:
  /// Ascending by |J| then graded-lex; the top-order terms are at the end.
  using Terms = std::map<MultiIndex, Poly>;

  explicit DiffOp(std::size_t n = 1) : n_(n) {}

  static DiffOp identity(std::size_t n);
  /// d/dt_{var}, var 0-based.
  static DiffOp derivative(std::size_t n, std::size_t var);
  /// The single term f * d^J.
  static DiffOp term(const Poly& coeff, const MultiIndex& derivative);

  std::size_t num_vars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Max |J| over stored terms; none for the zero operator.
  Degree order() const;

  Poly coefficient(const MultiIndex& derivative) const;
  void add_term(const MultiIndex& derivative, const Poly& coeff);

  DiffOp& operator+=(const DiffOp& other);
  DiffOp& operator-=(const DiffOp& other);
  DiffOp& operator*=(const Rational& c);

  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator-(DiffOp a) { return a *= Rational(-1); }
  friend DiffOp operator*(DiffOp a, const Rational& c) { return a *= c; }
  friend DiffOp operator*(const Rational& c, DiffOp a) { return a *= c; }
  /// Composition, see compose().
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);

  friend bool operator==(const DiffOp&, const DiffOp&) = default;

  /// `(t1)*d1 + 1`: descending |J| then graded-lex, each term as
  /// `(<poly>)*d1^a*d2^b`; the order-0 part is written as a bare polynomial.
  std::string to_string() const;

 private:
  void check_same_ring(const DiffOp& other) const;

  std::size_t n_;
  Terms terms_;
};

/// The multiplication operator m_a : b -> a*b.
DiffOp from_poly(const Poly& a);

/// sum_i a_i d_i; throws std::invalid_argument unless coeffs.size() == n.
DiffOp from_vector_field(std::span<const Poly> coeffs);

/// D(p) = sum_J f_J * d^J p.
Poly apply(const DiffOp& op, const Poly& p);

/// Normal form of a o b. Per pair of terms, by the Leibniz rule,
///   (f d^I) o (g d^J) = sum_{K <= I} C(I, K) f (d^{I-K} g) d^{K+J}.
DiffOp compose(const DiffOp& a, const DiffOp& b);

/// [a, b] = a o b - b o a.
DiffOp commutator(const DiffOp& a, const DiffOp& b);

inline Degree syntactic_order(const DiffOp& op) { return op.order(); }

}  // namespace weyl
