#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "weyl/rational.hpp"

namespace weyl {

/// Exponent vector (i_1, ..., i_n) of a monomial t^I or a derivative d^I.
///
/// Ordering is graded lexicographic: first by total degree |I|, then
/// lexicographically with t1 > t2 > ... > tn.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : exps_(n, 0) {}
  explicit MultiIndex(std::vector<unsigned> exps) : exps_(std::move(exps)) {}
  MultiIndex(std::initializer_list<unsigned> exps) : exps_(exps) {}

  /// Index with a single 1 in position `var`.
  static MultiIndex unit(std::size_t n, std::size_t var);

  std::size_t size() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  std::span<const unsigned> exponents() const { return exps_; }

  unsigned degree() const;
  bool is_zero() const { return degree() == 0; }

  /// I! = i_1! * ... * i_n!
  Integer factorial() const;

  /// Componentwise I <= J.
  bool divides(const MultiIndex& other) const;

  MultiIndex& operator+=(const MultiIndex& other);
  /// Componentwise difference; throws std::domain_error unless other <= *this.
  MultiIndex& operator-=(const MultiIndex& other);

  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
  friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) { return a -= b; }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

 private:
  std::vector<unsigned> exps_;
};

/// All K with K <= I componentwise, in no particular order.
std::vector<MultiIndex> sub_indices(const MultiIndex& index);

/// Product of binomials C(i_l, k_l); requires K <= I.
Integer multi_binomial(const MultiIndex& index, const MultiIndex& sub);

/// Basis monomials of the polynomials of degree <= k in n variables:
/// increasing total degree, and within one degree t1 before t2 before ...
/// (descending lexicographic). The list has C(n+k, k) entries.
std::vector<MultiIndex> monomials_up_to(std::size_t n, unsigned k);

/// Multi-indices of total degree exactly k, in the same order.
std::vector<MultiIndex> monomials_of_degree(std::size_t n, unsigned k);

}  // namespace weyl
