#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "weyl/diff_op.hpp"
#include "weyl/multi_index.hpp"
#include "weyl/poly.hpp"

namespace weyl {

/// Homogeneous element of the symbol algebra: sum_J a_J(t) xi^J with every
/// |J| equal to the grade. Grade k stands for Diff^k / Diff^{k-1}.
class SymbolElem {
 public:
  using Terms = std::map<MultiIndex, Poly>;

  SymbolElem(std::size_t n, unsigned grade) : n_(n), grade_(grade) {}

  std::size_t num_vars() const { return n_; }
  unsigned grade() const { return grade_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Poly coefficient(const MultiIndex& xi) const;
  /// Throws std::invalid_argument when |xi| differs from the grade.
  void add_term(const MultiIndex& xi, const Poly& coeff);

  /// Same-grade sum; throws std::invalid_argument across grades.
  SymbolElem& operator+=(const SymbolElem& other);
  /// R-module structure.
  SymbolElem& operator*=(const Poly& a);

  friend SymbolElem operator+(SymbolElem a, const SymbolElem& b) { return a += b; }
  /// Commutative product; grades add.
  friend SymbolElem operator*(const SymbolElem& a, const SymbolElem& b);

  friend bool operator==(const SymbolElem&, const SymbolElem&) = default;

  /// Same layout as DiffOp::to_string with xi^J written `x1^a*x2^b`.
  std::string to_string(std::string_view xi_prefix = "x") const;

 private:
  std::size_t n_;
  unsigned grade_;
  Terms terms_;
};

inline SymbolElem symbol_mul(const SymbolElem& a, const SymbolElem& b) { return a * b; }

/// Class of `op` in grade k: its |J| = k terms with d^J read as xi^J.
/// Zero when op has order < k; throws std::invalid_argument when order > k.
SymbolElem principal_symbol(const DiffOp& op, unsigned grade);

/// Principal symbol in the operator's own order (grade 0 for the zero operator).
SymbolElem principal_symbol(const DiffOp& op);

/// Normal-ordered quantization xi^J -> d^J, a section of principal_symbol.
DiffOp quantize(const SymbolElem& symbol);

/// The isomorphism Der(R) -> Symb^1. Throws std::invalid_argument unless
/// is_derivation(derivation).
SymbolElem derivation_symbol(const DiffOp& derivation);

}  // namespace weyl
