#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "weyl/diff_op.hpp"
#include "weyl/poly.hpp"
#include "weyl/random.hpp"
#include "weyl/symbols.hpp"

namespace weyl {

/// Size bounds for randomly generated instances.
struct GenConfig {
  std::size_t n = 3;              ///< variable count, 1..3
  unsigned max_order = 3;         ///< operator order bound
  unsigned max_coeff_degree = 3;  ///< degree bound of coefficient polynomials
  unsigned coeff_bound = 5;       ///< |numerator| and denominator bound
  unsigned trials = 100;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument when a bound is out of its sensible range.
  void validate() const;
};

/// Nonzero rational p/q with |p|, q <= coeff_bound.
Rational gen_rational(const GenConfig& cfg, Rng& rng);

/// Exponent vector of total degree exactly `degree`, units dropped on
/// uniformly random variables.
MultiIndex gen_multi_index(const GenConfig& cfg, Rng& rng, unsigned degree);

/// Sparse polynomial with up to four terms of degree <= max_coeff_degree;
/// may be zero.
Poly gen_poly(const GenConfig& cfg, Rng& rng);
Poly gen_nonzero_poly(const GenConfig& cfg, Rng& rng);

/// Operator of syntactic order exactly `order`: one or two top-order terms
/// plus up to three lower-order terms.
DiffOp gen_diffop_of_order(const GenConfig& cfg, Rng& rng, unsigned order);

/// Operator whose order is drawn uniformly from [0, max_order].
DiffOp gen_diffop(const GenConfig& cfg, Rng& rng);

/// Nonzero vector field sum a_i d_i.
DiffOp gen_vector_field(const GenConfig& cfg, Rng& rng);

/// Nonzero homogeneous symbol of the given grade.
SymbolElem gen_symbol(const GenConfig& cfg, Rng& rng, unsigned grade);

/// Rational point with coordinates in the same bounds as coefficients (zero
/// allowed).
std::vector<Rational> gen_point(const GenConfig& cfg, Rng& rng);

}  // namespace weyl
