#pragma once

#include <cstddef>
#include <map>

#include "weyl/diff_op.hpp"
#include "weyl/multi_index.hpp"
#include "weyl/poly.hpp"

namespace weyl {

/// A linear map A : R_{<=k} -> R recorded by its values A(t^I) on the
/// monomial basis. The map is total: basis monomials without an explicit
/// value send to zero.
class JetMap {
 public:
  JetMap(std::size_t n, unsigned degree_bound);

  std::size_t num_vars() const { return n_; }
  unsigned degree_bound() const { return k_; }
  const std::map<MultiIndex, Poly>& values() const { return values_; }

  /// Throws std::out_of_range for a multi-index outside the basis.
  const Poly& at(const MultiIndex& basis) const;
  void set(const MultiIndex& basis, Poly value);

  friend bool operator==(const JetMap&, const JetMap&) = default;

 private:
  std::size_t n_;
  unsigned k_;
  std::map<MultiIndex, Poly> values_;
};

/// (f / I!) d^I: sends t^I to f and kills every other monomial of degree
/// <= |I|.
DiffOp d_basis(const Poly& f, const MultiIndex& index);

/// An operator of order <= k whose restriction to R_{<=k} is A.
///
/// Built degree by degree: at stage d the operator assembled so far is
/// applied to each degree-d monomial, and d_basis(A(t^I) - D(t^I), I) is added
/// to cancel the residual. New stage-d terms vanish on every basis monomial
/// of degree <= d except their own, so earlier stages stay exact.
DiffOp from_jet_map(const JetMap& jet);

/// D restricted to R_{<=k}: the values D(t^I) for |I| <= k.
JetMap restriction(const DiffOp& op, unsigned degree_bound);

}  // namespace weyl
