#include "weyl/constructions.hpp"

#include <stdexcept>

namespace weyl {

JetMap::JetMap(std::size_t n, unsigned degree_bound) : n_(n), k_(degree_bound) {
  for (auto& basis : monomials_up_to(n, degree_bound)) values_.emplace(std::move(basis), Poly(n));
}

const Poly& JetMap::at(const MultiIndex& basis) const {
  auto it = values_.find(basis);
  if (it == values_.end()) throw std::out_of_range("multi-index is not a basis monomial of the jet map");
  return it->second;
}

void JetMap::set(const MultiIndex& basis, Poly value) {
  auto it = values_.find(basis);
  if (it == values_.end()) throw std::out_of_range("multi-index is not a basis monomial of the jet map");
  if (value.num_vars() != n_) throw std::invalid_argument("jet value has wrong number of variables");
  it->second = std::move(value);
}

DiffOp d_basis(const Poly& f, const MultiIndex& index) {
  if (f.num_vars() != index.size()) throw std::invalid_argument("d_basis arguments differ in variable count");
  Rational scale(Integer(1), index.factorial());
  scale.canonicalize();
  return DiffOp::term(f * scale, index);
}

DiffOp from_jet_map(const JetMap& jet) {
  const std::size_t n = jet.num_vars();
  DiffOp op(n);
  for (unsigned d = 0; d <= jet.degree_bound(); ++d) {
    DiffOp stage(n);
    for (const auto& basis : monomials_of_degree(n, d)) {
      const Poly residual = jet.at(basis) - apply(op, Poly::monomial(basis));
      stage += d_basis(residual, basis);
    }
    op += stage;
  }
  return op;
}

JetMap restriction(const DiffOp& op, unsigned degree_bound) {
  JetMap jet(op.num_vars(), degree_bound);
  for (const auto& basis : monomials_up_to(op.num_vars(), degree_bound)) {
    jet.set(basis, apply(op, Poly::monomial(basis)));
  }
  return jet;
}

}  // namespace weyl
