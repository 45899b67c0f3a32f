#include "weyl/grothendieck.hpp"

#include <stdexcept>

namespace weyl {

bool is_order_at_most(const DiffOp& op, int order) {
  if (op.is_zero()) return true;
  if (order < 0) return false;
  const std::size_t n = op.num_vars();
  for (std::size_t j = 0; j < n; ++j) {
    const DiffOp bracket = commutator(op, from_poly(Poly::variable(n, j)));
    if (!is_order_at_most(bracket, order - 1)) return false;
  }
  return true;
}

Degree grothendieck_order(const DiffOp& op) {
  const Degree syntactic = op.order();
  if (syntactic.is_none()) return Degree::none();
  for (int i = 0; i <= syntactic.value(); ++i) {
    if (is_order_at_most(op, i)) {
      if (i != syntactic.value()) {
        throw std::logic_error("commutator order " + std::to_string(i) + " below syntactic order " +
                               syntactic.to_string() + " for " + op.to_string());
      }
      return i;
    }
  }
  throw std::logic_error("commutator test fails at the syntactic order for " + op.to_string());
}

OrderOneSplit split_order_one(const DiffOp& op) {
  if (op.order() > Degree(1)) {
    throw std::invalid_argument("split_order_one needs an operator of order at most 1");
  }
  Poly multiplier = apply(op, Poly::constant(op.num_vars(), 1));
  DiffOp derivation = op - from_poly(multiplier);
  return {std::move(derivation), std::move(multiplier)};
}

bool is_derivation(const DiffOp& op) {
  for (const auto& [j, f] : op.terms()) {
    if (j.degree() != 1) return false;
  }
  return true;
}

bool leibniz_holds(const DiffOp& op, const Poly& p, const Poly& q) {
  return apply(op, p * q) == apply(op, p) * q + p * apply(op, q);
}

}  // namespace weyl
