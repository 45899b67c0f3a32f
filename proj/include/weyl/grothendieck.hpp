#pragma once

#include "weyl/degree.hpp"
#include "weyl/diff_op.hpp"
#include "weyl/poly.hpp"

namespace weyl {

/// Decides D in Diff^i by the inductive commutator definition: D has order
/// <= i iff every [D, m_{t_j}] has order <= i-1, with Diff^{-1} = {0}.
///
/// Only the coordinate multiplications m_{t_j} are tested. That suffices for
/// all m_a: ad_D(m) = [D, m] obeys [D, m_{ab}] = [D, m_a] m_b + m_a [D, m_b],
/// so by induction on monomials and linearity the order bound passes from the
/// generators t_j to every polynomial a.
///
/// A negative `order` is accepted and holds only for the zero operator.
bool is_order_at_most(const DiffOp& op, int order);

/// Least i with is_order_at_most(op, i), found by searching up to the
/// syntactic order. Throws std::logic_error if the two notions of order
/// disagree, which would contradict the normal-form theorem.
Degree grothendieck_order(const DiffOp& op);

struct OrderOneSplit {
  DiffOp derivation;  ///< X = D - m_{D(1)}
  Poly multiplier;    ///< D(1)
};

/// Writes an operator of order <= 1 as X + m_a with X a derivation.
/// Throws std::invalid_argument for operators of order >= 2.
OrderOneSplit split_order_one(const DiffOp& op);

/// True iff every normal-form term of `op` has |J| = 1, i.e. op = sum a_i d_i.
bool is_derivation(const DiffOp& op);

/// op(pq) == op(p) q + p op(q).
bool leibniz_holds(const DiffOp& op, const Poly& p, const Poly& q);

}  // namespace weyl
