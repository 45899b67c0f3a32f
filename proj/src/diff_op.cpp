#include "weyl/diff_op.hpp"

#include <stdexcept>

namespace weyl {

DiffOp DiffOp::identity(std::size_t n) { return from_poly(Poly::constant(n, 1)); }

DiffOp DiffOp::derivative(std::size_t n, std::size_t var) {
  return term(Poly::constant(n, 1), MultiIndex::unit(n, var));
}

DiffOp DiffOp::term(const Poly& coeff, const MultiIndex& derivative) {
  DiffOp op(coeff.num_vars());
  op.add_term(derivative, coeff);
  return op;
}

Degree DiffOp::order() const {
  if (terms_.empty()) return Degree::none();
  return static_cast<int>(terms_.rbegin()->first.degree());
}

Poly DiffOp::coefficient(const MultiIndex& derivative) const {
  auto it = terms_.find(derivative);
  return it == terms_.end() ? Poly(n_) : it->second;
}

void DiffOp::add_term(const MultiIndex& derivative, const Poly& coeff) {
  if (derivative.size() != n_ || coeff.num_vars() != n_) {
    throw std::invalid_argument("operator term has wrong number of variables");
  }
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(derivative, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void DiffOp::check_same_ring(const DiffOp& other) const {
  if (n_ != other.n_) throw std::invalid_argument("operators over different variable counts");
}

DiffOp& DiffOp::operator+=(const DiffOp& other) {
  check_same_ring(other);
  for (const auto& [j, f] : other.terms_) add_term(j, f);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& other) {
  check_same_ring(other);
  for (const auto& [j, f] : other.terms_) add_term(j, -f);
  return *this;
}

DiffOp& DiffOp::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [j, f] : terms_) f *= c;
  return *this;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) { return compose(a, b); }

std::string DiffOp::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [j, f] = *it;
    std::string piece = j.is_zero() ? f.to_string() : "(" + f.to_string() + ")*" + render_monomial(j, "d");
    if (out.empty()) {
      out = std::move(piece);
    } else if (piece.front() == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

DiffOp from_poly(const Poly& a) {
  return DiffOp::term(a, MultiIndex(a.num_vars()));
}

DiffOp from_vector_field(std::span<const Poly> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("vector field needs at least one component");
  const std::size_t n = coeffs.front().num_vars();
  if (coeffs.size() != n) throw std::invalid_argument("vector field must have one component per variable");
  DiffOp op(n);
  for (std::size_t i = 0; i < n; ++i) op.add_term(MultiIndex::unit(n, i), coeffs[i]);
  return op;
}

Poly apply(const DiffOp& op, const Poly& p) {
  if (op.num_vars() != p.num_vars()) throw std::invalid_argument("operator and polynomial differ in variable count");
  Poly out(p.num_vars());
  for (const auto& [j, f] : op.terms()) out += f * partial(p, j);
  return out;
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("operators over different variable counts");
  DiffOp out(a.num_vars());
  for (const auto& [outer, f] : a.terms()) {
    const auto splits = sub_indices(outer);
    for (const auto& [inner, g] : b.terms()) {
      for (const auto& k : splits) {
#ifdef WEYL_MUTATE_COMPOSE_BINOMIAL
        const Integer binom = 1;
#else
        const Integer binom = multi_binomial(outer, k);
#endif
        Poly coeff = partial(g, outer - k);
        if (coeff.is_zero()) continue;
        coeff *= f;
        coeff *= Rational(binom);
        out.add_term(k + inner, coeff);
      }
    }
  }
  return out;
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return compose(a, b) - compose(b, a); }

}  // namespace weyl
