#include "weyl/symbols.hpp"

#include <stdexcept>

#include "weyl/grothendieck.hpp"

namespace weyl {

Poly SymbolElem::coefficient(const MultiIndex& xi) const {
  auto it = terms_.find(xi);
  return it == terms_.end() ? Poly(n_) : it->second;
}

void SymbolElem::add_term(const MultiIndex& xi, const Poly& coeff) {
  if (xi.size() != n_ || coeff.num_vars() != n_) {
    throw std::invalid_argument("symbol term has wrong number of variables");
  }
  if (xi.degree() != grade_) throw std::invalid_argument("symbol term is not of the declared grade");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(xi, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

SymbolElem& SymbolElem::operator+=(const SymbolElem& other) {
  if (n_ != other.n_ || grade_ != other.grade_) {
    throw std::invalid_argument("symbols of different grade or variable count");
  }
  for (const auto& [xi, a] : other.terms_) add_term(xi, a);
  return *this;
}

SymbolElem& SymbolElem::operator*=(const Poly& a) {
  if (a.num_vars() != n_) throw std::invalid_argument("symbols over different variable counts");
  Terms scaled;
  for (const auto& [xi, coeff] : terms_) {
    Poly p = coeff * a;
    if (!p.is_zero()) scaled.emplace(xi, std::move(p));
  }
  terms_ = std::move(scaled);
  return *this;
}

SymbolElem operator*(const SymbolElem& a, const SymbolElem& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("symbols over different variable counts");
  SymbolElem out(a.n_, a.grade_ + b.grade_);
  for (const auto& [xa, ca] : a.terms_) {
    for (const auto& [xb, cb] : b.terms_) out.add_term(xa + xb, ca * cb);
  }
  return out;
}

std::string SymbolElem::to_string(std::string_view xi_prefix) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [xi, a] = *it;
    std::string piece =
        xi.is_zero() ? a.to_string() : "(" + a.to_string() + ")*" + render_monomial(xi, xi_prefix);
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

SymbolElem principal_symbol(const DiffOp& op, unsigned grade) {
  if (op.order() > Degree(static_cast<int>(grade))) {
    throw std::invalid_argument("operator of order " + op.order().to_string() +
                                " has no class in grade " + std::to_string(grade));
  }
  SymbolElem out(op.num_vars(), grade);
  for (const auto& [j, f] : op.terms()) {
    if (j.degree() == grade) out.add_term(j, f);
  }
  return out;
}

SymbolElem principal_symbol(const DiffOp& op) {
  const Degree order = op.order();
  return principal_symbol(op, order.is_none() ? 0U : static_cast<unsigned>(order.value()));
}

DiffOp quantize(const SymbolElem& symbol) {
  DiffOp out(symbol.num_vars());
  for (const auto& [xi, a] : symbol.terms()) out.add_term(xi, a);
  return out;
}

SymbolElem derivation_symbol(const DiffOp& derivation) {
  if (!is_derivation(derivation)) throw std::invalid_argument("operator is not a derivation");
  return principal_symbol(derivation, 1);
}

}  // namespace weyl
