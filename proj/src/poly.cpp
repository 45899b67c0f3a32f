#include "weyl/poly.hpp"

#include <stdexcept>

namespace weyl {

Poly Poly::constant(std::size_t n, const Rational& c) {
  Poly p(n);
  p.add_term(MultiIndex(n), c);
  return p;
}

Poly Poly::variable(std::size_t n, std::size_t var) {
  Poly p(n);
  p.add_term(MultiIndex::unit(n, var), 1);
  return p;
}

Poly Poly::monomial(const MultiIndex& exps, const Rational& c) {
  Poly p(exps.size());
  p.add_term(exps, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Degree Poly::degree() const {
  if (terms_.empty()) return Degree::none();
  return static_cast<int>(terms_.rbegin()->first.degree());
}

Rational Poly::coefficient(const MultiIndex& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const MultiIndex& exps, const Rational& c) {
  if (exps.size() != n_) throw std::invalid_argument("monomial has wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

const Poly::Terms::value_type& Poly::leading_term() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
  return *terms_.rbegin();
}

void Poly::check_same_ring(const Poly& other) const {
  if (n_ != other.n_) throw std::invalid_argument("polynomials over different variable counts");
}

Poly& Poly::operator+=(const Poly& other) {
  check_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_ring(b);
  Poly out(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
  }
  return out;
}

Poly operator-(Poly a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

std::string render_monomial(const MultiIndex& exps, std::string_view var_prefix) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += var_prefix;
    out += std::to_string(i + 1);
    if (exps[i] > 1) out += '^' + std::to_string(exps[i]);
  }
  return out;
}

std::string Poly::to_string(std::string_view var_prefix) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_zero()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += render_monomial(m, var_prefix);
    } else {
      out += magnitude.get_str() + '*' + render_monomial(m, var_prefix);
    }
  }
  return out;
}

Poly pow(const Poly& base, unsigned exponent) {
  Poly result = Poly::constant(base.num_vars(), 1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

Poly partial(const Poly& p, std::size_t var) {
  return partial(p, MultiIndex::unit(p.num_vars(), var));
}

Poly partial(const Poly& p, const MultiIndex& derivative) {
  if (derivative.size() != p.num_vars()) {
    throw std::invalid_argument("derivative multi-index has wrong number of variables");
  }
  Poly out(p.num_vars());
  for (const auto& [m, c] : p.terms()) {
    if (!derivative.divides(m)) continue;
    Rational coeff = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (unsigned j = 0; j < derivative[i]; ++j) coeff *= m[i] - j;
    }
    out.add_term(m - derivative, coeff);
  }
  return out;
}

Rational eval(const Poly& p, std::span<const Rational> point) {
  if (point.size() != p.num_vars()) throw std::invalid_argument("point has wrong dimension");
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (unsigned e = 0; e < m[i]; ++e) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

Poly reduce_by(const Poly& p, const Poly& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (p.num_vars() != g.num_vars()) {
    throw std::invalid_argument("polynomials over different variable counts");
  }
  const auto [lead_g, lead_coeff_g] = g.leading_term();
  Poly remainder(p.num_vars());
  Poly work = p;
  while (!work.is_zero()) {
    const auto [lead, coeff] = work.leading_term();
    if (lead_g.divides(lead)) {
      work -= Poly::monomial(lead - lead_g, coeff / lead_coeff_g) * g;
    } else {
      remainder.add_term(lead, coeff);
      work.add_term(lead, -coeff);
    }
  }
  return remainder;
}

}  // namespace weyl
