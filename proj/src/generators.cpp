#include "weyl/generators.hpp"

#include <set>
#include <stdexcept>

namespace weyl {

void GenConfig::validate() const {
  if (n < 1 || n > 3) throw std::invalid_argument("variable count must be between 1 and 3");
  if (max_order > 6) throw std::invalid_argument("max order must be at most 6");
  if (max_coeff_degree > 6) throw std::invalid_argument("max coefficient degree must be at most 6");
  if (coeff_bound < 1) throw std::invalid_argument("coefficient bound must be positive");
}

Rational gen_rational(const GenConfig& cfg, Rng& rng) {
  const std::int64_t bound = cfg.coeff_bound;
  std::int64_t num = rng.uniform(1, bound);
  if (rng.chance(1, 2)) num = -num;
  const std::int64_t den = rng.uniform(1, bound);
  Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

MultiIndex gen_multi_index(const GenConfig& cfg, Rng& rng, unsigned degree) {
  std::vector<unsigned> exps(cfg.n, 0);
  for (unsigned i = 0; i < degree; ++i) ++exps[rng.uniform(0, static_cast<std::int64_t>(cfg.n) - 1)];
  return MultiIndex(std::move(exps));
}

Poly gen_poly(const GenConfig& cfg, Rng& rng) {
  Poly p(cfg.n);
  const auto count = rng.uniform(0, 4);
  for (std::int64_t i = 0; i < count; ++i) {
    const auto degree = static_cast<unsigned>(rng.uniform(0, cfg.max_coeff_degree));
    p.add_term(gen_multi_index(cfg, rng, degree), gen_rational(cfg, rng));
  }
  return p;
}

Poly gen_nonzero_poly(const GenConfig& cfg, Rng& rng) {
  Poly p = gen_poly(cfg, rng);
  while (p.is_zero()) p = gen_poly(cfg, rng);
  return p;
}

DiffOp gen_diffop_of_order(const GenConfig& cfg, Rng& rng, unsigned order) {
  DiffOp op(cfg.n);
  std::set<MultiIndex> top;
  const auto top_count = rng.uniform(1, 2);
  for (std::int64_t i = 0; i < top_count; ++i) top.insert(gen_multi_index(cfg, rng, order));
  for (const auto& j : top) op.add_term(j, gen_nonzero_poly(cfg, rng));
  if (order > 0) {
    const auto lower_count = rng.uniform(0, 3);
    for (std::int64_t i = 0; i < lower_count; ++i) {
      const auto degree = static_cast<unsigned>(rng.uniform(0, order - 1));
      op.add_term(gen_multi_index(cfg, rng, degree), gen_poly(cfg, rng));
    }
  }
  return op;
}

DiffOp gen_diffop(const GenConfig& cfg, Rng& rng) {
  return gen_diffop_of_order(cfg, rng, static_cast<unsigned>(rng.uniform(0, cfg.max_order)));
}

DiffOp gen_vector_field(const GenConfig& cfg, Rng& rng) {
  std::vector<Poly> coeffs;
  for (std::size_t i = 0; i < cfg.n; ++i) coeffs.push_back(gen_poly(cfg, rng));
  const auto forced = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(cfg.n) - 1));
  if (coeffs[forced].is_zero()) coeffs[forced] = gen_nonzero_poly(cfg, rng);
  return from_vector_field(coeffs);
}

SymbolElem gen_symbol(const GenConfig& cfg, Rng& rng, unsigned grade) {
  SymbolElem s(cfg.n, grade);
  std::set<MultiIndex> keys;
  const auto count = rng.uniform(1, 3);
  for (std::int64_t i = 0; i < count; ++i) keys.insert(gen_multi_index(cfg, rng, grade));
  for (const auto& xi : keys) s.add_term(xi, gen_nonzero_poly(cfg, rng));
  return s;
}

std::vector<Rational> gen_point(const GenConfig& cfg, Rng& rng) {
  std::vector<Rational> point;
  for (std::size_t i = 0; i < cfg.n; ++i) {
    point.push_back(rng.chance(1, 4) ? Rational(0) : gen_rational(cfg, rng));
  }
  return point;
}

}  // namespace weyl
