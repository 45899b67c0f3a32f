#include "weyl/multi_index.hpp"

#include <numeric>
#include <stdexcept>

namespace weyl {

MultiIndex MultiIndex::unit(std::size_t n, std::size_t var) {
  if (var >= n) throw std::out_of_range("variable index out of range");
  MultiIndex result(n);
  result.exps_[var] = 1;
  return result;
}

unsigned MultiIndex::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0U);
}

Integer MultiIndex::factorial() const {
  Integer result = 1;
  for (unsigned e : exps_) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), e);
    result *= f;
  }
  return result;
}

bool MultiIndex::divides(const MultiIndex& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& other) {
  if (size() != other.size()) throw std::invalid_argument("multi-index length mismatch");
  for (std::size_t i = 0; i < size(); ++i) exps_[i] += other.exps_[i];
  return *this;
}

MultiIndex& MultiIndex::operator-=(const MultiIndex& other) {
  if (!other.divides(*this)) throw std::domain_error("multi-index difference would be negative");
  for (std::size_t i = 0; i < size(); ++i) exps_[i] -= other.exps_[i];
  return *this;
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.exps_ <=> b.exps_;
}

std::vector<MultiIndex> sub_indices(const MultiIndex& index) {
  std::vector<MultiIndex> out{MultiIndex(index.size())};
  for (std::size_t var = 0; var < index.size(); ++var) {
    std::vector<MultiIndex> next;
    next.reserve(out.size() * (index[var] + 1));
    for (const auto& partial : out) {
      for (unsigned e = 0; e <= index[var]; ++e) {
        std::vector<unsigned> exps(partial.exponents().begin(), partial.exponents().end());
        exps[var] = e;
        next.emplace_back(std::move(exps));
      }
    }
    out = std::move(next);
  }
  return out;
}

Integer multi_binomial(const MultiIndex& index, const MultiIndex& sub) {
  if (!sub.divides(index)) throw std::domain_error("binomial of non-dominated multi-index");
  Integer result = 1;
  for (std::size_t i = 0; i < index.size(); ++i) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), index[i], sub[i]);
    result *= c;
  }
  return result;
}

namespace {

// Exponent vectors of total degree `remaining` over variables [var, n),
// emitted with larger leading exponents first.
void fill_degree(std::vector<unsigned>& exps, std::size_t var, unsigned remaining,
                 std::vector<MultiIndex>& out) {
  if (var + 1 == exps.size()) {
    exps[var] = remaining;
    out.emplace_back(exps);
    exps[var] = 0;
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    exps[var] = e;
    fill_degree(exps, var + 1, remaining - e, out);
  }
  exps[var] = 0;
}

}  // namespace

std::vector<MultiIndex> monomials_of_degree(std::size_t n, unsigned k) {
  if (n == 0) throw std::invalid_argument("need at least one variable");
  std::vector<MultiIndex> out;
  std::vector<unsigned> exps(n, 0);
  fill_degree(exps, 0, k, out);
  return out;
}

std::vector<MultiIndex> monomials_up_to(std::size_t n, unsigned k) {
  std::vector<MultiIndex> out;
  for (unsigned d = 0; d <= k; ++d) {
    auto layer = monomials_of_degree(n, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace weyl
