#include <doctest.h>

#include "builders.hpp"
#include "weyl/generators.hpp"
#include "weyl/poly.hpp"

using namespace weyl;
using namespace weyl::testing;

TEST_CASE("addition") {
  const std::size_t n = 2;
  CHECK((t(n, 1) + -t(n, 1)).is_zero());
  const Poly a = t(n, 1) * t(n, 1) + c(n, 1);
  const Poly b = c(n, 2) * t(n, 1) * t(n, 1);
  const Poly sum = a + b;
  // coefficientwise: t1^2 gets 1 + 2, the constant keeps 1
  CHECK(sum.coefficient(MultiIndex{2, 0}) == 3);
  CHECK(sum.coefficient(MultiIndex{0, 0}) == 1);
  CHECK(sum.terms().size() == 2);
  CHECK(a + Poly(n) == a);
}

TEST_CASE("multiplication") {
  const std::size_t n = 2;
  CHECK((t(n, 1) + t(n, 2)) * (t(n, 1) - t(n, 2)) == t(n, 1) * t(n, 1) - t(n, 2) * t(n, 2));
  const Poly p = c(n, q(3, 2)) * t(n, 2) + c(n, 1);
  CHECK(p * c(n, 1) == p);
  CHECK(t(n, 1) * (t(n, 1) * t(n, 1)) == Poly::monomial(MultiIndex{3, 0}));
  CHECK((p * Poly(n)).is_zero());
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(t(2, 1) + t(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(t(2, 1) * t(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(Poly::variable(2, 2), std::out_of_range);
  const std::vector<Rational> point{1};
  CHECK_THROWS_AS(eval(t(2, 1), point), std::invalid_argument);
}

TEST_CASE("degree") {
  CHECK(Poly(2).degree().is_none());
  CHECK(c(2, 5).degree() == Degree(0));
  CHECK((t(2, 1) * t(2, 2) + t(2, 2)).degree() == Degree(2));
  CHECK(Degree::none() < Degree(0));
  CHECK((Degree::none() + Degree(3)).is_none());
}

TEST_CASE("partial derivatives") {
  const std::size_t n = 2;
  CHECK(partial(pow(t(n, 1), 3), 0) == c(n, 3) * t(n, 1) * t(n, 1));
  CHECK(partial(t(n, 1), 1).is_zero());
  // termwise power rule: d1(t1 t2) = t2, d1(t1^2) = 2 t1
  const Poly p = t(n, 1) * t(n, 2) + t(n, 1) * t(n, 1);
  CHECK(partial(p, 0) == t(n, 2) + c(n, 2) * t(n, 1));
  CHECK(partial(p, MultiIndex{1, 1}) == c(n, 1));
  CHECK(partial(p, MultiIndex{2, 0}) == c(n, 2));
  CHECK_THROWS_AS(partial(p, 2), std::out_of_range);
}

TEST_CASE("evaluation") {
  const std::size_t n = 2;
  const std::vector<Rational> point{2, 3};
  CHECK(eval(t(n, 1) * t(n, 1) + t(n, 2), point) == 7);
  CHECK(eval(Poly(n), point) == 0);
  CHECK(eval(c(n, q(-7, 3)), point) == q(-7, 3));
}

TEST_CASE("rendering") {
  const std::size_t n = 2;
  const Poly p = c(n, 3) * t(n, 1) * t(n, 1) * t(n, 2) - c(n, q(1, 2)) * t(n, 2) + c(n, 4);
  CHECK(p.to_string() == "3*t1^2*t2 - 1/2*t2 + 4");
  CHECK((-t(n, 1) + t(n, 2)).to_string() == "-t1 + t2");
  CHECK(Poly(n).to_string() == "0");
  CHECK(c(n, q(-5, 3)).to_string() == "-5/3");
}

TEST_CASE("reduce_by") {
  const std::size_t n = 2;
  const Poly t1 = t(n, 1);
  const Poly t2 = t(n, 2);
  CHECK(reduce_by(t1 * t1 - t2 * t2, t1 - t2).is_zero());
  CHECK(reduce_by(t1, t2) == t1);
  CHECK_THROWS_AS(reduce_by(t1, Poly(n)), std::domain_error);

  GenConfig cfg;
  cfg.n = 3;
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const Poly g = gen_nonzero_poly(cfg, rng);
    const Poly h = gen_poly(cfg, rng);
    CHECK(reduce_by(g * h, g).is_zero());
    CHECK(reduce_by(g * h + c(3, 1), g) == (g.is_constant() ? Poly(3) : c(3, 1)));
  }
}

TEST_CASE("ring axioms on random triples") {
  GenConfig cfg;
  Rng rng(2024);
  const std::vector<Rational> point{q(1, 2), q(-2), q(3, 5)};
  for (int i = 0; i < 100; ++i) {
    const Poly a = gen_poly(cfg, rng);
    const Poly b = gen_poly(cfg, rng);
    const Poly e = gen_poly(cfg, rng);
    CHECK((a * b) * e == a * (b * e));
    CHECK(a * (b + e) == a * b + a * e);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    CHECK(eval(a * b, point) == eval(a, point) * eval(b, point));
    CHECK(eval(a + b, point) == eval(a, point) + eval(b, point));
    CHECK(partial(partial(a, 0), 2) == partial(partial(a, 2), 0));
    CHECK(partial(a * b, 1) == partial(a, 1) * b + a * partial(b, 1));
  }
}
