#include <doctest.h>

#include "builders.hpp"
#include "weyl/constructions.hpp"
#include "weyl/diff_op.hpp"
#include "weyl/generators.hpp"

using namespace weyl;
using namespace weyl::testing;

TEST_CASE("apply") {
  const std::size_t n = 2;
  CHECK(apply(d(n, 1), t(n, 1) * t(n, 1)) == c(n, 2) * t(n, 1));
  CHECK(apply(m(t(n, 2)), t(n, 1)) == t(n, 1) * t(n, 2));

  // t1 d1 d2 applied to t1 t2^2, one step at a time
  const Poly p = t(n, 1) * t(n, 2) * t(n, 2);
  const DiffOp op = DiffOp::term(t(n, 1), MultiIndex{1, 1});
  const Poly stepwise = t(n, 1) * partial(partial(p, 1), 0);
  CHECK(stepwise == c(n, 2) * t(n, 1) * t(n, 2));
  CHECK(apply(op, p) == stepwise);
  CHECK_THROWS_AS(apply(op, t(3, 1)), std::invalid_argument);
}

TEST_CASE("multiplication operators") {
  const std::size_t n = 2;
  CHECK(m(c(n, 1)) == DiffOp::identity(n));
  CHECK(m(Poly(n)).is_zero());
  CHECK(apply(m(t(n, 1)), t(n, 2)) == t(n, 1) * t(n, 2));
  CHECK(m(t(n, 1)).order() == Degree(0));
}

TEST_CASE("vector fields") {
  const std::size_t n = 2;
  const std::vector<Poly> unit{c(n, 1), Poly(n)};
  CHECK(from_vector_field(unit) == d(n, 1));
  const std::vector<Poly> swap{t(n, 2), t(n, 1)};
  const DiffOp x = from_vector_field(swap);
  // Leibniz: X(t1 t2) = X(t1) t2 + t1 X(t2) = t2 * t2 + t1 * t1
  const Poly leibniz = apply(x, t(n, 1)) * t(n, 2) + t(n, 1) * apply(x, t(n, 2));
  CHECK(leibniz == t(n, 2) * t(n, 2) + t(n, 1) * t(n, 1));
  CHECK(apply(x, t(n, 1) * t(n, 2)) == leibniz);
  const std::vector<Poly> zeros{Poly(n), Poly(n)};
  CHECK(from_vector_field(zeros).is_zero());
  const std::vector<Poly> short_field{c(n, 1)};
  CHECK_THROWS_AS(from_vector_field(short_field), std::invalid_argument);
}

TEST_CASE("compose examples") {
  const std::size_t n = 2;
  const DiffOp lhs = compose(d(n, 1), m(t(n, 1)));
  const DiffOp expected = DiffOp::term(t(n, 1), MultiIndex{1, 0}) + DiffOp::identity(n);
  for (const auto& basis : monomials_up_to(n, 4)) {
    const Poly mono = Poly::monomial(basis);
    CHECK(apply(d(n, 1), t(n, 1) * mono) == apply(expected, mono));
  }
  CHECK(lhs == expected);
  CHECK(lhs.to_string() == "(t1)*d1 + 1");

  const DiffOp op = DiffOp::term(t(n, 2), MultiIndex{2, 1}) + m(t(n, 1));
  CHECK(compose(op, DiffOp::identity(n)) == op);
  CHECK(compose(DiffOp::identity(n), op) == op);
  CHECK(compose(d(n, 1), d(n, 2)) == DiffOp::term(c(n, 1), MultiIndex{1, 1}));
  CHECK_THROWS_AS(compose(d(2, 1), d(3, 1)), std::invalid_argument);
}

TEST_CASE("commutator examples and the sign convention") {
  const std::size_t n = 2;
  CHECK(commutator(d(n, 1), m(t(n, 1))) == DiffOp::identity(n));
  CHECK(commutator(m(t(n, 1)), d(n, 1)) == -DiffOp::identity(n));
  CHECK(commutator(d(n, 1), m(t(n, 2))).is_zero());
  const DiffOp op = DiffOp::term(t(n, 1) * t(n, 2), MultiIndex{1, 2}) + d(n, 2);
  CHECK(commutator(op, op).is_zero());
}

TEST_CASE("syntactic order") {
  const std::size_t n = 2;
  CHECK(m(pow(t(n, 1), 3)).order() == Degree(0));
  CHECK((DiffOp::term(t(n, 1), MultiIndex{1, 1}) + d(n, 1)).order() == Degree(2));
  CHECK(DiffOp(n).order().is_none());
}

TEST_CASE("vector space structure") {
  const std::size_t n = 2;
  const DiffOp op = DiffOp::term(t(n, 1) - c(n, 1), MultiIndex{0, 2}) + d(n, 1);
  CHECK((op + -op).is_zero());
  CHECK((Rational(0) * op).is_zero());
  CHECK(d(n, 1) + d(n, 1) == Rational(2) * d(n, 1));
  CHECK((d(n, 1) + d(n, 1)).to_string() == "(2)*d1");
}

TEST_CASE("rendering order") {
  const std::size_t n = 2;
  const DiffOp op = DiffOp::term(t(n, 2), MultiIndex{0, 1}) + DiffOp::term(c(n, 3), MultiIndex{1, 1}) +
                    DiffOp::term(c(n, -1), MultiIndex{2, 0}) + m(-t(n, 1) + c(n, 1));
  CHECK(op.to_string() == "(-1)*d1^2 + (3)*d1*d2 + (t2)*d2 - t1 + 1");
  CHECK(DiffOp(n).to_string() == "0");
}

TEST_CASE("random operator properties") {
  GenConfig cfg;
  Rng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const DiffOp a = gen_diffop(cfg, rng);
    const DiffOp b = gen_diffop(cfg, rng);
    const DiffOp e = gen_diffop(cfg, rng);
    const DiffOp ab = compose(a, b);

    for (int i = 0; i < 5; ++i) {
      const Poly p = gen_poly(cfg, rng);
      CHECK(apply(ab, p) == apply(a, apply(b, p)));
      CHECK(apply(a, p + p) == apply(a, p) + apply(a, p));
    }
    CHECK(compose(ab, e) == compose(a, compose(b, e)));
    CHECK(ab.order() == a.order() + b.order());
    CHECK(commutator(a, b).order() <= a.order() + b.order() + Degree(-1));
    CHECK(commutator(a, b) == -commutator(b, a));
    CHECK(commutator(a, commutator(b, e)) == commutator(commutator(a, b), e) + commutator(b, commutator(a, e)));

    // Leibniz peel: D(a1 r) = [D, m_a1](r) + a1 D(r)
    const Poly a1 = gen_poly(cfg, rng);
    const Poly rest = gen_poly(cfg, rng) * gen_poly(cfg, rng);
    CHECK(apply(a, a1 * rest) == apply(commutator(a, m(a1)), rest) + a1 * apply(a, rest));
  }
}

// The composite map p -> a(b(p)) is a differential operator of order
// ord a + ord b; interpolating it from its values on the monomial basis
// gives its normal form without using the composition formula.
TEST_CASE("compose agrees with interpolation of the apply-twice map") {
  GenConfig cfg;
  cfg.max_order = 2;
  Rng rng(5150);
  for (int trial = 0; trial < 40; ++trial) {
    const DiffOp a = gen_diffop(cfg, rng);
    const DiffOp b = gen_diffop(cfg, rng);
    const auto k = static_cast<unsigned>((a.order() + b.order()).value());
    JetMap jet(cfg.n, k);
    for (const auto& basis : monomials_up_to(cfg.n, k)) jet.set(basis, apply(a, apply(b, Poly::monomial(basis))));
    CHECK(compose(a, b) == from_jet_map(jet));
  }
}

TEST_CASE("Weyl relations in three variables") {
  const std::size_t n = 3;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      CHECK(commutator(m(t(n, i)), m(t(n, j))).is_zero());
      CHECK(commutator(d(n, i), d(n, j)).is_zero());
      CHECK(commutator(d(n, i), m(t(n, j))) == (i == j ? DiffOp::identity(n) : DiffOp(n)));
    }
  }
}
