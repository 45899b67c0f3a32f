#include "weyl/laws.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "weyl/constructions.hpp"
#include "weyl/grothendieck.hpp"
#include "weyl/symbols.hpp"

namespace weyl {
namespace {

using Outcome = std::optional<std::string>;
using TrialFn = std::function<Outcome(const GenConfig&, Rng&, unsigned trial)>;

// Joins `name = value` pairs into one counterexample line.
class Witness {
 public:
  Witness& operator()(std::string_view name, const std::string& value) {
    if (!text_.empty()) text_ += "; ";
    text_ += name;
    text_ += " = ";
    text_ += value;
    return *this;
  }
  Outcome fail() const { return text_; }

 private:
  std::string text_;
};

Outcome compose_oracle(const GenConfig& cfg, Rng& rng, unsigned) {
  const DiffOp d1 = gen_diffop(cfg, rng);
  const DiffOp d2 = gen_diffop(cfg, rng);
  const DiffOp product = compose(d1, d2);
  for (int i = 0; i < 10; ++i) {
    const Poly p = gen_poly(cfg, rng);
    const Poly lhs = apply(product, p);
    const Poly rhs = apply(d1, apply(d2, p));
    if (lhs != rhs) {
      return Witness()("D1", d1.to_string())("D2", d2.to_string())("p", p.to_string())(
                 "(D1*D2)(p)", lhs.to_string())("D1(D2(p))", rhs.to_string())
          .fail();
    }
  }
  return std::nullopt;
}

Outcome filtration_additivity(const GenConfig& cfg, Rng& rng, unsigned) {
  const DiffOp d1 = gen_diffop(cfg, rng);
  const DiffOp d2 = gen_diffop(cfg, rng);
  const DiffOp product = compose(d1, d2);
  if (product.order() != d1.order() + d2.order()) {
    return Witness()("D1", d1.to_string())("D2", d2.to_string())("D1*D2", product.to_string())(
               "order", product.order().to_string())
        .fail();
  }
  return std::nullopt;
}

Outcome commutator_drop(const GenConfig& cfg, Rng& rng, unsigned) {
  const DiffOp d1 = gen_diffop(cfg, rng);
  const DiffOp d2 = gen_diffop(cfg, rng);
  const DiffOp bracket = commutator(d1, d2);
  const Degree bound = d1.order() + d2.order() + Degree(-1);
  if (bracket.order() > bound) {
    return Witness()("D1", d1.to_string())("D2", d2.to_string())("[D1,D2]", bracket.to_string())(
               "order", bracket.order().to_string())("bound", bound.to_string())
        .fail();
  }
  return std::nullopt;
}

Outcome jacobi(const GenConfig& cfg, Rng& rng, unsigned) {
  const DiffOp a = gen_diffop(cfg, rng);
  const DiffOp b = gen_diffop(cfg, rng);
  const DiffOp c = gen_diffop(cfg, rng);
  const DiffOp lhs = commutator(a, commutator(b, c));
  const DiffOp rhs = commutator(commutator(a, b), c) + commutator(b, commutator(a, c));
  if (lhs != rhs) {
    return Witness()("A", a.to_string())("B", b.to_string())("C", c.to_string())(
               "[A,[B,C]]", lhs.to_string())("[[A,B],C]+[B,[A,C]]", rhs.to_string())
        .fail();
  }
  return std::nullopt;
}

Outcome leibniz_peel(const GenConfig& cfg, Rng& rng, unsigned) {
  const DiffOp d = gen_diffop(cfg, rng);
  const int k = std::max(d.order().value(), 1);
  const Poly first = gen_poly(cfg, rng);
  Poly rest = Poly::constant(cfg.n, 1);
  for (int i = 1; i < k; ++i) rest *= gen_poly(cfg, rng);
  const DiffOp peeled = commutator(d, from_poly(first));
  const Poly lhs = apply(d, first * rest);
  const Poly rhs = apply(peeled, rest) + first * apply(d, rest);
  if (lhs != rhs || peeled.order() > d.order() + Degree(-1)) {
    return Witness()("D", d.to_string())("a1", first.to_string())("a2...ak", rest.to_string())(
               "D'", peeled.to_string())("D(a1...ak)", lhs.to_string())(
               "D'(a2...ak) + a1 D(a2...ak)", rhs.to_string())
        .fail();
  }
  return std::nullopt;
}

// Even trials use a principal ideal (g), odd trials the maximal ideal of a
// rational point. f is a product of order+1 ideal members in both cases.
Outcome ideal_lemma(const GenConfig& cfg, Rng& rng, unsigned trial) {
  const DiffOp d = gen_diffop(cfg, rng);
  const int k = d.order().value();
  if (trial % 2 == 0) {
    Poly g = gen_nonzero_poly(cfg, rng);
    if (g.is_constant()) {
      g += Poly::variable(cfg.n, static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(cfg.n) - 1)));
    }
    Poly f = Poly::constant(cfg.n, 1);
    for (int i = 0; i <= k; ++i) f *= g * gen_nonzero_poly(cfg, rng);
    const Poly image = apply(d, f);
    const Poly remainder = reduce_by(image, g);
    if (!remainder.is_zero()) {
      return Witness()("D", d.to_string())("g", g.to_string())("f", f.to_string())(
                 "D(f) mod g", remainder.to_string())
          .fail();
    }
    return std::nullopt;
  }
  const std::vector<Rational> point = gen_point(cfg, rng);
  Poly f = Poly::constant(cfg.n, 1);
  for (int i = 0; i <= k; ++i) {
    Poly member = gen_poly(cfg, rng);
    member -= Poly::constant(cfg.n, eval(member, point));
    if (member.is_zero()) {
      const auto var = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(cfg.n) - 1));
      member = Poly::variable(cfg.n, var) - Poly::constant(cfg.n, point[var]);
    }
    f *= member;
  }
  const Rational value = eval(apply(d, f), point);
  if (value != 0) {
    std::string coords;
    for (const auto& x : point) coords += (coords.empty() ? "" : ",") + x.get_str();
    return Witness()("D", d.to_string())("x", "(" + coords + ")")("f", f.to_string())(
               "D(f)(x)", value.get_str())
        .fail();
  }
  return std::nullopt;
}

// Cycles through pure multiplications, pure derivations and general operators.
Outcome gorder_eq_syntactic(const GenConfig& cfg, Rng& rng, unsigned trial) {
  DiffOp d(cfg.n);
  switch (trial % 3) {
    case 0: d = gen_diffop_of_order(cfg, rng, 0); break;
    case 1: d = gen_vector_field(cfg, rng); break;
    default: d = gen_diffop(cfg, rng); break;
  }
  const Degree order = grothendieck_order(d);
  if (order != d.order()) {
    return Witness()("D", d.to_string())("grothendieck", order.to_string())("syntactic", d.order().to_string())
        .fail();
  }
  return std::nullopt;
}

Outcome generator_sufficiency(const GenConfig& cfg, Rng& rng, unsigned) {
  const DiffOp d = gen_diffop(cfg, rng);
  const int i = d.order().value();
  const Poly a = gen_poly(cfg, rng);
  const DiffOp bracket = commutator(d, from_poly(a));
  if (is_order_at_most(d, i) && !is_order_at_most(bracket, i - 1)) {
    return Witness()("D", d.to_string())("a", a.to_string())("[D,m_a]", bracket.to_string()).fail();
  }
  return std::nullopt;
}

Outcome diff1_split(const GenConfig& cfg, Rng& rng, unsigned) {
  const DiffOp d = gen_diffop_of_order(cfg, rng, static_cast<unsigned>(rng.uniform(0, 1)));
  const auto [x, a] = split_order_one(d);
  bool ok = is_derivation(x) && x + from_poly(a) == d &&
            a == apply(d, Poly::constant(cfg.n, 1));
  for (int i = 0; ok && i < 3; ++i) {
    const Poly p = gen_poly(cfg, rng);
    const Poly q = gen_poly(cfg, rng);
    ok = leibniz_holds(x, p, q);
  }
  if (!ok) return Witness()("D", d.to_string())("X", x.to_string())("a", a.to_string()).fail();
  return std::nullopt;
}

Outcome reconstruction(const GenConfig& cfg, Rng& rng, unsigned) {
  const DiffOp d = gen_diffop(cfg, rng);
  const auto k = static_cast<unsigned>(d.order().value());
  const DiffOp rebuilt = from_jet_map(restriction(d, k));
  if (rebuilt != d) {
    return Witness()("D", d.to_string())("k", std::to_string(k))("rebuilt", rebuilt.to_string()).fail();
  }
  const DiffOp from_zero = from_jet_map(JetMap(cfg.n, k));
  if (!from_zero.is_zero()) {
    return Witness()("k", std::to_string(k))("from zero jet", from_zero.to_string()).fail();
  }
  return std::nullopt;
}

Outcome interpolation(const GenConfig& cfg, Rng& rng, unsigned) {
  const auto k = static_cast<unsigned>(rng.uniform(0, cfg.max_order));
  JetMap jet(cfg.n, k);
  for (const auto& basis : monomials_up_to(cfg.n, k)) jet.set(basis, gen_poly(cfg, rng));
  const DiffOp d = from_jet_map(jet);
  if (d.order() > Degree(static_cast<int>(k)) || restriction(d, k) != jet) {
    std::string values;
    for (const auto& [basis, value] : jet.values()) {
      values += (values.empty() ? "" : ", ") + render_monomial(basis, "t") + " -> " + value.to_string();
    }
    return Witness()("A", "{" + values + "}")("D", d.to_string()).fail();
  }
  return std::nullopt;
}

Outcome symbol_mult(const GenConfig& cfg, Rng& rng, unsigned) {
  const DiffOp d1 = gen_diffop(cfg, rng);
  const DiffOp d2 = gen_diffop(cfg, rng);
  const auto i = static_cast<unsigned>(d1.order().value());
  const auto j = static_cast<unsigned>(d2.order().value());
  const SymbolElem lhs = principal_symbol(compose(d1, d2), i + j);
  const SymbolElem rhs = principal_symbol(d1, i) * principal_symbol(d2, j);
  if (lhs != rhs) {
    return Witness()("D1", d1.to_string())("D2", d2.to_string())("sigma(D1*D2)", lhs.to_string())(
               "sigma(D1)sigma(D2)", rhs.to_string())
        .fail();
  }
  return std::nullopt;
}

Outcome gr_commutative(const GenConfig& cfg, Rng& rng, unsigned) {
  const DiffOp d1 = gen_diffop(cfg, rng);
  const DiffOp d2 = gen_diffop(cfg, rng);
  const auto top = static_cast<unsigned>((d1.order() + d2.order()).value());
  const SymbolElem forward = principal_symbol(compose(d1, d2), top);
  const SymbolElem backward = principal_symbol(compose(d2, d1), top);
  const SymbolElem bracket = principal_symbol(commutator(d1, d2), top);
  if (forward != backward || !bracket.is_zero()) {
    return Witness()("D1", d1.to_string())("D2", d2.to_string())("sigma(D1*D2)", forward.to_string())(
               "sigma(D2*D1)", backward.to_string())("sigma([D1,D2])", bracket.to_string())
        .fail();
  }
  return std::nullopt;
}

Outcome quantize_roundtrip(const GenConfig& cfg, Rng& rng, unsigned) {
  const auto grade = static_cast<unsigned>(rng.uniform(0, cfg.max_order));
  const SymbolElem s = gen_symbol(cfg, rng, grade);
  const DiffOp q = quantize(s);
  if (principal_symbol(q, grade) != s || q.order() != Degree(static_cast<int>(grade))) {
    return Witness()("s", s.to_string())("quantize(s)", q.to_string()).fail();
  }

  const DiffOp x = gen_vector_field(cfg, rng);
  const SymbolElem sx = derivation_symbol(x);
  if (quantize(sx) != x) {
    return Witness()("X", x.to_string())("sigma(X)", sx.to_string())("quantize", quantize(sx).to_string()).fail();
  }

  const SymbolElem u = gen_symbol(cfg, rng, 1);
  const SymbolElem v = gen_symbol(cfg, rng, 1);
  const SymbolElem product = principal_symbol(compose(quantize(u), quantize(v)), 2);
  if (product != u * v) {
    return Witness()("u", u.to_string())("v", v.to_string())("sigma(q(u)q(v))", product.to_string())(
               "u*v", (u * v).to_string())
        .fail();
  }

  const Poly a = gen_poly(cfg, rng);
  if (principal_symbol(from_poly(a), 0).coefficient(MultiIndex(cfg.n)) != a) {
    return Witness()("a", a.to_string())("sigma_0(m_a)", principal_symbol(from_poly(a), 0).to_string()).fail();
  }
  return std::nullopt;
}

// The defining relations in three variables, with [d_i, t_j] = delta_ij,
// plus [d_i, m_f] = m_{d_i f} on a random f.
Outcome weyl_relations(const GenConfig& cfg, Rng& rng, unsigned) {
  constexpr std::size_t n = 3;
  const DiffOp zero(n);
  const DiffOp one = DiffOp::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    const DiffOp ti = from_poly(Poly::variable(n, i));
    const DiffOp di = DiffOp::derivative(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      const DiffOp tj = from_poly(Poly::variable(n, j));
      const DiffOp dj = DiffOp::derivative(n, j);
      const std::string ij = std::to_string(i + 1) + "," + std::to_string(j + 1);
      if (commutator(ti, tj) != zero) return Witness()("[t_i,t_j], i,j", ij)("got", commutator(ti, tj).to_string()).fail();
      if (commutator(di, dj) != zero) return Witness()("[d_i,d_j], i,j", ij)("got", commutator(di, dj).to_string()).fail();
      const DiffOp expected = i == j ? one : zero;
      if (commutator(di, tj) != expected) {
        return Witness()("[d_i,t_j], i,j", ij)("got", commutator(di, tj).to_string()).fail();
      }
    }
  }
  const Poly f = gen_poly(cfg, rng);
  const auto var = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(cfg.n) - 1));
  const DiffOp bracket = commutator(DiffOp::derivative(cfg.n, var), from_poly(f));
  if (bracket != from_poly(partial(f, var))) {
    return Witness()("f", f.to_string())("i", std::to_string(var + 1))("[d_i,m_f]", bracket.to_string()).fail();
  }
  return std::nullopt;
}

struct Law {
  LawInfo info;
  TrialFn run;
};

const std::vector<Law>& registry() {
  static const std::vector<Law> laws = {
      {{"compose-oracle", "composition agrees with applying the factors in turn"}, compose_oracle},
      {{"filtration-additivity", "Diff^i o Diff^j lies in Diff^{i+j}, with equality of orders"},
       filtration_additivity},
      {{"commutator-drop", "[Diff^i, Diff^j] lies in Diff^{i+j-1}"}, commutator_drop},
      {{"jacobi", "[A,[B,C]] = [[A,B],C] + [B,[A,C]]"}, jacobi},
      {{"leibniz-peel", "D(a1 a2...ak) = [D,m_a1](a2...ak) + a1 D(a2...ak)"}, leibniz_peel},
      {{"ideal-lemma", "D in Diff^k maps I^{k+1} into I"}, ideal_lemma},
      {{"gorder-eq-syntactic", "commutator order equals normal-form order"}, gorder_eq_syntactic},
      {{"generator-sufficiency", "order bounds tested on m_{t_j} hold for every m_a"}, generator_sufficiency},
      {{"diff1-split", "Diff^1 = Der + R via D = X + m_{D(1)}"}, diff1_split},
      {{"reconstruction", "an operator of order <= k is determined by its restriction to R_{<=k}"},
       reconstruction},
      {{"interpolation", "every linear map R_{<=k} -> R is the restriction of some D in Diff^k"}, interpolation},
      {{"symbol-mult", "sigma(D1 o D2) = sigma(D1) sigma(D2)"}, symbol_mult},
      {{"gr-commutative", "the associated graded algebra is commutative"}, gr_commutative},
      {{"quantize-roundtrip", "quantization is a section of the symbol map; Der = Symb^1"}, quantize_roundtrip},
      {{"weyl-relations", "[t_i,t_j] = 0, [d_i,d_j] = 0, [d_i,t_j] = delta_ij"}, weyl_relations},
  };
  return laws;
}

}  // namespace

const std::vector<LawInfo>& registered_laws() {
  static const std::vector<LawInfo> infos = [] {
    std::vector<LawInfo> out;
    for (const auto& law : registry()) out.push_back(law.info);
    return out;
  }();
  return infos;
}

LawReport run_law(std::string_view law, const GenConfig& cfg, unsigned jobs) {
  cfg.validate();
  const auto& laws = registry();
  auto it = std::find_if(laws.begin(), laws.end(), [&](const Law& l) { return l.info.name == law; });
  if (it == laws.end()) throw std::invalid_argument("unknown law: " + std::string(law));

  const auto start = std::chrono::steady_clock::now();
  std::vector<Outcome> outcomes(cfg.trials);
  auto worker = [&](unsigned first, unsigned stride) {
    for (unsigned trial = first; trial < cfg.trials; trial += stride) {
      Rng rng = Rng::for_trial(cfg.seed, law, trial);
      try {
        outcomes[trial] = it->run(cfg, rng, trial);
      } catch (const std::exception& e) {
        outcomes[trial] = std::string("exception: ") + e.what();
      }
    }
  };
  jobs = std::clamp(jobs, 1U, std::max(cfg.trials, 1U));
  if (jobs == 1) {
    worker(0, 1);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w, jobs);
  }

  LawReport report;
  report.law = std::string(law);
  report.trials = cfg.trials;
  for (unsigned trial = 0; trial < cfg.trials; ++trial) {
    if (!outcomes[trial]) continue;
    ++report.failures;
    if (report.counterexamples.size() < LawReport::kMaxCounterexamples) {
      report.counterexamples.push_back("trial " + std::to_string(trial) + ": " + *outcomes[trial]);
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<LawReport> run_all(const GenConfig& cfg, unsigned jobs) {
  std::vector<LawReport> reports;
  for (const auto& info : registered_laws()) reports.push_back(run_law(info.name, cfg, jobs));
  return reports;
}

std::string format_machine(const LawReport& report) {
  std::ostringstream out;
  out << report.law << ' ' << report.trials << ' ' << report.failures << ' '
      << (report.passed() ? "PASS" : "FAIL");
  return out.str();
}

std::string format_text(const LawReport& report) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << report.law << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << report.trials << " trials, "
      << report.failures << " failures, " << report.elapsed.count() << " s)\n";
  for (const auto& c : report.counterexamples) out << "  counterexample " << c << '\n';
  return out.str();
}

}  // namespace weyl
