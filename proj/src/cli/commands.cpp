#include "weyl/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "weyl/cli/jet_map_io.hpp"
#include "weyl/cli/parser.hpp"
#include "weyl/constructions.hpp"
#include "weyl/grothendieck.hpp"
#include "weyl/laws.hpp"
#include "weyl/symbols.hpp"

namespace weyl::cli {
namespace {

struct Outcome {
  std::string out;
  std::string err;
  int status = kExitOk;
};

Outcome success(std::string text) { return {std::move(text), "", kExitOk}; }

std::size_t resolve_vars(std::optional<std::size_t> vars, std::initializer_list<const Expr*> exprs) {
  unsigned inferred = 0;
  for (const Expr* e : exprs) inferred = std::max(inferred, max_index(*e));
  if (!vars) return std::max(inferred, 1U);
  if (inferred > *vars) {
    throw InputError("generator index " + std::to_string(inferred) + " exceeds --vars " + std::to_string(*vars));
  }
  return *vars;
}

Poly as_poly(const DiffOp& op) {
  if (op.order() > Degree(0)) throw InputError("expected a polynomial, got an operator of order " + op.order().to_string());
  return op.coefficient(MultiIndex(op.num_vars()));
}

struct CheckOptions {
  std::optional<std::string> law;
  std::optional<unsigned> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> n;
  std::optional<unsigned> max_order;
  std::optional<unsigned> max_coeff_degree;
  std::optional<unsigned> coeff_bound;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  std::string format = "machine";
  bool ci = false;
};

Outcome run_check(const CheckOptions& opt) {
  if (opt.ci) {
    if (!opt.seed) throw InputError("--ci requires an explicit --seed");
    if (opt.trials || opt.n || opt.max_order || opt.max_coeff_degree || opt.coeff_bound) {
      throw InputError("--ci pins the generator bounds; drop --trials/--n/--max-order/--max-coeff-degree/--coeff-bound");
    }
  }
  GenConfig cfg;
  if (opt.trials) cfg.trials = *opt.trials;
  if (opt.seed) cfg.seed = *opt.seed;
  if (opt.n) cfg.n = *opt.n;
  if (opt.max_order) cfg.max_order = *opt.max_order;
  if (opt.max_coeff_degree) cfg.max_coeff_degree = *opt.max_coeff_degree;
  if (opt.coeff_bound) cfg.coeff_bound = *opt.coeff_bound;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }

  std::vector<std::string> names;
  if (opt.law) {
    const auto& laws = registered_laws();
    if (std::none_of(laws.begin(), laws.end(), [&](const LawInfo& l) { return l.name == *opt.law; })) {
      throw InputError("unknown law '" + *opt.law + "'");
    }
    names.push_back(*opt.law);
  } else {
    for (const auto& info : registered_laws()) names.emplace_back(info.name);
  }

  Outcome result;
  unsigned failed = 0;
  for (const auto& name : names) {
    const LawReport report = run_law(name, cfg, opt.jobs);
    if (!report.passed()) ++failed;
    if (opt.format == "text") {
      result.out += format_text(report);
    } else {
      result.out += format_machine(report) + '\n';
      for (const auto& c : report.counterexamples) result.err += report.law + " counterexample " + c + '\n';
    }
  }
  if (opt.format == "text") {
    result.out += failed == 0 ? "all " + std::to_string(names.size()) + " laws passed\n"
                              : std::to_string(failed) + " of " + std::to_string(names.size()) + " laws failed\n";
  }
  result.status = failed == 0 ? kExitOk : kExitCheckFailed;
  return result;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic with differential operators on Q[t1,...,tn]", "weylcalc"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::size_t> vars;
  app.add_option("--vars", vars, "Number of variables (default: largest index used)")->check(CLI::Range(1, 64));

  std::function<Outcome()> action;
  std::string expr_a;
  std::string expr_b;

  auto* normalize = app.add_subcommand("normalize", "Print the normal form of an operator expression");
  normalize->add_option("expr", expr_a, "Operator expression")->required();
  normalize->callback([&] {
    action = [&] {
      const auto e = parse(expr_a);
      return success(eval_expr(*e, resolve_vars(vars, {e.get()})).to_string() + '\n');
    };
  });

  auto* apply_cmd = app.add_subcommand("apply", "Apply an operator to a polynomial");
  apply_cmd->add_option("expr", expr_a, "Operator expression")->required();
  apply_cmd->add_option("poly", expr_b, "Polynomial")->required();
  apply_cmd->callback([&] {
    action = [&] {
      const auto e = parse(expr_a);
      const auto p = parse(expr_b);
      const std::size_t n = resolve_vars(vars, {e.get(), p.get()});
      return success(apply(eval_expr(*e, n), as_poly(eval_expr(*p, n))).to_string() + '\n');
    };
  });

  auto* comm = app.add_subcommand("comm", "Commutator [A, B] = A*B - B*A");
  comm->add_option("a", expr_a, "Operator expression")->required();
  comm->add_option("b", expr_b, "Operator expression")->required();
  comm->callback([&] {
    action = [&] {
      const auto a = parse(expr_a);
      const auto b = parse(expr_b);
      const std::size_t n = resolve_vars(vars, {a.get(), b.get()});
      return success(commutator(eval_expr(*a, n), eval_expr(*b, n)).to_string() + '\n');
    };
  });

  auto* order = app.add_subcommand("order", "Order read off the normal form ('none' for 0)");
  order->add_option("expr", expr_a, "Operator expression")->required();
  order->callback([&] {
    action = [&] {
      const auto e = parse(expr_a);
      return success(eval_expr(*e, resolve_vars(vars, {e.get()})).order().to_string() + '\n');
    };
  });

  auto* gorder = app.add_subcommand("gorder", "Order decided by iterated commutators with t1..tn");
  gorder->add_option("expr", expr_a, "Operator expression")->required();
  gorder->callback([&] {
    action = [&] {
      const auto e = parse(expr_a);
      return success(grothendieck_order(eval_expr(*e, resolve_vars(vars, {e.get()}))).to_string() + '\n');
    };
  });

  std::optional<unsigned> grade;
  std::string xi_prefix = "x";
  auto* symbol = app.add_subcommand("symbol", "Principal symbol in grade k (default: the operator's order)");
  symbol->add_option("expr", expr_a, "Operator expression")->required();
  symbol->add_option("--grade", grade, "Grade k");
  symbol->add_option("--xi-prefix", xi_prefix, "Name stem of the symbol variables")->capture_default_str();
  symbol->callback([&] {
    action = [&] {
      const auto e = parse(expr_a);
      const DiffOp op = eval_expr(*e, resolve_vars(vars, {e.get()}));
      const SymbolElem s = grade ? principal_symbol(op, *grade) : principal_symbol(op);
      return success(s.to_string(xi_prefix) + '\n');
    };
  });

  auto* quantize_cmd = app.add_subcommand("quantize", "Normal-ordered operator of a homogeneous symbol");
  quantize_cmd->add_option("symbol", expr_a, "Symbol expression in t<k> and x<k>")->required();
  quantize_cmd->add_option("--xi-prefix", xi_prefix, "Name stem of the symbol variables")->capture_default_str();
  quantize_cmd->callback([&] {
    action = [&] {
      ParseOptions options;
      options.derivative_prefix = xi_prefix;
      if (xi_prefix == options.coordinate_prefix) throw InputError("--xi-prefix must differ from 't'");
      const auto e = parse(expr_a, options);
      return success(quantize(eval_symbol(*e, resolve_vars(vars, {e.get()}))).to_string() + '\n');
    };
  });

  auto* split1 = app.add_subcommand("split1", "Write an order-1 operator as derivation + multiplication");
  split1->add_option("expr", expr_a, "Operator expression")->required();
  split1->callback([&] {
    action = [&] {
      const auto e = parse(expr_a);
      const auto [x, a] = split_order_one(eval_expr(*e, resolve_vars(vars, {e.get()})));
      return success("derivation: " + x.to_string() + "\nmultiplier: " + a.to_string() + '\n');
    };
  });

  std::string map_path;
  unsigned degree = 0;
  auto* construct = app.add_subcommand("construct", "Operator of order <= k with prescribed values on R_{<=k}");
  construct->add_option("--map", map_path, "Jet-map file")->required();
  construct->add_option("--degree", degree, "Degree bound k")->required();
  construct->callback([&] {
    action = [&] {
      std::ifstream in(map_path);
      if (!in) throw InputError("cannot open '" + map_path + "'");
      return success(from_jet_map(read_jet_map(in, degree, vars)).to_string() + '\n');
    };
  });

  CheckOptions check_opt;
  auto* check = app.add_subcommand("check", "Run the randomized law harness");
  check->add_option("--law", check_opt.law, "Run a single law");
  check->add_option("--trials", check_opt.trials, "Trials per law (default 100)");
  check->add_option("--seed", check_opt.seed, "Seed (default 1)");
  check->add_option("--n", check_opt.n, "Variable count, 1..3 (default 3)");
  check->add_option("--max-order", check_opt.max_order, "Operator order bound (default 3)");
  check->add_option("--max-coeff-degree", check_opt.max_coeff_degree, "Coefficient degree bound (default 3)");
  check->add_option("--coeff-bound", check_opt.coeff_bound, "Numerator/denominator bound (default 5)");
  check->add_option("--jobs", check_opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  check->add_option("--format", check_opt.format, "Report format")
      ->check(CLI::IsMember({"machine", "text"}))
      ->capture_default_str();
  check->add_flag("--ci", check_opt.ci, "Pin default bounds and require --seed");
  check->callback([&] { action = [&] { return run_check(check_opt); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Outcome result = action();
    out << result.out;
    err << result.err;
    return result.status;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace weyl::cli
