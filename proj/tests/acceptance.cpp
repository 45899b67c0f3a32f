// One PASS/FAIL line per acceptance criterion at the default desk scale.
// Exits nonzero if any line fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "weyl/cli/commands.hpp"
#include "weyl/constructions.hpp"
#include "weyl/diff_op.hpp"
#include "weyl/laws.hpp"

namespace {

int failed = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
  if (!ok) ++failed;
}

std::string summary(const std::vector<weyl::LawReport>& reports) {
  std::string s;
  for (const auto& r : reports) {
    if (!s.empty()) s += ", ";
    s += r.law + " " + std::to_string(r.failures) + "/" + std::to_string(r.trials) + " failed";
  }
  return s;
}

void laws(const std::string& name, std::initializer_list<const char*> names, const weyl::GenConfig& cfg,
          bool extra_ok = true, const std::string& extra = "") {
  std::vector<weyl::LawReport> reports;
  bool ok = extra_ok;
  for (const char* law : names) {
    reports.push_back(weyl::run_law(law, cfg, 4));
    ok = ok && reports.back().passed() && reports.back().trials == cfg.trials;
    for (const auto& c : reports.back().counterexamples) std::cerr << law << ": " << c << "\n";
  }
  report(name, ok, summary(reports) + extra);
}

bool weyl_table() {
  using weyl::DiffOp;
  constexpr std::size_t n = 3;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const DiffOp ti = weyl::from_poly(weyl::Poly::variable(n, i));
      const DiffOp tj = weyl::from_poly(weyl::Poly::variable(n, j));
      const DiffOp di = DiffOp::derivative(n, i);
      const DiffOp dj = DiffOp::derivative(n, j);
      const DiffOp delta = i == j ? DiffOp::identity(n) : DiffOp(n);
      if (!weyl::commutator(ti, tj).is_zero()) return false;
      if (!weyl::commutator(di, dj).is_zero()) return false;
      if (weyl::commutator(di, tj) != delta) return false;
    }
  }
  return true;
}

struct Golden {
  std::vector<std::string> args;
  int code;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) { return std::string(WEYL_TEST_DATA_DIR) + "/" + name; }

void golden() {
  const std::vector<Golden> table = {
      {{"normalize", "d1*t1"}, 0, "(t1)*d1 + 1\n", ""},
      {{"normalize", "t1^2*d1 + d2^2"}, 0, "(1)*d2^2 + (t1^2)*d1\n", ""},
      {{"normalize", "d1*(t1+t2)^2"}, 0, "(t1^2 + 2*t1*t2 + t2^2)*d1 + 2*t1 + 2*t2\n", ""},
      {{"normalize", "d1*t1^3*d1"}, 0, "(t1^3)*d1^2 + (3*t1^2)*d1\n", ""},
      {{"normalize", "1/2*t1 - 3"}, 0, "1/2*t1 - 3\n", ""},
      {{"--vars", "3", "normalize", "d1"}, 0, "(1)*d1\n", ""},
      {{"apply", "t1*d1*d2", "t1*t2^2"}, 0, "2*t1*t2\n", ""},
      {{"comm", "d1", "t1"}, 0, "1\n", ""},
      {{"comm", "t1", "d1"}, 0, "-1\n", ""},
      {{"order", "t2*d1*d2 + d1"}, 0, "2\n", ""},
      {{"gorder", "t2*d1*d2 + d1"}, 0, "2\n", ""},
      {{"order", "t1*t2 - t2*t1"}, 0, "none\n", ""},
      {{"symbol", "t1*d1*d2 + d1"}, 0, "(t1)*x1*x2\n", ""},
      {{"symbol", "d1", "--grade", "2"}, 0, "0\n", ""},
      {{"quantize", "t1*x1*x2"}, 0, "(t1)*d1*d2\n", ""},
      {{"split1", "t1*d1 + t1^2"}, 0, "derivation: (t1)*d1\nmultiplier: t1^2\n", ""},
      {{"construct", "--map", data("jet_swap.txt"), "--degree", "1"}, 0, "(t2)*d1\n", ""},
      {{"construct", "--map", data("jet_square.txt"), "--degree", "2"}, 0, "(1)*d1\n", ""},
      {{"check", "--ci", "--seed", "7", "--law", "jacobi"}, 0, "jacobi 100 0 PASS\n", ""},
      {{"normalize", "d1*(t1+"},
       2,
       "",
       "error: parse error at offset 8: expected one of number, t<k>, d<k>, '(', '-'; found end of input\n"},
      {{"split1", "d1^2"}, 2, "", "error: split_order_one needs an operator of order at most 1\n"},
  };
  int bad = 0;
  for (const auto& g : table) {
    std::ostringstream out, err;
    const int code = weyl::cli::run(g.args, out, err);
    if (code != g.code || out.str() != g.out || err.str() != g.err) {
      ++bad;
      std::cerr << "golden mismatch for";
      for (const auto& a : g.args) std::cerr << " '" << a << "'";
      std::cerr << ": exit " << code << ", stdout '" << out.str() << "', stderr '" << err.str() << "'\n";
    }
  }
  report("cli-golden", bad == 0,
         std::to_string(table.size() - bad) + "/" + std::to_string(table.size()) + " byte-exact");
}

void mutation() {
  const std::string cmd = std::string("\"") + WEYL_MUTANT_CLI +
                          "\" check --law compose-oracle --trials 100 --seed 1 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    report("mutation-smoke", false, "could not start mutant binary");
    return;
  }
  std::string output;
  std::array<char, 256> buf{};
  while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
  const int status = pclose(pipe);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

  unsigned trials = 0, failures = 0;
  char verdict[8] = {};
  const bool parsed =
      std::sscanf(output.c_str(), "compose-oracle %u %u %7s", &trials, &failures, verdict) == 3;
  const bool ok = parsed && code == 1 && trials == 100 && failures > 0 && std::string(verdict) == "FAIL";
  report("mutation-smoke", ok,
         "wrong-binomial build: exit " + std::to_string(code) + ", " + std::to_string(failures) +
             "/100 compose-oracle trials failed");
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const weyl::GenConfig cfg;  // n 3, order 3, coefficient degree 3, magnitude 5, 100 trials, seed 1

  laws("compose-oracle", {"compose-oracle"}, cfg);
  laws("gorder-eq-syntactic", {"gorder-eq-syntactic"}, cfg);
  laws("filtration-additivity+commutator-drop", {"filtration-additivity", "commutator-drop"}, cfg);
  laws("jacobi", {"jacobi"}, cfg);

  const bool table = weyl_table();
  laws("weyl-relations", {"weyl-relations"}, cfg, table,
       table ? ", n=3 generator table exact" : ", n=3 generator table wrong");

  laws("diff1-split", {"diff1-split"}, cfg);

  bool zero_ok = true;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (unsigned k = 0; k <= 3; ++k) zero_ok = zero_ok && weyl::from_jet_map(weyl::JetMap(n, k)).is_zero();
  }
  laws("reconstruction", {"reconstruction"}, cfg, zero_ok,
       zero_ok ? ", zero jet map gives 0" : ", zero jet map gives a nonzero operator");

  laws("leibniz-peel+ideal-lemma", {"leibniz-peel", "ideal-lemma"}, cfg);
  laws("symbol-suite", {"symbol-mult", "gr-commutative", "quantize-roundtrip"}, cfg);

  golden();
  mutation();

  const auto suite_start = std::chrono::steady_clock::now();
  const auto all = weyl::run_all(cfg, 1);
  const double suite = std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
  bool all_ok = true;
  for (const auto& r : all) all_ok = all_ok && r.passed();
  std::ostringstream detail;
  detail.precision(3);
  detail << std::fixed << all.size() << " laws single-threaded in " << suite << " s";
  report("full-suite-under-60s", all_ok && suite < 60.0, detail.str());

  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << " ("
            << static_cast<int>(total * 1000) << " ms)\n";
  return failed == 0 ? 0 : 1;
}
