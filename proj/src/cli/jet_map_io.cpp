#include "weyl/cli/jet_map_io.hpp"

#include <set>
#include <string>
#include <vector>

#include "weyl/cli/parser.hpp"

namespace weyl::cli {
namespace {

struct Entry {
  std::size_t line;
  MultiIndex basis;
  std::unique_ptr<Expr> value;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

MultiIndex parse_basis(const std::string& text, std::size_t line) {
  std::vector<unsigned> exps;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const std::string field = trim(text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos || field.size() > 9) {
      throw InputError("line " + std::to_string(line) + ": malformed multi-index '" + trim(text) + "'");
    }
    exps.push_back(static_cast<unsigned>(std::stoul(field)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return MultiIndex(std::move(exps));
}

}  // namespace

JetMap read_jet_map(std::istream& in, unsigned degree_bound, std::optional<std::size_t> vars) {
  std::vector<Entry> entries;
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    const std::string text = trim(raw.substr(0, raw.find('#')));
    if (text.empty()) continue;
    const auto arrow = text.find("->");
    if (arrow == std::string::npos) {
      throw InputError("line " + std::to_string(line) + ": expected '<multi-index> -> <polynomial>'");
    }
    MultiIndex basis = parse_basis(text.substr(0, arrow), line);
    try {
      entries.push_back({line, std::move(basis), parse(text.substr(arrow + 2))});
    } catch (const ParseError& e) {
      const std::size_t column = raw.find("->") + 2 + e.offset();
      throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.detail());
    }
  }

  std::size_t n = vars.value_or(entries.empty() ? 1 : entries.front().basis.size());
  if (n < 1) throw InputError("variable count must be positive");
  JetMap jet(n, degree_bound);
  std::set<MultiIndex> seen;
  for (const auto& entry : entries) {
    const std::string where = "line " + std::to_string(entry.line) + ": ";
    if (entry.basis.size() != n) {
      throw InputError(where + "multi-index has " + std::to_string(entry.basis.size()) + " entries, expected " +
                       std::to_string(n));
    }
    if (entry.basis.degree() > degree_bound) {
      throw InputError(where + "multi-index has degree above " + std::to_string(degree_bound));
    }
    if (!seen.insert(entry.basis).second) throw InputError(where + "duplicate multi-index");
    DiffOp value(n);
    try {
      value = eval_expr(*entry.value, n);
    } catch (const InputError& e) {
      throw InputError(where + e.what());
    }
    if (value.order() > Degree(0)) throw InputError(where + "value must be a polynomial");
    jet.set(entry.basis, value.coefficient(MultiIndex(n)));
  }
  return jet;
}

}  // namespace weyl::cli
