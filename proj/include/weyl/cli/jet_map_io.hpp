#pragma once

#include <cstddef>
#include <istream>
#include <optional>

#include "weyl/constructions.hpp"

namespace weyl::cli {

/// Reads the jet-map text format, one basis value per line:
///
///   # comment
///   0,0 -> 0
///   1,0 -> t2
///
/// Basis monomials without a line map to zero. The variable count is the
/// length of the multi-indices, or `vars` when given (they must agree).
/// Throws InputError with the 1-based line number on malformed input.
JetMap read_jet_map(std::istream& in, unsigned degree_bound, std::optional<std::size_t> vars);

}  // namespace weyl::cli
