#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "plueckerlab/arith/poly.hpp"

namespace plab {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at offset " + std::to_string(pos)), offset(pos) {}
  std::size_t offset;
};

/// Parses a polynomial in the text grammar (see docs/grammar.md) over `vars`.
/// Identifiers not in `vars` are rejected.
MultiPoly parse_poly(std::string_view text, const VarSet& vars);

}  // namespace plab
