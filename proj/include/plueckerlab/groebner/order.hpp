#pragma once

#include <cstddef>
#include <string>

#include "plueckerlab/arith/monomial.hpp"

namespace plab {

/// Monomial orders over the first n variables of a Monomial. `block(k)`
/// compares the first k variables by grevlex, then breaks ties by grevlex on
/// the rest; it eliminates the first k variables.
struct MonomialOrder {
  enum class Kind { grevlex, lex, block };
  Kind kind = Kind::grevlex;
  std::size_t block_size = 0;

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::lex, 0}; }
  static MonomialOrder block(std::size_t k) { return {Kind::block, k}; }

  /// >0 when a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case Kind::grevlex: return grevlex_cmp(a, b);
      case Kind::lex:
        for (std::size_t i = 0; i < kMaxVars; ++i)
          if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
        return 0;
      case Kind::block: {
        unsigned da = 0, db = 0;
        for (std::size_t i = 0; i < block_size; ++i) {
          da += a.exp[i];
          db += b.exp[i];
        }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = block_size; i-- > 0;)
          if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
        unsigned ra = a.degree - da, rb = b.degree - db;
        if (ra != rb) return ra > rb ? 1 : -1;
        for (std::size_t i = kMaxVars; i-- > block_size;)
          if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
        return 0;
      }
    }
    return 0;
  }

  std::string name() const {
    switch (kind) {
      case Kind::grevlex: return "grevlex";
      case Kind::lex: return "lex";
      case Kind::block: return "block(" + std::to_string(block_size) + ")";
    }
    return "?";
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind == b.kind && a.block_size == b.block_size;
  }
};

}  // namespace plab
