// ============================================================================
// rnmatrix/boolean.hpp — Finite Boolean algebras as powersets of X_m.
// ============================================================================
//
// A finite Boolean algebra with 2^m elements is represented as the powerset
// of the canonical atom set X_m = {a, b, c, ...}; elements are characteristic
// bit-vectors packed into an unsigned integer (bit i = atom i present).
// Meet and join are set intersection and union; a -> b is complement(a) | b.
// ============================================================================

#ifndef RNMATRIX_BOOLEAN_HPP
#define RNMATRIX_BOOLEAN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rnmatrix/formula.hpp"

namespace rnm {

using BElem = std::uint32_t;

struct BooleanAlgebra {
  int m;       // atom count, >= 1
  BElem one;   // full set, (1 << m) - 1

  int size() const { return 1 << m; }

  BElem zero() const { return 0; }
  BElem meet(BElem a, BElem b) const { return a & b; }
  BElem join(BElem a, BElem b) const { return a | b; }
  BElem cmpl(BElem a) const { return one & ~a; }
  BElem implies(BElem a, BElem b) const { return cmpl(a) | b; }
  bool leq(BElem a, BElem b) const { return (a & b) == a; }

  // All elements, in increasing bit-vector order.
  std::vector<BElem> elements() const;

  // Prints as a sorted brace set over atoms a, b, c, ...: "{}", "{a,c}", ...
  std::string to_string(BElem a) const;
};

// The powerset algebra P(X_m).  m = 0 is rejected (degenerate).
BooleanAlgebra powerset_algebra(int m);

enum class BAOp { Meet, Join, Compl, Imp, Leq };

// Uniform evaluator used by tests and the CLI; Leq returns 0 or 1.
BElem ba_eval(const BooleanAlgebra& B, BAOp op, const std::vector<BElem>& args);

}  // namespace rnm

#endif  // RNMATRIX_BOOLEAN_HPP
