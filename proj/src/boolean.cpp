#include "rnmatrix/boolean.hpp"

namespace rnm {

std::vector<BElem> BooleanAlgebra::elements() const {
  std::vector<BElem> out;
  out.reserve(size());
  for (BElem x = 0; x <= one; ++x) out.push_back(x);
  return out;
}

std::string BooleanAlgebra::to_string(BElem a) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < m; ++i) {
    if (a & (BElem(1) << i)) {
      if (!first) out += ',';
      out += static_cast<char>('a' + i);
      first = false;
    }
  }
  out += '}';
  return out;
}

BooleanAlgebra powerset_algebra(int m) {
  if (m < 1) throw Error("powerset_algebra: need at least one atom");
  if (m > 20) throw Error("powerset_algebra: atom count too large");
  BooleanAlgebra B;
  B.m = m;
  B.one = (BElem(1) << m) - 1;
  return B;
}

BElem ba_eval(const BooleanAlgebra& B, BAOp op,
              const std::vector<BElem>& args) {
  auto want = [&](std::size_t n) {
    if (args.size() != n) throw Error("ba_eval: arity mismatch");
  };
  switch (op) {
    case BAOp::Meet:
      want(2);
      return B.meet(args[0], args[1]);
    case BAOp::Join:
      want(2);
      return B.join(args[0], args[1]);
    case BAOp::Compl:
      want(1);
      return B.cmpl(args[0]);
    case BAOp::Imp:
      want(2);
      return B.implies(args[0], args[1]);
    case BAOp::Leq:
      want(2);
      return B.leq(args[0], args[1]) ? 1 : 0;
  }
  throw Error("ba_eval: unknown operation");
}

}  // namespace rnm
