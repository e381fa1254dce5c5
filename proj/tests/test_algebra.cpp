#include <doctest.h>

#include "rnmatrix/algebra.hpp"

using namespace rnm;

namespace {

// The two-element algebra with classical |,&,-> and non-deterministic ^
// ( ^(1,1)={0}, {0,1} otherwise ).
Multialgebra two_bi() {
  std::map<std::string, OpTable> t;
  auto cls = [](int f(int, int)) {
    OpTable tab(4);
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) tab[a * 2 + b] = {f(a, b)};
    return tab;
  };
  t["|"] = cls([](int a, int b) { return a | b; });
  t["&"] = cls([](int a, int b) { return a & b; });
  t["->"] = cls([](int a, int b) { return (1 - a) | b; });
  OpTable upt(4, {0, 1});
  upt[1 * 2 + 1] = {0};
  t["^"] = std::move(upt);
  return make_multialgebra(sig_bi(), {"0", "1"}, std::move(t));
}

Formula P() { return Formula::var("p"); }
Formula Q() { return Formula::var("q"); }

}  // namespace

TEST_CASE("make_multialgebra validates") {
  Multialgebra m = two_bi();
  CHECK(m.carrier.size() == 2);
  CHECK(m.value_of("1") == 1);
  CHECK_THROWS_AS(m.value_of("2"), Error);

  // Empty cell rejected.
  std::map<std::string, OpTable> bad;
  bad["|"] = OpTable(4, {0});
  bad["&"] = OpTable(4, {0});
  bad["->"] = OpTable(4, {0});
  bad["^"] = OpTable(4, {0});
  bad["^"][0] = {};
  CHECK_THROWS_AS(make_multialgebra(sig_bi(), {"0", "1"}, bad), Error);

  // Wrong table size rejected.
  std::map<std::string, OpTable> sz;
  sz["|"] = OpTable(3, {0});
  sz["&"] = OpTable(4, {0});
  sz["->"] = OpTable(4, {0});
  sz["^"] = OpTable(4, {0});
  CHECK_THROWS_AS(make_multialgebra(sig_bi(), {"0", "1"}, sz), Error);
}

TEST_CASE("eval_connective") {
  Multialgebra m = two_bi();
  CHECK(m.eval("^", {1, 1}) == std::vector<int>{0});
  CHECK(m.eval("^", {0, 1}) == std::vector<int>{0, 1});
  CHECK(m.eval("&", {1, 1}) == std::vector<int>{1});
  CHECK(m.eval("->", {1, 0}) == std::vector<int>{0});
  CHECK_THROWS_AS(m.eval("!", {0}), Error);
}

TEST_CASE("make_rnmatrix") {
  RNmatrix M = make_rnmatrix(two_bi(), {"1"}, {});
  CHECK(M.is_designated(1));
  CHECK_FALSE(M.is_designated(0));
  CHECK(M.rules.empty());
  CHECK_THROWS_AS(make_rnmatrix(two_bi(), {"2"}, {}), Error);
}

TEST_CASE("match_pattern") {
  Formula A = Formula::var("A");
  Formula pat = conj(A, neg(A));  // A & !A
  FormulaMap<Formula> b;
  CHECK(match_pattern(pat, conj(conj(P(), Q()), neg(conj(P(), Q()))), b));
  CHECK(b.at(A) == conj(P(), Q()));
  FormulaMap<Formula> b2;
  CHECK_FALSE(match_pattern(pat, conj(P(), neg(Q())), b2));
  CHECK(b2.empty());
  FormulaMap<Formula> b3;
  CHECK_FALSE(match_pattern(pat, P(), b3));
}

TEST_CASE("rule instantiation over a closure") {
  // Guard rule: v(p ^ q) = v(q ^ p) (commutation), as a two-sided constraint.
  RestrictionRule r;
  r.name = "comm";
  Formula A = Formula::var("A"), B = Formula::var("B");
  r.guards = {up(A, B)};
  r.constrained = {up(B, A)};
  r.apply = [](const std::vector<int>& g, std::vector<std::vector<int>>& allowed) {
    allowed = {{g[0]}};
    return true;
  };

  std::vector<Formula> domain =
      subformula_closure({up(P(), Q()), up(Q(), P())});
  auto insts = instantiate_rules({r}, domain);
  // Instances: (A=p,B=q) and (A=q,B=p).
  CHECK(insts.size() == 2);

  RNmatrix M = make_rnmatrix(two_bi(), {"1"}, {r});
  Valuation good{domain, {}};
  Valuation bad{domain, {}};
  int iup = -1, jup = -1;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (domain[i] == up(P(), Q())) iup = (int)i;
    if (domain[i] == up(Q(), P())) jup = (int)i;
  }
  REQUIRE(iup >= 0);
  REQUIRE(jup >= 0);
  good.values.assign(domain.size(), 0);
  bad.values.assign(domain.size(), 0);
  good.values[iup] = 1;
  good.values[jup] = 1;
  bad.values[iup] = 1;
  bad.values[jup] = 0;
  // p = q = 0 makes ^ free, so the homomorphism part holds for both.
  CHECK(valuation_ok(M, good));
  CHECK_FALSE(valuation_ok(M, bad));
}

TEST_CASE("static restriction") {
  Multialgebra m = two_bi();
  auto rules = static_restriction(m);
  CHECK(rules.size() == m.sig.connectives.size());

  RNmatrix M = make_rnmatrix(m, {"1"}, rules);
  Formula R = Formula::var("r"), S = Formula::var("s");
  std::vector<Formula> domain =
      subformula_closure({up(P(), Q()), up(R, S)});
  // p=q=r=s=0: equal argument tuples force v(p^q) = v(r^s).
  auto mk = [&](int vpq, int vrs) {
    Valuation v{domain, std::vector<int>(domain.size(), 0)};
    for (std::size_t i = 0; i < domain.size(); ++i) {
      if (domain[i] == up(P(), Q())) v.values[i] = vpq;
      if (domain[i] == up(R, S)) v.values[i] = vrs;
    }
    return v;
  };
  CHECK(valuation_ok(M, mk(0, 0)));
  CHECK(valuation_ok(M, mk(1, 1)));
  CHECK_FALSE(valuation_ok(M, mk(0, 1)));
  CHECK_FALSE(valuation_ok(M, mk(1, 0)));

  // Deterministic connectives: the rule can never cut anything because the
  // homomorphism condition already pins the value.
  Valuation v{subformula_closure({conj(P(), Q())}), {0, 0, 0}};
  CHECK(valuation_ok(M, v));
}

TEST_CASE("pnmatrix embedding") {
  PartialMultialgebra p;
  p.sig = Signature{"toy", {{"&", 2}}};
  p.carrier = {"0", "1"};
  p.tables["&"] = OpTable(4);
  p.tables["&"][0] = {0};
  p.tables["&"][1] = {};  // empty cell: 0 & 1 undefined
  p.tables["&"][2] = {0, 1};
  p.tables["&"][3] = {1};

  RNmatrix M = pnmatrix_embed(p, {"1"});
  REQUIRE(M.alg.carrier.size() == 3);
  CHECK(M.alg.carrier[2] == "o");
  int o = 2;
  // The empty cell now holds {o}.
  CHECK(M.alg.eval("&", {0, 1}) == std::vector<int>{o});
  // o is absorbing.
  CHECK(M.alg.eval("&", {o, 0}) == std::vector<int>{o});
  CHECK(M.alg.eval("&", {1, o}) == std::vector<int>{o});
  // o is never designated and the no-overflow rule rejects it anywhere.
  CHECK_FALSE(M.is_designated(o));
  REQUIRE(M.rules.size() == 1);
  Valuation v{{P()}, {o}};
  CHECK_FALSE(valuation_ok(M, v));
  Valuation w{{P()}, {1}};
  CHECK(valuation_ok(M, w));
}
