#include "rnmatrix/snapshots.hpp"

#include <algorithm>

namespace rnm {

namespace {

bool is_snapshot(const BooleanAlgebra& B, const std::vector<BElem>& z) {
  BElem prefix_meet = B.one;
  for (std::size_t k = 0; k + 1 < z.size(); ++k) {
    prefix_meet = B.meet(prefix_meet, z[k]);
    if (B.join(prefix_meet, z[k + 1]) != B.one) return false;
  }
  return true;
}

}  // namespace

int SnapshotSpace::index_of(const std::vector<BElem>& tuple) const {
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] == tuple) return static_cast<int>(i);
  return -1;
}

SnapshotSpace snapshots(int n) {
  if (n < 1) throw Error("snapshots: level must be positive");
  SnapshotSpace s;
  s.n = n;
  s.B = powerset_algebra(1);
  // Canonical order: T, t0, ..., t{n-1}, F.
  std::vector<BElem> T(n + 1, 1), F(n + 1, 1);
  T[1] = 0;
  F[0] = 0;
  s.all.push_back(T);
  s.names.push_back("T");
  for (int k = 0; k < n; ++k) {
    std::vector<BElem> t(n + 1, 1);
    if (k <= n - 2) t[k + 2] = 0;  // t{n-1} is all ones
    s.all.push_back(std::move(t));
    s.names.push_back("t" + std::to_string(k));
  }
  s.all.push_back(F);
  s.names.push_back("F");
  for (std::size_t i = 0; i < s.all.size(); ++i) {
    if (!is_snapshot(s.B, s.all[i]))
      throw Error("internal: named tuple is not a snapshot");
    if (s.all[i][0] == 1) s.designated.push_back(static_cast<int>(i));
    if ((s.all[i][0] & s.all[i][1]) == 0)
      s.boolean_subset.push_back(static_cast<int>(i));
  }
  return s;
}

SnapshotSpace snapshots_over(int n, const BooleanAlgebra& B) {
  if (n < 1) throw Error("snapshots_over: level must be positive");
  if (B.m == 1) return snapshots(n);  // canonical order and names over 2
  SnapshotSpace s;
  s.n = n;
  s.B = B;
  std::vector<BElem> z(n + 1, 0);
  // Lexicographic enumeration of B^{n+1}.
  for (;;) {
    if (is_snapshot(B, z)) {
      std::string name = "(";
      for (int i = 0; i <= n; ++i) {
        if (i) name += ',';
        name += B.to_string(z[i]);
      }
      name += ')';
      if (z[0] == B.one) s.designated.push_back(static_cast<int>(s.all.size()));
      if (B.meet(z[0], z[1]) == 0)
        s.boolean_subset.push_back(static_cast<int>(s.all.size()));
      s.all.push_back(z);
      s.names.push_back(std::move(name));
    }
    int i = n;
    while (i >= 0 && z[i] == B.one) z[i--] = 0;
    if (i < 0) break;
    ++z[i];
  }
  return s;
}

namespace {

// Shared table builder for A_Cn over any B.  The space's `all` list is the
// carrier, in order.
Multialgebra build_swap(const SnapshotSpace& s) {
  const BooleanAlgebra& B = s.B;
  std::size_t N = s.all.size();
  auto is_boolean = [&](std::size_t i) {
    return B.meet(s.all[i][0], s.all[i][1]) == 0;
  };

  std::map<std::string, OpTable> tables;

  OpTable neg_table(N);
  for (std::size_t zi = 0; zi < N; ++zi) {
    const auto& z = s.all[zi];
    for (std::size_t wi = 0; wi < N; ++wi) {
      const auto& w = s.all[wi];
      if (w[0] == z[1] && B.leq(w[1], z[0]))
        neg_table[zi].push_back(static_cast<int>(wi));
    }
  }
  tables["!"] = std::move(neg_table);

  for (const std::string sym : {"|", "&", "->"}) {
    OpTable table(N * N);
    for (std::size_t zi = 0; zi < N; ++zi) {
      for (std::size_t wi = 0; wi < N; ++wi) {
        BElem z1 = s.all[zi][0], w1 = s.all[wi][0];
        BElem u1 = sym == "|"   ? B.join(z1, w1)
                   : sym == "&" ? B.meet(z1, w1)
                                : B.implies(z1, w1);
        bool boolean_args = is_boolean(zi) && is_boolean(wi);
        auto& cell = table[zi * N + wi];
        for (std::size_t ui = 0; ui < N; ++ui) {
          if (s.all[ui][0] != u1) continue;
          if (boolean_args && !is_boolean(ui)) continue;
          cell.push_back(static_cast<int>(ui));
        }
      }
    }
    tables[sym] = std::move(table);
  }

  return make_multialgebra(sig_c(), s.names, std::move(tables));
}

}  // namespace

Multialgebra swap_structure(int n) { return build_swap(snapshots(n)); }

Multialgebra swap_structure_over(int n, const BooleanAlgebra& B) {
  return build_swap(snapshots_over(n, B));
}

std::vector<RestrictionRule> restriction_Cn(int n) {
  if (n < 1) throw Error("restriction_Cn: level must be positive");
  // Carrier indices in the canonical order T, t0..t{n-1}, F.
  const int T = 0;
  auto t = [](int k) { return k + 1; };
  std::vector<int> I;  // t0..t{n-1}
  for (int k = 0; k < n; ++k) I.push_back(t(k));

  Formula A = Formula::var("A");
  Formula contradiction = conj(A, neg(A));

  std::vector<RestrictionRule> out;
  {
    RestrictionRule r;
    r.name = "R1";
    r.guards = {A};
    r.constrained = {contradiction};
    int t0 = t(0);
    r.apply = [t0, T](const std::vector<int>& g,
                      std::vector<std::vector<int>>& allowed) {
      if (g[0] != t0) return false;
      allowed = {{T}};
      return true;
    };
    out.push_back(std::move(r));
  }
  for (int k = 2; k <= n; ++k) {
    {
      RestrictionRule r;
      r.name = "R2_" + std::to_string(k) + "a";
      r.guards = {A};
      r.constrained = {contradiction};
      int guard = t(k - 1);
      r.apply = [guard, I](const std::vector<int>& g,
                           std::vector<std::vector<int>>& allowed) {
        if (g[0] != guard) return false;
        allowed = {I};
        return true;
      };
      out.push_back(std::move(r));
    }
    {
      RestrictionRule r;
      r.name = "R2_" + std::to_string(k) + "b";
      r.guards = {A};
      r.constrained = {pow(sig_c(), A, 1)};
      int guard = t(k - 1), target = t(k - 2);
      r.apply = [guard, target](const std::vector<int>& g,
                                std::vector<std::vector<int>>& allowed) {
        if (g[0] != guard) return false;
        allowed = {{target}};
        return true;
      };
      out.push_back(std::move(r));
    }
  }
  return out;
}

namespace {

// The tuple forced for v(a^1) by clause 2 of F_Cn^B, given v(a) = z.
std::vector<BElem> clause2_tuple(const BooleanAlgebra& B, int n,
                                 const std::vector<BElem>& z) {
  BElem all_meet = B.one;
  for (const BElem& zi : z) all_meet = B.meet(all_meet, zi);
  if (n == 1) return {B.cmpl(all_meet), all_meet};
  std::vector<BElem> out;
  out.push_back(z[2]);
  out.push_back(B.meet(z[0], z[1]));
  for (int j = 3; j <= n; ++j) out.push_back(z[j]);  // z_4..z_{n+1}
  out.push_back(B.cmpl(all_meet));
  return out;
}

}  // namespace

std::vector<RestrictionRule> restriction_Cn_over(int n,
                                                 const BooleanAlgebra& B) {
  SnapshotSpace s = snapshots_over(n, B);
  Formula A = Formula::var("A"), Bv = Formula::var("B");

  // Precompute clause targets per carrier value.
  std::size_t N = s.all.size();
  std::vector<BElem> c2_first(N);  // second coordinate forced on a & !a
  std::vector<int> c2_index(N);    // carrier index of the full clause-2 tuple
  for (std::size_t i = 0; i < N; ++i) {
    std::vector<BElem> c2 = clause2_tuple(B, n, s.all[i]);
    c2_first[i] = c2[0];
    c2_index[i] = s.index_of(c2);
    if (c2_index[i] < 0)
      throw Error("internal: clause-2 tuple is not a snapshot");
  }
  // Values allowed for a & !a per value of a: second coordinate must equal
  // the first coordinate of the clause-2 tuple.
  std::vector<std::vector<int>> c1_allowed(N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t u = 0; u < N; ++u)
      if (s.all[u][1] == c2_first[i]) c1_allowed[i].push_back(static_cast<int>(u));

  std::vector<RestrictionRule> out;
  {
    RestrictionRule r;
    r.name = "B1-contradiction";
    r.guards = {A};
    r.constrained = {conj(A, neg(A))};
    r.apply = [c1_allowed](const std::vector<int>& g,
                           std::vector<std::vector<int>>& allowed) {
      allowed = {c1_allowed[g[0]]};
      return true;
    };
    out.push_back(std::move(r));
  }
  {
    RestrictionRule r;
    r.name = "B2-consistency";
    r.guards = {A};
    r.constrained = {pow(sig_c(), A, 1)};
    r.apply = [c2_index](const std::vector<int>& g,
                         std::vector<std::vector<int>>& allowed) {
      allowed = {{c2_index[g[0]]}};
      return true;
    };
    out.push_back(std::move(r));
  }
  std::vector<int> designated = s.designated;
  for (const std::string sym : {"|", "&", "->"}) {
    RestrictionRule r;
    r.name = "B3-propagation-" + sym;
    Formula an = pow_conj(sig_c(), A, n);
    Formula bn = pow_conj(sig_c(), Bv, n);
    Formula abn = pow_conj(sig_c(), Formula::app(sym, {A, Bv}), n);
    r.constrained = {imp(conj(an, bn), abn)};
    r.apply = [designated](const std::vector<int>&,
                           std::vector<std::vector<int>>& allowed) {
      allowed = {designated};
      return true;
    };
    out.push_back(std::move(r));
  }
  return out;
}

long long count_closed_form(int n, int m, SnapshotCount which) {
  if (n < 1 || m < 1) throw Error("count_closed_form: need n, m >= 1");
  long long base = which == SnapshotCount::All          ? n + 2
                   : which == SnapshotCount::Designated ? n + 1
                                                        : 2;
  long long out = 1;
  for (int i = 0; i < m; ++i) out *= base;
  return out;
}

}  // namespace rnm
