// ============================================================================
// rnmatrix/snapshots.hpp — Snapshot sets and swap multialgebras for the
// da Costa hierarchy C_n, over the two-element Boolean algebra and over
// arbitrary finite powerset algebras, plus the restricted-valuation rule
// sets and the counting theorems.
// ============================================================================
//
// A snapshot for C_n over a Boolean algebra B is a tuple
// z = (z_1, ..., z_{n+1}) in B^{n+1} with (z_1 & ... & z_k) | z_{k+1} = 1
// for 1 <= k <= n.  It encodes the semantic state
// (b(a), b(!a), b(a^1), ..., b(a^{n-1})) of a formula a.
//
//   designated      D_n = { z : z_1 = 1 }
//   boolean subset  Boo_n = { z : z_1 & z_2 = 0 }
//
// Over the two-element algebra there are exactly n+2 snapshots, named
// T (= (1,0,1,...,1)), t0..t{n-1} (tk has its unique 0 at position k+2,
// with t{n-1} = (1,...,1)), and F (= (0,1,...,1)).
// ============================================================================

#ifndef RNMATRIX_SNAPSHOTS_HPP
#define RNMATRIX_SNAPSHOTS_HPP

#include <string>
#include <vector>

#include "rnmatrix/algebra.hpp"
#include "rnmatrix/boolean.hpp"

namespace rnm {

struct SnapshotSpace {
  int n;
  BooleanAlgebra B;
  std::vector<std::vector<BElem>> all;  // each tuple has n+1 coordinates
  std::vector<int> designated;          // indices into `all`
  std::vector<int> boolean_subset;      // indices into `all`
  std::vector<std::string> names;       // print names, parallel to `all`

  int index_of(const std::vector<BElem>& tuple) const;  // -1 if absent
};

// Snapshot spaces.  snapshots(n) is the two-element-algebra case with the
// canonical names T, t0..t{n-1}, F (in that carrier order).
SnapshotSpace snapshots(int n);
SnapshotSpace snapshots_over(int n, const BooleanAlgebra& B);

// Swap multialgebras A_Cn over SigC:
//   !z    = { w : w_1 = z_2 and w_2 <= z_1 }
//   z # w = { u : u_1 = z_1 # w_1 }, intersected with Boo_n when both
//           arguments are Boolean                     (# in {|, &, ->})
Multialgebra swap_structure(int n);
Multialgebra swap_structure_over(int n, const BooleanAlgebra& B);

// Restricted-valuation rule sets F_Cn over the two-element algebra:
//   R1:           v(a) = t0     =>  v(a & !a) = T
//   R2_k (2<=k<=n, split per constrained formula):
//                 v(a) = t{k-1} =>  v(a & !a) in I_n  and  v(a^1) = t{k-2}
std::vector<RestrictionRule> restriction_Cn(int n);

// General-B rule set F_Cn^B:
//   1. v(a & !a) in { z in v(a) & v(!a) : z_2 = b(a^1) }, where b(a^1) is
//      the first coordinate of the clause-2 tuple below;
//   2. v(a^1) = (v(a)_3, v(a)_1 & v(a)_2, v(a)_4, ..., v(a)_{n+1},
//      ~(v(a)_1 & ... & v(a)_{n+1}))   (for n = 1 this degenerates to
//      (~(v(a)_1 & v(a)_2), v(a)_1 & v(a)_2));
//   3. v((a^{(n)} & b^{(n)}) -> (a # b)^{(n)}) designated, per # in {|,&,->}.
std::vector<RestrictionRule> restriction_Cn_over(int n,
                                                 const BooleanAlgebra& B);

enum class SnapshotCount { All, Designated, Boolean };

// Closed forms: (n+2)^m, (n+1)^m and 2^m respectively.
long long count_closed_form(int n, int m, SnapshotCount which);

}  // namespace rnm

#endif  // RNMATRIX_SNAPSHOTS_HPP
