// ============================================================================
// rnmatrix/logics.hpp — The catalog of built-in logics as ready-made
// RNmatrices, with closure-augmentation policies for logics whose defining
// two-valued clauses are non-local.
// ============================================================================
//
// Catalog:
//
//   CPL, CPLup          classical two-valued (CPLup adds ^ as NAND)
//   C1, C2, ... (Cn)    da Costa hierarchy via swap structures + F_Cn
//   mbC, mbCci          two-valued RNmatrices read off bivaluation clauses
//                       (closure augmentation adds !a per *a; no tableau)
//   mbCciw, Ci          three-valued Nmatrices over {F, t, T}
//   mbCcl, Cila         three-valued RNmatrices over {F, t, T}
//   bI, bIminus, bIpr   two-valued incompatibility Nmatrices/RNmatrices
//   nbI, nbIciw,        as bI with paraconsistent negation and the
//   nbIci, nbIcl        ciw/ci/cl incompatibility clauses
// ============================================================================

#ifndef RNMATRIX_LOGICS_HPP
#define RNMATRIX_LOGICS_HPP

#include <string>
#include <vector>

#include "rnmatrix/algebra.hpp"

namespace rnm {

enum class AugmentPolicy {
  None,  // closure used as-is
  MbC,   // add !a for every *a in the closure (mbC, mbCci)
};

struct LogicSpec {
  std::string id;
  Signature sig;
  RNmatrix matrix;
  int n = 0;  // hierarchy level for Cn, 0 otherwise
  AugmentPolicy augment = AugmentPolicy::None;
  bool has_tableau = true;
  int undesignated = 0;  // carrier index of the unique undesignated value,
                         // used as the tableau start label
};

// All catalog identifiers ("Cn" represented by C1, C2, C3; any level parses).
std::vector<std::string> list_logics();

// Case-insensitive lookup.  "C<k>" carries its level in the name; the
// explicit `level` argument is an alternative for the generic name "Cn".
LogicSpec get_logic(const std::string& name, int level = 0);

// Applies the logic's augmentation policy and returns a subformula-closed,
// complexity-ordered closure.  Idempotent.
std::vector<Formula> augment_closure(const LogicSpec& spec,
                                     const std::vector<Formula>& closure);

}  // namespace rnm

#endif  // RNMATRIX_LOGICS_HPP
