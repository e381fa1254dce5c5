// ============================================================================
// rnmatrix/algebra.hpp — Finite multialgebras, restricted non-deterministic
// matrices (RNmatrices), restriction rules and generic embeddings.
// ============================================================================
//
// Carrier values are opaque names indexed 0..|carrier|-1; all tables and
// valuations work with indices.  A multialgebra stores, per connective, a
// total table from argument tuples to non-empty value sets.
//
// A restriction rule is a schematic constraint on valuations:
//
//     metavariables  A, B, ...
//     guards         pattern formulas whose values are read
//     constrained    pattern formulas whose values are restricted
//     apply          guard values -> fires? + allowed set per constrained
//
// A rule instance (a substitution of metavariables by concrete formulas) is
// checked only when every instantiated guard and constrained formula lies in
// the valuation's domain (membership-conditional semantics).  Rules whose
// defining clauses are non-local are bridged by per-logic closure
// augmentation (see rnmatrix/logics.hpp).
// ============================================================================

#ifndef RNMATRIX_ALGEBRA_HPP
#define RNMATRIX_ALGEBRA_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rnmatrix/formula.hpp"

namespace rnm {

// --------------------------------------------------------------------------
// Multialgebras
// --------------------------------------------------------------------------

// Table for one connective: entry for the argument tuple (a_1, ..., a_k) is
// at flat index a_1 * |carrier|^{k-1} + ... + a_k, and holds a sorted set of
// carrier indices.  Non-empty for Multialgebra; possibly empty for
// PartialMultialgebra.
using OpTable = std::vector<std::vector<int>>;

struct Multialgebra {
  Signature sig;
  std::vector<std::string> carrier;
  std::map<std::string, OpTable> tables;

  int value_of(const std::string& name) const;  // throws if unknown
  const std::vector<int>& eval(const std::string& connective,
                               const std::vector<int>& args) const;

  // Dumps the table for one connective as a text grid in the conventional
  // layout (rows = first argument).
  std::string dump_table(const std::string& connective) const;
};

// Validates totality and non-emptiness.
Multialgebra make_multialgebra(const Signature& sig,
                               std::vector<std::string> carrier,
                               std::map<std::string, OpTable> tables);

// As Multialgebra, but operation results may be empty.
struct PartialMultialgebra {
  Signature sig;
  std::vector<std::string> carrier;
  std::map<std::string, OpTable> tables;
};

// --------------------------------------------------------------------------
// Restriction rules
// --------------------------------------------------------------------------

struct RestrictionRule {
  std::string name;
  // Patterns are formulas whose variables are metavariables.
  std::vector<Formula> guards;
  std::vector<Formula> constrained;
  // Given the guard values, decides whether the rule fires and, if so, fills
  // one allowed (non-empty) value set per constrained pattern.  Pure.
  std::function<bool(const std::vector<int>& guard_values,
                     std::vector<std::vector<int>>& allowed)>
      apply;
};

// --------------------------------------------------------------------------
// RNmatrices and valuations
// --------------------------------------------------------------------------

struct RNmatrix {
  Multialgebra alg;
  std::vector<int> designated;  // sorted carrier indices
  std::vector<RestrictionRule> rules;

  bool is_designated(int v) const;
};

RNmatrix make_rnmatrix(Multialgebra alg, const std::vector<std::string>& designated,
                       std::vector<RestrictionRule> rules);

// A (partial) restricted valuation: a map from a complexity-ordered
// subformula closure to carrier values.
struct Valuation {
  std::vector<Formula> domain;
  std::vector<int> values;  // parallel to domain

  int value_of(const Formula& f) const;  // throws if f not in domain
  std::string to_string(const std::vector<std::string>& carrier) const;
};

// --------------------------------------------------------------------------
// Rule instantiation over a fixed domain
// --------------------------------------------------------------------------

// One concrete instance of a restriction rule over a domain: all instantiated
// guard/constrained formulas identified by their domain indices.
struct RuleInstance {
  const RestrictionRule* rule;
  std::vector<int> guard_idx;
  std::vector<int> constrained_idx;
  int trigger;  // max involved index; checkable once this index is assigned
};

// All instances of `rules` whose instantiated formulas all lie in `domain`.
// `domain` must be subformula-closed and ordered.
std::vector<RuleInstance> instantiate_rules(
    const std::vector<RestrictionRule>& rules,
    const std::vector<Formula>& domain);

// Checks one instance against a (prefix-complete) assignment of values.
bool instance_satisfied(const RuleInstance& inst,
                        const std::vector<int>& values);

// Full re-check of a valuation: homomorphism condition plus every rule
// instance over its domain.
bool valuation_ok(const RNmatrix& M, const Valuation& v);

// Matches a pattern (variables = metavariables) against a concrete formula,
// extending `binding`; returns false and leaves `binding` untouched on
// failure.
bool match_pattern(const Formula& pattern, const Formula& f,
                   FormulaMap<Formula>& binding);

// --------------------------------------------------------------------------
// Generic embeddings
// --------------------------------------------------------------------------

// PNmatrix -> RNmatrix: adds a fresh value "o"; empty cells and cells with
// "o" among the arguments become {o}; one restriction rule forbids "o"
// anywhere in a valuation.  Entailment agrees with partial-valuation
// semantics of the input.
RNmatrix pnmatrix_embed(const PartialMultialgebra& p,
                        const std::vector<std::string>& designated);

// Static semantics: for every connective, equal argument values force equal
// values on the two applications (one rule per connective).
std::vector<RestrictionRule> static_restriction(const Multialgebra& m);

}  // namespace rnm

#endif  // RNMATRIX_ALGEBRA_HPP
