// ============================================================================
// rnmatrix/formula.hpp — Signatures, propositional formula ASTs, parsing,
// printing, substitution, complexity ordering and derived formula schemes.
// ============================================================================
//
// Concrete syntax (shared by the CLI and all test fixtures):
//
//   unary:   !f   (negation)        *f   (consistency)
//   binary:  f ^ g  (incompatibility)
//            f & g  (conjunction)
//            f | g  (disjunction)
//            f -> g (implication)
//
// Precedence (tightest first): unary > ^ > & > | > ->.
// `->` is right-associative; the other binary infixes are left-associative.
//
// Formulas are immutable trees with structural equality; subformula closures
// and valuation tables are keyed on that identity.
// ============================================================================

#ifndef RNMATRIX_FORMULA_HPP
#define RNMATRIX_FORMULA_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace rnm {

// --------------------------------------------------------------------------
// Errors
// --------------------------------------------------------------------------

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
  std::size_t position;  // byte offset into the source text
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// --------------------------------------------------------------------------
// Signatures
// --------------------------------------------------------------------------

struct Connective {
  std::string symbol;  // concrete token: "!", "*", "&", "|", "->", "^"
  int arity;           // 1 or 2
};

struct Signature {
  std::string name;
  std::vector<Connective> connectives;

  bool has(const std::string& symbol) const;
  int arity(const std::string& symbol) const;  // throws if unknown
};

// The four built-in signatures.
const Signature& sig_c();    // { ! | & -> }            (C_n, CPL)
const Signature& sig_bi();   // { | & -> ^ }            (bI family)
const Signature& sig_nbi();  // { ! | & -> ^ }          (nbI family, CPLup)
const Signature& sig_lfi();  // { ! * | & -> }          (mbC family, Ci, Cila)

// --------------------------------------------------------------------------
// Formulas
// --------------------------------------------------------------------------

class Formula {
 public:
  Formula() = default;  // empty handle; only for containers

  static Formula var(const std::string& name);
  static Formula app(const std::string& connective, std::vector<Formula> args);

  bool empty() const { return node_ == nullptr; }
  bool is_var() const;
  // Variable name or connective symbol.
  const std::string& head() const;
  const std::vector<Formula>& args() const;
  int complexity() const;
  std::size_t hash() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  struct Node {
    bool is_var;
    std::string head;
    std::vector<Formula> args;
    int complexity;
    std::size_t hash;
  };
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

template <typename T>
using FormulaMap = std::unordered_map<Formula, T, FormulaHash>;
using FormulaSet = std::unordered_set<Formula, FormulaHash>;

// Convenience constructors for the standard connectives.
Formula neg(Formula a);                 // !a
Formula circ(Formula a);                // *a
Formula conj(Formula a, Formula b);     // a & b
Formula disj(Formula a, Formula b);     // a | b
Formula imp(Formula a, Formula b);      // a -> b
Formula up(Formula a, Formula b);       // a ^ b

// --------------------------------------------------------------------------
// Parsing and printing
// --------------------------------------------------------------------------

// Parses `text` against the grammar above.  Every connective used must belong
// to `sig`; violations raise ParseError with the offending position.
Formula parse(const std::string& text, const Signature& sig);

// Minimal-parenthesization rendering; parse(render(f), sig) == f.
std::string render(const Formula& f);

// --------------------------------------------------------------------------
// Structural operations
// --------------------------------------------------------------------------

int complexity(const Formula& f);

// All subformulas of the inputs, each exactly once, ordered by non-decreasing
// complexity; ties broken by first occurrence in a left-to-right post-order
// walk of the inputs.  The result is closed under subformulas.
std::vector<Formula> subformula_closure(const std::vector<Formula>& fs);

// Homomorphic replacement of variables.
Formula substitute(const Formula& f, const FormulaMap<Formula>& s);

// Names of the variables occurring in f, in first-occurrence order.
std::vector<std::string> variables_of(const Formula& f);

// --------------------------------------------------------------------------
// Derived formula schemes
// --------------------------------------------------------------------------

// a^0 = a;  a^{n+1} = !(a^n & !a^n).  Requires ! and & in sig.
Formula pow(const Signature& sig, const Formula& a, int n);

// a^{(1)} = a^1;  a^{(n+1)} = a^{(n)} & a^{n+1}.  Requires n >= 1.
Formula pow_conj(const Signature& sig, const Formula& a, int n);

// bottom_{ab} = a & (b & (a ^ b)).  Requires & and ^ in sig.
Formula defined_bottom(const Signature& sig, const Formula& a,
                       const Formula& b);

// ~a = a -> bottom_{aa}.  Requires &, -> and ^ in sig.
Formula strong_negation(const Signature& sig, const Formula& a);

}  // namespace rnm

#endif  // RNMATRIX_FORMULA_HPP
