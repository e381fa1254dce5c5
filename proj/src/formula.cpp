#include "rnmatrix/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace rnm {

// --------------------------------------------------------------------------
// Signatures
// --------------------------------------------------------------------------

bool Signature::has(const std::string& symbol) const {
  for (const auto& c : connectives)
    if (c.symbol == symbol) return true;
  return false;
}

int Signature::arity(const std::string& symbol) const {
  for (const auto& c : connectives)
    if (c.symbol == symbol) return c.arity;
  throw Error("connective '" + symbol + "' not in signature " + name);
}

const Signature& sig_c() {
  static const Signature s{"SigC", {{"!", 1}, {"|", 2}, {"&", 2}, {"->", 2}}};
  return s;
}

const Signature& sig_bi() {
  static const Signature s{"SigBI", {{"|", 2}, {"&", 2}, {"->", 2}, {"^", 2}}};
  return s;
}

const Signature& sig_nbi() {
  static const Signature s{
      "SigNBI", {{"!", 1}, {"|", 2}, {"&", 2}, {"->", 2}, {"^", 2}}};
  return s;
}

const Signature& sig_lfi() {
  static const Signature s{
      "SigLFI", {{"!", 1}, {"*", 1}, {"|", 2}, {"&", 2}, {"->", 2}}};
  return s;
}

// --------------------------------------------------------------------------
// Formula nodes
// --------------------------------------------------------------------------

namespace {

std::size_t combine_hash(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::var(const std::string& name) {
  auto node = std::make_shared<Node>();
  node->is_var = true;
  node->head = name;
  node->complexity = 0;
  node->hash = combine_hash(0x517cc1b7, std::hash<std::string>{}(name));
  Formula f;
  f.node_ = std::move(node);
  return f;
}

Formula Formula::app(const std::string& connective,
                     std::vector<Formula> args) {
  auto node = std::make_shared<Node>();
  node->is_var = false;
  node->head = connective;
  int cx = 0;
  std::size_t h = combine_hash(0x2545f491, std::hash<std::string>{}(connective));
  for (const auto& a : args) {
    if (a.empty()) throw Error("empty formula argument");
    cx = std::max(cx, a.complexity());
    h = combine_hash(h, a.hash());
  }
  node->args = std::move(args);
  node->complexity = cx + 1;
  node->hash = h;
  Formula f;
  f.node_ = std::move(node);
  return f;
}

bool Formula::is_var() const { return node_->is_var; }
const std::string& Formula::head() const { return node_->head; }
const std::vector<Formula>& Formula::args() const { return node_->args; }
int Formula::complexity() const { return node_->complexity; }
std::size_t Formula::hash() const { return node_->hash; }

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->hash != other.node_->hash) return false;
  if (node_->is_var != other.node_->is_var) return false;
  if (node_->head != other.node_->head) return false;
  if (node_->args.size() != other.node_->args.size()) return false;
  for (std::size_t i = 0; i < node_->args.size(); ++i)
    if (node_->args[i] != other.node_->args[i]) return false;
  return true;
}

Formula neg(Formula a) { return Formula::app("!", {std::move(a)}); }
Formula circ(Formula a) { return Formula::app("*", {std::move(a)}); }
Formula conj(Formula a, Formula b) {
  return Formula::app("&", {std::move(a), std::move(b)});
}
Formula disj(Formula a, Formula b) {
  return Formula::app("|", {std::move(a), std::move(b)});
}
Formula imp(Formula a, Formula b) {
  return Formula::app("->", {std::move(a), std::move(b)});
}
Formula up(Formula a, Formula b) {
  return Formula::app("^", {std::move(a), std::move(b)});
}

// --------------------------------------------------------------------------
// Parser: recursive descent following the declared precedence.
// --------------------------------------------------------------------------

namespace {

struct Parser {
  const std::string& text;
  const Signature& sig;
  std::size_t pos = 0;

  Parser(const std::string& t, const Signature& s) : text(t), sig(s) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  // Returns true and consumes `tok` if it is next (after whitespace).
  bool eat(const std::string& tok) {
    skip_ws();
    if (text.compare(pos, tok.size(), tok) == 0) {
      // "->" must not be half-eaten as "-"; "-" alone is not a token, so a
      // plain prefix match is unambiguous for our token set.
      pos += tok.size();
      return true;
    }
    return false;
  }

  void require_connective(const std::string& sym, std::size_t at) {
    if (!sig.has(sym))
      throw ParseError("connective '" + sym + "' not in signature " + sig.name,
                       at);
  }

  Formula parse_formula() { return parse_imp(); }

  Formula parse_imp() {  // right-associative, loosest
    std::size_t at = pos;
    Formula lhs = parse_or();
    skip_ws();
    at = pos;
    if (eat("->")) {
      require_connective("->", at);
      Formula rhs = parse_imp();
      return imp(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Formula parse_or() {  // left-associative
    Formula lhs = parse_and();
    for (;;) {
      skip_ws();
      std::size_t at = pos;
      // Do not confuse "|" with nothing else; but refuse to eat the first
      // char of "->"-like tokens (none start with '|').
      if (eat("|")) {
        require_connective("|", at);
        Formula rhs = parse_and();
        lhs = disj(std::move(lhs), std::move(rhs));
      } else {
        return lhs;
      }
    }
  }

  Formula parse_and() {  // left-associative
    Formula lhs = parse_up();
    for (;;) {
      skip_ws();
      std::size_t at = pos;
      if (eat("&")) {
        require_connective("&", at);
        Formula rhs = parse_up();
        lhs = conj(std::move(lhs), std::move(rhs));
      } else {
        return lhs;
      }
    }
  }

  Formula parse_up() {  // left-associative, tightest binary
    Formula lhs = parse_unary();
    for (;;) {
      skip_ws();
      std::size_t at = pos;
      if (eat("^")) {
        require_connective("^", at);
        Formula rhs = parse_unary();
        lhs = up(std::move(lhs), std::move(rhs));
      } else {
        return lhs;
      }
    }
  }

  Formula parse_unary() {
    skip_ws();
    std::size_t at = pos;
    if (eat("!")) {
      require_connective("!", at);
      return neg(parse_unary());
    }
    if (eat("*")) {
      require_connective("*", at);
      return circ(parse_unary());
    }
    return parse_atom();
  }

  Formula parse_atom() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    if (eat("(")) {
      Formula f = parse_formula();
      skip_ws();
      if (!eat(")")) throw ParseError("expected ')'", pos);
      return f;
    }
    std::size_t at = pos;
    char c = text[pos];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) ||
              text[pos] == '_'))
        ++pos;
      return Formula::var(text.substr(start, pos - start));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", at);
  }
};

}  // namespace

Formula parse(const std::string& text, const Signature& sig) {
  Parser p(text, sig);
  Formula f = p.parse_formula();
  p.skip_ws();
  if (p.pos != text.size())
    throw ParseError("trailing input after formula", p.pos);
  return f;
}

// --------------------------------------------------------------------------
// Printer with minimal parenthesization.
// --------------------------------------------------------------------------

namespace {

// Binding strength; larger binds tighter.
int op_prec(const std::string& sym) {
  if (sym == "->") return 1;
  if (sym == "|") return 2;
  if (sym == "&") return 3;
  if (sym == "^") return 4;
  return 5;  // unary
}

void render_rec(const Formula& f, int min_prec, std::string& out) {
  if (f.is_var()) {
    out += f.head();
    return;
  }
  const std::string& sym = f.head();
  int prec = op_prec(sym);
  bool paren = prec < min_prec;
  if (paren) out += '(';
  if (f.args().size() == 1) {
    out += sym;
    render_rec(f.args()[0], 6, out);  // argument must be unary or atom
  } else {
    bool right_assoc = (sym == "->");
    render_rec(f.args()[0], right_assoc ? prec + 1 : prec, out);
    out += ' ';
    out += sym;
    out += ' ';
    render_rec(f.args()[1], right_assoc ? prec : prec + 1, out);
  }
  if (paren) out += ')';
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  render_rec(f, 0, out);
  return out;
}

// --------------------------------------------------------------------------
// Structural operations
// --------------------------------------------------------------------------

int complexity(const Formula& f) { return f.complexity(); }

namespace {

void collect_postorder(const Formula& f, FormulaSet& seen,
                       std::vector<Formula>& out) {
  for (const auto& a : f.args()) collect_postorder(a, seen, out);
  if (seen.insert(f).second) out.push_back(f);
}

}  // namespace

std::vector<Formula> subformula_closure(const std::vector<Formula>& fs) {
  FormulaSet seen;
  std::vector<Formula> out;
  for (const auto& f : fs) collect_postorder(f, seen, out);
  std::stable_sort(out.begin(), out.end(),
                   [](const Formula& a, const Formula& b) {
                     return a.complexity() < b.complexity();
                   });
  return out;
}

Formula substitute(const Formula& f, const FormulaMap<Formula>& s) {
  if (f.is_var()) {
    auto it = s.find(f);
    return it == s.end() ? f : it->second;
  }
  std::vector<Formula> args;
  args.reserve(f.args().size());
  for (const auto& a : f.args()) args.push_back(substitute(a, s));
  return Formula::app(f.head(), std::move(args));
}

namespace {

void collect_vars(const Formula& f, std::set<std::string>& seen,
                  std::vector<std::string>& out) {
  if (f.is_var()) {
    if (seen.insert(f.head()).second) out.push_back(f.head());
    return;
  }
  for (const auto& a : f.args()) collect_vars(a, seen, out);
}

}  // namespace

std::vector<std::string> variables_of(const Formula& f) {
  std::set<std::string> seen;
  std::vector<std::string> out;
  collect_vars(f, seen, out);
  return out;
}

// --------------------------------------------------------------------------
// Derived formula schemes
// --------------------------------------------------------------------------

namespace {

void need(const Signature& sig, const std::string& sym) {
  if (!sig.has(sym))
    throw Error("operation needs connective '" + sym + "', absent from " +
                sig.name);
}

}  // namespace

Formula pow(const Signature& sig, const Formula& a, int n) {
  need(sig, "!");
  need(sig, "&");
  if (n < 0) throw Error("pow: exponent must be non-negative");
  Formula cur = a;
  for (int i = 0; i < n; ++i) cur = neg(conj(cur, neg(cur)));
  return cur;
}

Formula pow_conj(const Signature& sig, const Formula& a, int n) {
  need(sig, "!");
  need(sig, "&");
  if (n < 1) throw Error("pow_conj: exponent must be positive");
  Formula cur = pow(sig, a, 1);
  for (int k = 2; k <= n; ++k) cur = conj(cur, pow(sig, a, k));
  return cur;
}

Formula defined_bottom(const Signature& sig, const Formula& a,
                       const Formula& b) {
  need(sig, "&");
  need(sig, "^");
  return conj(a, conj(b, up(a, b)));
}

Formula strong_negation(const Signature& sig, const Formula& a) {
  need(sig, "->");
  return imp(a, defined_bottom(sig, a, a));
}

}  // namespace rnm
