#include "rnmatrix/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rnm {

// --------------------------------------------------------------------------
// Multialgebras
// --------------------------------------------------------------------------

namespace {

std::size_t table_size(std::size_t carrier, int arity) {
  std::size_t n = 1;
  for (int i = 0; i < arity; ++i) n *= carrier;
  return n;
}

std::size_t flat_index(std::size_t carrier, const std::vector<int>& args) {
  std::size_t idx = 0;
  for (int a : args) idx = idx * carrier + static_cast<std::size_t>(a);
  return idx;
}

std::string tuple_name(const std::vector<std::string>& carrier,
                       std::size_t flat, int arity) {
  std::vector<int> args(arity);
  for (int i = arity - 1; i >= 0; --i) {
    args[i] = static_cast<int>(flat % carrier.size());
    flat /= carrier.size();
  }
  std::string out = "(";
  for (int i = 0; i < arity; ++i) {
    if (i) out += ',';
    out += carrier[args[i]];
  }
  return out + ")";
}

}  // namespace

int Multialgebra::value_of(const std::string& name) const {
  for (std::size_t i = 0; i < carrier.size(); ++i)
    if (carrier[i] == name) return static_cast<int>(i);
  throw Error("unknown carrier value '" + name + "'");
}

const std::vector<int>& Multialgebra::eval(const std::string& connective,
                                           const std::vector<int>& args) const {
  auto it = tables.find(connective);
  if (it == tables.end())
    throw Error("unknown connective '" + connective + "'");
  return it->second[flat_index(carrier.size(), args)];
}

std::string Multialgebra::dump_table(const std::string& connective) const {
  auto it = tables.find(connective);
  if (it == tables.end())
    throw Error("unknown connective '" + connective + "'");
  int arity = sig.arity(connective);
  auto set_name = [&](const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ',';
      out += carrier[s[i]];
    }
    return out + "}";
  };
  std::ostringstream os;
  if (arity == 1) {
    os << connective << "\n";
    for (std::size_t a = 0; a < carrier.size(); ++a)
      os << "  " << carrier[a] << " -> " << set_name(it->second[a]) << "\n";
  } else {
    os << connective << " (rows = left argument)\n";
    for (std::size_t a = 0; a < carrier.size(); ++a) {
      os << "  " << carrier[a] << ":";
      for (std::size_t b = 0; b < carrier.size(); ++b)
        os << " " << set_name(it->second[a * carrier.size() + b]);
      os << "\n";
    }
  }
  return os.str();
}

Multialgebra make_multialgebra(const Signature& sig,
                               std::vector<std::string> carrier,
                               std::map<std::string, OpTable> tables) {
  if (carrier.empty()) throw Error("multialgebra carrier must be non-empty");
  Multialgebra m;
  m.sig = sig;
  m.carrier = std::move(carrier);
  for (const auto& c : sig.connectives) {
    auto it = tables.find(c.symbol);
    if (it == tables.end())
      throw Error("missing table for connective '" + c.symbol + "'");
    std::size_t want = table_size(m.carrier.size(), c.arity);
    if (it->second.size() != want)
      throw Error("table for '" + c.symbol + "' is not total: has " +
                  std::to_string(it->second.size()) + " entries, expected " +
                  std::to_string(want));
    for (std::size_t i = 0; i < it->second.size(); ++i) {
      auto& cell = it->second[i];
      if (cell.empty())
        throw Error("empty result set for '" + c.symbol + "' at tuple " +
                    tuple_name(m.carrier, i, c.arity));
      std::sort(cell.begin(), cell.end());
      cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
      for (int v : cell)
        if (v < 0 || v >= static_cast<int>(m.carrier.size()))
          throw Error("value out of carrier in table for '" + c.symbol + "'");
    }
  }
  m.tables = std::move(tables);
  return m;
}

// --------------------------------------------------------------------------
// RNmatrices
// --------------------------------------------------------------------------

bool RNmatrix::is_designated(int v) const {
  return std::binary_search(designated.begin(), designated.end(), v);
}

RNmatrix make_rnmatrix(Multialgebra alg,
                       const std::vector<std::string>& designated,
                       std::vector<RestrictionRule> rules) {
  RNmatrix M;
  for (const auto& name : designated)
    M.designated.push_back(alg.value_of(name));  // throws if out of carrier
  std::sort(M.designated.begin(), M.designated.end());
  M.designated.erase(std::unique(M.designated.begin(), M.designated.end()),
                     M.designated.end());
  M.alg = std::move(alg);
  M.rules = std::move(rules);
  return M;
}

int Valuation::value_of(const Formula& f) const {
  for (std::size_t i = 0; i < domain.size(); ++i)
    if (domain[i] == f) return values[i];
  throw Error("formula '" + render(f) + "' not in valuation domain");
}

std::string Valuation::to_string(const std::vector<std::string>& carrier) const {
  std::string out;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (i) out += ", ";
    out += render(domain[i]) + "=" + carrier[values[i]];
  }
  return out;
}

// --------------------------------------------------------------------------
// Pattern matching and rule instantiation
// --------------------------------------------------------------------------

bool match_pattern(const Formula& pattern, const Formula& f,
                   FormulaMap<Formula>& binding) {
  if (pattern.is_var()) {
    auto it = binding.find(pattern);
    if (it != binding.end()) return it->second == f;
    binding.emplace(pattern, f);
    return true;
  }
  if (f.is_var()) return false;
  if (pattern.head() != f.head()) return false;
  if (pattern.args().size() != f.args().size()) return false;
  // Undo partial bindings on failure.
  FormulaMap<Formula> saved = binding;
  for (std::size_t i = 0; i < pattern.args().size(); ++i) {
    if (!match_pattern(pattern.args()[i], f.args()[i], binding)) {
      binding = std::move(saved);
      return false;
    }
  }
  return true;
}

namespace {

// Enumerates all metavariable bindings under which every pattern of `rule`
// instantiates to a member of `domain`.
void enumerate_bindings(const std::vector<Formula>& patterns,
                        const std::vector<Formula>& domain,
                        std::size_t pat_idx, FormulaMap<Formula>& binding,
                        std::vector<FormulaMap<Formula>>& out) {
  if (pat_idx == patterns.size()) {
    out.push_back(binding);
    return;
  }
  for (const auto& f : domain) {
    FormulaMap<Formula> saved = binding;
    if (match_pattern(patterns[pat_idx], f, binding)) {
      enumerate_bindings(patterns, domain, pat_idx + 1, binding, out);
      binding = std::move(saved);
    }
  }
}

}  // namespace

std::vector<RuleInstance> instantiate_rules(
    const std::vector<RestrictionRule>& rules,
    const std::vector<Formula>& domain) {
  FormulaMap<int> index;
  for (std::size_t i = 0; i < domain.size(); ++i)
    index.emplace(domain[i], static_cast<int>(i));

  std::vector<RuleInstance> out;
  std::set<std::vector<int>> seen;  // dedup key: rule ordinal + indices

  for (std::size_t r = 0; r < rules.size(); ++r) {
    const RestrictionRule& rule = rules[r];
    // Match patterns in order of decreasing complexity so that structured
    // patterns bind metavariables before bare-metavariable patterns fan out.
    std::vector<Formula> patterns = rule.guards;
    patterns.insert(patterns.end(), rule.constrained.begin(),
                    rule.constrained.end());
    std::stable_sort(patterns.begin(), patterns.end(),
                     [](const Formula& a, const Formula& b) {
                       return a.complexity() > b.complexity();
                     });
    std::vector<FormulaMap<Formula>> bindings;
    FormulaMap<Formula> empty;
    enumerate_bindings(patterns, domain, 0, empty, bindings);

    for (const auto& b : bindings) {
      RuleInstance inst;
      inst.rule = &rule;
      inst.trigger = 0;
      bool ok = true;
      auto resolve = [&](const Formula& pat, std::vector<int>& idxs) {
        Formula g = substitute(pat, b);
        auto it = index.find(g);
        if (it == index.end()) {
          ok = false;
          return;
        }
        idxs.push_back(it->second);
        inst.trigger = std::max(inst.trigger, it->second);
      };
      for (const auto& g : rule.guards) resolve(g, inst.guard_idx);
      for (const auto& c : rule.constrained) resolve(c, inst.constrained_idx);
      if (!ok) continue;  // metavariable bound, but instance leaves domain
      std::vector<int> key;
      key.push_back(static_cast<int>(r));
      key.insert(key.end(), inst.guard_idx.begin(), inst.guard_idx.end());
      key.push_back(-1);
      key.insert(key.end(), inst.constrained_idx.begin(),
                 inst.constrained_idx.end());
      if (seen.insert(std::move(key)).second) out.push_back(std::move(inst));
    }
  }
  return out;
}

bool instance_satisfied(const RuleInstance& inst,
                        const std::vector<int>& values) {
  std::vector<int> guard_values;
  guard_values.reserve(inst.guard_idx.size());
  for (int i : inst.guard_idx) guard_values.push_back(values[i]);
  std::vector<std::vector<int>> allowed;
  if (!inst.rule->apply(guard_values, allowed)) return true;  // does not fire
  for (std::size_t i = 0; i < inst.constrained_idx.size(); ++i) {
    int v = values[inst.constrained_idx[i]];
    const auto& set = allowed[i];
    if (std::find(set.begin(), set.end(), v) == set.end()) return false;
  }
  return true;
}

bool valuation_ok(const RNmatrix& M, const Valuation& v) {
  if (v.domain.size() != v.values.size()) return false;
  FormulaMap<int> index;
  for (std::size_t i = 0; i < v.domain.size(); ++i)
    index.emplace(v.domain[i], static_cast<int>(i));
  // Homomorphism condition on every non-variable formula whose arguments are
  // all in the domain (for a subformula-closed domain, that is all of them).
  for (std::size_t i = 0; i < v.domain.size(); ++i) {
    const Formula& f = v.domain[i];
    if (f.is_var()) continue;
    std::vector<int> args;
    bool have_all = true;
    for (const auto& a : f.args()) {
      auto it = index.find(a);
      if (it == index.end()) {
        have_all = false;
        break;
      }
      args.push_back(v.values[it->second]);
    }
    if (!have_all) return false;  // domain not subformula-closed
    const auto& allowed = M.alg.eval(f.head(), args);
    if (std::find(allowed.begin(), allowed.end(), v.values[i]) ==
        allowed.end())
      return false;
  }
  for (const auto& inst : instantiate_rules(M.rules, v.domain))
    if (!instance_satisfied(inst, v.values)) return false;
  return true;
}

// --------------------------------------------------------------------------
// PNmatrix -> RNmatrix embedding
// --------------------------------------------------------------------------

RNmatrix pnmatrix_embed(const PartialMultialgebra& p,
                        const std::vector<std::string>& designated) {
  std::vector<std::string> carrier = p.carrier;
  std::string fresh = "o";
  while (std::find(carrier.begin(), carrier.end(), fresh) != carrier.end())
    fresh += "'";
  carrier.push_back(fresh);
  int o = static_cast<int>(carrier.size()) - 1;
  std::size_t old_n = p.carrier.size();
  std::size_t new_n = carrier.size();

  std::map<std::string, OpTable> tables;
  for (const auto& c : p.sig.connectives) {
    const OpTable& old_table = p.tables.at(c.symbol);
    OpTable table(table_size(new_n, c.arity));
    std::vector<int> args(c.arity, 0);
    for (std::size_t flat = 0; flat < table.size(); ++flat) {
      std::size_t rest = flat;
      bool has_o = false;
      for (int i = c.arity - 1; i >= 0; --i) {
        args[i] = static_cast<int>(rest % new_n);
        rest /= new_n;
        if (args[i] == o) has_o = true;
      }
      if (has_o) {
        table[flat] = {o};
        continue;
      }
      const auto& cell = old_table[flat_index(old_n, args)];
      table[flat] = cell.empty() ? std::vector<int>{o} : cell;
    }
    tables[c.symbol] = std::move(table);
  }

  Multialgebra alg =
      make_multialgebra(p.sig, std::move(carrier), std::move(tables));

  // Rule: no formula may take the value o.
  std::vector<int> not_o;
  for (std::size_t i = 0; i < new_n; ++i)
    if (static_cast<int>(i) != o) not_o.push_back(static_cast<int>(i));
  RestrictionRule rule;
  rule.name = "no-overflow-value";
  rule.constrained = {Formula::var("A")};
  rule.apply = [not_o](const std::vector<int>&,
                       std::vector<std::vector<int>>& allowed) {
    allowed = {not_o};
    return true;
  };

  return make_rnmatrix(std::move(alg), designated, {std::move(rule)});
}

// --------------------------------------------------------------------------
// Static semantics
// --------------------------------------------------------------------------

std::vector<RestrictionRule> static_restriction(const Multialgebra& m) {
  std::vector<RestrictionRule> out;
  for (const auto& c : m.sig.connectives) {
    std::vector<Formula> lhs_args, rhs_args;
    std::vector<Formula> guards;
    for (int i = 0; i < c.arity; ++i) {
      lhs_args.push_back(Formula::var("A" + std::to_string(i)));
      rhs_args.push_back(Formula::var("B" + std::to_string(i)));
    }
    for (const auto& a : lhs_args) guards.push_back(a);
    for (const auto& b : rhs_args) guards.push_back(b);
    guards.push_back(Formula::app(c.symbol, lhs_args));
    RestrictionRule rule;
    rule.name = "static-" + c.symbol;
    rule.guards = std::move(guards);
    rule.constrained = {Formula::app(c.symbol, rhs_args)};
    int arity = c.arity;
    rule.apply = [arity](const std::vector<int>& g,
                         std::vector<std::vector<int>>& allowed) {
      for (int i = 0; i < arity; ++i)
        if (g[i] != g[arity + i]) return false;
      allowed = {{g[2 * arity]}};
      return true;
    };
    out.push_back(std::move(rule));
  }
  return out;
}

}  // namespace rnm
