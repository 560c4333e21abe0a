#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pesym/expr.hpp"
#include "pesym/variable_space.hpp"

namespace pesym {

/// A named first-order PDE system: equations (each understood as "= 0") plus
/// an on-shell substitution map expressing the leading derivatives through the
/// remaining (free) first jets. Substituting `solved` into every equation
/// yields the exact zero expression; validate() checks this.
struct PDESystem {
  std::string name;
  VariableSpace space;
  std::vector<Expr> equations;
  std::map<Atom, Expr> solved;

  bool validate() const;
  std::vector<std::string> validate_report() const;  // empty when consistent
};

PDESystem mhd_equilibrium();
PDESystem vacuum_field();

enum class ForceFreeMode { const_alpha, cross_form };
PDESystem force_free(ForceFreeMode mode);

/// Lookup by CLI identifier: mhd | vacuum | force-free-const-alpha | force-free-cross.
std::optional<PDESystem> builtin_system(const std::string& id);
std::vector<std::string> builtin_system_ids();

/// Substitution table for restriction to the solution manifold: the solved
/// forms, their total derivatives up to `depth`, and any relations forced by
/// cross-derivative consistency of the solved forms (oriented by solving for
/// their canonically largest jet; this may introduce inverse powers of field
/// components).
class SolvedTable {
 public:
  SolvedTable(const PDESystem& sys, int depth);

  /// Normal form: substitutes rules until no reducible jet remains.
  /// Throws std::domain_error if a reducible jet lies beyond the table depth.
  Expr reduce(const Expr& e) const;

  const std::map<Atom, Expr>& rules() const { return rules_; }
  int depth() const { return depth_; }

  /// Jets of exactly the given order that are not reducible.
  std::vector<Atom> free_jets(int order) const;
  /// All free jets of order 1..max_order.
  std::vector<Atom> free_jets_up_to(int max_order) const;

  /// Differential-consequence self-check: reduce(D^nu E_n) == 0 for every
  /// equation and |nu| <= depth. Returns offending descriptions (empty = ok).
  std::vector<std::string> self_check() const;

 private:
  void add_rule(const Atom& key, Expr value, int remaining_prolong);
  void derive_relation(Expr residual, int remaining_prolong);
  Expr normal_form(Expr e, bool error_on_depth = false) const;

  const PDESystem* sys_;
  int depth_;
  std::map<Atom, Expr> rules_;
  std::vector<std::pair<Atom, int>> queue_;
};

/// Restriction of an expression to the solution manifold (spec: on_shell_reduce).
Expr on_shell_reduce(const Expr& e, const PDESystem& sys, int depth);

}  // namespace pesym
