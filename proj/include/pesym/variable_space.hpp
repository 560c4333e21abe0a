#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pesym/atom.hpp"

namespace pesym {

enum class ParamRole : std::uint8_t { physical, group, ansatz_coef, defect_coef };

/// Unknown scalar function with a fixed declared argument list (atoms of the
/// ambient space). Derivative atoms of the function use multi-indices over
/// positions in this list.
struct UnknownFn {
  std::string name;
  std::vector<Atom> args;
};

/// Ambient space: ordered independent and dependent variables, named
/// parameters, and unknown-function declarations. Treated as immutable once a
/// system or ansatz has been built on top of it.
class VariableSpace {
 public:
  VariableSpace() = default;
  VariableSpace(std::vector<std::string> indep, std::vector<std::string> dep)
      : indep_(std::move(indep)), dep_(std::move(dep)) {}

  int n_indep() const { return static_cast<int>(indep_.size()); }
  int n_dep() const { return static_cast<int>(dep_.size()); }
  int n_params() const { return static_cast<int>(param_names_.size()); }
  int n_fns() const { return static_cast<int>(fns_.size()); }

  const std::string& indep_name(int i) const { return indep_.at(i); }
  const std::string& dep_name(int k) const { return dep_.at(k); }
  const std::string& param_name(int p) const { return param_names_.at(p); }
  ParamRole param_role(int p) const { return param_roles_.at(p); }
  const UnknownFn& fn(int f) const { return fns_.at(f); }

  int add_param(const std::string& name, ParamRole role) {
    param_names_.push_back(name);
    param_roles_.push_back(role);
    return n_params() - 1;
  }
  int add_fn(const std::string& name, std::vector<Atom> args) {
    if (static_cast<int>(args.size()) > MultiIndex::kSlots)
      throw std::invalid_argument("VariableSpace::add_fn: too many arguments");
    fns_.push_back(UnknownFn{name, std::move(args)});
    return n_fns() - 1;
  }

  std::optional<int> find_indep(const std::string& n) const { return find(indep_, n); }
  std::optional<int> find_dep(const std::string& n) const { return find(dep_, n); }
  std::optional<int> find_param(const std::string& n) const { return find(param_names_, n); }

  Atom x(int i) const { return Atom::indep(check(i, n_indep(), "indep")); }
  Atom u(int k) const { return Atom::dep_var(check(k, n_dep(), "dep")); }
  Atom jet(int k, MultiIndex mi) const { return Atom::jet(check(k, n_dep(), "dep"), mi); }
  Atom jet1(int k, int i) const { return jet(k, MultiIndex{{check(i, n_indep(), "indep")}}); }
  Atom p(int id) const { return Atom::param(check(id, n_params(), "param")); }
  Atom fn_atom(int f, MultiIndex mi = {}) const { return Atom::fn_deriv(check(f, n_fns(), "fn"), mi); }

  bool valid_atom(const Atom& a) const {
    switch (a.kind) {
      case AtomKind::indep: return a.id >= 0 && a.id < n_indep() && a.mi.is_zero();
      case AtomKind::jet: {
        if (a.id < 0 || a.id >= n_dep()) return false;
        bool ok = true;
        a.mi.for_each([&](int slot, int) { ok = ok && slot < n_indep(); });
        return ok;
      }
      case AtomKind::param: return a.id >= 0 && a.id < n_params();
      case AtomKind::fn_deriv: {
        if (a.id < 0 || a.id >= n_fns()) return false;
        bool ok = true;
        a.mi.for_each([&](int slot, int) { ok = ok && slot < static_cast<int>(fns_[a.id].args.size()); });
        return ok;
      }
    }
    return false;
  }

  std::string atom_name(const Atom& a) const;

 private:
  static std::optional<int> find(const std::vector<std::string>& v, const std::string& n) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] == n) return static_cast<int>(i);
    return std::nullopt;
  }
  static int check(int i, int n, const char* what) {
    if (i < 0 || i >= n) throw std::out_of_range(std::string("VariableSpace: bad ") + what + " index");
    return i;
  }

  std::vector<std::string> indep_, dep_;
  std::vector<std::string> param_names_;
  std::vector<ParamRole> param_roles_;
  std::vector<UnknownFn> fns_;
};

}  // namespace pesym
