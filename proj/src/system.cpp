#include "pesym/system.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "pesym/calculus.hpp"

namespace pesym {

namespace {

// Enumerate multi-indices of exact total order n over the first `nvars` slots.
void enumerate_mi(int nvars, int order, int from, MultiIndex cur, std::vector<MultiIndex>& out) {
  if (order == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = from; i < nvars; ++i) enumerate_mi(nvars, order - 1, i, cur.plus(i), out);
}

std::vector<MultiIndex> multi_indices(int nvars, int order) {
  std::vector<MultiIndex> out;
  enumerate_mi(nvars, order, 0, {}, out);
  return out;
}

}  // namespace

bool PDESystem::validate() const { return validate_report().empty(); }

std::vector<std::string> PDESystem::validate_report() const {
  std::vector<std::string> bad;
  for (const auto& [key, val] : solved) {
    if (key.kind != AtomKind::jet || key.mi.is_zero()) bad.push_back("solved key is not a derivative jet");
    for (const auto& [key2, val2] : solved) {
      (void)val2;
      if (val.contains(key2)) bad.push_back("solved value for " + space.atom_name(key) + " contains a solved key");
    }
  }
  std::map<Atom, Expr> map(solved.begin(), solved.end());
  for (std::size_t n = 0; n < equations.size(); ++n) {
    if (!substitute(equations[n], map).is_zero())
      bad.push_back("equation " + std::to_string(n) + " does not vanish under the solved forms");
  }
  return bad;
}

PDESystem mhd_equilibrium() {
  VariableSpace sp({"x", "y", "z"}, {"A", "B", "C", "P"});
  auto J = [&](int k, std::initializer_list<int> d) { return Expr::from_atom(sp.jet(k, MultiIndex(d))); };
  auto U = [&](int k) { return Expr::from_atom(sp.u(k)); };
  const int A = 0, B = 1, C = 2, P = 3;
  const int x = 0, y = 1, z = 2;
  Expr curl_x = J(C, {y}) - J(B, {z});
  Expr curl_y = J(A, {z}) - J(C, {x});
  Expr curl_z = J(B, {x}) - J(A, {y});
  PDESystem s;
  s.name = "mhd";
  s.space = sp;
  s.equations = {
      curl_y * U(C) - curl_z * U(B) - J(P, {x}),
      curl_z * U(A) - curl_x * U(C) - J(P, {y}),
      curl_x * U(B) - curl_y * U(A) - J(P, {z}),
      J(A, {x}) + J(B, {y}) + J(C, {z}),
  };
  s.solved[sp.jet(C, {z})] = -J(A, {x}) - J(B, {y});
  s.solved[sp.jet(P, {x})] = U(C) * J(A, {z}) - U(C) * J(C, {x}) - U(B) * J(B, {x}) + U(B) * J(A, {y});
  s.solved[sp.jet(P, {y})] = U(A) * J(B, {x}) - U(A) * J(A, {y}) - U(C) * J(C, {y}) + U(C) * J(B, {z});
  s.solved[sp.jet(P, {z})] = U(B) * J(C, {y}) - U(B) * J(B, {z}) - U(A) * J(A, {z}) + U(A) * J(C, {x});
  (void)x, (void)y;
  return s;
}

PDESystem vacuum_field() {
  VariableSpace sp({"x", "y", "z"}, {"A", "B", "C"});
  auto J = [&](int k, std::initializer_list<int> d) { return Expr::from_atom(sp.jet(k, MultiIndex(d))); };
  const int A = 0, B = 1, C = 2;
  PDESystem s;
  s.name = "vacuum";
  s.space = sp;
  s.equations = {
      J(C, {1}) - J(B, {2}),
      J(A, {2}) - J(C, {0}),
      J(B, {0}) - J(A, {1}),
      J(A, {0}) + J(B, {1}) + J(C, {2}),
  };
  // Eliminate {A_y, A_z, B_z, C_z}; the x-derivatives stay free.
  s.solved[sp.jet(A, {1})] = J(B, {0});
  s.solved[sp.jet(A, {2})] = J(C, {0});
  s.solved[sp.jet(B, {2})] = J(C, {1});
  s.solved[sp.jet(C, {2})] = -J(A, {0}) - J(B, {1});
  return s;
}

PDESystem force_free(ForceFreeMode mode) {
  VariableSpace sp({"x", "y", "z"}, {"A", "B", "C"});
  const int A = 0, B = 1, C = 2;
  auto J = [&](int k, std::initializer_list<int> d) { return Expr::from_atom(sp.jet(k, MultiIndex(d))); };
  auto U = [&](int k) { return Expr::from_atom(sp.u(k)); };
  PDESystem s;
  s.space = sp;
  if (mode == ForceFreeMode::const_alpha) {
    int alpha = s.space.add_param("alpha", ParamRole::physical);
    Expr al = Expr::from_atom(s.space.p(alpha));
    s.name = "force-free-const-alpha";
    s.equations = {
        J(C, {1}) - J(B, {2}) - al * U(A),
        J(A, {2}) - J(C, {0}) - al * U(B),
        J(B, {0}) - J(A, {1}) - al * U(C),
        J(A, {0}) + J(B, {1}) + J(C, {2}),
    };
    s.solved[s.space.jet(A, {1})] = J(B, {0}) - al * U(C);
    s.solved[s.space.jet(A, {2})] = J(C, {0}) + al * U(B);
    s.solved[s.space.jet(B, {2})] = J(C, {1}) - al * U(A);
    s.solved[s.space.jet(C, {2})] = -J(A, {0}) - J(B, {1});
  } else {
    s.name = "force-free-cross";
    Expr curl_x = J(C, {1}) - J(B, {2});
    Expr curl_y = J(A, {2}) - J(C, {0});
    Expr curl_z = J(B, {0}) - J(A, {1});
    s.equations = {
        curl_y * U(C) - curl_z * U(B),
        curl_z * U(A) - curl_x * U(C),
        curl_x * U(B) - curl_y * U(A),
        J(A, {0}) + J(B, {1}) + J(C, {2}),
    };
    // curl(B) x B = 0 says curl B is parallel to B; generically this solves
    // the z-derivatives of A and B with an inverse power of C.
    Expr invC = Expr::from_atom(sp.u(C), -1);
    s.solved[sp.jet(A, {2})] = J(C, {0}) + U(B) * invC * (J(B, {0}) - J(A, {1}));
    s.solved[sp.jet(B, {2})] = J(C, {1}) - U(A) * invC * (J(B, {0}) - J(A, {1}));
    s.solved[sp.jet(C, {2})] = -J(A, {0}) - J(B, {1});
  }
  return s;
}

std::optional<PDESystem> builtin_system(const std::string& id) {
  if (id == "mhd") return mhd_equilibrium();
  if (id == "vacuum") return vacuum_field();
  if (id == "force-free-const-alpha") return force_free(ForceFreeMode::const_alpha);
  if (id == "force-free-cross") return force_free(ForceFreeMode::cross_form);
  return std::nullopt;
}

std::vector<std::string> builtin_system_ids() {
  return {"mhd", "vacuum", "force-free-const-alpha", "force-free-cross"};
}

SolvedTable::SolvedTable(const PDESystem& sys, int depth) : sys_(&sys), depth_(depth) {
  for (const auto& [key, val] : sys.solved) add_rule(key, val, depth);
  std::size_t guard = 0;
  while (!queue_.empty()) {
    if (++guard > 4096) throw std::runtime_error("SolvedTable: prolongation did not terminate");
    auto [key, remaining] = queue_.back();
    queue_.pop_back();
    if (remaining <= 0) continue;
    Expr val = rules_.at(key);
    const int cap = key.mi.total() + 1 + val.max_jet_order();  // generous jet cap for D_i
    for (int i = 0; i < sys.space.n_indep(); ++i) {
      Expr dv = total_derivative(sys.space, val, i, std::max(cap, depth_ + 2));
      add_rule(Atom::jet(key.id, key.mi.plus(i)), std::move(dv), remaining - 1);
    }
  }
  // Values may reference keys added later; renormalize to a joint fixpoint.
  for (int pass = 0; pass < 64; ++pass) {
    bool changed = false;
    for (auto& [key, val] : rules_) {
      Expr nf = normal_form(val);
      if (!(nf == val)) {
        val = std::move(nf);
        changed = true;
      }
    }
    if (!changed) return;
  }
  throw std::runtime_error("SolvedTable: rule normalization did not settle");
}

void SolvedTable::add_rule(const Atom& key, Expr value, int remaining_prolong) {
  Expr nf = normal_form(std::move(value));
  auto it = rules_.find(key);
  if (it != rules_.end()) {
    Expr diff = normal_form(it->second - nf);
    if (!diff.is_zero()) derive_relation(std::move(diff), remaining_prolong);
    return;
  }
  if (rules_.size() > 512) throw std::runtime_error("SolvedTable: rule cap exceeded");
  rules_.emplace(key, std::move(nf));
  queue_.emplace_back(key, remaining_prolong);
}

void SolvedTable::derive_relation(Expr residual, int remaining_prolong) {
  // Cross-derivative consistency constraint among nominally free jets. Orient
  // it by the canonically largest top-order jet that occurs linearly with a
  // monomial coefficient.
  residual = normal_form(std::move(residual));
  if (residual.is_zero()) return;
  int top = residual.max_jet_order();
  std::optional<Atom> pivot;
  for (const Atom& a : residual.atoms_of_kind(AtomKind::jet)) {
    if (a.mi.total() != top) continue;
    auto parts = residual.collect([&](const Atom& b) { return b == a; });
    Mono lin{Factor{a, 1}};
    auto itc = parts.find(lin);
    if (itc == parts.end() || itc->second.terms().size() != 1) continue;
    bool higher = false;
    for (const auto& [m, c] : parts) {
      (void)c;
      if (!m.empty() && !(m == lin)) higher = true;
    }
    if (higher) continue;
    if (!pivot || *pivot < a) pivot = a;
  }
  if (!pivot) throw std::runtime_error("SolvedTable: cannot orient consistency relation");
  auto parts = residual.collect([&](const Atom& b) { return b == *pivot; });
  const Term& ct = parts.at(Mono{Factor{*pivot, 1}}).terms()[0];
  Mono inv;
  for (const auto& f : ct.mono) inv.push_back(Factor{f.atom, -f.pow});
  Expr inv_coef = mono_to_expr(inv, Rational(-1) / ct.coef);
  Expr rest = Expr::zero();
  auto it0 = parts.find(Mono{});
  if (it0 != parts.end()) rest = it0->second;
  add_rule(*pivot, inv_coef * rest, remaining_prolong);
}

Expr SolvedTable::normal_form(Expr e, bool error_on_depth) const {
  for (int pass = 0; pass < 64; ++pass) {
    std::map<Atom, Expr> step;
    for (const Atom& a : e.atoms_of_kind(AtomKind::jet)) {
      auto it = rules_.find(a);
      if (it != rules_.end()) {
        step.emplace(a, it->second);
        continue;
      }
      if (error_on_depth && a.mi.total() >= 1) {
        for (const auto& [key, val] : sys_->solved) {
          (void)val;
          if (a.id == key.id && a.mi.dominates(key.mi))
            throw std::domain_error("on_shell_reduce: depth insufficient to eliminate " +
                                    sys_->space.atom_name(a));
        }
      }
    }
    if (step.empty()) return e;
    // Rule values may share atoms with other keys; substitute only closed keys.
    for (auto its = step.begin(); its != step.end();) {
      bool self = false;
      for (const auto& [k, v] : step) {
        (void)k;
        if (v.contains(its->first)) self = true;
      }
      if (self) its = step.erase(its);
      else ++its;
    }
    if (step.empty()) throw std::runtime_error("SolvedTable: substitution cycle");
    e = substitute(e, step);
  }
  throw std::runtime_error("SolvedTable: normal form did not settle");
}

Expr SolvedTable::reduce(const Expr& e) const { return normal_form(e, true); }

std::vector<Atom> SolvedTable::free_jets(int order) const {
  std::vector<Atom> out;
  for (int k = 0; k < sys_->space.n_dep(); ++k) {
    for (const MultiIndex& mi : multi_indices(sys_->space.n_indep(), order)) {
      Atom a = Atom::jet(k, mi);
      if (!rules_.count(a)) out.push_back(a);
    }
  }
  return out;
}

std::vector<Atom> SolvedTable::free_jets_up_to(int max_order) const {
  std::vector<Atom> out;
  for (int o = 1; o <= max_order; ++o) {
    auto v = free_jets(o);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

std::vector<std::string> SolvedTable::self_check() const {
  std::vector<std::string> bad;
  for (std::size_t n = 0; n < sys_->equations.size(); ++n) {
    std::vector<Expr> level{sys_->equations[n]};
    for (int d = 0; d <= depth_; ++d) {
      for (const Expr& e : level) {
        if (!reduce(e).is_zero())
          bad.push_back("equation " + std::to_string(n) + " consequence at order " + std::to_string(d) +
                        " does not vanish on shell");
      }
      if (d == depth_) break;
      std::vector<Expr> next;
      for (const Expr& e : level)
        for (int i = 0; i < sys_->space.n_indep(); ++i)
          next.push_back(total_derivative(sys_->space, e, i, d + 2));
      level = std::move(next);
    }
  }
  return bad;
}

Expr on_shell_reduce(const Expr& e, const PDESystem& sys, int depth) {
  if (e.max_jet_order() > depth + 1)
    throw std::domain_error("on_shell_reduce: expression has jets beyond depth+1");
  SolvedTable table(sys, depth);
  return table.reduce(e);
}

}  // namespace pesym
