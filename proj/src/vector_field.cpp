#include "pesym/vector_field.hpp"

#include <stdexcept>

namespace pesym {

bool well_formed(const VectorField& v) {
  if (static_cast<int>(v.xi.size()) != v.space.n_indep()) return false;
  if (static_cast<int>(v.eta.size()) != v.space.n_dep()) return false;
  auto entry_ok = [](const Expr& e) { return e.max_jet_order() <= 1; };
  for (const auto& e : v.xi)
    if (!entry_ok(e)) return false;
  for (const auto& e : v.eta)
    if (!entry_ok(e)) return false;
  return true;
}

FieldClass classify(const VectorField& v) {
  int order = -1;
  for (const auto& e : v.xi) order = std::max(order, e.max_jet_order());
  for (const auto& e : v.eta) order = std::max(order, e.max_jet_order());
  if (order >= 2) throw std::invalid_argument("VectorField: jets of order >= 2 not allowed");
  return order <= 0 ? FieldClass::point : FieldClass::generalized;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  VectorField r = a;
  for (int i = 0; i < r.space.n_indep(); ++i) r.xi[i] += b.xi[i];
  for (int k = 0; k < r.space.n_dep(); ++k) r.eta[k] += b.eta[k];
  for (const auto& [p, e] : b.eta_param) {
    auto it = r.eta_param.find(p);
    if (it == r.eta_param.end()) r.eta_param[p] = e;
    else it->second += e;
  }
  return r;
}

VectorField operator*(const Rational& c, const VectorField& v) {
  VectorField r = v;
  for (auto& e : r.xi) e *= c;
  for (auto& e : r.eta) e *= c;
  for (auto& [p, e] : r.eta_param) e *= c;
  return r;
}

bool operator==(const VectorField& a, const VectorField& b) {
  return a.xi == b.xi && a.eta == b.eta && a.eta_param == b.eta_param;
}

ProlongedField prolong(const VectorField& v, int max_order) {
  if (max_order != 1) throw std::invalid_argument("prolong: only first-order prolongation is supported");
  if (!well_formed(v)) throw std::invalid_argument("prolong: malformed vector field");
  classify(v);
  const VariableSpace& sp = v.space;
  // One more order than the entries carry so D_i stays representable.
  int entry_order = 0;
  for (const auto& e : v.xi) entry_order = std::max(entry_order, e.max_jet_order());
  for (const auto& e : v.eta) entry_order = std::max(entry_order, e.max_jet_order());
  const int cap = entry_order + 1;

  ProlongedField p{v, {}};
  p.zeta.assign(sp.n_dep(), std::vector<Expr>(sp.n_indep()));
  for (int k = 0; k < sp.n_dep(); ++k) {
    for (int i = 0; i < sp.n_indep(); ++i) {
      Expr z = total_derivative(sp, v.eta[k], i, cap);
      for (int m = 0; m < sp.n_indep(); ++m)
        z -= Expr::from_atom(sp.jet1(k, m)) * total_derivative(sp, v.xi[m], i, cap);
      p.zeta[k][i] = std::move(z);
    }
  }
  return p;
}

Expr apply_prolonged(const ProlongedField& p, const Expr& e) {
  if (e.max_jet_order() > 1) throw std::invalid_argument("apply_prolonged: jets of order >= 2 in target");
  const VariableSpace& sp = p.base.space;
  Expr out = Expr::zero();
  for (const Atom& a : e.atoms()) {
    Expr coeff;
    switch (a.kind) {
      case AtomKind::indep:
        coeff = p.base.xi[a.id];
        break;
      case AtomKind::jet: {
        if (a.mi.is_zero()) {
          coeff = p.base.eta[a.id];
        } else {
          int dir = -1;
          a.mi.for_each([&](int slot, int) { dir = slot; });
          coeff = p.zeta[a.id][dir];
        }
        break;
      }
      case AtomKind::param: {
        auto it = p.base.eta_param.find(a.id);
        if (it == p.base.eta_param.end()) continue;
        coeff = it->second;
        break;
      }
      case AtomKind::fn_deriv:
        throw std::invalid_argument("apply_prolonged: unknown-function atoms in target expression");
    }
    if (coeff.is_zero()) continue;
    out += coeff * partial_diff(sp, e, a);
  }
  return out;
}

}  // namespace pesym
