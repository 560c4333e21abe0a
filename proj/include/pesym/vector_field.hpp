#pragma once

#include <map>
#include <vector>

#include "pesym/calculus.hpp"
#include "pesym/expr.hpp"
#include "pesym/variable_space.hpp"

namespace pesym {

enum class FieldClass { point, generalized };

/// Tangent vector field of a transformation group: xi per independent
/// variable, eta per dependent variable. Point-class entries depend on (x, u)
/// only; generalized-class entries may also carry first-order jets.
/// eta_param optionally transports named parameters (used to probe how a
/// system parameter would have to vary for a candidate symmetry to close).
struct VectorField {
  VariableSpace space;
  std::vector<Expr> xi;
  std::vector<Expr> eta;
  std::map<int, Expr> eta_param;

  static VectorField zero(const VariableSpace& s) {
    return VectorField{s, std::vector<Expr>(s.n_indep()), std::vector<Expr>(s.n_dep()), {}};
  }
};

bool well_formed(const VectorField& v);
FieldClass classify(const VectorField& v);  // throws if jets of order >= 2 present

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator*(const Rational& c, const VectorField& v);
bool operator==(const VectorField& a, const VectorField& b);

/// First prolongation: stores zeta(k,i) = D_i eta^k - u^k_m D_i xi^m.
struct ProlongedField {
  VectorField base;
  std::vector<std::vector<Expr>> zeta;  // [dep][indep]
};

/// Only first-order prolongation is supported (the systems here are all
/// first order); any other max_order is rejected.
ProlongedField prolong(const VectorField& v, int max_order = 1);

/// Action of the prolonged field on an expression with jets of order <= 1:
/// sum xi^i de/dx^i + eta^k de/du^k + zeta_i^k de/du^k_i (+ param transport).
Expr apply_prolonged(const ProlongedField& p, const Expr& e);

}  // namespace pesym
