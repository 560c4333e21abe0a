#include "pesym/calculus.hpp"

#include <stdexcept>

namespace pesym {

namespace {

// d(atom)/d(a) in the formal sense: 0 or 1 for coordinate atoms, chain step
// for unknown-function derivatives.
Expr atom_partial(const VariableSpace& space, const Atom& at, const Atom& a) {
  if (at == a) return Expr::constant(Rational(1));
  if (at.kind == AtomKind::fn_deriv) {
    const auto& args = space.fn(at.id).args;
    for (std::size_t pos = 0; pos < args.size(); ++pos)
      if (args[pos] == a) return Expr::from_atom(Atom::fn_deriv(at.id, at.mi.plus(static_cast<int>(pos))));
  }
  return Expr::zero();
}

}  // namespace

Expr partial_diff(const VariableSpace& space, const Expr& e, const Atom& a) {
  if (!space.valid_atom(a)) throw std::invalid_argument("partial_diff: unknown atom id");
  std::vector<Term> out;
  for (const auto& t : e.terms()) {
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      const Factor& f = t.mono[i];
      Expr df = atom_partial(space, f.atom, a);
      if (df.is_zero()) continue;
      // power rule: coef * pow * atom^(pow-1) * df * rest
      Mono rest;
      rest.reserve(t.mono.size());
      for (std::size_t j = 0; j < t.mono.size(); ++j) {
        if (j == i) {
          if (f.pow != 1) rest.push_back(Factor{f.atom, f.pow - 1});
        } else {
          rest.push_back(t.mono[j]);
        }
      }
      Expr piece = mono_to_expr(rest, t.coef * Rational(f.pow)) * df;
      for (const auto& pt : piece.terms()) out.push_back(pt);
    }
  }
  return Expr::from_terms(std::move(out));
}

Expr total_derivative_atom(const VariableSpace& space, const Atom& a, int indep, int max_order) {
  switch (a.kind) {
    case AtomKind::indep:
      return a.id == indep ? Expr::constant(Rational(1)) : Expr::zero();
    case AtomKind::param:
      return Expr::zero();
    case AtomKind::jet: {
      if (a.mi.total() + 1 > max_order)
        throw std::domain_error("total_derivative: jet order overflow (increase max_order)");
      return Expr::from_atom(Atom::jet(a.id, a.mi.plus(indep)));
    }
    case AtomKind::fn_deriv: {
      const auto& args = space.fn(a.id).args;
      Expr sum = Expr::zero();
      for (std::size_t pos = 0; pos < args.size(); ++pos) {
        Expr darg = total_derivative_atom(space, args[pos], indep, max_order);
        if (darg.is_zero()) continue;
        sum += Expr::from_atom(Atom::fn_deriv(a.id, a.mi.plus(static_cast<int>(pos)))) * darg;
      }
      return sum;
    }
  }
  return Expr::zero();
}

Expr total_derivative(const VariableSpace& space, const Expr& e, int indep, int max_order) {
  if (indep < 0 || indep >= space.n_indep()) throw std::invalid_argument("total_derivative: bad variable");
  std::vector<Term> out;
  for (const auto& t : e.terms()) {
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      const Factor& f = t.mono[i];
      Expr df = total_derivative_atom(space, f.atom, indep, max_order);
      if (df.is_zero()) continue;
      Mono rest;
      rest.reserve(t.mono.size());
      for (std::size_t j = 0; j < t.mono.size(); ++j) {
        if (j == i) {
          if (f.pow != 1) rest.push_back(Factor{f.atom, f.pow - 1});
        } else {
          rest.push_back(t.mono[j]);
        }
      }
      Expr piece = mono_to_expr(rest, t.coef * Rational(f.pow)) * df;
      for (const auto& pt : piece.terms()) out.push_back(pt);
    }
  }
  return Expr::from_terms(std::move(out));
}

}  // namespace pesym
