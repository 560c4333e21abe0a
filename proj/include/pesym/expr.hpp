#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pesym/atom.hpp"
#include "pesym/rational.hpp"

namespace pesym {

/// One atom raised to a (possibly negative) power. Negative powers arise only
/// for undifferentiated dependent-variable atoms, via solved forms that divide
/// by a field component; derivative atoms always carry positive powers.
struct Factor {
  Atom atom;
  std::int32_t pow{1};
  auto operator<=>(const Factor&) const = default;
};

/// Monomial: sorted list of factors, unique atoms, no zero powers.
using Mono = std::vector<Factor>;

bool mono_less(const Mono& a, const Mono& b);
int mono_total_degree(const Mono& m);
std::size_t mono_hash(const Mono& m);

struct MonoLess {
  bool operator()(const Mono& a, const Mono& b) const { return mono_less(a, b); }
};

struct Term {
  Rational coef;
  Mono mono;
};

/// Exact-rational multivariate (Laurent) polynomial over atoms, kept in a
/// canonical totally ordered form so that equality is plain comparison.
class Expr {
 public:
  Expr() = default;

  static Expr zero() { return Expr{}; }
  static Expr constant(const Rational& c);
  static Expr from_atom(const Atom& a, std::int32_t pow = 1);
  static Expr from_terms(std::vector<Term> terms);  // canonicalizes

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.empty()); }
  Rational constant_value() const;  // requires is_constant()
  std::size_t size() const { return terms_.size(); }

  bool operator==(const Expr& o) const;

  Expr operator-() const;
  Expr& operator+=(const Expr& o);
  Expr& operator-=(const Expr& o);
  friend Expr operator+(Expr a, const Expr& b) { return a += b, a; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b, a; }
  friend Expr operator*(const Expr& a, const Expr& b);
  Expr& operator*=(const Expr& o) { return *this = *this * o; }
  Expr& operator*=(const Rational& c);
  friend Expr operator*(Expr a, const Rational& c) { return a *= c, a; }
  friend Expr operator*(const Rational& c, Expr a) { return a *= c, a; }

  Expr pow(int n) const;  // n >= 0

  int max_jet_order() const;
  bool contains(const Atom& a) const;
  bool contains_kind(AtomKind k) const;
  std::vector<Atom> atoms() const;                 // distinct atoms, canonical order
  std::vector<Atom> atoms_of_kind(AtomKind) const;
  int degree_in(const Atom& a) const;              // max power (0 if absent)
  bool has_negative_power() const;

  /// Coefficient-of view: groups terms by the sub-monomial over atoms selected
  /// by `pick`; summing key*value reproduces the expression exactly.
  std::map<Mono, Expr, MonoLess> collect(const std::function<bool(const Atom&)>& pick) const;

  double evaluate(const std::unordered_map<Atom, double>& vals) const;
  Rational evaluate_rational(const std::unordered_map<Atom, Rational>& vals) const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

/// Simultaneous substitution atom -> Expr, then canonicalization.
/// Preconditions: no key occurs in any mapped value (no fixpoint semantics);
/// a key occurring with a negative power must map to an invertible monomial.
Expr substitute(const Expr& e, const std::map<Atom, Expr>& map);

/// Coefficient map over monomials in the given jet atoms (spec: collect_jet).
std::map<Mono, Expr, MonoLess> collect_jet(const Expr& e, const std::vector<Atom>& jets);

// Monomial utilities shared by the solver layers.
Mono mono_mul(const Mono& a, const Mono& b);
Expr mono_to_expr(const Mono& m, const Rational& coef = Rational(1));

}  // namespace pesym
