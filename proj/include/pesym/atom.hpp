#pragma once

#include <compare>
#include <cstdint>
#include <functional>

#include "pesym/multi_index.hpp"

namespace pesym {

enum class AtomKind : std::uint8_t {
  indep = 0,     ///< independent variable x^i
  jet = 1,       ///< dependent variable or one of its derivatives u^k_mu
  param = 2,     ///< named constant (group parameter, ansatz coefficient, ...)
  fn_deriv = 3,  ///< derivative of an unknown function, multi-index over its declared args
};

/// Atomic symbol of the jet-space polynomial algebra. Total ordering is
/// lexicographic on (kind, id, multi-index); the canonical form of every
/// expression is defined in terms of it.
struct Atom {
  AtomKind kind{AtomKind::indep};
  std::int16_t id{0};
  MultiIndex mi{};

  static Atom indep(int i) { return Atom{AtomKind::indep, static_cast<std::int16_t>(i), {}}; }
  static Atom jet(int dep, MultiIndex m = {}) { return Atom{AtomKind::jet, static_cast<std::int16_t>(dep), m}; }
  static Atom dep_var(int dep) { return jet(dep, {}); }
  static Atom param(int p) { return Atom{AtomKind::param, static_cast<std::int16_t>(p), {}}; }
  static Atom fn_deriv(int fn, MultiIndex m = {}) { return Atom{AtomKind::fn_deriv, static_cast<std::int16_t>(fn), m}; }

  bool is_jet_of_order_ge(int n) const { return kind == AtomKind::jet && mi.total() >= n; }
  int jet_order() const { return kind == AtomKind::jet ? mi.total() : -1; }

  auto operator<=>(const Atom&) const = default;

  std::size_t hash() const {
    std::size_t h = mi.hash();
    h ^= (static_cast<std::size_t>(kind) << 24) | (static_cast<std::uint16_t>(id) << 1);
    h *= 1099511628211ull;
    return h;
  }
};

}  // namespace pesym

template <>
struct std::hash<pesym::Atom> {
  std::size_t operator()(const pesym::Atom& a) const { return a.hash(); }
};
