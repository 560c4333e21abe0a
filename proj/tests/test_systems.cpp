#include "doctest.h"

#include <random>

#include "pesym/calculus.hpp"
#include "pesym/system.hpp"

using namespace pesym;

namespace {
Expr jexpr(const VariableSpace& sp, int k, std::initializer_list<int> d) {
  return Expr::from_atom(sp.jet(k, MultiIndex(d)));
}
}  // namespace

TEST_CASE("mhd system matches the solved forms quoted from the derivation") {
  PDESystem s = mhd_equilibrium();
  const auto& sp = s.space;
  const int A = 0, B = 1, C = 2, P = 3;
  CHECK(s.equations.size() == 4);
  CHECK(s.solved.at(sp.jet(C, {2})) == -jexpr(sp, A, {0}) - jexpr(sp, B, {1}));
  Expr py = Expr::from_atom(sp.u(A)) * jexpr(sp, B, {0}) - Expr::from_atom(sp.u(A)) * jexpr(sp, A, {1}) -
            Expr::from_atom(sp.u(C)) * jexpr(sp, C, {1}) + Expr::from_atom(sp.u(C)) * jexpr(sp, B, {2});
  CHECK(s.solved.at(sp.jet(P, {1})) == py);
  CHECK(s.validate());
}

TEST_CASE("vacuum system: count, solved choice, validation") {
  PDESystem s = vacuum_field();
  CHECK(s.equations.size() == 4);
  // from the curl x-component C_y - B_z = 0
  CHECK(s.solved.at(s.space.jet(1, {2})) == jexpr(s.space, 2, {1}));
  CHECK(s.validate());
}

TEST_CASE("force-free variants") {
  PDESystem ff = force_free(ForceFreeMode::const_alpha);
  CHECK(ff.validate());
  CHECK(ff.solved.at(ff.space.jet(2, {2})) == -jexpr(ff.space, 0, {0}) - jexpr(ff.space, 1, {1}));

  // alpha = 0 specializes to the vacuum equations
  PDESystem vac = vacuum_field();
  std::map<Atom, Expr> kill{{ff.space.p(0), Expr::zero()}};
  for (std::size_t n = 0; n < 4; ++n) CHECK(substitute(ff.equations[n], kill) == vac.equations[n]);

  // the cross form is the mhd system with the pressure gradient removed
  PDESystem cross = force_free(ForceFreeMode::cross_form);
  CHECK(cross.validate());
  PDESystem mhd = mhd_equilibrium();
  std::map<Atom, Expr> nop;
  for (int i = 0; i < 3; ++i) nop[mhd.space.jet(3, MultiIndex{{i}})] = Expr::zero();
  for (std::size_t n = 0; n < 4; ++n) CHECK(substitute(mhd.equations[n], nop) == cross.equations[n]);
}

TEST_CASE("on_shell_reduce examples") {
  PDESystem mhd = mhd_equilibrium();
  const auto& sp = mhd.space;
  Expr div = jexpr(sp, 2, {2}) + jexpr(sp, 0, {0}) + jexpr(sp, 1, {1});
  CHECK(on_shell_reduce(div, mhd, 0).is_zero());
  CHECK(on_shell_reduce(Expr::from_atom(sp.u(0)), mhd, 0) == Expr::from_atom(sp.u(0)));

  // D_x of the C_z solved form
  Expr cxz = Expr::from_atom(sp.jet(2, MultiIndex{{0, 2}}));
  Expr expect = -Expr::from_atom(sp.jet(0, MultiIndex{{0, 0}})) - Expr::from_atom(sp.jet(1, MultiIndex{{0, 1}}));
  CHECK(on_shell_reduce(cxz, mhd, 1) == expect);

  CHECK_THROWS_AS((void)on_shell_reduce(cxz, mhd, 0), std::domain_error);
}

TEST_CASE("on_shell_reduce is idempotent on random expressions") {
  PDESystem mhd = mhd_equilibrium();
  const auto& sp = mhd.space;
  std::vector<Atom> pool;
  for (int k = 0; k < sp.n_dep(); ++k) {
    pool.push_back(sp.u(k));
    for (int i = 0; i < 3; ++i) pool.push_back(sp.jet1(k, i));
  }
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> nterms(1, 4), nfac(1, 3), coef(-6, 6);
  for (int it = 0; it < 50; ++it) {
    std::vector<Term> ts;
    for (int t = 0, n = nterms(rng); t < n; ++t) {
      long c = coef(rng);
      if (c == 0) c = 2;
      Mono m;
      for (int f = 0, nf = nfac(rng); f < nf; ++f) {
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        m.push_back(Factor{pool[pick(rng)], 1});
      }
      ts.push_back(Term{rat(c), m});
    }
    Expr e = Expr::from_terms(std::move(ts));
    Expr once = on_shell_reduce(e, mhd, 0);
    REQUIRE(on_shell_reduce(once, mhd, 0) == once);
  }
}

TEST_CASE("free first jets of mhd are exactly the eight field derivatives") {
  PDESystem mhd = mhd_equilibrium();
  SolvedTable table(mhd, 0);
  auto free1 = table.free_jets(1);
  CHECK(free1.size() == 8);
  for (const Atom& a : free1) {
    CHECK(a.id != 3);  // no free pressure jets
    CHECK(mhd.solved.count(a) == 0);
  }
}

TEST_CASE("solved tables close under differential consequences") {
  for (const auto& id : builtin_system_ids()) {
    PDESystem s = *builtin_system(id);
    for (int depth : {0, 1, 2}) {
      SolvedTable t(s, depth);
      auto bad = t.self_check();
      CAPTURE(id);
      CAPTURE(depth);
      CHECK(bad.empty());
    }
  }
}

TEST_CASE("mhd at depth 1 forces cross-derivative relations among field jets") {
  PDESystem mhd = mhd_equilibrium();
  SolvedTable t(mhd, 1);
  // 4 base rules, their distinct prolongations, plus the oriented
  // integrability constraints of the pressure gradient.
  int second_order_field_rules = 0;
  for (const auto& [key, val] : t.rules()) {
    (void)val;
    if (key.id != 3 && key.mi.total() == 2) ++second_order_field_rules;
  }
  // C_z has three prolongations; the three pressure compatibility relations
  // add constraints on otherwise free A/B/C second jets.
  CHECK(second_order_field_rules == 6);
  CHECK(t.free_jets(2).size() == 24 - 3 - 6 - 3);  // 24 symmetric second jets per naive count minus C_z family,
                                                   // pressure rows handled separately
}

TEST_CASE("cross-form reduction uses exact inverse powers") {
  PDESystem cross = force_free(ForceFreeMode::cross_form);
  for (const Expr& e : cross.equations) CHECK(on_shell_reduce(e, cross, 0).is_zero());
  // the solved value for A_z carries 1/C
  Expr az = cross.solved.at(cross.space.jet(0, {2}));
  CHECK(az.has_negative_power());
}
