#include "pesym/variable_space.hpp"

namespace pesym {

std::string VariableSpace::atom_name(const Atom& a) const {
  switch (a.kind) {
    case AtomKind::indep:
      return indep_name(a.id);
    case AtomKind::jet: {
      std::string s = dep_name(a.id);
      if (!a.mi.is_zero()) {
        s += "_";
        a.mi.for_each([&](int slot, int order) {
          for (int r = 0; r < order; ++r) s += indep_name(slot);
        });
      }
      return s;
    }
    case AtomKind::param:
      return param_name(a.id);
    case AtomKind::fn_deriv: {
      const UnknownFn& f = fn(a.id);
      std::string s = f.name;
      if (!a.mi.is_zero()) {
        s += "_";
        a.mi.for_each([&](int slot, int order) {
          for (int r = 0; r < order; ++r) {
            s += atom_name(f.args[slot]);
          }
        });
      }
      return s;
    }
  }
  return "?";
}

}  // namespace pesym
