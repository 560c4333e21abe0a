#pragma once

#include "pesym/expr.hpp"
#include "pesym/variable_space.hpp"

namespace pesym {

/// Formal partial derivative treating atoms as independent coordinates.
/// Differentiating a function-derivative atom with respect to one of the
/// function's declared arguments increments its multi-index; parameters
/// differentiate to zero.
Expr partial_diff(const VariableSpace& space, const Expr& e, const Atom& a);

/// Total derivative D_i = d/dx^i + u^k_i d/du^k + u^k_{ij} d/du^k_j + ...
/// truncated at jet order `max_order`. Raising a jet beyond `max_order`
/// throws std::domain_error instead of silently truncating.
Expr total_derivative(const VariableSpace& space, const Expr& e, int indep, int max_order);

/// Total derivative of a single atom; used by the chain rule on unknown
/// functions and exposed for tests.
Expr total_derivative_atom(const VariableSpace& space, const Atom& a, int indep, int max_order);

}  // namespace pesym
