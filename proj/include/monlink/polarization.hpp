#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "monlink/graph.hpp"
#include "monlink/monomial.hpp"

namespace monlink {

/// Standard polarization x_i^e -> x_{i,0} x_{i,1} ... x_{i,e-1}. Variable i
/// contributes as many new variables as its largest exponent among the
/// generators, named "<name>_<j>" and ordered by (i, j). Throws
/// VariableCapError when the new ring exceeds variable_cap().
MonomialIdeal polarize(const MonomialIdeal& ideal);

/// Image of P_t(suspension(g, t)) under x_{i,j} -> x_i, in the ring of g.
MonomialIdeal depolarize_suspension(const Graph& g, std::size_t t);

/// Moves the ideal into `target` by renaming each variable; throws
/// std::invalid_argument if a renamed variable is missing from `target`.
MonomialIdeal relabel(const MonomialIdeal& ideal, const VariableSet& target,
                      const std::function<std::string(const std::string&)>& rename);

}  // namespace monlink
