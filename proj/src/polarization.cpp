#include "monlink/polarization.hpp"

#include <algorithm>
#include <stdexcept>

namespace monlink {

MonomialIdeal polarize(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.num_vars();
  std::vector<Exponent> max_exponent(n, 0);
  for (const auto& g : ideal.generators()) {
    for (std::size_t i = 0; i < n; ++i) max_exponent[i] = std::max(max_exponent[i], g[i]);
  }
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + max_exponent[i];
  const std::size_t width = offset[n];
  if (width > variable_cap()) throw VariableCapError(width, variable_cap());

  std::vector<std::string> names;
  names.reserve(width);
  for (std::size_t i = 0; i < n; ++i) {
    for (Exponent j = 0; j < max_exponent[i]; ++j) {
      names.push_back(ideal.vars().name(i) + "_" + std::to_string(j));
    }
  }
  std::vector<Monomial> gens;
  gens.reserve(ideal.num_generators());
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> e(width, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (Exponent j = 0; j < g[i]; ++j) e[offset[i] + j] = 1;
    }
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(VariableSet(std::move(names)), std::move(gens));
}

MonomialIdeal depolarize_suspension(const Graph& g, std::size_t t) {
  const std::size_t n = g.num_vertices();
  const MonomialIdeal paths = t_path_ideal(suspension(g, t), t);
  std::vector<Monomial> gens;
  gens.reserve(paths.num_generators());
  for (const auto& m : paths.generators()) {
    std::vector<Exponent> e(n, 0);
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] > 0) e[suspension_base(v, n, t)] += m[v];
    }
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(g.variables(), std::move(gens));
}

MonomialIdeal relabel(const MonomialIdeal& ideal, const VariableSet& target,
                      const std::function<std::string(const std::string&)>& rename) {
  std::vector<std::size_t> image(ideal.num_vars());
  for (std::size_t i = 0; i < ideal.num_vars(); ++i) {
    const std::string renamed = rename(ideal.vars().name(i));
    auto index = target.index_of(renamed);
    if (!index) throw std::invalid_argument("variable '" + renamed + "' is not in the target ring");
    image[i] = *index;
  }
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> e(target.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) e[image[i]] += g[i];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(target, std::move(gens));
}

}  // namespace monlink
