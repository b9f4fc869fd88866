#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monlink/monomial.hpp"

namespace monlink {

struct LinkCheck {
  std::string name;
  bool passed = false;
  std::vector<std::pair<std::string, MonomialIdeal>> witnesses;

  friend bool operator==(const LinkCheck&, const LinkCheck&) = default;
};

struct LinkReport {
  std::vector<LinkCheck> checks;

  bool passed() const;
  friend bool operator==(const LinkReport&, const LinkReport&) = default;
};

/// Pairwise disjoint supports. False for an empty list or one containing 1.
bool is_monomial_regular_sequence(std::span<const Monomial> ms);

/// The four conditions of a direct link i1 ~ i2 over (regseq):
/// regular sequence, containment in i1 ∩ i2, and both colon identities.
LinkReport verify_direct_link(const MonomialIdeal& i1, const MonomialIdeal& i2,
                              std::span<const Monomial> regseq);

/// Linkage ladder for P_t of the suspension of one edge plus n - 2 isolated
/// vertices, in the ring of that suspension. Each rung k = t, t-2, ... >= 3
/// checks that I_k and I'_k are linked through the colon chain
///   J : I = J : (x10 x20 I'') = J' : I'' = J' : I'
/// (I'' being I' without its isolated-vertex block) and that I'_k becomes
/// I_{k-2} under x_{i,j} -> x_{i,j-1}. The ends I_1 and I_2 are checked
/// separately. Parameters outside n >= 2, t >= 3 yield a failed report.
LinkReport verify_suspension_chain(std::size_t n, std::size_t t);

}  // namespace monlink
