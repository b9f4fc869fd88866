#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "monlink/graph.hpp"
#include "monlink/monomial.hpp"

namespace monlink {

inline constexpr std::uint64_t kDefaultSeed = 20250117;

struct TaskOutcome {
  bool passed = true;
  std::vector<std::string> notes;
  std::vector<std::string> failures;

  /// Records a failure when `ok` is false; returns `ok`.
  bool expect(bool ok, const std::string& what);
};

struct HarnessTask {
  std::string id;
  std::string name;
  std::string description;
  std::string citation;
  std::function<TaskOutcome(std::uint64_t seed)> run;
};

struct TaskResult {
  std::string id;
  std::string name;
  std::string citation;
  TaskOutcome outcome;
};

struct HarnessSummary {
  std::uint64_t seed = kDefaultSeed;
  std::vector<TaskResult> results;
  bool passed() const;
};

/// T1..T18 in id order.
const std::vector<HarnessTask>& harness_tasks();

/// Runs the selected tasks (all when empty) in id order. Throws
/// std::invalid_argument for an unknown id.
HarnessSummary verify_paper(const std::vector<std::string>& selection, std::uint64_t seed = kDefaultSeed);

namespace corpus {

/// Every labeled graph on n vertices with no isolated vertex.
std::vector<Graph> labeled_graphs_without_isolated(std::size_t n);

struct NamedGraph {
  std::string name;
  Graph graph;
};
/// K3, P3, C4, two disjoint edges, and stars K_{1,k} (k <= 3) with up to two
/// isolated vertices.
std::vector<NamedGraph> suspension_graphs();

/// Proper nonzero squarefree ideals in 1..max_vars variables.
std::vector<MonomialIdeal> random_squarefree(std::uint64_t seed, std::size_t count, std::size_t max_vars);

/// Nonzero proper monomial ideals with at most `max_gens` generators and
/// exponents at most `max_exponent`.
std::vector<MonomialIdeal> random_monomial(std::uint64_t seed, std::size_t count, std::size_t max_vars,
                                           std::size_t max_gens, Exponent max_exponent);

/// Random Artinian ideals: pure powers of every variable plus random extras.
std::vector<MonomialIdeal> random_artinian(std::uint64_t seed, std::size_t count, std::size_t max_vars);

}  // namespace corpus

}  // namespace monlink
