#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lgp/arith.hpp"
#include "lgp/cohomology.hpp"
#include "lgp/corpus.hpp"

// Oracle-equivalence and invariant sweeps over the small-scale corpora,
// shared by the self test and the acceptance suite. Sizes are parameters so
// that callers choose the scale.
namespace lgp::checks {

struct CheckResult {
  bool passed = true;
  std::uint64_t cases = 0;
  std::string witness;  // first failure
  std::string detail;   // summary counts

  void fail(std::string w) {
    if (passed) witness = std::move(w);
    passed = false;
  }
};

// Validates each group of a JSON corpus file: {"groups": [group, ...]}.
CheckResult group_corpus_file(const std::string& path);

// compare_h1 on every pair of a corpus group and a connected bipartite graph.
CheckResult h1_oracle_equivalence(const std::vector<corpus::NamedGroup>& groups, std::size_t max_edges,
                                  const CompareOptions& opts);

// uniform_conjugacy_classes(g, m) against the Burnside count.
CheckResult uniform_counts(const std::vector<corpus::NamedGroup>& groups, std::size_t max_m);

// sha_lower_bound has a single class on every model of the monotonic sweep.
CheckResult monotonic_collapse(std::size_t max_edges, const std::vector<corpus::NamedGroup>& groups,
                               const std::vector<corpus::NamedGroup>& small_groups);

// Adding one or two P-leaves at any U-vertex keeps the class count, and the
// refinement map is a bijection on classes. Runs over constant systems on
// the graph corpus and over multi-field example models.
CheckResult refinement_stability(const std::vector<corpus::NamedGroup>& groups, std::size_t max_edges,
                                 std::uint64_t max_states);

// ∏_v (a,b)_v = 1 for 1 ≤ |a|,|b| ≤ bound.
CheckResult hilbert_product_formula(Int bound);

// hilbert_symbol against the solubility search on random (a, b, place).
CheckResult hilbert_vs_oracle(std::size_t samples, Int bound, std::uint64_t seed);

// d_kappa([], a, b) against the κ = Q oracle for squarefree |a|,|b| ≤ bound.
CheckResult d_kappa_vs_oracle(Int bound);

// Finite modules with |M| ≤ max_order: cyclic actions enumerated over small
// orders, random actions on larger ones, and permutation modules.
std::vector<GModule> tate_corpus(std::uint64_t max_order, std::uint64_t seed);

CheckResult tate_vs_enumeration(const std::vector<GModule>& modules);

// Every enumerated action on a colored tree fixes some vertex.
CheckResult serre_fixed_points(std::size_t max_vertices, const std::vector<corpus::NamedGroup>& groups,
                               std::uint64_t cap, std::uint64_t samples, std::uint64_t seed);

struct NamedResult {
  std::string name;
  CheckResult result;
};

// Reduced-scale run of every suite above, after validating an optional
// group corpus file. Stops at the first failing suite.
std::vector<NamedResult> selftest(std::uint64_t seed, const std::string& group_corpus = {});

}  // namespace lgp::checks
