#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lgp/graph.hpp"
#include "lgp/groups.hpp"
#include "lgp/sha.hpp"

// Generators for the small-scale test corpora: explicit groups, reduction
// graphs up to isomorphism, tree actions, and models on monotonic trees.
namespace lgp::corpus {

using NamedGroup = std::pair<std::string, GroupRef>;

// Z/2, Z/3, Z/4, Z/2×Z/2, S3, Z/8, Q8, D4.
std::vector<NamedGroup> groups_order_le_8();
// Every group of order ≤ 6 up to isomorphism: 1, Z/2, Z/3, Z/4, Z/2×Z/2, Z/5, Z/6, S3.
std::vector<NamedGroup> groups_order_le_6();

// Connected bipartite multigraphs with at most max_edges edges, one per
// isomorphism class (kinds respected), all fields "k".
std::vector<GraphRef> bipartite_graphs(std::size_t max_edges);

// Trees with at most max_vertices vertices and a P/U kind on each vertex
// (adjacent kinds differ), one per isomorphism class; all fields "k".
std::vector<GraphRef> colored_trees(std::size_t max_vertices);

const FieldLattice& single_field_lattice();

// Kind-preserving automorphisms of a simple graph, as vertex permutations.
std::vector<std::vector<std::size_t>> automorphisms(const ReductionGraph& g);

struct ActionSweep {
  std::uint64_t candidates = 0;  // generator-image tuples examined
  std::uint64_t actions = 0;     // valid actions found and passed to the callback
  bool exhaustive = true;
};

// Calls fn on group actions on a simple graph built from homomorphisms
// group -> Aut(g). Exhaustive when the number of generator-image tuples is at
// most `cap`; otherwise `samples` random tuples are tried.
ActionSweep sweep_actions(const ReductionGraph& g, const GroupRef& group, std::uint64_t cap,
                          std::uint64_t samples, std::uint64_t seed,
                          const std::function<void(const GraphAction&)>& fn);

struct MonotonicSweep {
  std::uint64_t models = 0;
  std::uint64_t field_assignments = 0;
};

// Every ShaModel on a monotonic tree with at most max_edges edges over the
// lattices {k}, {k ⊂ K}, {k ⊂ K ⊂ K'} and {k ⊂ K1, k ⊂ K2} (each label
// used), with groups from `groups` and every functorial choice of maps.
// Three-label lattices draw groups from `small_groups`.
MonotonicSweep sweep_monotonic_models(std::size_t max_edges, const std::vector<NamedGroup>& groups,
                                      const std::vector<NamedGroup>& small_groups,
                                      const std::function<void(const ShaModel&)>& fn);

}  // namespace lgp::corpus
