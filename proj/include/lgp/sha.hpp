#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lgp/cohomology.hpp"
#include "lgp/graph.hpp"
#include "lgp/groups.hpp"

namespace lgp {

using FieldPair = std::pair<std::string, std::string>;  // (smaller, larger)

/// A reduction graph together with the field lattice, a finite group per
/// field standing in for G(κ)/R, and the homomorphisms induced by the field
/// inclusions. The maps form a functor on the lattice.
class ShaModel {
 public:
  // Missing maps for composite inclusions are filled in by composition;
  // reflexive maps default to the identity.
  static ShaModel create(LatticeRef lattice, GraphRef graph, std::map<std::string, GroupRef> groups,
                         std::map<FieldPair, GroupHom> maps);

  const FieldLattice& lattice() const noexcept { return *lattice_; }
  const LatticeRef& lattice_ref() const noexcept { return lattice_; }
  const ReductionGraph& graph() const noexcept { return *graph_; }
  const GraphRef& graph_ref() const noexcept { return graph_; }
  const GroupRef& group_of(const std::string& field) const;
  const GroupHom& map_of(const std::string& smaller, const std::string& larger) const;
  const std::map<std::string, GroupRef>& groups() const noexcept { return groups_; }
  const std::map<FieldPair, GroupHom>& maps() const noexcept { return maps_; }

  // Same fields, groups and maps on another graph over the same lattice.
  ShaModel with_graph(GraphRef graph) const;

 private:
  LatticeRef lattice_;
  GraphRef graph_;
  std::map<std::string, GroupRef> groups_;
  std::map<FieldPair, GroupHom> maps_;
};

CoefficientSystem to_coefficient_system(const ShaModel& m);

// The double coset space onto which Sha surjects. More than one class
// certifies a failure of the local-global principle.
DoubleCosetSpace sha_lower_bound(const ShaModel& m, const H1Options& opts = {});

// Exact Sha when every vertex carries the same minimal field k: uniform
// conjugacy classes of G(k)/R^m. Throws HypothesisViolated otherwise.
DoubleCosetSpace sha_exact_rational(const ShaModel& m, const H1Options& opts = {});

// Returns ok, or HypothesisViolated naming the first offending vertex.
Status check_rationality(const ShaModel& m);

// Three components meeting pairwise at rational points: a hexagonal cycle.
ShaModel triangle_model(const GroupRef& group);

// Two components over k meeting at one point with residue field k' ⊋ k.
ShaModel nonmono_model(const GroupRef& gk, const GroupRef& gk_prime, const GroupHom& inclusion);

bool is_class_trivial(const DoubleCosetSpace& space, const Cochain& c);

enum class Verdict { Counterexample, PrincipleHolds, Inconclusive };

const char* verdict_name(Verdict v) noexcept;

// Counterexample if more than one class; PrincipleHolds if one class and the
// result is exact; Inconclusive otherwise.
Verdict verdict(const DoubleCosetSpace& space, bool exact);

}  // namespace lgp
