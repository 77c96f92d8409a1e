#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lgp/graph.hpp"
#include "lgp/groups.hpp"

namespace lgp {

/// Groups on the vertices and edges of a reduction graph together with the
/// incidence homomorphisms G_v -> G_e. U-vertices act on edge coordinates
/// from the left, P-vertices from the right.
struct CoefficientSystem {
  GraphRef graph;
  std::vector<GroupRef> vertex_group;  // by vertex index
  std::vector<GroupRef> edge_group;    // by edge index
  std::vector<GroupHom> p_hom;         // by edge index: G_{p(e)} -> G_e
  std::vector<GroupHom> u_hom;         // by edge index: G_{u(e)} -> G_e

  // Checks sizes and that every hom runs between the right groups.
  Status validate() const;
};

CoefficientSystem constant_system(GraphRef graph, const GroupRef& group);

// One edge-group element per edge, in edge-index order.
using Cochain = std::vector<Element>;

struct H1Options {
  std::uint64_t max_states = kDefaultMaxStates;
};

/// A computed double coset space: canonical representatives (sorted), the
/// class of the identity cochain, and a total classifying function.
class DoubleCosetSpace {
 public:
  using ClassFn = std::function<std::size_t(const Cochain&)>;

  DoubleCosetSpace(std::vector<Cochain> representatives, std::size_t base_point, ClassFn class_of,
                   std::vector<GroupRef> edge_groups);

  std::size_t size() const noexcept { return reps_.size(); }
  const std::vector<Cochain>& representatives() const noexcept { return reps_; }
  std::size_t base_point() const noexcept { return base_; }
  const std::vector<GroupRef>& edge_groups() const noexcept { return edge_groups_; }

  // Throws BadCochain on a malformed cochain.
  std::size_t class_of(const Cochain& c) const;
  Status check_cochain(const Cochain& c) const;
  Cochain identity_cochain() const;

 private:
  std::vector<Cochain> reps_;
  std::size_t base_;
  ClassFn class_of_;
  std::vector<GroupRef> edge_groups_;
};

// Number of cochains, or StateBoundExceeded.
std::uint64_t cochain_count(const CoefficientSystem& sys, std::uint64_t bound);

// Orbit enumeration of the two-sided action on all cochains.
DoubleCosetSpace h1_brute_force(const CoefficientSystem& sys, const H1Options& opts = {});

// Constant coefficients: reduce along the spanning tree, then classify the
// holonomy tuple on the cycle edges up to uniform conjugacy.
DoubleCosetSpace h1_constant(const GraphRef& graph, const GroupRef& group, const H1Options& opts = {});

// Extends a cochain on `old` by identities on the leaf edges a refinement added.
Cochain refinement_map(const Cochain& c, const ReductionGraph& old, const CoefficientSystem& refined);

struct CompareOptions {
  H1Options h1;
  std::uint64_t exhaustive_limit = 100'000;
  std::uint64_t samples = 10'000;
  std::uint64_t seed = 1;
};

struct H1Comparison {
  bool match = false;
  std::size_t brute_classes = 0;
  std::size_t constant_classes = 0;
  std::uint64_t cochains_checked = 0;
  bool exhaustive = false;
  std::optional<Cochain> witness;
  std::string message;
};

// Checks that brute force and the spanning-tree reduction give the same
// partition of cochains, with a basepoint-preserving bijection of classes.
H1Comparison compare_h1(const GraphRef& graph, const GroupRef& group, const CompareOptions& opts = {});

}  // namespace lgp
