#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lgp/error.hpp"
#include "lgp/groups.hpp"

namespace lgp {

using Id = std::int64_t;

/// Finite poset of field labels under inclusion, stored transitively closed.
class FieldLattice {
 public:
  struct Label {
    std::string name;
    std::optional<int> degree;
  };

  // `contains` holds (smaller, larger) pairs; the closure is computed here.
  static FieldLattice create(std::vector<Label> labels,
                             const std::vector<std::pair<std::string, std::string>>& contains);
  static FieldLattice single(const std::string& name);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  bool has(const std::string& name) const { return index_.count(name) != 0; }
  std::size_t index_of(const std::string& name) const;

  // smaller ⊆ larger (reflexive).
  bool contains(const std::string& smaller, const std::string& larger) const;
  bool contains(std::size_t smaller, std::size_t larger) const { return closed_[smaller * size() + larger]; }

  // All (smaller, larger) pairs of the closed relation, reflexive ones included.
  std::vector<std::pair<std::string, std::string>> pairs() const;
  // Labels with no strictly smaller label.
  std::vector<std::string> minimal_labels() const;

 private:
  std::vector<Label> labels_;
  std::map<std::string, std::size_t> index_;
  std::vector<char> closed_;
};

enum class VertexKind { P, U };

struct Vertex {
  Id id = 0;
  VertexKind kind = VertexKind::U;
  std::string field;
};

struct Edge {
  Id id = 0;
  Id p = 0;  // P-vertex id
  Id u = 0;  // U-vertex id
};

/// Bipartite multigraph of closed points (P) and components (U) joined by
/// branches. Vertices and edges are kept sorted by id; the index of an item
/// is its rank in that order. Connectivity is not required at construction
/// so that it can be reported; operations that need it throw NotConnected.
class ReductionGraph {
 public:
  static ReductionGraph create(std::vector<Vertex> vertices, std::vector<Edge> edges,
                               const FieldLattice& lattice);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Vertex& vertex(std::size_t i) const { return vertices_[i]; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  std::size_t vertex_index(Id id) const;
  std::size_t edge_index(Id id) const;
  std::optional<std::size_t> find_vertex(Id id) const;
  std::optional<std::size_t> find_edge(Id id) const;

  std::size_t p_index(std::size_t e) const { return edge_p_[e]; }
  std::size_t u_index(std::size_t e) const { return edge_u_[e]; }
  // Endpoint of edge e other than vertex v.
  std::size_t other_end(std::size_t e, std::size_t v) const { return edge_p_[e] == v ? edge_u_[e] : edge_p_[e]; }
  // Incident edge indices, ascending.
  const std::vector<std::size_t>& incident(std::size_t v) const { return incident_[v]; }

  // Residue field of a branch: the field of its P endpoint.
  const std::string& edge_field(std::size_t e) const { return vertices_[edge_p_[e]].field; }

  bool is_connected() const;

  Id max_vertex_id() const;
  Id max_edge_id() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<Id, std::size_t> vindex_;
  std::map<Id, std::size_t> eindex_;
  std::vector<std::size_t> edge_p_, edge_u_;
  std::vector<std::vector<std::size_t>> incident_;
};

using GraphRef = std::shared_ptr<const ReductionGraph>;
using LatticeRef = std::shared_ptr<const FieldLattice>;

// |E| - |V| + 1; throws NotConnected.
std::size_t cycle_rank(const ReductionGraph& g);
bool is_tree(const ReductionGraph& g);

struct MonotonicResult {
  bool monotonic = false;
  std::optional<Id> root;  // least valid U-vertex id
};

MonotonicResult is_monotonic_tree(const ReductionGraph& g, const FieldLattice& lattice);

// Adds one P-leaf per label in new_fields, attached to U-vertex u. New
// vertex and edge ids continue after the current maxima.
ReductionGraph refine(const ReductionGraph& g, Id u, const std::vector<std::string>& new_fields,
                      const FieldLattice& lattice);

struct SpanningTree {
  std::vector<std::size_t> tree_edges;   // ascending edge index
  std::vector<std::size_t> cycle_edges;  // ascending edge index
  std::vector<std::size_t> bfs_order;    // vertex indices, root first
  // Per vertex: index of the tree edge to its parent (root: none).
  std::vector<std::optional<std::size_t>> parent_edge;
};

// BFS from the least vertex id, scanning incident edges by ascending id.
SpanningTree spanning_tree(const ReductionGraph& g);

/// A finite group acting on a reduction graph by kind-preserving automorphisms.
/// Permutations are over vertex and edge indices; element a sends vertex v to
/// vertex_perm[a][v].
struct GraphAction {
  GroupRef group;
  std::vector<std::vector<std::size_t>> vertex_perm;
  std::vector<std::vector<std::size_t>> edge_perm;
};

Status validate_action(const ReductionGraph& g, const GraphAction& a);

// Vertex ids fixed by every group element. Throws InvalidAction.
std::vector<Id> fixed_vertices(const ReductionGraph& g, const GraphAction& a);

}  // namespace lgp
