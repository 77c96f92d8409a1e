#include "lgp/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace lgp {

namespace {

const char* kind_name(VertexKind k) { return k == VertexKind::P ? "P" : "U"; }

std::string vname(const Vertex& v) { return std::string(kind_name(v.kind)) + "-vertex " + std::to_string(v.id); }

}  // namespace

// ---- FieldLattice -------------------------------------------------------------

FieldLattice FieldLattice::create(std::vector<Label> labels,
                                  const std::vector<std::pair<std::string, std::string>>& contains) {
  FieldLattice l;
  l.labels_ = std::move(labels);
  for (std::size_t i = 0; i < l.labels_.size(); ++i) {
    const auto& lab = l.labels_[i];
    if (lab.name.empty()) throw Error(ErrorCode::ParseError, "field label with empty name");
    if (lab.degree && *lab.degree < 1)
      throw Error(ErrorCode::InvalidArgument, "field '" + lab.name + "' has non-positive degree");
    if (!l.index_.emplace(lab.name, i).second)
      throw Error(ErrorCode::DuplicateId, "field label '" + lab.name + "' declared twice");
  }
  const std::size_t n = l.labels_.size();
  l.closed_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) l.closed_[i * n + i] = 1;
  for (const auto& [small, large] : contains) {
    auto a = l.index_.find(small), b = l.index_.find(large);
    if (a == l.index_.end()) throw Error(ErrorCode::UnknownField, "unknown field label '" + small + "'");
    if (b == l.index_.end()) throw Error(ErrorCode::UnknownField, "unknown field label '" + large + "'");
    l.closed_[a->second * n + b->second] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (l.closed_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (l.closed_[k * n + j]) l.closed_[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (l.closed_[i * n + j] && l.closed_[j * n + i])
        throw Error(ErrorCode::LatticeCycle, "fields '" + l.labels_[i].name + "' and '" + l.labels_[j].name +
                                                 "' contain each other");
  return l;
}

FieldLattice FieldLattice::single(const std::string& name) { return create({{name, std::nullopt}}, {}); }

std::size_t FieldLattice::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error(ErrorCode::UnknownField, "unknown field label '" + name + "'");
  return it->second;
}

bool FieldLattice::contains(const std::string& smaller, const std::string& larger) const {
  return contains(index_of(smaller), index_of(larger));
}

std::vector<std::pair<std::string, std::string>> FieldLattice::pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (contains(i, j)) out.emplace_back(labels_[i].name, labels_[j].name);
  return out;
}

std::vector<std::string> FieldLattice::minimal_labels() const {
  std::vector<std::string> out;
  for (std::size_t j = 0; j < size(); ++j) {
    bool minimal = true;
    for (std::size_t i = 0; i < size() && minimal; ++i) minimal = i == j || !contains(i, j);
    if (minimal) out.push_back(labels_[j].name);
  }
  return out;
}

// ---- ReductionGraph -----------------------------------------------------------

ReductionGraph ReductionGraph::create(std::vector<Vertex> vertices, std::vector<Edge> edges,
                                      const FieldLattice& lattice) {
  if (vertices.empty()) throw Error(ErrorCode::InvalidArgument, "graph has no vertices");
  ReductionGraph g;
  std::sort(vertices.begin(), vertices.end(), [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& v = vertices[i];
    if (!g.vindex_.emplace(v.id, i).second)
      throw Error(ErrorCode::DuplicateId, "vertex id " + std::to_string(v.id) + " appears twice");
    if (!lattice.has(v.field))
      throw Error(ErrorCode::UnknownField, vname(v) + " has unknown field '" + v.field + "'");
  }
  g.incident_.resize(vertices.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& ed = edges[e];
    if (!g.eindex_.emplace(ed.id, e).second)
      throw Error(ErrorCode::DuplicateId, "edge id " + std::to_string(ed.id) + " appears twice");
    auto p = g.vindex_.find(ed.p), u = g.vindex_.find(ed.u);
    if (p == g.vindex_.end())
      throw Error(ErrorCode::UnknownVertex, "edge " + std::to_string(ed.id) + " names missing vertex " + std::to_string(ed.p));
    if (u == g.vindex_.end())
      throw Error(ErrorCode::UnknownVertex, "edge " + std::to_string(ed.id) + " names missing vertex " + std::to_string(ed.u));
    const auto& pv = vertices[p->second];
    const auto& uv = vertices[u->second];
    if (pv.kind != VertexKind::P || uv.kind != VertexKind::U)
      throw Error(ErrorCode::NotBipartite, "edge " + std::to_string(ed.id) + " joins " + vname(pv) + " and " +
                                               vname(uv) + "; expected one P- and one U-vertex");
    if (!lattice.contains(uv.field, pv.field))
      throw Error(ErrorCode::FieldNotContained, "edge " + std::to_string(ed.id) + ": field '" + uv.field + "' of " +
                                                    vname(uv) + " is not contained in field '" + pv.field +
                                                    "' of " + vname(pv));
    g.edge_p_.push_back(p->second);
    g.edge_u_.push_back(u->second);
    g.incident_[p->second].push_back(e);
    g.incident_[u->second].push_back(e);
  }
  g.vertices_ = std::move(vertices);
  g.edges_ = std::move(edges);
  return g;
}

std::optional<std::size_t> ReductionGraph::find_vertex(Id id) const {
  auto it = vindex_.find(id);
  if (it == vindex_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ReductionGraph::find_edge(Id id) const {
  auto it = eindex_.find(id);
  if (it == eindex_.end()) return std::nullopt;
  return it->second;
}

std::size_t ReductionGraph::vertex_index(Id id) const {
  if (auto i = find_vertex(id)) return *i;
  throw Error(ErrorCode::UnknownVertex, "no vertex with id " + std::to_string(id));
}

std::size_t ReductionGraph::edge_index(Id id) const {
  if (auto i = find_edge(id)) return *i;
  throw Error(ErrorCode::BadCochain, "no edge with id " + std::to_string(id));
}

bool ReductionGraph::is_connected() const {
  std::vector<char> seen(vertex_count(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : incident_[v]) {
      std::size_t w = other_end(e, v);
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == vertex_count();
}

Id ReductionGraph::max_vertex_id() const { return vertices_.back().id; }
Id ReductionGraph::max_edge_id() const { return edges_.empty() ? -1 : edges_.back().id; }

// ---- operations ---------------------------------------------------------------

namespace {

void require_connected(const ReductionGraph& g) {
  if (!g.is_connected()) throw Error(ErrorCode::NotConnected, "reduction graph is not connected");
}

}  // namespace

std::size_t cycle_rank(const ReductionGraph& g) {
  require_connected(g);
  return g.edge_count() + 1 - g.vertex_count();
}

bool is_tree(const ReductionGraph& g) { return cycle_rank(g) == 0; }

MonotonicResult is_monotonic_tree(const ReductionGraph& g, const FieldLattice& lattice) {
  if (!is_tree(g)) return {};
  for (std::size_t root = 0; root < g.vertex_count(); ++root) {
    if (g.vertex(root).kind != VertexKind::U) continue;
    bool ok = true;
    std::vector<std::optional<std::size_t>> parent_edge(g.vertex_count());
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<std::size_t> stack{root};
    seen[root] = 1;
    while (!stack.empty() && ok) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t e : g.incident(v)) {
        std::size_t w = g.other_end(e, v);
        if (seen[w]) continue;
        seen[w] = 1;
        const auto& parent = g.vertex(v);
        const auto& child = g.vertex(w);
        // Fields grow away from the root; a P-parent of a U-child must share its field.
        ok = lattice.contains(parent.field, child.field) &&
             !(parent.kind == VertexKind::P && child.kind == VertexKind::U && parent.field != child.field);
        if (!ok) break;
        stack.push_back(w);
      }
    }
    if (ok) return {true, g.vertex(root).id};
  }
  return {};
}

ReductionGraph refine(const ReductionGraph& g, Id u, const std::vector<std::string>& new_fields,
                      const FieldLattice& lattice) {
  const std::size_t ui = g.vertex_index(u);
  const auto& uv = g.vertex(ui);
  if (uv.kind != VertexKind::U)
    throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(u) + " is not a U-vertex");
  std::vector<Vertex> vertices = g.vertices();
  std::vector<Edge> edges = g.edges();
  Id next_v = g.max_vertex_id() + 1;
  Id next_e = g.max_edge_id() + 1;
  for (const auto& f : new_fields) {
    if (!lattice.has(f)) throw Error(ErrorCode::UnknownField, "unknown field label '" + f + "'");
    if (!lattice.contains(uv.field, f))
      throw Error(ErrorCode::FieldNotAbove, "field '" + f + "' does not contain field '" + uv.field + "' of U-vertex " +
                                                std::to_string(u));
    vertices.push_back({next_v, VertexKind::P, f});
    edges.push_back({next_e++, next_v++, u});
  }
  return ReductionGraph::create(std::move(vertices), std::move(edges), lattice);
}

SpanningTree spanning_tree(const ReductionGraph& g) {
  SpanningTree st;
  const std::size_t n = g.vertex_count();
  st.parent_edge.assign(n, std::nullopt);
  std::vector<char> seen(n, 0), in_tree(g.edge_count(), 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    st.bfs_order.push_back(v);
    for (std::size_t e : g.incident(v)) {
      std::size_t w = g.other_end(e, v);
      if (seen[w]) continue;
      seen[w] = 1;
      in_tree[e] = 1;
      st.parent_edge[w] = e;
      queue.push_back(w);
    }
  }
  if (st.bfs_order.size() != n) throw Error(ErrorCode::NotConnected, "reduction graph is not connected");
  for (std::size_t e = 0; e < g.edge_count(); ++e) (in_tree[e] ? st.tree_edges : st.cycle_edges).push_back(e);
  return st;
}

// ---- group actions -------------------------------------------------------------

Status validate_action(const ReductionGraph& g, const GraphAction& a) {
  auto fail = [](std::string w) { return Status::fail(ErrorCode::InvalidAction, std::move(w)); };
  if (!a.group) return fail("action has no group");
  const auto& grp = *a.group;
  const std::size_t n = grp.order(), nv = g.vertex_count(), ne = g.edge_count();
  if (a.vertex_perm.size() != n || a.edge_perm.size() != n)
    return fail("expected one vertex and one edge permutation per group element");

  auto is_perm = [](const std::vector<std::size_t>& p, std::size_t size) {
    if (p.size() != size) return false;
    std::vector<char> hit(size, 0);
    for (std::size_t x : p) {
      if (x >= size || hit[x]) return false;
      hit[x] = 1;
    }
    return true;
  };

  for (Element x = 0; x < n; ++x) {
    const auto& vp = a.vertex_perm[x];
    const auto& ep = a.edge_perm[x];
    const std::string who = "element " + std::to_string(x);
    if (!is_perm(vp, nv)) return fail(who + ": vertex map is not a permutation");
    if (!is_perm(ep, ne)) return fail(who + ": edge map is not a permutation");
    for (std::size_t v = 0; v < nv; ++v)
      if (g.vertex(vp[v]).kind != g.vertex(v).kind)
        return fail(who + " maps vertex " + std::to_string(g.vertex(v).id) + " to a vertex of the other kind");
    for (std::size_t e = 0; e < ne; ++e)
      if (g.p_index(ep[e]) != vp[g.p_index(e)] || g.u_index(ep[e]) != vp[g.u_index(e)])
        return fail(who + " does not respect the incidence of edge " + std::to_string(g.edge(e).id));
  }
  for (std::size_t v = 0; v < nv; ++v)
    if (a.vertex_perm[grp.identity()][v] != v) return fail("identity moves vertex " + std::to_string(g.vertex(v).id));
  for (std::size_t e = 0; e < ne; ++e)
    if (a.edge_perm[grp.identity()][e] != e) return fail("identity moves edge " + std::to_string(g.edge(e).id));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element xy = grp.mul(x, y);
      for (std::size_t v = 0; v < nv; ++v)
        if (a.vertex_perm[xy][v] != a.vertex_perm[x][a.vertex_perm[y][v]])
          return fail("action of " + std::to_string(x) + "*" + std::to_string(y) + " on vertex " +
                      std::to_string(g.vertex(v).id) + " is not the composite");
      for (std::size_t e = 0; e < ne; ++e)
        if (a.edge_perm[xy][e] != a.edge_perm[x][a.edge_perm[y][e]])
          return fail("action of " + std::to_string(x) + "*" + std::to_string(y) + " on edge " +
                      std::to_string(g.edge(e).id) + " is not the composite");
    }
  return Status::ok();
}

std::vector<Id> fixed_vertices(const ReductionGraph& g, const GraphAction& a) {
  validate_action(g, a).check();
  std::vector<Id> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    bool fixed = true;
    for (const auto& vp : a.vertex_perm) fixed = fixed && vp[v] == v;
    if (fixed) out.push_back(g.vertex(v).id);
  }
  return out;
}

}  // namespace lgp
