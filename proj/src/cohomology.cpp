#include "lgp/cohomology.hpp"

#include <limits>
#include <random>
#include <unordered_map>

namespace lgp {

Status CoefficientSystem::validate() const {
  auto fail = [](std::string w) { return Status::fail(ErrorCode::InvalidArgument, std::move(w)); };
  if (!graph) return fail("coefficient system without a graph");
  const auto& g = *graph;
  if (vertex_group.size() != g.vertex_count() || edge_group.size() != g.edge_count() ||
      p_hom.size() != g.edge_count() || u_hom.size() != g.edge_count())
    return fail("coefficient system sizes do not match the graph");
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& eg = *edge_group[e];
    auto check = [&](const GroupHom& h, std::size_t v) -> Status {
      if (!(*h.source() == *vertex_group[v]) || !(*h.target() == eg))
        return Status::fail(ErrorCode::NotHomomorphism, "incidence map at vertex " + std::to_string(g.vertex(v).id) +
                                                            ", edge " + std::to_string(g.edge(e).id) +
                                                            " does not run between the attached groups");
      return validate_hom(*h.source(), *h.target(), h.image());
    };
    if (auto s = check(p_hom[e], g.p_index(e)); !s) return s;
    if (auto s = check(u_hom[e], g.u_index(e)); !s) return s;
  }
  return Status::ok();
}

CoefficientSystem constant_system(GraphRef graph, const GroupRef& group) {
  CoefficientSystem sys;
  const auto id = GroupHom::identity(group);
  sys.vertex_group.assign(graph->vertex_count(), group);
  sys.edge_group.assign(graph->edge_count(), group);
  sys.p_hom.assign(graph->edge_count(), id);
  sys.u_hom.assign(graph->edge_count(), id);
  sys.graph = std::move(graph);
  return sys;
}

// ---- DoubleCosetSpace -------------------------------------------------------------

DoubleCosetSpace::DoubleCosetSpace(std::vector<Cochain> representatives, std::size_t base_point, ClassFn class_of,
                                   std::vector<GroupRef> edge_groups)
    : reps_(std::move(representatives)),
      base_(base_point),
      class_of_(std::move(class_of)),
      edge_groups_(std::move(edge_groups)) {}

Status DoubleCosetSpace::check_cochain(const Cochain& c) const {
  if (c.size() != edge_groups_.size())
    return Status::fail(ErrorCode::BadCochain, "cochain has " + std::to_string(c.size()) + " entries, expected " +
                                                   std::to_string(edge_groups_.size()));
  for (std::size_t e = 0; e < c.size(); ++e)
    if (c[e] >= edge_groups_[e]->order())
      return Status::fail(ErrorCode::BadCochain, "entry " + std::to_string(e) + " = " + std::to_string(c[e]) +
                                                     " is not an element of the edge group");
  return Status::ok();
}

std::size_t DoubleCosetSpace::class_of(const Cochain& c) const {
  check_cochain(c).check();
  return class_of_(c);
}

Cochain DoubleCosetSpace::identity_cochain() const {
  Cochain c(edge_groups_.size());
  for (std::size_t e = 0; e < c.size(); ++e) c[e] = edge_groups_[e]->identity();
  return c;
}

// ---- brute force ----------------------------------------------------------------

std::uint64_t cochain_count(const CoefficientSystem& sys, std::uint64_t bound) {
  std::uint64_t total = 1;
  for (const auto& g : sys.edge_group) {
    if (total > bound / g->order())
      throw Error(ErrorCode::StateBoundExceeded, "cochain space exceeds the bound " + std::to_string(bound));
    total *= g->order();
  }
  return total;
}

namespace {

// Dense code of a cochain: edge 0 is the most significant digit, so code
// order is lexicographic order.
struct CochainCodec {
  std::vector<std::uint64_t> radix, stride;

  explicit CochainCodec(const std::vector<GroupRef>& groups) : radix(groups.size()), stride(groups.size()) {
    std::uint64_t s = 1;
    for (std::size_t e = groups.size(); e-- > 0;) {
      radix[e] = groups[e]->order();
      stride[e] = s;
      s *= radix[e];
    }
  }

  std::uint64_t encode(const Cochain& c) const {
    std::uint64_t code = 0;
    for (std::size_t e = 0; e < c.size(); ++e) code += c[e] * stride[e];
    return code;
  }

  void decode(std::uint64_t code, Cochain& c) const {
    for (std::size_t e = c.size(); e-- > 0;) {
      c[e] = static_cast<Element>(code % radix[e]);
      code /= radix[e];
    }
  }
};

// One coordinate of a move: the entry on `edge` (weight `stride` in the
// code) is replaced by image[entry].
struct MoveCoord {
  std::size_t edge;
  std::int64_t stride;
  std::vector<Element> image;
};

using Move = std::vector<MoveCoord>;

}  // namespace

DoubleCosetSpace h1_brute_force(const CoefficientSystem& sys, const H1Options& opts) {
  sys.validate().check();
  const auto& g = *sys.graph;
  const std::uint64_t total = cochain_count(sys, opts.max_states);
  if (total >= std::numeric_limits<std::uint32_t>::max())
    throw Error(ErrorCode::StateBoundExceeded, "cochain space too large to label");

  CochainCodec codec(sys.edge_group);

  // Generators of each vertex group act diagonally on the incident edges.
  std::vector<Move> moves;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const bool left = g.vertex(v).kind == VertexKind::U;
    for (Element h : sys.vertex_group[v]->generators()) {
      Move mv;
      for (std::size_t e : g.incident(v)) {
        const auto& eg = *sys.edge_group[e];
        const Element x = left ? sys.u_hom[e](h) : sys.p_hom[e](h);
        MoveCoord mc{e, static_cast<std::int64_t>(codec.stride[e]), std::vector<Element>(eg.order())};
        for (Element d = 0; d < eg.order(); ++d) mc.image[d] = left ? eg.mul(x, d) : eg.mul(d, x);
        mv.push_back(std::move(mc));
      }
      moves.push_back(std::move(mv));
    }
  }

  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  auto labels = std::make_shared<std::vector<std::uint32_t>>(total, kUnset);
  auto& lab = *labels;
  std::vector<Cochain> reps;
  std::vector<std::uint64_t> stack;
  Cochain cur(g.edge_count());
  for (std::uint64_t start = 0; start < total; ++start) {
    if (lab[start] != kUnset) continue;
    const auto cls = static_cast<std::uint32_t>(reps.size());
    codec.decode(start, cur);
    reps.push_back(cur);
    lab[start] = cls;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::uint64_t s = stack.back();
      stack.pop_back();
      // Codes fit in 32 bits here, and 32-bit division is markedly faster.
      auto rest = static_cast<std::uint32_t>(s);
      for (std::size_t e = cur.size(); e-- > 0;) {
        const auto r = static_cast<std::uint32_t>(codec.radix[e]);
        cur[e] = rest % r;
        rest /= r;
      }
      for (const auto& mv : moves) {
        std::int64_t delta = 0;
        for (const auto& mc : mv) {
          const Element d = cur[mc.edge];
          delta += (static_cast<std::int64_t>(mc.image[d]) - static_cast<std::int64_t>(d)) * mc.stride;
        }
        const auto t = static_cast<std::uint64_t>(static_cast<std::int64_t>(s) + delta);
        if (lab[t] == kUnset) {
          lab[t] = cls;
          stack.push_back(t);
        }
      }
    }
  }

  Cochain ident(g.edge_count());
  for (std::size_t e = 0; e < ident.size(); ++e) ident[e] = sys.edge_group[e]->identity();
  const std::size_t base = lab[codec.encode(ident)];
  auto fn = [labels, codec](const Cochain& c) -> std::size_t { return (*labels)[codec.encode(c)]; };
  return DoubleCosetSpace(std::move(reps), base, std::move(fn), sys.edge_group);
}

// ---- constant coefficients ------------------------------------------------------------

DoubleCosetSpace h1_constant(const GraphRef& graph, const GroupRef& group, const H1Options& opts) {
  const auto& g = *graph;
  const SpanningTree st = spanning_tree(g);
  const std::size_t m = st.cycle_edges.size();
  const auto classes = uniform_conjugacy_classes(*group, m, opts.max_states);

  const std::uint64_t n = group->order();
  auto encode = [n](const Tuple& t) {
    std::uint64_t code = 0;
    for (Element x : t) code = code * n + x;
    return code;
  };
  auto index = std::make_shared<std::unordered_map<std::uint64_t, std::size_t>>();
  std::vector<Cochain> reps;
  std::size_t base = 0;
  const Tuple ident_tuple(m, group->identity());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& t = classes[i].representative;
    (*index)[encode(t)] = i;
    if (t == ident_tuple) base = i;
    Cochain c(g.edge_count(), group->identity());
    for (std::size_t j = 0; j < m; ++j) c[st.cycle_edges[j]] = t[j];
    reps.push_back(std::move(c));
  }

  auto fn = [graph, group, st, index, encode](const Cochain& input) -> std::size_t {
    const auto& gr = *graph;
    const auto& G = *group;
    Cochain c = input;
    // Clear each parent tree edge by acting at its child vertex; children are
    // handled after their parents, so cleared edges stay cleared.
    for (std::size_t k = 1; k < st.bfs_order.size(); ++k) {
      const std::size_t v = st.bfs_order[k];
      const Element h = G.inv(c[*st.parent_edge[v]]);
      const bool left = gr.vertex(v).kind == VertexKind::U;
      for (std::size_t f : gr.incident(v)) c[f] = left ? G.mul(h, c[f]) : G.mul(c[f], h);
    }
    Tuple holonomy;
    holonomy.reserve(st.cycle_edges.size());
    for (std::size_t e : st.cycle_edges) holonomy.push_back(c[e]);
    return index->at(encode(canonical_uniform_conjugate(G, holonomy)));
  };
  return DoubleCosetSpace(std::move(reps), base, std::move(fn),
                          std::vector<GroupRef>(g.edge_count(), group));
}

// ---- refinement -------------------------------------------------------------------

Cochain refinement_map(const Cochain& c, const ReductionGraph& old, const CoefficientSystem& refined) {
  const auto& nw = *refined.graph;
  auto fail = [](const std::string& w) { return Error(ErrorCode::NotARefinement, w); };
  if (c.size() != old.edge_count())
    throw Error(ErrorCode::BadCochain, "cochain has " + std::to_string(c.size()) + " entries, expected " +
                                           std::to_string(old.edge_count()));
  for (const auto& v : old.vertices()) {
    auto i = nw.find_vertex(v.id);
    if (!i || nw.vertex(*i).kind != v.kind || nw.vertex(*i).field != v.field)
      throw fail("vertex " + std::to_string(v.id) + " is not preserved");
  }
  for (const auto& e : old.edges()) {
    auto i = nw.find_edge(e.id);
    if (!i || nw.edge(*i).p != e.p || nw.edge(*i).u != e.u) throw fail("edge " + std::to_string(e.id) + " is not preserved");
  }
  for (std::size_t v = 0; v < nw.vertex_count(); ++v) {
    const auto& vx = nw.vertex(v);
    if (old.find_vertex(vx.id)) continue;
    if (vx.kind != VertexKind::P || nw.incident(v).size() != 1)
      throw fail("new vertex " + std::to_string(vx.id) + " is not a P-leaf");
  }
  for (std::size_t e = 0; e < nw.edge_count(); ++e) {
    if (old.find_edge(nw.edge(e).id)) continue;
    if (!old.find_vertex(nw.edge(e).u) || old.find_vertex(nw.edge(e).p))
      throw fail("new edge " + std::to_string(nw.edge(e).id) + " does not attach a new leaf to an old U-vertex");
  }

  Cochain out(nw.edge_count());
  for (std::size_t e = 0; e < nw.edge_count(); ++e) {
    if (auto o = old.find_edge(nw.edge(e).id)) {
      if (c[*o] >= refined.edge_group[e]->order())
        throw Error(ErrorCode::BadCochain, "entry for edge " + std::to_string(nw.edge(e).id) + " is out of range");
      out[e] = c[*o];
    } else {
      out[e] = refined.edge_group[e]->identity();
    }
  }
  return out;
}

// ---- comparison ---------------------------------------------------------------------

H1Comparison compare_h1(const GraphRef& graph, const GroupRef& group, const CompareOptions& opts) {
  H1Comparison r;
  const auto sys = constant_system(graph, group);
  const auto brute = h1_brute_force(sys, opts.h1);
  const auto cons = h1_constant(graph, group, opts.h1);
  r.brute_classes = brute.size();
  r.constant_classes = cons.size();
  if (brute.size() != cons.size()) {
    r.message = "class counts differ: brute force " + std::to_string(brute.size()) + ", spanning tree " +
                std::to_string(cons.size());
    return r;
  }

  std::vector<std::size_t> image(brute.size());
  std::vector<char> hit(cons.size(), 0);
  for (std::size_t i = 0; i < brute.size(); ++i) {
    image[i] = cons.class_of(brute.representatives()[i]);
    if (hit[image[i]]) {
      r.witness = brute.representatives()[i];
      r.message = "two brute-force classes map to spanning-tree class " + std::to_string(image[i]);
      return r;
    }
    hit[image[i]] = 1;
  }
  if (image[brute.base_point()] != cons.base_point()) {
    r.witness = brute.identity_cochain();
    r.message = "base points do not correspond";
    return r;
  }

  const std::uint64_t total = cochain_count(sys, opts.h1.max_states);
  CochainCodec codec(sys.edge_group);
  Cochain c(graph->edge_count());
  auto check = [&](std::uint64_t code) {
    codec.decode(code, c);
    ++r.cochains_checked;
    if (image[brute.class_of(c)] != cons.class_of(c)) {
      r.witness = c;
      r.message = "partitions differ";
      return false;
    }
    return true;
  };
  if (total <= opts.exhaustive_limit) {
    r.exhaustive = true;
    for (std::uint64_t code = 0; code < total; ++code)
      if (!check(code)) return r;
  } else {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
    for (std::uint64_t i = 0; i < opts.samples; ++i)
      if (!check(pick(rng))) return r;
  }
  r.match = true;
  r.message = "match";
  return r;
}

}  // namespace lgp
