#include "lgp/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace lgp::corpus {

std::vector<NamedGroup> groups_order_le_8() {
  std::vector<NamedGroup> out;
  for (const char* n : {"z2", "z3", "z4", "v4", "s3", "z8", "q8", "d4"}) out.emplace_back(n, make_group(named_group(n)));
  return out;
}

std::vector<NamedGroup> groups_order_le_6() {
  std::vector<NamedGroup> out;
  for (const char* n : {"trivial", "z2", "z3", "z4", "v4", "z5", "z6", "s3"})
    out.emplace_back(n, make_group(named_group(n)));
  return out;
}

const FieldLattice& single_field_lattice() {
  static const FieldLattice lattice = FieldLattice::single("k");
  return lattice;
}

// ---- bipartite multigraphs ------------------------------------------------------

namespace {

using Mult = std::vector<int>;  // nP x nU multiplicities, row-major

bool connected_matrix(const Mult& m, std::size_t np, std::size_t nu) {
  std::vector<char> seen(np + nu, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < np + nu; ++w) {
      if (seen[w]) continue;
      const bool adj = v < np ? (w >= np && m[v * nu + (w - np)] > 0) : (w < np && m[w * nu + (v - np)] > 0);
      if (adj) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool is_canonical(const Mult& m, std::size_t np, std::size_t nu) {
  std::vector<std::size_t> rp(np), cp(nu);
  std::iota(rp.begin(), rp.end(), std::size_t{0});
  Mult cand(m.size());
  do {
    std::iota(cp.begin(), cp.end(), std::size_t{0});
    do {
      for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = 0; j < nu; ++j) cand[i * nu + j] = m[rp[i] * nu + cp[j]];
      if (cand < m) return false;
    } while (std::next_permutation(cp.begin(), cp.end()));
  } while (std::next_permutation(rp.begin(), rp.end()));
  return true;
}

GraphRef graph_from_matrix(const Mult& m, std::size_t np, std::size_t nu) {
  // Put the smaller side first so that both kinds occur as the BFS root.
  const bool p_first = np <= nu;
  std::vector<Vertex> vs;
  auto pid = [&](std::size_t i) -> Id { return static_cast<Id>(p_first ? i : nu + i); };
  auto uid = [&](std::size_t j) -> Id { return static_cast<Id>(p_first ? np + j : j); };
  for (std::size_t i = 0; i < np; ++i) vs.push_back({pid(i), VertexKind::P, "k"});
  for (std::size_t j = 0; j < nu; ++j) vs.push_back({uid(j), VertexKind::U, "k"});
  std::vector<Edge> es;
  Id next = 0;
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < nu; ++j)
      for (int k = 0; k < m[i * nu + j]; ++k) es.push_back({next++, pid(i), uid(j)});
  return std::make_shared<const ReductionGraph>(ReductionGraph::create(vs, es, single_field_lattice()));
}

void fill(Mult& m, std::size_t cell, int remaining, const std::function<void()>& done) {
  if (cell + 1 == m.size()) {
    m[cell] = remaining;
    done();
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    m[cell] = k;
    fill(m, cell + 1, remaining - k, done);
  }
}

}  // namespace

std::vector<GraphRef> bipartite_graphs(std::size_t max_edges) {
  std::vector<GraphRef> out;
  const auto& lat = single_field_lattice();
  out.push_back(std::make_shared<const ReductionGraph>(ReductionGraph::create({{0, VertexKind::P, "k"}}, {}, lat)));
  out.push_back(std::make_shared<const ReductionGraph>(ReductionGraph::create({{0, VertexKind::U, "k"}}, {}, lat)));
  for (std::size_t e = 1; e <= max_edges; ++e)
    for (std::size_t np = 1; np <= e; ++np)
      for (std::size_t nu = 1; np + nu <= e + 1; ++nu) {
        Mult m(np * nu, 0);
        fill(m, 0, static_cast<int>(e), [&] {
          for (std::size_t i = 0; i < np; ++i) {
            int s = 0;
            for (std::size_t j = 0; j < nu; ++j) s += m[i * nu + j];
            if (s == 0) return;
          }
          for (std::size_t j = 0; j < nu; ++j) {
            int s = 0;
            for (std::size_t i = 0; i < np; ++i) s += m[i * nu + j];
            if (s == 0) return;
          }
          if (connected_matrix(m, np, nu) && is_canonical(m, np, nu)) out.push_back(graph_from_matrix(m, np, nu));
        });
      }
  return out;
}

// ---- colored trees -----------------------------------------------------------------

namespace {

struct Tree {
  std::vector<VertexKind> kind;
  std::vector<std::vector<std::size_t>> adj;
};

std::string rooted_code(const Tree& t, std::size_t v, std::size_t parent) {
  std::vector<std::string> kids;
  for (std::size_t w : t.adj[v])
    if (w != parent) kids.push_back(rooted_code(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = t.kind[v] == VertexKind::P ? "(P" : "(U";
  for (const auto& k : kids) s += k;
  return s + ")";
}

std::string tree_code(const Tree& t) {
  // Peel leaves down to the one or two centers.
  const std::size_t n = t.kind.size();
  std::vector<std::size_t> deg(n);
  std::vector<std::size_t> layer;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = t.adj[v].size();
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next;
    for (std::size_t v : layer)
      for (std::size_t w : t.adj[v])
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::string best;
  for (std::size_t c : layer) {
    auto code = rooted_code(t, c, n);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

GraphRef graph_from_tree(const Tree& t) {
  std::vector<Vertex> vs;
  for (std::size_t v = 0; v < t.kind.size(); ++v) vs.push_back({static_cast<Id>(v), t.kind[v], "k"});
  std::vector<Edge> es;
  Id next = 0;
  for (std::size_t v = 0; v < t.kind.size(); ++v)
    for (std::size_t w : t.adj[v])
      if (v < w) {
        const bool vp = t.kind[v] == VertexKind::P;
        es.push_back({next++, static_cast<Id>(vp ? v : w), static_cast<Id>(vp ? w : v)});
      }
  return std::make_shared<const ReductionGraph>(ReductionGraph::create(vs, es, single_field_lattice()));
}

}  // namespace

std::vector<GraphRef> colored_trees(std::size_t max_vertices) {
  std::vector<GraphRef> out;
  if (max_vertices == 0) return out;
  std::vector<Tree> level = {Tree{{VertexKind::P}, {{}}}, Tree{{VertexKind::U}, {{}}}};
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    for (const auto& t : level) out.push_back(graph_from_tree(t));
    if (n == max_vertices) break;
    std::map<std::string, Tree> next;
    for (const auto& t : level)
      for (std::size_t v = 0; v < n; ++v) {
        Tree grown = t;
        grown.kind.push_back(t.kind[v] == VertexKind::P ? VertexKind::U : VertexKind::P);
        grown.adj.emplace_back(std::vector<std::size_t>{v});
        grown.adj[v].push_back(n);
        next.emplace(tree_code(grown), std::move(grown));
      }
    level.clear();
    for (auto& [code, t] : next) level.push_back(std::move(t));
  }
  return out;
}

// ---- automorphisms and actions ----------------------------------------------------

std::vector<std::vector<std::size_t>> automorphisms(const ReductionGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::set<std::size_t>> nbr(n);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    nbr[g.p_index(e)].insert(g.u_index(e));
    nbr[g.u_index(e)].insert(g.p_index(e));
  }
  // Vertices in BFS order (per component) with their BFS parent.
  std::vector<std::size_t> order;
  std::vector<std::optional<std::size_t>> parent(n);
  std::vector<char> seen(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    order.push_back(s);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i)
      for (std::size_t w : nbr[order[i]])
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = order[i];
          order.push_back(w);
        }
  }

  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> img(n, n);
  std::vector<char> used(n, 0);
  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    if (k == n) {
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w : nbr[v])
          if (!nbr[img[v]].count(img[w])) return;
      out.push_back(img);
      return;
    }
    const std::size_t v = order[k];
    auto try_image = [&](std::size_t c) {
      if (used[c] || g.vertex(c).kind != g.vertex(v).kind || nbr[c].size() != nbr[v].size()) return;
      used[c] = 1;
      img[v] = c;
      extend(k + 1);
      used[c] = 0;
      img[v] = n;
    };
    if (parent[v]) {
      for (std::size_t c : nbr[img[*parent[v]]]) try_image(c);
    } else {
      for (std::size_t c = 0; c < n; ++c) try_image(c);
    }
  };
  extend(0);
  return out;
}

namespace {

std::size_t perm_order(const std::vector<std::size_t>& p) {
  std::size_t ord = 1;
  std::vector<char> done(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !done[j]; j = p[j]) {
      done[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

}  // namespace

ActionSweep sweep_actions(const ReductionGraph& g, const GroupRef& group, std::uint64_t cap,
                          std::uint64_t samples, std::uint64_t seed,
                          const std::function<void(const GraphAction&)>& fn) {
  using Perm = std::vector<std::size_t>;
  ActionSweep sweep;
  const auto& G = *group;
  const auto& gens = G.generators();
  const auto auts = automorphisms(g);
  const std::size_t n = G.order(), nv = g.vertex_count();

  std::vector<std::pair<Element, std::size_t>> word(n);
  std::vector<Element> bfs{G.identity()};
  {
    std::vector<char> seen(n, 0);
    seen[G.identity()] = 1;
    for (std::size_t i = 0; i < bfs.size(); ++i)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const Element x = G.mul(bfs[i], gens[k]);
        if (!seen[x]) {
          seen[x] = 1;
          word[x] = {bfs[i], k};
          bfs.push_back(x);
        }
      }
  }

  std::vector<std::vector<std::size_t>> cand(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::size_t ord = G.element_order(gens[k]);
    for (std::size_t a = 0; a < auts.size(); ++a)
      if (ord % perm_order(auts[a]) == 0) cand[k].push_back(a);
  }

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_of;
  for (std::size_t e = 0; e < g.edge_count(); ++e) edge_of[{g.p_index(e), g.u_index(e)}] = e;

  Perm ident(nv);
  std::iota(ident.begin(), ident.end(), std::size_t{0});
  std::vector<Perm> img(n);
  auto try_tuple = [&](const std::vector<std::size_t>& pick) {
    ++sweep.candidates;
    img[G.identity()] = ident;
    for (std::size_t i = 1; i < bfs.size(); ++i) {
      const auto [prev, k] = word[bfs[i]];
      const Perm& a = img[prev];
      const Perm& b = auts[cand[k][pick[k]]];
      Perm c(nv);
      for (std::size_t v = 0; v < nv; ++v) c[v] = a[b[v]];
      img[bfs[i]] = std::move(c);
    }
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        const Perm& xy = img[G.mul(x, y)];
        for (std::size_t v = 0; v < nv; ++v)
          if (xy[v] != img[x][img[y][v]]) return;
      }
    GraphAction act;
    act.group = group;
    act.vertex_perm = img;
    act.edge_perm.assign(n, std::vector<std::size_t>(g.edge_count()));
    for (Element x = 0; x < n; ++x)
      for (std::size_t e = 0; e < g.edge_count(); ++e)
        act.edge_perm[x][e] = edge_of.at({img[x][g.p_index(e)], img[x][g.u_index(e)]});
    ++sweep.actions;
    fn(act);
  };

  long double total = 1;
  for (const auto& c : cand) total *= static_cast<long double>(c.size());
  std::vector<std::size_t> pick(gens.size(), 0);
  if (total <= static_cast<long double>(cap)) {
    if (gens.empty()) {
      try_tuple(pick);
      return sweep;
    }
    while (true) {
      try_tuple(pick);
      std::size_t pos = gens.size();
      bool advanced = false;
      while (pos > 0) {
        --pos;
        if (++pick[pos] < cand[pos].size()) {
          advanced = true;
          break;
        }
        pick[pos] = 0;
      }
      if (!advanced) break;
    }
  } else {
    sweep.exhaustive = false;
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
      for (std::size_t k = 0; k < gens.size(); ++k)
        pick[k] = std::uniform_int_distribution<std::size_t>(0, cand[k].size() - 1)(rng);
      try_tuple(pick);
    }
  }
  return sweep;
}

// ---- monotonic models ----------------------------------------------------------

namespace {

struct LatticeShape {
  LatticeRef lattice;
  std::vector<std::string> labels;
  std::vector<FieldPair> covers;  // generating inclusions
};

std::vector<LatticeShape> lattice_shapes() {
  using L = FieldLattice::Label;
  std::vector<LatticeShape> out;
  out.push_back({std::make_shared<const FieldLattice>(FieldLattice::single("k")), {"k"}, {}});
  out.push_back({std::make_shared<const FieldLattice>(FieldLattice::create({L{"k", 1}, L{"K", 2}}, {{"k", "K"}})),
                 {"k", "K"},
                 {{"k", "K"}}});
  out.push_back({std::make_shared<const FieldLattice>(
                     FieldLattice::create({L{"k", 1}, L{"K", 2}, L{"K'", 4}}, {{"k", "K"}, {"K", "K'"}})),
                 {"k", "K", "K'"},
                 {{"k", "K"}, {"K", "K'"}}});
  out.push_back({std::make_shared<const FieldLattice>(
                     FieldLattice::create({L{"k", 1}, L{"K1", 2}, L{"K2", 2}}, {{"k", "K1"}, {"k", "K2"}})),
                 {"k", "K1", "K2"},
                 {{"k", "K1"}, {"k", "K2"}}});
  return out;
}

}  // namespace

MonotonicSweep sweep_monotonic_models(std::size_t max_edges, const std::vector<NamedGroup>& groups,
                                      const std::vector<NamedGroup>& small_groups,
                                      const std::function<void(const ShaModel&)>& fn) {
  MonotonicSweep sweep;
  const auto trees = colored_trees(max_edges + 1);
  const auto shapes = lattice_shapes();

  // Homomorphism lists are reused across trees.
  std::map<std::pair<const FiniteGroup*, const FiniteGroup*>, std::vector<GroupHom>> hom_cache;
  auto homs = [&](const GroupRef& a, const GroupRef& b) -> const std::vector<GroupHom>& {
    auto key = std::make_pair(a.get(), b.get());
    auto it = hom_cache.find(key);
    if (it == hom_cache.end()) it = hom_cache.emplace(key, all_homs(a, b)).first;
    return it->second;
  };

  for (const auto& shape : shapes) {
    const auto& lat = *shape.lattice;
    const auto& pool = shape.labels.size() >= 3 ? small_groups : groups;
    for (const auto& tree : trees) {
      const std::size_t nv = tree->vertex_count();
      std::vector<std::size_t> assign(nv, 0);
      while (true) {
        std::vector<Vertex> vs = tree->vertices();
        std::set<std::size_t> used;
        for (std::size_t v = 0; v < nv; ++v) {
          vs[v].field = shape.labels[assign[v]];
          used.insert(assign[v]);
        }
        bool ok = used.size() == shape.labels.size();
        for (std::size_t e = 0; ok && e < tree->edge_count(); ++e)
          ok = lat.contains(vs[tree->u_index(e)].field, vs[tree->p_index(e)].field);
        if (ok) {
          auto graph = std::make_shared<const ReductionGraph>(ReductionGraph::create(vs, tree->edges(), lat));
          if (is_monotonic_tree(*graph, lat).monotonic) {
            ++sweep.field_assignments;
            // Every group per label, then every hom per generating inclusion.
            std::vector<std::size_t> gpick(shape.labels.size(), 0);
            while (true) {
              std::map<std::string, GroupRef> gm;
              for (std::size_t i = 0; i < shape.labels.size(); ++i) gm[shape.labels[i]] = pool[gpick[i]].second;
              std::vector<const std::vector<GroupHom>*> choices;
              bool empty = false;
              for (const auto& [a, b] : shape.covers) {
                choices.push_back(&homs(gm.at(a), gm.at(b)));
                empty = empty || choices.back()->empty();
              }
              std::vector<std::size_t> hpick(choices.size(), 0);
              while (!empty) {
                std::map<FieldPair, GroupHom> maps;
                for (std::size_t c = 0; c < choices.size(); ++c) maps.emplace(shape.covers[c], (*choices[c])[hpick[c]]);
                fn(ShaModel::create(shape.lattice, graph, gm, std::move(maps)));
                ++sweep.models;
                std::size_t pos = choices.size();
                bool advanced = false;
                while (pos > 0) {
                  --pos;
                  if (++hpick[pos] < choices[pos]->size()) {
                    advanced = true;
                    break;
                  }
                  hpick[pos] = 0;
                }
                if (!advanced) break;
              }
              std::size_t pos = gpick.size();
              bool advanced = false;
              while (pos > 0) {
                --pos;
                if (++gpick[pos] < pool.size()) {
                  advanced = true;
                  break;
                }
                gpick[pos] = 0;
              }
              if (!advanced) break;
            }
          }
        }
        std::size_t pos = nv;
        bool advanced = false;
        while (pos > 0) {
          --pos;
          if (++assign[pos] < shape.labels.size()) {
            advanced = true;
            break;
          }
          assign[pos] = 0;
        }
        if (!advanced) break;
      }
    }
  }
  return sweep;
}

}  // namespace lgp::corpus
