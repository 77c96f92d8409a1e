#include "lgp/checks.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "lgp/json_io.hpp"
#include "lgp/oracles.hpp"
#include "lgp/sha.hpp"

namespace lgp::checks {

namespace {

std::string list_str(const std::vector<Int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string graph_str(const ReductionGraph& g) {
  std::string s = "graph{";
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    s += (e ? " " : "") + std::to_string(g.vertex(g.p_index(e)).id) + "-" + std::to_string(g.vertex(g.u_index(e)).id);
  return s + "}";
}

std::string module_str(const GModule& m) {
  std::ostringstream os;
  os << "module orders=" << list_str(m.orders) << " |G|=" << m.group->order() << " gen-action=";
  const auto& gens = m.group->generators();
  if (!gens.empty()) {
    os << "[";
    for (const auto& row : m.action[gens[0]]) os << list_str(row);
    os << "]";
  }
  return os.str();
}

}  // namespace

CheckResult group_corpus_file(const std::string& path) {
  CheckResult r;
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read group corpus '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  const auto j = io::parse_text(ss.str());
  if (!j.is_object() || !j.contains("groups") || !j["groups"].is_array())
    throw Error(ErrorCode::ParseError, path + ": expected {\"groups\": [...]}");
  for (std::size_t i = 0; i < j["groups"].size(); ++i) {
    ++r.cases;
    try {
      io::parse_group(j["groups"][i], "groups[" + std::to_string(i) + "]");
    } catch (const Error& e) {
      r.fail(std::string(error_name(e.code())) + ": " + e.what());
    }
  }
  r.detail = std::to_string(r.cases) + " groups";
  return r;
}

CheckResult h1_oracle_equivalence(const std::vector<corpus::NamedGroup>& groups, std::size_t max_edges,
                                  const CompareOptions& opts) {
  CheckResult r;
  std::uint64_t cochains = 0;
  bool exhaustive = true;
  for (const auto& graph : corpus::bipartite_graphs(max_edges))
    for (const auto& [name, g] : groups) {
      ++r.cases;
      const auto cmp = compare_h1(graph, g, opts);
      cochains += cmp.cochains_checked;
      exhaustive = exhaustive && cmp.exhaustive;
      if (!cmp.match) r.fail(name + " on " + graph_str(*graph) + ": " + cmp.message);
    }
  r.detail = std::to_string(r.cases) + " (graph, group) pairs, " + std::to_string(cochains) + " cochains classified" +
             (exhaustive ? ", all exhaustive" : ", some sampled");
  return r;
}

CheckResult uniform_counts(const std::vector<corpus::NamedGroup>& groups, std::size_t max_m) {
  CheckResult r;
  for (const auto& [name, g] : groups)
    for (std::size_t m = 0; m <= max_m; ++m) {
      ++r.cases;
      const auto classes = uniform_conjugacy_classes(*g, m);
      const auto expected = oracles::burnside_uniform_count(*g, m);
      std::uint64_t total = 0;
      for (const auto& c : classes) total += c.size;
      if (classes.size() != expected || total != checked_power(g->order(), m, UINT64_MAX))
        r.fail(name + " m=" + std::to_string(m) + ": " + std::to_string(classes.size()) + " classes, Burnside gives " +
               std::to_string(expected));
    }
  r.detail = std::to_string(r.cases) + " (group, m) pairs";
  return r;
}

CheckResult monotonic_collapse(std::size_t max_edges, const std::vector<corpus::NamedGroup>& groups,
                               const std::vector<corpus::NamedGroup>& small_groups) {
  CheckResult r;
  const auto sweep = corpus::sweep_monotonic_models(max_edges, groups, small_groups, [&](const ShaModel& m) {
    ++r.cases;
    const auto space = sha_lower_bound(m);
    if (space.size() != 1)
      r.fail(graph_str(m.graph()) + " has " + std::to_string(space.size()) + " classes");
  });
  r.detail = std::to_string(sweep.models) + " models over " + std::to_string(sweep.field_assignments) +
             " monotonic field assignments";
  return r;
}

namespace {

// Compares a model with its refinement at every U-vertex by one and two
// leaves carrying each admissible field.
void refine_and_compare(const ShaModel& model, std::uint64_t max_states, CheckResult& r, const std::string& tag) {
  const auto& g = model.graph();
  const auto& lat = model.lattice();
  const H1Options opts{max_states};
  const auto base = sha_lower_bound(model, opts);
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    if (g.vertex(u).kind != VertexKind::U) continue;
    std::vector<std::string> above;
    for (const auto& l : lat.labels())
      if (lat.contains(g.vertex(u).field, l.name)) above.push_back(l.name);
    std::vector<std::vector<std::string>> leaf_sets;
    for (const auto& a : above) {
      leaf_sets.push_back({a});
      for (const auto& b : above) leaf_sets.push_back({a, b});
    }
    for (const auto& leaves : leaf_sets) {
      ++r.cases;
      auto refined_graph = std::make_shared<const ReductionGraph>(refine(g, g.vertex(u).id, leaves, lat));
      const auto refined = model.with_graph(refined_graph);
      const auto sys = to_coefficient_system(refined);
      const auto space = sha_lower_bound(refined, opts);
      std::set<std::size_t> images;
      for (const auto& rep : base.representatives()) images.insert(space.class_of(refinement_map(rep, g, sys)));
      const bool base_ok = space.class_of(refinement_map(base.identity_cochain(), g, sys)) == space.base_point();
      if (space.size() != base.size() || images.size() != base.size() || !base_ok)
        r.fail(tag + " " + graph_str(g) + " refined at U-vertex " + std::to_string(g.vertex(u).id) + ": " +
               std::to_string(base.size()) + " -> " + std::to_string(space.size()) + " classes");
    }
  }
}

}  // namespace

CheckResult refinement_stability(const std::vector<corpus::NamedGroup>& groups, std::size_t max_edges,
                                 std::uint64_t max_states) {
  CheckResult r;
  const auto lattice = std::make_shared<const FieldLattice>(corpus::single_field_lattice());
  for (const auto& graph : corpus::bipartite_graphs(max_edges))
    for (const auto& [name, g] : groups) {
      const auto model = ShaModel::create(lattice, graph, {{"k", g}}, {});
      refine_and_compare(model, max_states, r, name);
    }
  // Multi-field models: the non-monotonic tree and the triangle.
  for (const auto& [name, g] : groups) {
    const auto triv = make_group(trivial_group());
    refine_and_compare(nonmono_model(triv, g, GroupHom::create(triv, g, {g->identity()})), max_states, r,
                       "nonmono(1," + name + ")");
    refine_and_compare(nonmono_model(g, g, GroupHom::identity(g)), max_states, r, "nonmono(" + name + "," + name + ")");
    // The triangle has six edges; two more leaves at order 8 would need 8^8 states.
    if (g->order() <= 6) refine_and_compare(triangle_model(g), max_states, r, "triangle(" + name + ")");
  }
  r.detail = std::to_string(r.cases) + " refinements";
  return r;
}

CheckResult hilbert_product_formula(Int bound) {
  CheckResult r;
  for (Int a = -bound; a <= bound; ++a)
    for (Int b = -bound; b <= bound; ++b) {
      if (a == 0 || b == 0) continue;
      ++r.cases;
      int prod = 1;
      for (const auto& v : hilbert_places(a, b)) prod *= hilbert_symbol(a, b, v);
      if (prod != 1) r.fail("product over places for (" + std::to_string(a) + ", " + std::to_string(b) + ") is -1");
    }
  r.detail = std::to_string(r.cases) + " pairs";
  return r;
}

CheckResult hilbert_vs_oracle(std::size_t samples, Int bound, std::uint64_t seed) {
  CheckResult r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> coef(-bound, bound);
  const std::vector<Int> extra = {3, 5, 7, 11, 13};
  while (r.cases < samples) {
    const Int a = coef(rng), b = coef(rng);
    if (a == 0 || b == 0) continue;
    auto places = hilbert_places(a, b);
    for (Int p : extra) places.push_back(Place::prime(p));
    const Place v = places[std::uniform_int_distribution<std::size_t>(0, places.size() - 1)(rng)];
    ++r.cases;
    const int sym = hilbert_symbol(a, b, v);
    const bool sol = oracles::hilbert_soluble(a, b, v);
    if ((sym == 1) != sol)
      r.fail("(" + std::to_string(a) + ", " + std::to_string(b) + ")_" + v.to_string() + " = " + std::to_string(sym) +
             " but the solubility search says " + (sol ? "soluble" : "insoluble"));
  }
  r.detail = std::to_string(r.cases) + " random triples";
  return r;
}

CheckResult d_kappa_vs_oracle(Int bound) {
  CheckResult r;
  std::vector<Int> sqfree;
  for (Int a = -bound; a <= bound; ++a)
    if (a != 0 && a != 1 && squarefree_part(a) == a) sqfree.push_back(a);
  for (Int a : sqfree)
    for (Int b : sqfree) {
      if (squarefree_part(a * b) == 1) continue;  // [Q(√a,√b):Q] < 4
      ++r.cases;
      const Int got = d_kappa({}, a, b);
      const Int want = oracles::d_kappa_rational(a, b);
      if (got != want)
        r.fail("d_kappa([], " + std::to_string(a) + ", " + std::to_string(b) + ") = " + std::to_string(got) +
               ", oracle gives " + std::to_string(want));
    }
  r.detail = std::to_string(r.cases) + " biquadratic pairs";
  return r;
}

std::vector<GModule> tate_corpus(std::uint64_t max_order, std::uint64_t seed) {
  std::vector<GModule> out;
  auto size_of = [](const std::vector<Int>& orders) {
    std::uint64_t s = 1;
    for (Int n : orders) s *= static_cast<std::uint64_t>(n);
    return s;
  };
  auto try_cyclic = [&](const std::vector<Int>& orders, const intmat::Matrix& sigma) {
    try {
      auto m = cyclic_gmodule(orders, sigma);
      if (m.validate().is_ok()) out.push_back(std::move(m));
    } catch (const Error&) {
      // not invertible modulo the orders
    }
  };

  // Every well-defined matrix with entries below the largest order.
  const std::vector<std::vector<Int>> small = {{1}, {2}, {3}, {4}, {5}, {6}, {8}, {9}, {2, 2}, {2, 4}, {4, 2}, {3, 3},
                                               {2, 6}, {4, 4}, {2, 2, 2}};
  for (const auto& orders : small) {
    if (size_of(orders) > max_order) continue;
    const std::size_t r = orders.size();
    const Int q = *std::max_element(orders.begin(), orders.end());
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < r * r; ++i) combos *= static_cast<std::uint64_t>(q);
    for (std::uint64_t code = 0; code < combos; ++code) {
      intmat::Matrix m = intmat::zeros(r, r);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < r * r; ++i) {
        m[i / r][i % r] = static_cast<Int>(c % static_cast<std::uint64_t>(q));
        c /= static_cast<std::uint64_t>(q);
      }
      try_cyclic(orders, m);
    }
  }

  // Random actions on larger modules.
  std::mt19937_64 rng(seed);
  const std::vector<std::vector<Int>> large = {{16, 16}, {9, 27}, {12, 12}, {25, 25}, {8, 8, 8}, {100, 100}, {7, 49}};
  for (const auto& orders : large) {
    if (size_of(orders) > max_order) continue;
    const std::size_t r = orders.size();
    for (int k = 0; k < 12; ++k) {
      intmat::Matrix m = intmat::zeros(r, r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
          // Entry (i, j) must be a multiple of n_i / gcd(n_i, n_j).
          const Int step = orders[i] / std::gcd(orders[i], orders[j]);
          m[i][j] = step * std::uniform_int_distribution<Int>(0, orders[i] / step - 1)(rng);
        }
      try_cyclic(orders, m);
    }
  }

  // Permutation modules of S3 on (Z/n)^3 and the regular module of V4.
  auto perm_module = [&](const GroupRef& g, const std::vector<std::vector<std::size_t>>& perms, Int n) {
    GModule m;
    m.group = g;
    m.orders.assign(perms[0].size(), n);
    for (const auto& p : perms) {
      intmat::Matrix a = intmat::zeros(p.size(), p.size());
      for (std::size_t i = 0; i < p.size(); ++i) a[p[i]][i] = 1;
      m.action.push_back(std::move(a));
    }
    if (size_of(m.orders) <= max_order && m.validate().is_ok()) out.push_back(std::move(m));
  };
  const auto s3 = make_group(symmetric_group(3));
  std::vector<std::vector<std::size_t>> s3_perms;
  {
    std::vector<std::size_t> p = {0, 1, 2};
    do s3_perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  const auto v4 = make_group(named_group("v4"));
  std::vector<std::vector<std::size_t>> v4_perms(4, std::vector<std::size_t>(4));
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y) v4_perms[x][y] = v4->mul(x, y);
  for (Int n : {2, 3, 4, 5, 6, 10, 21}) perm_module(s3, s3_perms, n);
  for (Int n : {2, 3, 4, 5, 10}) perm_module(v4, v4_perms, n);
  // Trivial actions of non-cyclic groups.
  out.push_back(trivial_gmodule({2, 4}, v4));
  out.push_back(trivial_gmodule({6}, s3));
  out.push_back(trivial_gmodule({3, 9}, s3));
  return out;
}

CheckResult tate_vs_enumeration(const std::vector<GModule>& modules) {
  CheckResult r;
  for (const auto& m : modules) {
    ++r.cases;
    const auto got = tate_h_minus_1(m);
    const auto want = oracles::tate_enumerate(m);
    if (got != want) r.fail(module_str(m) + ": " + list_str(got) + ", enumeration gives " + list_str(want));
  }
  r.detail = std::to_string(r.cases) + " modules";
  return r;
}

CheckResult serre_fixed_points(std::size_t max_vertices, const std::vector<corpus::NamedGroup>& groups,
                               std::uint64_t cap, std::uint64_t samples, std::uint64_t seed) {
  CheckResult r;
  std::uint64_t candidates = 0;
  std::size_t sampled = 0;
  for (const auto& tree : corpus::colored_trees(max_vertices))
    for (const auto& [name, g] : groups) {
      const auto sweep = corpus::sweep_actions(*tree, g, cap, samples, seed, [&](const GraphAction& act) {
        ++r.cases;
        if (auto s = validate_action(*tree, act); !s) {
          r.fail(name + " on " + graph_str(*tree) + ": invalid action: " + s.witness);
          return;
        }
        if (fixed_vertices(*tree, act).empty()) r.fail(name + " acts on " + graph_str(*tree) + " without a fixed vertex");
      });
      candidates += sweep.candidates;
      if (!sweep.exhaustive) ++sampled;
    }
  r.detail = std::to_string(r.cases) + " actions from " + std::to_string(candidates) + " candidate tuples, " +
             std::to_string(sampled) + " (tree, group) pairs sampled";
  return r;
}

std::vector<NamedResult> selftest(std::uint64_t seed, const std::string& group_corpus) {
  std::vector<NamedResult> out;
  auto run = [&](const std::string& name, auto&& fn) {
    if (!out.empty() && !out.back().result.passed) return;
    CheckResult r;
    try {
      r = fn();
    } catch (const Error& e) {
      r.fail(std::string(error_name(e.code())) + ": " + e.what());
    }
    out.push_back({name, std::move(r)});
  };
  if (!group_corpus.empty()) run("group-corpus", [&] { return group_corpus_file(group_corpus); });
  const auto g8 = corpus::groups_order_le_8();
  const auto g6 = corpus::groups_order_le_6();
  CompareOptions cmp;
  cmp.exhaustive_limit = 1 << 16;
  cmp.seed = seed;
  run("h1-oracle", [&] { return h1_oracle_equivalence(g8, 5, cmp); });
  run("uniform-burnside", [&] { return uniform_counts(g8, 3); });
  run("monotonic", [&] { return monotonic_collapse(4, g6, {g6[0], g6[1], g6[2], g6[7]}); });
  run("refinement", [&] { return refinement_stability(g8, 4, kDefaultMaxStates); });
  run("hilbert-product", [&] { return hilbert_product_formula(200); });
  run("hilbert-oracle", [&] { return hilbert_vs_oracle(500, 200, seed); });
  run("d-kappa-oracle", [&] { return d_kappa_vs_oracle(50); });
  run("tate-oracle", [&] { return tate_vs_enumeration(tate_corpus(10'000, seed)); });
  run("serre-fixed-point", [&] { return serre_fixed_points(10, g8, 200'000, 2'000, seed); });
  return out;
}

}  // namespace lgp::checks
