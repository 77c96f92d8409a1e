#include "lgp/sha.hpp"

namespace lgp {

ShaModel ShaModel::create(LatticeRef lattice, GraphRef graph, std::map<std::string, GroupRef> groups,
                          std::map<FieldPair, GroupHom> maps) {
  if (!lattice || !graph) throw Error(ErrorCode::InvalidArgument, "model needs a lattice and a graph");
  const auto& lat = *lattice;
  for (const auto& lab : lat.labels())
    if (!groups.count(lab.name) || !groups.at(lab.name))
      throw Error(ErrorCode::MissingMap, "no group given for field '" + lab.name + "'");
  for (const auto& [name, g] : groups)
    if (!lat.has(name)) throw Error(ErrorCode::UnknownField, "group given for unknown field '" + name + "'");

  for (const auto& [key, hom] : maps) {
    const auto& [small, large] = key;
    if (!lat.has(small) || !lat.has(large))
      throw Error(ErrorCode::UnknownField, "map between unknown fields '" + small + "' and '" + large + "'");
    if (!lat.contains(small, large))
      throw Error(ErrorCode::InvalidArgument, "map given for '" + small + "' -> '" + large + "' but '" + small +
                                                  "' is not contained in '" + large + "'");
    if (!(*hom.source() == *groups.at(small)) || !(*hom.target() == *groups.at(large)))
      throw Error(ErrorCode::NotHomomorphism,
                  "map '" + small + "' -> '" + large + "' does not run between the groups of those fields");
    if (small == large && hom.image() != GroupHom::identity(groups.at(small)).image())
      throw Error(ErrorCode::NotFunctorial, "map '" + small + "' -> '" + small + "' is not the identity");
  }
  for (const auto& lab : lat.labels())
    maps.try_emplace({lab.name, lab.name}, GroupHom::identity(groups.at(lab.name)));

  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& [a, c] : lat.pairs()) {
      if (maps.count({a, c})) continue;
      for (const auto& lab : lat.labels()) {
        const auto& b = lab.name;
        if (b == a || b == c) continue;
        auto ab = maps.find({a, b}), bc = maps.find({b, c});
        if (ab != maps.end() && bc != maps.end()) {
          maps.emplace(FieldPair{a, c}, ab->second.then(bc->second));
          grew = true;
          break;
        }
      }
    }
  }
  for (const auto& [a, c] : lat.pairs())
    if (!maps.count({a, c})) throw Error(ErrorCode::MissingMap, "no map for inclusion '" + a + "' -> '" + c + "'");

  for (const auto& [a, b] : lat.pairs())
    for (const auto& [b2, c] : lat.pairs()) {
      if (b2 != b) continue;
      const auto composite = maps.at({a, b}).then(maps.at({b, c}));
      if (composite.image() != maps.at({a, c}).image())
        throw Error(ErrorCode::NotFunctorial, "map '" + a + "' -> '" + c + "' differs from the composite through '" +
                                                  b + "'");
    }

  ShaModel m;
  m.lattice_ = std::move(lattice);
  m.graph_ = std::move(graph);
  m.groups_ = std::move(groups);
  m.maps_ = std::move(maps);
  return m;
}

const GroupRef& ShaModel::group_of(const std::string& field) const {
  auto it = groups_.find(field);
  if (it == groups_.end()) throw Error(ErrorCode::MissingMap, "no group for field '" + field + "'");
  return it->second;
}

const GroupHom& ShaModel::map_of(const std::string& smaller, const std::string& larger) const {
  auto it = maps_.find({smaller, larger});
  if (it == maps_.end()) throw Error(ErrorCode::MissingMap, "no map for inclusion '" + smaller + "' -> '" + larger + "'");
  return it->second;
}

ShaModel ShaModel::with_graph(GraphRef graph) const {
  ShaModel m = *this;
  m.graph_ = std::move(graph);
  return m;
}

CoefficientSystem to_coefficient_system(const ShaModel& m) {
  const auto& g = m.graph();
  CoefficientSystem sys;
  sys.graph = m.graph_ref();
  for (const auto& v : g.vertices()) sys.vertex_group.push_back(m.group_of(v.field));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& pf = g.vertex(g.p_index(e)).field;
    const auto& uf = g.vertex(g.u_index(e)).field;
    sys.edge_group.push_back(m.group_of(pf));
    sys.p_hom.push_back(m.map_of(pf, pf));
    sys.u_hom.push_back(m.map_of(uf, pf));
  }
  return sys;
}

DoubleCosetSpace sha_lower_bound(const ShaModel& m, const H1Options& opts) {
  return h1_brute_force(to_coefficient_system(m), opts);
}

Status check_rationality(const ShaModel& m) {
  const auto& g = m.graph();
  const auto& k = g.vertex(0).field;
  for (const auto& v : g.vertices())
    if (v.field != k)
      return Status::fail(ErrorCode::HypothesisViolated,
                          std::string(v.kind == VertexKind::P ? "P" : "U") + "-vertex " + std::to_string(v.id) +
                              " has field '" + v.field + "', not the common field '" + k + "'");
  for (const auto& lab : m.lattice().labels())
    if (lab.name != k && m.lattice().contains(lab.name, k))
      return Status::fail(ErrorCode::HypothesisViolated, "vertex " + std::to_string(g.vertex(0).id) + " has field '" +
                                                             k + "', which is not minimal ('" + lab.name +
                                                             "' is smaller)");
  return Status::ok();
}

DoubleCosetSpace sha_exact_rational(const ShaModel& m, const H1Options& opts) {
  check_rationality(m).check();
  return h1_constant(m.graph_ref(), m.group_of(m.graph().vertex(0).field), opts);
}

ShaModel triangle_model(const GroupRef& group) {
  auto lattice = std::make_shared<const FieldLattice>(FieldLattice::single("k"));
  // Components U0, U2, U4; P1 = U0 ∩ U2, P3 = U2 ∩ U4, P5 = U4 ∩ U0.
  std::vector<Vertex> vs;
  for (Id i = 0; i < 6; ++i) vs.push_back({i, i % 2 == 0 ? VertexKind::U : VertexKind::P, "k"});
  std::vector<Edge> es = {{0, 1, 0}, {1, 1, 2}, {2, 3, 2}, {3, 3, 4}, {4, 5, 4}, {5, 5, 0}};
  auto graph = std::make_shared<const ReductionGraph>(ReductionGraph::create(vs, es, *lattice));
  return ShaModel::create(lattice, graph, {{"k", group}}, {});
}

ShaModel nonmono_model(const GroupRef& gk, const GroupRef& gk_prime, const GroupHom& inclusion) {
  if (!(*inclusion.source() == *gk) || !(*inclusion.target() == *gk_prime))
    throw Error(ErrorCode::NotHomomorphism, "inclusion map does not run from G(k)/R to G(k')/R");
  auto lattice = std::make_shared<const FieldLattice>(
      FieldLattice::create({{"k", 1}, {"k'", 2}}, {{"k", "k'"}}));
  std::vector<Vertex> vs = {{0, VertexKind::U, "k"}, {1, VertexKind::P, "k'"}, {2, VertexKind::U, "k"}};
  std::vector<Edge> es = {{0, 1, 0}, {1, 1, 2}};
  auto graph = std::make_shared<const ReductionGraph>(ReductionGraph::create(vs, es, *lattice));
  return ShaModel::create(lattice, graph, {{"k", gk}, {"k'", gk_prime}}, {{{"k", "k'"}, inclusion}});
}

bool is_class_trivial(const DoubleCosetSpace& space, const Cochain& c) {
  return space.class_of(c) == space.base_point();
}

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Counterexample: return "counterexample";
    case Verdict::PrincipleHolds: return "principle-holds";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Verdict verdict(const DoubleCosetSpace& space, bool exact) {
  if (space.size() > 1) return Verdict::Counterexample;
  return exact ? Verdict::PrincipleHolds : Verdict::Inconclusive;
}

}  // namespace lgp
