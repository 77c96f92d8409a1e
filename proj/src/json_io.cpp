#include "lgp/json_io.hpp"

#include <algorithm>

namespace lgp::io {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::ParseError, path + ": " + msg);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing \"") + key + "\"");
  return *it;
}

std::int64_t as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

Element as_element(const Json& j, const std::string& path) {
  const auto v = as_int(j, path);
  if (v < 0 || v > 0xffffffffLL) bad(path, "element id out of range");
  return static_cast<Element>(v);
}

intmat::Matrix as_matrix(const Json& j, const std::string& path) {
  intmat::Matrix m;
  for (std::size_t i = 0; i < as_array(j, path).size(); ++i) {
    const auto rp = path + "[" + std::to_string(i) + "]";
    std::vector<Int> row;
    for (std::size_t k = 0; k < as_array(j[i], rp).size(); ++k)
      row.push_back(as_int(j[i][k], rp + "[" + std::to_string(k) + "]"));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < std::min<std::size_t>(e.byte, text.size()) && i + 1 < e.byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    // Keep the parser's description, dropping its own position prefix.
    std::string what = e.what();
    const auto at = what.find(": ", what.find("column"));
    const std::string detail = at == std::string::npos ? "malformed JSON" : what.substr(at + 2);
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + detail);
  }
}

GroupRef parse_group(const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return make_group(named_group(j.get<std::string>()));
    } catch (const Error& e) {
      bad(path, e.what());
    }
  }
  const auto order = as_int(field(j, "order", path), path + ".order");
  if (order < 1) bad(path + ".order", "must be positive");
  const auto& tj = as_array(field(j, "table", path), path + ".table");
  if (tj.size() != static_cast<std::size_t>(order)) bad(path + ".table", "expected " + std::to_string(order) + " rows");
  CayleyTable table;
  for (std::size_t r = 0; r < tj.size(); ++r) {
    const auto rp = path + ".table[" + std::to_string(r) + "]";
    std::vector<Element> row;
    for (std::size_t c = 0; c < as_array(tj[r], rp).size(); ++c)
      row.push_back(as_element(tj[r][c], rp + "[" + std::to_string(c) + "]"));
    table.push_back(std::move(row));
  }
  std::vector<std::string> names;
  if (auto it = j.find("names"); it != j.end()) {
    for (std::size_t i = 0; i < as_array(*it, path + ".names").size(); ++i)
      names.push_back(as_string((*it)[i], path + ".names[" + std::to_string(i) + "]"));
  }
  try {
    return make_group(FiniteGroup::from_table(std::move(table), std::move(names)));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

OrderedJson group_to_json(const FiniteGroup& g) {
  OrderedJson j;
  j["order"] = g.order();
  j["table"] = g.table();
  j["names"] = g.names();
  return j;
}

GraphDocument parse_graph(const Json& j) {
  if (!j.is_object()) bad("$", "expected an object");
  if (auto it = j.find("schema"); it != j.end()) {
    const auto s = as_string(*it, "schema");
    if (s != kModelSchema) bad("schema", "unsupported schema '" + s + "', expected '" + kModelSchema + "'");
  }
  std::vector<FieldLattice::Label> labels;
  std::vector<std::pair<std::string, std::string>> contains;
  const auto& fj = as_array(field(j, "fields", "$"), "fields");
  for (std::size_t i = 0; i < fj.size(); ++i) {
    const auto p = "fields[" + std::to_string(i) + "]";
    FieldLattice::Label lab{as_string(field(fj[i], "name", p), p + ".name"), std::nullopt};
    if (auto it = fj[i].find("degree"); it != fj[i].end()) lab.degree = static_cast<int>(as_int(*it, p + ".degree"));
    if (auto it = fj[i].find("contains"); it != fj[i].end())
      for (std::size_t k = 0; k < as_array(*it, p + ".contains").size(); ++k)
        contains.emplace_back(as_string((*it)[k], p + ".contains[" + std::to_string(k) + "]"), lab.name);
    labels.push_back(std::move(lab));
  }
  auto lattice = std::make_shared<const FieldLattice>(FieldLattice::create(std::move(labels), contains));

  std::vector<Vertex> vertices;
  const auto& vj = as_array(field(j, "vertices", "$"), "vertices");
  for (std::size_t i = 0; i < vj.size(); ++i) {
    const auto p = "vertices[" + std::to_string(i) + "]";
    Vertex v;
    v.id = as_int(field(vj[i], "id", p), p + ".id");
    const auto kind = as_string(field(vj[i], "kind", p), p + ".kind");
    if (kind == "P") v.kind = VertexKind::P;
    else if (kind == "U") v.kind = VertexKind::U;
    else bad(p + ".kind", "expected \"P\" or \"U\", got \"" + kind + "\"");
    v.field = as_string(field(vj[i], "field", p), p + ".field");
    vertices.push_back(std::move(v));
  }
  std::vector<Edge> edges;
  if (auto it = j.find("edges"); it != j.end()) {
    const auto& ej = as_array(*it, "edges");
    for (std::size_t i = 0; i < ej.size(); ++i) {
      const auto p = "edges[" + std::to_string(i) + "]";
      edges.push_back({as_int(field(ej[i], "id", p), p + ".id"), as_int(field(ej[i], "p", p), p + ".p"),
                       as_int(field(ej[i], "u", p), p + ".u")});
    }
  }
  auto graph = std::make_shared<const ReductionGraph>(ReductionGraph::create(std::move(vertices), std::move(edges), *lattice));
  return {std::move(lattice), std::move(graph)};
}

ShaModel parse_model(const Json& j) {
  auto doc = parse_graph(j);
  std::map<std::string, GroupRef> groups;
  const auto& gj = field(j, "groups", "$");
  if (!gj.is_object()) bad("groups", "expected an object keyed by field label");
  for (auto it = gj.begin(); it != gj.end(); ++it) groups[it.key()] = parse_group(it.value(), "groups." + it.key());

  std::map<FieldPair, GroupHom> maps;
  if (auto it = j.find("maps"); it != j.end()) {
    const auto& mj = as_array(*it, "maps");
    for (std::size_t i = 0; i < mj.size(); ++i) {
      const auto p = "maps[" + std::to_string(i) + "]";
      const auto src = as_string(field(mj[i], "source", p), p + ".source");
      const auto tgt = as_string(field(mj[i], "target", p), p + ".target");
      auto gs = groups.find(src), gt = groups.find(tgt);
      if (gs == groups.end()) throw Error(ErrorCode::MissingMap, p + ": no group for field '" + src + "'");
      if (gt == groups.end()) throw Error(ErrorCode::MissingMap, p + ": no group for field '" + tgt + "'");
      std::vector<Element> image;
      const auto& ij = as_array(field(mj[i], "image", p), p + ".image");
      for (std::size_t k = 0; k < ij.size(); ++k) image.push_back(as_element(ij[k], p + ".image[" + std::to_string(k) + "]"));
      try {
        if (!maps.emplace(FieldPair{src, tgt}, GroupHom::create(gs->second, gt->second, std::move(image))).second)
          bad(p, "duplicate map '" + src + "' -> '" + tgt + "'");
      } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError) throw;
        throw Error(e.code(), p + ": " + e.what());
      }
    }
  }
  return ShaModel::create(doc.lattice, doc.graph, std::move(groups), std::move(maps));
}

namespace {

OrderedJson graph_part(const FieldLattice& lat, const ReductionGraph& g) {
  OrderedJson j;
  j["schema"] = kModelSchema;
  OrderedJson fields = OrderedJson::array();
  for (const auto& lab : lat.labels()) {
    OrderedJson f;
    f["name"] = lab.name;
    if (lab.degree) f["degree"] = *lab.degree;
    OrderedJson sub = OrderedJson::array();
    for (const auto& other : lat.labels())
      if (other.name != lab.name && lat.contains(other.name, lab.name)) sub.push_back(other.name);
    f["contains"] = sub;
    fields.push_back(f);
  }
  j["fields"] = fields;
  OrderedJson vs = OrderedJson::array();
  for (const auto& v : g.vertices())
    vs.push_back(OrderedJson{{"id", v.id}, {"kind", v.kind == VertexKind::P ? "P" : "U"}, {"field", v.field}});
  j["vertices"] = vs;
  OrderedJson es = OrderedJson::array();
  for (const auto& e : g.edges()) es.push_back(OrderedJson{{"id", e.id}, {"p", e.p}, {"u", e.u}});
  j["edges"] = es;
  return j;
}

}  // namespace

OrderedJson model_to_json(const ShaModel& m) {
  OrderedJson j = graph_part(m.lattice(), m.graph());
  OrderedJson groups = OrderedJson::object();
  for (const auto& lab : m.lattice().labels()) groups[lab.name] = group_to_json(*m.group_of(lab.name));
  j["groups"] = groups;
  OrderedJson maps = OrderedJson::array();
  for (const auto& [key, hom] : m.maps()) {
    if (key.first == key.second) continue;
    maps.push_back(OrderedJson{{"source", key.first}, {"target", key.second}, {"image", hom.image()}});
  }
  j["maps"] = maps;
  return j;
}

Cochain parse_cochain(const Json& j, const ReductionGraph& g, const std::vector<GroupRef>& edge_groups) {
  Cochain c(g.edge_count());
  for (std::size_t e = 0; e < c.size(); ++e) c[e] = edge_groups[e]->identity();
  const auto& ej = field(j, "entries", "cochain");
  if (!ej.is_object()) bad("cochain.entries", "expected an object keyed by edge id");
  for (auto it = ej.begin(); it != ej.end(); ++it) {
    const auto p = "cochain.entries." + it.key();
    Id id = 0;
    try {
      std::size_t used = 0;
      id = std::stoll(it.key(), &used);
      if (used != it.key().size()) bad(p, "edge id must be an integer");
    } catch (const std::logic_error&) {
      bad(p, "edge id must be an integer");
    }
    auto e = g.find_edge(id);
    if (!e) throw Error(ErrorCode::BadCochain, "no edge with id " + it.key());
    const Element x = as_element(it.value(), p);
    if (x >= edge_groups[*e]->order())
      throw Error(ErrorCode::BadCochain, "entry for edge " + it.key() + " is not an element of its group");
    c[*e] = x;
  }
  return c;
}

OrderedJson cochain_to_json(const Cochain& c, const ReductionGraph& g) {
  OrderedJson entries = OrderedJson::object();
  for (std::size_t e = 0; e < c.size(); ++e) entries[std::to_string(g.edge(e).id)] = c[e];
  return OrderedJson{{"entries", entries}};
}

OrderedJson space_to_json(const DoubleCosetSpace& s, const ReductionGraph& g) {
  OrderedJson j;
  j["classCount"] = s.size();
  j["basePoint"] = s.base_point();
  OrderedJson reps = OrderedJson::array();
  for (const auto& r : s.representatives()) reps.push_back(cochain_to_json(r, g));
  j["representatives"] = reps;
  return j;
}

GModule parse_gmodule(const Json& j) {
  const auto& mj = field(j, "module", "$");
  std::vector<Int> orders;
  const auto& oj = as_array(field(mj, "orders", "module"), "module.orders");
  for (std::size_t i = 0; i < oj.size(); ++i) orders.push_back(as_int(oj[i], "module.orders[" + std::to_string(i) + "]"));
  if (auto it = mj.find("sigma"); it != mj.end()) return cyclic_gmodule(std::move(orders), as_matrix(*it, "module.sigma"));
  GModule mod;
  mod.orders = std::move(orders);
  mod.group = parse_group(field(mj, "group", "module"), "module.group");
  const auto& aj = as_array(field(mj, "action", "module"), "module.action");
  for (std::size_t i = 0; i < aj.size(); ++i) mod.action.push_back(as_matrix(aj[i], "module.action[" + std::to_string(i) + "]"));
  mod.validate().check();
  return mod;
}

}  // namespace lgp::io
