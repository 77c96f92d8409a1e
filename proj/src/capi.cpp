#include "lgp/lgp.h"

#include <cstring>
#include <optional>
#include <string>

#include "lgp/checks.hpp"
#include "lgp/json_io.hpp"
#include "lgp/sha.hpp"

struct lgp_group {
  lgp::GroupRef group;
};

struct lgp_model {
  lgp::ShaModel model;
};

struct lgp_space {
  lgp::DoubleCosetSpace space;
  lgp::GraphRef graph;
  bool exact;
};

namespace {

thread_local std::string last_error;

lgp_status to_status(lgp::ErrorCode code) { return static_cast<lgp_status>(static_cast<int>(code)); }

// Runs fn, translating exceptions into a status and the thread's last error.
template <class F>
lgp_status guarded(F&& fn) {
  try {
    last_error.clear();
    fn();
    return LGP_OK;
  } catch (const lgp::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return LGP_STATE_BOUND_EXCEEDED;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LGP_INTERNAL_ERROR;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw lgp::Error(lgp::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

lgp::io::OrderedJson space_json(const lgp_space& s) {
  auto j = lgp::io::space_to_json(s.space, *s.graph);
  j["exact"] = s.exact;
  j["verdict"] = lgp::verdict_name(lgp::verdict(s.space, s.exact));
  return j;
}

}  // namespace

extern "C" {

const char* lgp_status_name(lgp_status status) {
  if (status == LGP_INTERNAL_ERROR) return "InternalError";
  if (status < LGP_OK || status > LGP_INTERNAL_ERROR) return "Unknown";
  return lgp::error_name(static_cast<lgp::ErrorCode>(status)).data();
}

int lgp_status_is_input_error(lgp_status status) {
  if (status == LGP_INTERNAL_ERROR) return 0;
  return lgp::is_input_error(static_cast<lgp::ErrorCode>(status)) ? 1 : 0;
}

const char* lgp_last_error(void) { return last_error.c_str(); }

void lgp_string_free(char* s) { delete[] s; }

const char* lgp_version(void) { return "1.0.0"; }

lgp_status lgp_group_from_json(const char* json, lgp_group** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new lgp_group{lgp::io::parse_group(lgp::io::parse_text(json))};
  });
}

lgp_status lgp_group_named(const char* name, lgp_group** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = new lgp_group{lgp::make_group(lgp::named_group(name))};
  });
}

size_t lgp_group_order(const lgp_group* g) { return g ? g->group->order() : 0; }

lgp_status lgp_group_to_json(const lgp_group* g, char** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = dup_string(lgp::io::group_to_json(*g->group).dump());
  });
}

void lgp_group_free(lgp_group* g) { delete g; }

lgp_status lgp_model_from_json(const char* json, lgp_model** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new lgp_model{lgp::io::parse_model(lgp::io::parse_text(json))};
  });
}

lgp_status lgp_model_example(const char* name, const lgp_group* g, lgp_model** out) {
  return guarded([&] {
    require(name, "name");
    require(g, "group");
    require(out, "out");
    const std::string n = name;
    if (n == "triangle") {
      *out = new lgp_model{lgp::triangle_model(g->group)};
    } else if (n == "nonmono") {
      auto triv = lgp::make_group(lgp::trivial_group());
      auto inc = lgp::GroupHom::create(triv, g->group, {g->group->identity()});
      *out = new lgp_model{lgp::nonmono_model(triv, g->group, inc)};
    } else {
      throw lgp::Error(lgp::ErrorCode::UnknownExample, "unknown example '" + n + "' (expected triangle or nonmono)");
    }
  });
}

lgp_status lgp_model_to_json(const lgp_model* m, char** out) {
  return guarded([&] {
    require(m, "model");
    require(out, "out");
    *out = dup_string(lgp::io::model_to_json(m->model).dump(2));
  });
}

void lgp_model_free(lgp_model* m) { delete m; }

lgp_status lgp_graph_check(const char* json, char** report) {
  return guarded([&] {
    require(json, "json");
    require(report, "report");
    const auto doc = lgp::io::parse_graph(lgp::io::parse_text(json));
    const auto& g = *doc.graph;
    lgp::io::OrderedJson r;
    r["vertices"] = g.vertex_count();
    r["edges"] = g.edge_count();
    r["connected"] = g.is_connected();
    // Construction rejects edges that do not join a P-vertex to a U-vertex.
    r["bipartite"] = true;
    if (g.is_connected()) {
      r["cycleRank"] = lgp::cycle_rank(g);
    } else {
      r["cycleRank"] = nullptr;
    }
    r["isTree"] = lgp::is_tree(g);
    const auto mono = lgp::is_monotonic_tree(g, *doc.lattice);
    r["isMonotonicTree"] = mono.monotonic;
    if (mono.root) {
      r["monotonicRoot"] = *mono.root;
    } else {
      r["monotonicRoot"] = nullptr;
    }
    *report = dup_string(r.dump(2));
  });
}

lgp_status lgp_sha(const lgp_model* m, lgp_sha_mode mode, uint64_t max_states, lgp_space** out) {
  return guarded([&] {
    require(m, "model");
    require(out, "out");
    if (max_states < 1) throw lgp::Error(lgp::ErrorCode::InvalidArgument, "max_states must be at least 1");
    const lgp::H1Options opts{max_states};
    if (mode == LGP_SHA_EXACT) {
      *out = new lgp_space{lgp::sha_exact_rational(m->model, opts), m->model.graph_ref(), true};
    } else if (mode == LGP_SHA_LOWER_BOUND) {
      // The bound is exact whenever the rationality hypothesis holds.
      const bool exact = lgp::check_rationality(m->model).is_ok();
      *out = new lgp_space{lgp::sha_lower_bound(m->model, opts), m->model.graph_ref(), exact};
    } else {
      throw lgp::Error(lgp::ErrorCode::InvalidArgument, "unknown sha mode");
    }
  });
}

size_t lgp_space_size(const lgp_space* s) { return s ? s->space.size() : 0; }

size_t lgp_space_base_point(const lgp_space* s) { return s ? s->space.base_point() : 0; }

lgp_status lgp_space_to_json(const lgp_space* s, char** out) {
  return guarded([&] {
    require(s, "space");
    require(out, "out");
    *out = dup_string(space_json(*s).dump(2));
  });
}

lgp_status lgp_space_class_of(const lgp_space* s, const char* cochain_json, size_t* out) {
  return guarded([&] {
    require(s, "space");
    require(cochain_json, "cochain_json");
    require(out, "out");
    const auto c = lgp::io::parse_cochain(lgp::io::parse_text(cochain_json), *s->graph, s->space.edge_groups());
    *out = s->space.class_of(c);
  });
}

void lgp_space_free(lgp_space* s) { delete s; }

lgp_status lgp_hilbert_symbol(int64_t a, int64_t b, const char* place, int* out) {
  return guarded([&] {
    require(place, "place");
    require(out, "out");
    if (a == 0 || b == 0) throw lgp::Error(lgp::ErrorCode::InvalidArgument, "a and b must be nonzero");
    *out = lgp::hilbert_symbol(a, b, lgp::Place::parse(place));
  });
}

lgp_status lgp_quaternion_is_split(int64_t a, int64_t b, int* out) {
  return guarded([&] {
    require(out, "out");
    if (a == 0 || b == 0) throw lgp::Error(lgp::ErrorCode::InvalidArgument, "a and b must be nonzero");
    *out = lgp::quaternion_is_split_Q(a, b) ? 1 : 0;
  });
}

lgp_status lgp_d_kappa(const int64_t* kappa, size_t kappa_len, int64_t a, int64_t b, int64_t* out) {
  return guarded([&] {
    require(out, "out");
    if (kappa_len > 0) require(kappa, "kappa");
    std::vector<lgp::Int> gens(kappa, kappa + kappa_len);
    *out = lgp::d_kappa(gens, a, b);
  });
}

lgp_status lgp_tate(const char* module_json, uint64_t max_states, char** out) {
  return guarded([&] {
    require(module_json, "module_json");
    require(out, "out");
    const auto mod = lgp::io::parse_gmodule(lgp::io::parse_text(module_json));
    lgp::io::OrderedJson j;
    j["moduleOrder"] = mod.module_order(max_states);
    j["groupOrder"] = mod.group->order();
    j["invariantFactors"] = lgp::tate_h_minus_1(mod, max_states);
    *out = dup_string(j.dump(2));
  });
}

lgp_status lgp_selftest(const lgp_selftest_options* opts, char** report) {
  bool passed = true;
  const lgp_status st = guarded([&] {
    require(report, "report");
    const std::uint64_t seed = opts ? opts->seed : 1;
    const std::string corpus = opts && opts->group_corpus ? opts->group_corpus : "";
    const auto results = lgp::checks::selftest(seed, corpus);
    lgp::io::OrderedJson j;
    j["suites"] = lgp::io::OrderedJson::array();
    std::string first;
    for (const auto& [name, r] : results) {
      lgp::io::OrderedJson s;
      s["name"] = name;
      s["passed"] = r.passed;
      s["cases"] = r.cases;
      s["detail"] = r.detail;
      if (!r.passed) {
        s["witness"] = r.witness;
        if (first.empty()) first = name + ": " + r.witness;
      }
      j["suites"].push_back(std::move(s));
      passed = passed && r.passed;
    }
    j["passed"] = passed;
    *report = dup_string(j.dump(2));
    if (!passed) last_error = first;
  });
  if (st != LGP_OK) return st;
  return passed ? LGP_OK : LGP_MISMATCH;
}

}  // extern "C"
