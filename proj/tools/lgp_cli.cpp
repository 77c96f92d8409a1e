// Command-line front end. Talks to the library only through the C interface.
#include <lgp/lgp.h>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

enum class Format { Json, Table };

struct RunConfig {
  std::uint64_t max_states = 10'000'000;
  Format format = Format::Json;
  std::uint64_t seed = 1;
};

// Failure carrying the status to report and map to an exit code.
struct Failure {
  lgp_status status;
  std::string message;
};

void check(lgp_status st) {
  if (st != LGP_OK) throw Failure{st, lgp_last_error()};
}

void input_error(const std::string& message) { throw Failure{LGP_INVALID_ARGUMENT, message}; }

struct StringDeleter {
  void operator()(char* s) const { lgp_string_free(s); }
};
struct GroupDeleter {
  void operator()(lgp_group* g) const { lgp_group_free(g); }
};
struct ModelDeleter {
  void operator()(lgp_model* m) const { lgp_model_free(m); }
};
struct SpaceDeleter {
  void operator()(lgp_space* s) const { lgp_space_free(s); }
};
using GroupPtr = std::unique_ptr<lgp_group, GroupDeleter>;
using ModelPtr = std::unique_ptr<lgp_model, ModelDeleter>;
using SpacePtr = std::unique_ptr<lgp_space, SpaceDeleter>;

// Takes ownership of a library string and parses it.
ordered_json take_json(char* s) {
  std::unique_ptr<char, StringDeleter> owned(s);
  return ordered_json::parse(owned.get());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{LGP_INVALID_ARGUMENT, "cannot read '" + path + "'"};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupPtr load_group(const std::string& spec) {
  lgp_group* g = nullptr;
  if (spec.rfind("file:", 0) == 0) {
    check(lgp_group_from_json(read_file(spec.substr(5)).c_str(), &g));
  } else {
    check(lgp_group_named(spec.c_str(), &g));
  }
  return GroupPtr(g);
}

ModelPtr load_model(const std::string& path) {
  lgp_model* m = nullptr;
  check(lgp_model_from_json(read_file(path).c_str(), &m));
  return ModelPtr(m);
}

ordered_json sha_json(const lgp_model* model, lgp_sha_mode mode, const RunConfig& cfg) {
  lgp_space* raw = nullptr;
  check(lgp_sha(model, mode, cfg.max_states, &raw));
  SpacePtr space(raw);
  char* out = nullptr;
  check(lgp_space_to_json(space.get(), &out));
  ordered_json j;
  j["mode"] = mode == LGP_SHA_EXACT ? "exact" : "lower-bound";
  const ordered_json body = take_json(out);
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

// ---- table rendering ----------------------------------------------------------

std::string scalar(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return v.dump();
}

std::string cochain_text(const ordered_json& c) {
  std::string s;
  for (auto& [edge, elem] : c["entries"].items()) s += (s.empty() ? "" : " ") + edge + ":" + elem.dump();
  return s.empty() ? "(no edges)" : s;
}

void print_table(const ordered_json& j, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto& [k, v] : j.items()) {
    if (k == "representatives") {
      std::cout << pad << k << ":\n";
      for (std::size_t i = 0; i < v.size(); ++i) std::cout << pad << "  [" << i << "] " << cochain_text(v[i]) << "\n";
    } else if (k == "model") {
      std::cout << pad << k << ": (use --format json to print the model)\n";
    } else if (v.is_object()) {
      std::cout << pad << k << ":\n";
      print_table(v, indent + 2);
    } else if (v.is_array() && !v.empty() && v[0].is_object()) {
      std::cout << pad << k << ":\n";
      for (const auto& item : v) {
        std::cout << pad << "  -\n";
        print_table(item, indent + 4);
      }
    } else if (v.is_array()) {
      std::string s;
      for (const auto& x : v) s += (s.empty() ? "" : ", ") + scalar(x);
      std::cout << pad << k << ": [" << s << "]\n";
    } else {
      std::cout << pad << k << ": " << scalar(v) << "\n";
    }
  }
}

void emit(const ordered_json& j, const RunConfig& cfg) {
  if (cfg.format == Format::Json) {
    std::cout << j.dump(2) << "\n";
  } else {
    print_table(j);
  }
}

// ---- subcommands ------------------------------------------------------------------

int cmd_graph_check(const std::string& file, const RunConfig& cfg) {
  char* out = nullptr;
  check(lgp_graph_check(read_file(file).c_str(), &out));
  emit(take_json(out), cfg);
  return 0;
}

int cmd_sha(const std::string& file, bool exact, const RunConfig& cfg) {
  auto model = load_model(file);
  emit(sha_json(model.get(), exact ? LGP_SHA_EXACT : LGP_SHA_LOWER_BOUND, cfg), cfg);
  return 0;
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = item.find_last_not_of(" \t");
    const std::string t = item.substr(b, e - b + 1);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(t, &used);
    } catch (const std::exception&) {
      input_error("not an integer: '" + t + "'");
    }
    if (used != t.size()) input_error("not an integer: '" + t + "'");
    out.push_back(v);
  }
  return out;
}

int cmd_dk(const std::string& kappa, std::int64_t a, std::int64_t b, const RunConfig& cfg) {
  const auto gens = parse_int_list(kappa);
  std::int64_t d = 0;
  check(lgp_d_kappa(gens.data(), gens.size(), a, b, &d));
  ordered_json j;
  j["kappa"] = gens;
  j["a"] = a;
  j["b"] = b;
  j["d"] = d;
  j["torusGroup"] = std::vector<std::int64_t>(static_cast<std::size_t>(d > 0 ? d - 1 : 0), 2);
  emit(j, cfg);
  return 0;
}

int cmd_tate(const std::string& file, const RunConfig& cfg) {
  char* out = nullptr;
  check(lgp_tate(read_file(file).c_str(), cfg.max_states, &out));
  emit(take_json(out), cfg);
  return 0;
}

// Places where (a, b)_v can be -1.
std::vector<std::string> candidate_places(std::int64_t a, std::int64_t b) {
  std::vector<std::string> out = {"inf", "2"};
  std::vector<std::int64_t> primes;
  for (std::int64_t n : {a, b}) {
    std::uint64_t m = n < 0 ? 0 - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
    for (std::uint64_t p = 2; p * p <= m; ++p) {
      if (m % p != 0) continue;
      primes.push_back(static_cast<std::int64_t>(p));
      while (m % p == 0) m /= p;
    }
    if (m > 1) primes.push_back(static_cast<std::int64_t>(m));
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (std::int64_t p : primes)
    if (p != 2) out.push_back(std::to_string(p));
  return out;
}

int cmd_hilbert(std::int64_t a, std::int64_t b, const std::optional<std::string>& place, const RunConfig& cfg) {
  ordered_json j;
  j["a"] = a;
  j["b"] = b;
  if (place) {
    int sym = 0;
    check(lgp_hilbert_symbol(a, b, place->c_str(), &sym));
    j["place"] = *place;
    j["symbol"] = sym;
  } else {
    ordered_json symbols = ordered_json::object();
    for (const auto& v : candidate_places(a, b)) {
      int sym = 0;
      check(lgp_hilbert_symbol(a, b, v.c_str(), &sym));
      symbols[v] = sym;
    }
    int split = 0;
    check(lgp_quaternion_is_split(a, b, &split));
    j["symbols"] = symbols;
    j["split"] = split == 1;
  }
  emit(j, cfg);
  return 0;
}

int cmd_examples(const std::string& name, const std::optional<std::string>& group, const RunConfig& cfg) {
  const std::string gname = group.value_or("z2");
  auto g = load_group(gname);
  lgp_model* raw = nullptr;
  check(lgp_model_example(name.c_str(), g.get(), &raw));
  ModelPtr model(raw);
  char* out = nullptr;
  check(lgp_model_to_json(model.get(), &out));
  ordered_json j;
  j["example"] = name;
  j["group"] = gname;
  j["model"] = take_json(out);
  // The triangle satisfies the rationality hypothesis; the non-monotonic tree
  // does not, so only the lower bound applies there.
  j["sha"] = sha_json(model.get(), name == "triangle" ? LGP_SHA_EXACT : LGP_SHA_LOWER_BOUND, cfg);
  emit(j, cfg);
  return 0;
}

int cmd_selftest(const std::optional<std::string>& corpus, const RunConfig& cfg) {
  lgp_selftest_options opts{cfg.seed, corpus ? corpus->c_str() : nullptr};
  char* out = nullptr;
  const lgp_status st = lgp_selftest(&opts, &out);
  if (out == nullptr) check(st);
  emit(take_json(out), cfg);
  if (st != LGP_OK) {
    std::cerr << "selftest failed: " << lgp_last_error() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local-global obstructions on reduction graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::string format = "json";
  app.add_option("--max-states", cfg.max_states, "Bound on enumerated states")->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", cfg.seed, "Seed for sampled checks");

  std::string file;
  auto* graph_check = app.add_subcommand("graph-check", "Structure of a graph or model file");
  graph_check->add_option("file", file, "Graph or model JSON")->required();

  auto* sha = app.add_subcommand("sha", "Sha of a model file");
  sha->add_option("file", file, "Model JSON")->required();
  bool exact = false, lower = false;
  auto* exact_flag = sha->add_flag("--exact", exact, "Exact count; requires the rationality hypothesis");
  sha->add_flag("--lower-bound", lower, "Double coset lower bound (default)")->excludes(exact_flag);

  auto* dk = app.add_subcommand("dk", "Places of kappa with a unique place above them");
  std::string kappa;
  std::int64_t a = 0, b = 0;
  dk->add_option("--kappa", kappa, "Comma-separated generators of kappa over Q; empty for Q");
  dk->add_option("--a", a)->required();
  dk->add_option("--b", b)->required();

  auto* tate = app.add_subcommand("tate", "Tate cohomology in degree -1 of a finite module");
  tate->add_option("file", file, "Module JSON")->required();

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert symbols over Q");
  std::int64_t ha = 0, hb = 0;
  std::string place;
  hilbert->add_option("--a", ha)->required();
  hilbert->add_option("--b", hb)->required();
  auto* place_opt = hilbert->add_option("--place", place, "inf or a prime; all candidate places if omitted");

  auto* examples = app.add_subcommand("examples", "Built-in example models");
  std::string example;
  std::string group;
  examples->add_option("name", example, "triangle or nonmono")->required();
  auto* group_opt = examples->add_option("--group", group, "z2, z3, z4, s3, q8, ... or file:PATH");

  auto* selftest = app.add_subcommand("selftest", "Oracle-equivalence suites");
  std::string corpus;
  auto* corpus_opt = selftest->add_option("--corpus", corpus, "Extra group corpus {\"groups\": [...]}");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.format = format == "table" ? Format::Table : Format::Json;

  try {
    if (*graph_check) return cmd_graph_check(file, cfg);
    if (*sha) return cmd_sha(file, exact && !lower, cfg);
    if (*dk) return cmd_dk(kappa, a, b, cfg);
    if (*tate) return cmd_tate(file, cfg);
    if (*hilbert) return cmd_hilbert(ha, hb, *place_opt ? std::optional<std::string>(place) : std::nullopt, cfg);
    if (*examples) return cmd_examples(example, *group_opt ? std::optional<std::string>(group) : std::nullopt, cfg);
    if (*selftest) return cmd_selftest(*corpus_opt ? std::optional<std::string>(corpus) : std::nullopt, cfg);
  } catch (const Failure& f) {
    std::cerr << "error: " << lgp_status_name(f.status) << ": " << f.message << "\n";
    return lgp_status_is_input_error(f.status) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
