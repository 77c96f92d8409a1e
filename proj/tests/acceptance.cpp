// Acceptance suite: one PASS/FAIL line per criterion. Limits are pinned here.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "lgp/checks.hpp"
#include "lgp/corpus.hpp"
#include "lgp/oracles.hpp"
#include "lgp/sha.hpp"

using namespace lgp;

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr double kExampleSeconds = 1.0;       // criteria 1, 2
constexpr double kDKappaSeconds = 0.1;        // criterion 3, per call
constexpr double kOracleSeconds = 60.0;       // criterion 4
constexpr double kMonotonicSeconds = 120.0;   // criterion 6
constexpr double kProductSeconds = 30.0;      // criterion 8
constexpr std::size_t kOracleEdges = 6;
constexpr std::uint64_t kExhaustiveLimit = 1 << 20;
constexpr std::size_t kMonotonicEdges = 5;
constexpr std::size_t kRefinementEdges = 4;
constexpr std::uint64_t kRefinementStates = 10'000'000;
constexpr Int kProductBound = 200;
constexpr std::size_t kHilbertSamples = 500;
constexpr Int kDKappaBound = 50;
constexpr std::uint64_t kTateMaxOrder = 10'000;
constexpr std::size_t kTreeVertices = 10;
constexpr std::uint64_t kActionCap = 200'000;
constexpr std::uint64_t kActionSamples = 2'000;

struct Outcome {
  bool passed = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_time(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

Outcome from_check(const checks::CheckResult& r) {
  return {r.passed, (r.passed ? r.detail : r.witness) + " (" + std::to_string(r.cases) + " cases)"};
}

GroupRef grp(const char* n) { return make_group(named_group(n)); }

Outcome triangle() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto s = sha_exact_rational(triangle_model(grp("z2")));
  const double t = seconds_since(t0);
  bool nontrivial = false;
  for (const auto& rep : s.representatives())
    if (!is_class_trivial(s, rep)) nontrivial = true;
  const bool ok = s.size() == 2 && nontrivial && t < kExampleSeconds;
  return {ok, std::to_string(s.size()) + " classes, nontrivial class " + (nontrivial ? "present" : "absent") + ", " +
                  fmt_time(t)};
}

Outcome nonmono() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto s = sha_lower_bound(nonmono_model(grp("trivial"), grp("z2"), GroupHom::create(grp("trivial"), grp("z2"), {0})));
  const double t = seconds_since(t0);
  return {s.size() == 2 && t < kExampleSeconds, std::to_string(s.size()) + " classes, " + fmt_time(t)};
}

Outcome dkappa_examples() {
  Outcome out;
  struct Case {
    std::vector<Int> kappa;
    Int d;
    std::vector<Int> torus;
  };
  for (const auto& c : {Case{{}, 1, {}}, Case{{17}, 2, {2}}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const Int d = d_kappa(c.kappa, -1, 2);
    const auto torus = torus_r_group(d);
    const double t = seconds_since(t0);
    const bool ok = d == c.d && torus == c.torus && t < kDKappaSeconds;
    out.passed = out.passed && ok;
    out.detail += std::string(out.detail.empty() ? "" : "; ") + "kappa " + (c.kappa.empty() ? "Q" : "Q(sqrt 17)") +
                  ": d=" + std::to_string(d) + " torus rank " + std::to_string(torus.size()) + ", " + fmt_time(t);
  }
  return out;
}

Outcome oracle_equivalence() {
  CompareOptions opts;
  opts.exhaustive_limit = kExhaustiveLimit;
  const auto t0 = std::chrono::steady_clock::now();
  auto out = from_check(checks::h1_oracle_equivalence(corpus::groups_order_le_8(), kOracleEdges, opts));
  const double t = seconds_since(t0);
  out.passed = out.passed && t < kOracleSeconds;
  out.detail += ", " + fmt_time(t);
  return out;
}

Outcome uniform_count() {
  const auto s3 = symmetric_group(3);
  const auto n = uniform_conjugacy_classes(s3, 2).size();
  const auto burnside = oracles::burnside_uniform_count(s3, 2);
  return {n == 11 && burnside == 11, std::to_string(n) + " classes, Burnside " + std::to_string(burnside)};
}

Outcome monotonic() {
  const auto g6 = corpus::groups_order_le_6();
  // Three-label lattices use the trivial group, Z/2 and S3.
  const std::vector<corpus::NamedGroup> small = {g6[0], g6[1], g6[7]};
  const auto t0 = std::chrono::steady_clock::now();
  auto out = from_check(checks::monotonic_collapse(kMonotonicEdges, g6, small));
  const double t = seconds_since(t0);
  out.passed = out.passed && t < kMonotonicSeconds;
  out.detail += ", " + fmt_time(t);
  return out;
}

Outcome refinement() {
  return from_check(checks::refinement_stability(corpus::groups_order_le_8(), kRefinementEdges, kRefinementStates));
}

Outcome hilbert() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto product = checks::hilbert_product_formula(kProductBound);
  const double t = seconds_since(t0);
  const auto oracle = checks::hilbert_vs_oracle(kHilbertSamples, kProductBound, kSeed);
  Outcome out;
  out.passed = product.passed && t < kProductSeconds && oracle.passed;
  out.detail = "product formula " + std::string(product.passed ? "holds" : "fails: " + product.witness) + " on " +
               std::to_string(product.cases) + " pairs in " + fmt_time(t) + "; oracle " +
               (oracle.passed ? "agrees" : "disagrees: " + oracle.witness) + " on " + std::to_string(oracle.cases) +
               " triples";
  return out;
}

Outcome dkappa_oracle() { return from_check(checks::d_kappa_vs_oracle(kDKappaBound)); }

Outcome tate() {
  auto out = from_check(checks::tate_vs_enumeration(checks::tate_corpus(kTateMaxOrder, kSeed)));
  const auto triv = tate_h_minus_1(trivial_gmodule({2}, grp("z2")));
  const auto neg = tate_h_minus_1(cyclic_gmodule({4}, {{-1}}));
  const bool closed = triv == std::vector<Int>{2} && neg == std::vector<Int>{2};
  out.passed = out.passed && closed;
  out.detail += closed ? ", closed forms match" : ", closed forms differ";
  return out;
}

Outcome serre() {
  return from_check(
      checks::serre_fixed_points(kTreeVertices, corpus::groups_order_le_8(), kActionCap, kActionSamples, kSeed));
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, triangle},   {2, nonmono},      {3, dkappa_examples}, {4, oracle_equivalence},
      {5, uniform_count}, {6, monotonic}, {7, refinement},      {8, hilbert},
      {9, dkappa_oracle}, {10, tate},     {11, serre}};
  int failures = 0;
  for (const auto& [n, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failures;
    std::printf("criterion %d: %s (%s)\n", n, o.passed ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
