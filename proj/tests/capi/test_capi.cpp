// Exercises the shared library through its C header only.
#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "lgp/lgp.h"

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(LGP_TEST_DATA) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json take(char* s) {
  auto j = nlohmann::json::parse(s);
  lgp_string_free(s);
  return j;
}

}  // namespace

TEST(CApi, StatusNames) {
  EXPECT_STREQ(lgp_status_name(LGP_OK), "Ok");
  EXPECT_STREQ(lgp_status_name(LGP_NOT_ASSOCIATIVE), "NotAssociative");
  EXPECT_STREQ(lgp_status_name(LGP_STATE_BOUND_EXCEEDED), "StateBoundExceeded");
  EXPECT_EQ(lgp_status_is_input_error(LGP_PARSE_ERROR), 1);
  EXPECT_EQ(lgp_status_is_input_error(LGP_HYPOTHESIS_VIOLATED), 0);
  EXPECT_EQ(lgp_status_is_input_error(LGP_OK), 0);
  EXPECT_STRNE(lgp_version(), "");
}

TEST(CApi, Groups) {
  lgp_group* g = nullptr;
  ASSERT_EQ(lgp_group_named("s3", &g), LGP_OK);
  EXPECT_EQ(lgp_group_order(g), 6u);
  char* text = nullptr;
  ASSERT_EQ(lgp_group_to_json(g, &text), LGP_OK);
  const std::string dumped = text;
  lgp_string_free(text);
  lgp_group_free(g);

  lgp_group* h = nullptr;
  ASSERT_EQ(lgp_group_from_json(dumped.c_str(), &h), LGP_OK);
  EXPECT_EQ(lgp_group_order(h), 6u);
  lgp_group_free(h);

  lgp_group* bad = nullptr;
  EXPECT_EQ(lgp_group_from_json(R"({"order": 2, "table": [[0,1],[1,1]]})", &bad), LGP_BAD_INVERSE);
  EXPECT_EQ(bad, nullptr);
  EXPECT_STRNE(lgp_last_error(), "");
  EXPECT_EQ(lgp_group_named("nope", &bad), LGP_INVALID_ARGUMENT);
  EXPECT_EQ(lgp_group_from_json(nullptr, &bad), LGP_INVALID_ARGUMENT);
}

TEST(CApi, TriangleExact) {
  lgp_group* g = nullptr;
  lgp_model* m = nullptr;
  lgp_space* s = nullptr;
  ASSERT_EQ(lgp_group_named("z2", &g), LGP_OK);
  ASSERT_EQ(lgp_model_example("triangle", g, &m), LGP_OK);
  ASSERT_EQ(lgp_sha(m, LGP_SHA_EXACT, 1000000, &s), LGP_OK);
  EXPECT_EQ(lgp_space_size(s), 2u);
  EXPECT_EQ(lgp_space_base_point(s), 0u);
  char* text = nullptr;
  ASSERT_EQ(lgp_space_to_json(s, &text), LGP_OK);
  const auto j = take(text);
  EXPECT_EQ(j["classCount"], 2);
  EXPECT_EQ(j["exact"], true);
  EXPECT_EQ(j["verdict"], "counterexample");
  std::size_t cls = 99;
  ASSERT_EQ(lgp_space_class_of(s, R"({"entries": {"0": 1}})", &cls), LGP_OK);
  EXPECT_NE(cls, lgp_space_base_point(s));
  EXPECT_EQ(lgp_space_class_of(s, R"({"entries": {"0": 7}})", &cls), LGP_BAD_COCHAIN);
  lgp_space_free(s);
  lgp_model_free(m);
  lgp_group_free(g);
}

TEST(CApi, NonmonoLowerBound) {
  lgp_group* g = nullptr;
  lgp_model* m = nullptr;
  lgp_space* s = nullptr;
  ASSERT_EQ(lgp_group_named("z2", &g), LGP_OK);
  ASSERT_EQ(lgp_model_example("nonmono", g, &m), LGP_OK);
  EXPECT_EQ(lgp_sha(m, LGP_SHA_EXACT, 1000000, &s), LGP_HYPOTHESIS_VIOLATED);
  EXPECT_NE(std::string(lgp_last_error()).find("P-vertex 1"), std::string::npos);
  ASSERT_EQ(lgp_sha(m, LGP_SHA_LOWER_BOUND, 1000000, &s), LGP_OK);
  EXPECT_EQ(lgp_space_size(s), 2u);
  char* text = nullptr;
  ASSERT_EQ(lgp_space_to_json(s, &text), LGP_OK);
  EXPECT_EQ(take(text)["exact"], false);
  lgp_space_free(s);
  lgp_model_free(m);
  EXPECT_EQ(lgp_model_example("square", g, &m), LGP_UNKNOWN_EXAMPLE);
  lgp_group_free(g);
}

TEST(CApi, ModelsFromJson) {
  lgp_model* m = nullptr;
  ASSERT_EQ(lgp_model_from_json(slurp("monotonic.json").c_str(), &m), LGP_OK);
  lgp_space* s = nullptr;
  ASSERT_EQ(lgp_sha(m, LGP_SHA_LOWER_BOUND, 1000000, &s), LGP_OK);
  EXPECT_EQ(lgp_space_size(s), 1u);
  lgp_space_free(s);
  char* text = nullptr;
  ASSERT_EQ(lgp_model_to_json(m, &text), LGP_OK);
  lgp_model* again = nullptr;
  EXPECT_EQ(lgp_model_from_json(text, &again), LGP_OK);
  lgp_string_free(text);
  lgp_model_free(again);
  lgp_model_free(m);

  EXPECT_EQ(lgp_model_from_json(slurp("syntax_error.json").c_str(), &m), LGP_PARSE_ERROR);
  EXPECT_NE(std::string(lgp_last_error()).find("line"), std::string::npos);
  EXPECT_EQ(lgp_model_from_json(slurp("not_bipartite.json").c_str(), &m), LGP_NOT_BIPARTITE);
}

TEST(CApi, StateBound) {
  lgp_group* g = nullptr;
  lgp_model* m = nullptr;
  lgp_space* s = nullptr;
  ASSERT_EQ(lgp_group_named("s3", &g), LGP_OK);
  ASSERT_EQ(lgp_model_example("triangle", g, &m), LGP_OK);
  EXPECT_EQ(lgp_sha(m, LGP_SHA_LOWER_BOUND, 100, &s), LGP_STATE_BOUND_EXCEEDED);
  EXPECT_EQ(s, nullptr);
  lgp_model_free(m);
  lgp_group_free(g);
}

TEST(CApi, GraphCheck) {
  char* text = nullptr;
  ASSERT_EQ(lgp_graph_check(slurp("triangle.json").c_str(), &text), LGP_OK);
  const auto j = take(text);
  EXPECT_EQ(j["cycleRank"], 1);
  EXPECT_EQ(j["isTree"], false);
  ASSERT_EQ(lgp_graph_check(slurp("monotonic.json").c_str(), &text), LGP_OK);
  const auto k = take(text);
  EXPECT_EQ(k["isMonotonicTree"], true);
  EXPECT_EQ(k["monotonicRoot"], 0);
  EXPECT_EQ(lgp_graph_check(slurp("not_bipartite.json").c_str(), &text), LGP_NOT_BIPARTITE);
}

TEST(CApi, Arithmetic) {
  int sym = 0;
  ASSERT_EQ(lgp_hilbert_symbol(-1, -1, "2", &sym), LGP_OK);
  EXPECT_EQ(sym, -1);
  ASSERT_EQ(lgp_hilbert_symbol(-1, -1, "inf", &sym), LGP_OK);
  EXPECT_EQ(sym, -1);
  EXPECT_EQ(lgp_hilbert_symbol(-1, -1, "4", &sym), LGP_INVALID_ARGUMENT);
  int split = 1;
  ASSERT_EQ(lgp_quaternion_is_split(-1, -1, &split), LGP_OK);
  EXPECT_EQ(split, 0);
  std::int64_t d = 0;
  ASSERT_EQ(lgp_d_kappa(nullptr, 0, -1, 2, &d), LGP_OK);
  EXPECT_EQ(d, 1);
  const std::int64_t kappa[] = {17};
  ASSERT_EQ(lgp_d_kappa(kappa, 1, -1, 2, &d), LGP_OK);
  EXPECT_EQ(d, 2);
  EXPECT_EQ(lgp_d_kappa(nullptr, 0, 2, 8, &d), LGP_DEGENERATE_EXTENSION);
}

TEST(CApi, Tate) {
  char* text = nullptr;
  ASSERT_EQ(lgp_tate(slurp("z4_negation.json").c_str(), 1000000, &text), LGP_OK);
  const auto j = take(text);
  EXPECT_EQ(j["invariantFactors"], nlohmann::json({2}));
  EXPECT_EQ(j["moduleOrder"], 4);
  ASSERT_EQ(lgp_tate(slurp("v4_regular.json").c_str(), 1000000, &text), LGP_OK);
  EXPECT_TRUE(take(text)["invariantFactors"].empty());
  EXPECT_EQ(lgp_tate(R"({"module": {"orders": [4], "sigma": [[2]]}})", 1000000, &text), LGP_INVALID_MODULE);
}

TEST(CApi, SelftestReportsCorruptCorpus) {
  const std::string path = std::string(LGP_TEST_DATA) + "/corrupt_groups.json";
  lgp_selftest_options opts{};
  opts.seed = 1;
  opts.group_corpus = path.c_str();
  char* text = nullptr;
  EXPECT_EQ(lgp_selftest(&opts, &text), LGP_MISMATCH);
  ASSERT_NE(text, nullptr);
  const auto j = take(text);
  EXPECT_EQ(j["passed"], false);
  EXPECT_NE(std::string(lgp_last_error()).find("NotAssociative"), std::string::npos);
}
