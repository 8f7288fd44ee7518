#include <gtest/gtest.h>

#include <limits>

#include "hwgraph/json_io.hpp"
#include "hwgraph/weyl.hpp"
#include "support.hpp"

using namespace hwg;

TEST(Json, MatrixRoundTripIsExact) {
  const Matrix m = test::random_matrix(5, 17);
  const Json j = Json::parse(dump(to_json(m)));
  EXPECT_EQ(matrix_from_json(j), m);
  EXPECT_EQ(j.at("dim"), 5);
  EXPECT_EQ(j.at("entries").size(), 25u);
}

TEST(Json, VectorShape) {
  const Vector v{{1.0, 0.0}, {0.0, -0.5}};
  const Json j = to_json(v);
  EXPECT_EQ(dump(j, -1), R"({"rows":2,"cols":1,"entries":[[1, 0],[0, -0.5]]})");
  EXPECT_EQ(vector_from_json(j), v);
}

TEST(Json, SeventeenDigits) {
  Json j = Json::array({0.1, 1.0 / 3.0});
  EXPECT_EQ(dump(j), "[0.10000000000000001, 0.33333333333333331]");
}

TEST(Json, NonFiniteBecomesNull) {
  Json j;
  j["a"] = std::numeric_limits<double>::quiet_NaN();
  j["b"] = std::numeric_limits<double>::infinity();
  EXPECT_EQ(dump(j, -1), R"({"a":null,"b":null})");
}

TEST(Json, MalformedInputRejected) {
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"dim":2,"entries":[[1,0]]})")), std::invalid_argument);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"entries":[]})")), std::invalid_argument);
  EXPECT_THROW(vector_from_json(Json::parse(R"({"rows":1,"cols":2,"entries":[[1,0]]})")), std::invalid_argument);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"dim":1,"entries":[[1,"x"]]})")), std::invalid_argument);
}

TEST(Json, ReportSchema) {
  const auto report = build_report(2, 1e-10);
  const Json j = to_json(report);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"n", "tol", "checks", "graph", "discrepancies", "timing_ms"}));
  ASSERT_EQ(j["checks"].size(), check_ids().size());
  for (std::size_t i = 0; i < check_ids().size(); ++i) {
    EXPECT_EQ(j["checks"][i]["id"], check_ids()[i]);
    EXPECT_TRUE(j["checks"][i]["pass"].get<bool>());
  }
  EXPECT_EQ(j["graph"]["dim_orbit"], 2);
  EXPECT_EQ(j["timing_ms"], 0);
  EXPECT_TRUE(report.all_pass());
}

TEST(Json, AnticliqueReportSchema) {
  AnticliqueReport r;
  r.n = 2;
  r.k = 0;
  r.s = 1;
  r.is_anticlique = true;
  r.rank = 2;
  r.lambda.push_back({{1, 0, 0}, Complex(0.5, 0.0), 0.0});
  EXPECT_EQ(dump(to_json(r), -1),
            R"({"n":2,"k":0,"s":1,"is_anticlique":true,"rank":2,"max_residual":0,)"
            R"("lambda":[{"p":1,"q":0,"lambda":[0.5, 0],"residual":0}]})");
}
