#include <gtest/gtest.h>

#include <sstream>

#include "hamspec/harness.hpp"

using namespace hamspec;
using namespace hamspec::harness;

TEST(Harness, Relations) {
  EXPECT_TRUE(holds(1.0, "<", 2.0, 0.5));
  EXPECT_FALSE(holds(1.9, "<", 2.0, 0.5));
  EXPECT_TRUE(holds(2.4, "<=", 2.0, 0.5));
  EXPECT_TRUE(holds(2.0, "==", 2.0, 0.0));
  EXPECT_FALSE(holds(std::nan(""), ">=", 0.0, 1.0));
  EXPECT_THROW(holds(1, "~", 1, 0), std::invalid_argument);
}

TEST(Harness, CsvShape) {
  Report r;
  r.check("x", 5, 1, "q", 1.0, "<", 2.0, 0.0, "note");
  r.exclude("x", 4, 1, "q", "small");
  const std::string csv = to_csv(r);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "experiment,n,k,quantity,value,relation,bound,tol,status,note");
  std::getline(in, line);
  EXPECT_EQ(line, "x,5,1,q,1,<,2,0,pass,note");
  std::getline(in, line);
  EXPECT_NE(line.find("regime-excluded"), std::string::npos);
  EXPECT_TRUE(r.ok());
}

TEST(Harness, SingleDeletionsStayBelow) {
  const auto rep = verify_deletions({1, 2}, {0, 14}, true);
  EXPECT_TRUE(rep.ok()) << to_text(rep, true);
  EXPECT_GT(rep.count(Status::pass), 100u);
}

TEST(Harness, BelowThresholdIsFlagged) {
  // n=8, k=2 is below the order threshold; forcing it exposes g(8) < 0.
  const auto rep = verify_deletions({2, 2}, {8, 8}, false, true);
  EXPECT_FALSE(rep.ok());
}

TEST(Harness, Sharpness) {
  const auto rep = verify_sharpness(2);
  EXPECT_TRUE(rep.ok()) << to_text(rep);
  EXPECT_EQ(rep.rows.size(), 3u);
  EXPECT_THROW(verify_sharpness(3), std::invalid_argument);
}

TEST(Harness, ProofReplay) {
  const auto rep = verify_proofs({1, 2}, {3, 30});
  EXPECT_TRUE(rep.ok()) << to_text(rep, true);
  EXPECT_GT(rep.count(Status::excluded), 0u);
}

TEST(Harness, SweepGrid) {
  const std::string csv = sweep({1, 1}, {3, 5});
  std::istringstream in(csv);
  std::string line;
  std::size_t rows = 0;
  std::getline(in, line);
  EXPECT_EQ(line,
            "n,k,lambda_N,lambda_L,lambda_B,n_minus_k_minus_1,sqrt_n_n_minus_k,edge_threshold_general,"
            "edge_threshold_bipartite");
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 3u);
}

TEST(Harness, SmallRandomSuiteIsReproducible) {
  ExperimentConfig cfg;
  cfg.samples = 40;
  cfg.bipartite_samples = 20;
  const auto a = random_suite(cfg), b = random_suite(cfg);
  EXPECT_TRUE(a.ok()) << to_text(a, true);
  EXPECT_EQ(to_csv(a), to_csv(b));
}
