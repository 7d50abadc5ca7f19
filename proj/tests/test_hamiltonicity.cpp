#include <gtest/gtest.h>

#include "hamspec/families.hpp"
#include "hamspec/hamiltonicity.hpp"
#include "hamspec/random.hpp"
#include "oracles.hpp"

using namespace hamspec;

namespace {

void expect_valid(const Graph& g, const HamResult& r) {
  if (r.witness.kind == HamWitness::Kind::cycle) {
    EXPECT_TRUE(verify_cycle(g, r.witness.cycle));
  }
  if (r.witness.kind == HamWitness::Kind::cut) {
    const std::size_t c = oracle::components(g, r.witness.cut);
    EXPECT_EQ(c, r.witness.components);
    EXPECT_GT(c, std::max<std::size_t>(r.witness.cut.size(), 1));
  }
}

}  // namespace

TEST(Hamiltonicity, SmallNamedGraphs) {
  EXPECT_TRUE(is_hamiltonian(make_cycle(3)).hamiltonian());
  EXPECT_TRUE(is_hamiltonian(make_complete(12)).hamiltonian());
  EXPECT_FALSE(is_hamiltonian(make_path(6)).hamiltonian());
  EXPECT_FALSE(is_hamiltonian(make_star(5)).hamiltonian());
  EXPECT_THROW(is_hamiltonian(make_complete(2)), std::invalid_argument);
  const std::vector<std::pair<Vertex, Vertex>> petersen = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                                           {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}};
  const auto r = is_hamiltonian(Graph::from_edges(10, petersen));
  EXPECT_EQ(r.outcome, HamOutcome::non_hamiltonian);
  EXPECT_EQ(r.witness.kind, HamWitness::Kind::exhausted);  // 3-connected and 1-tough: no small cut
}

TEST(Hamiltonicity, DisconnectedGraphHasEmptyCut) {
  const Graph g = disjoint_union(make_complete(4), make_complete(4));
  const auto r = is_hamiltonian(g);
  EXPECT_FALSE(r.hamiltonian());
  EXPECT_EQ(r.witness.kind, HamWitness::Kind::cut);
  EXPECT_TRUE(r.witness.cut.empty());
  EXPECT_EQ(r.witness.components, 2u);
}

TEST(Hamiltonicity, NoCutReportedForConnectedHamiltonianGraphs) {
  for (std::size_t n = 3; n <= 12; ++n) {
    EXPECT_FALSE(find_cut_witness(make_cycle(n), 3).has_value());
    EXPECT_FALSE(find_cut_witness(make_complete(n), 3).has_value());
  }
}

TEST(Hamiltonicity, MethodsAgreeWithPermutationOracle) {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 3 + i % 7;  // up to 9
    const Graph g = random_graph_min_degree(rng, n, 2, 0.2 + 0.002 * i);
    const bool truth = oracle::hamiltonian(g);
    for (HamMethod m : {HamMethod::dp, HamMethod::backtrack})
      for (bool cut_first : {true, false}) {
        const auto r = is_hamiltonian(g, default_ham_budget, m, cut_first);
        ASSERT_EQ(r.hamiltonian(), truth) << "sample " << i;
        expect_valid(g, r);
      }
  }
}

TEST(Hamiltonicity, DpAndBacktrackAgreeAtMediumOrder) {
  Rng rng(37);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 12 + i % 9;
    const Graph g = random_graph_min_degree(rng, n, 2, 0.15);
    const auto a = is_hamiltonian(g, default_ham_budget, HamMethod::dp, false);
    const auto b = is_hamiltonian(g, default_ham_budget, HamMethod::backtrack, false);
    EXPECT_EQ(a.outcome, b.outcome);
    expect_valid(g, a);
    expect_valid(g, b);
  }
}

TEST(Hamiltonicity, BacktrackingBeyondDpLimit) {
  EXPECT_TRUE(is_hamiltonian(make_cycle(40)).hamiltonian());
  const auto r = is_hamiltonian(make_N(40, 3));
  EXPECT_FALSE(r.hamiltonian());
  EXPECT_EQ(r.witness.kind, HamWitness::Kind::cut);
  EXPECT_THROW(is_hamiltonian(make_cycle(65), default_ham_budget, HamMethod::backtrack), std::invalid_argument);
}

TEST(Hamiltonicity, BudgetExhaustionIsUnknown) {
  const auto r = is_hamiltonian(make_complete(20), 5, HamMethod::dp, false);
  EXPECT_EQ(r.outcome, HamOutcome::unknown);
}

TEST(Hamiltonicity, FamilyCutWitnesses) {
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t n = 2 * k + 1; n <= 18; ++n) {
      const auto rn = is_hamiltonian(make_N(n, k));
      ASSERT_EQ(rn.witness.kind, HamWitness::Kind::cut);
      EXPECT_LE(rn.witness.cut.size(), k);
      expect_valid(make_N(n, k), rn);
      const auto rl = is_hamiltonian(make_L(n, k));
      ASSERT_EQ(rl.witness.kind, HamWitness::Kind::cut);
      EXPECT_EQ(rl.witness.cut.size(), 1u);
      const auto rb = is_hamiltonian_bipartite(make_B(n, k));
      ASSERT_EQ(rb.witness.kind, HamWitness::Kind::cut);
      EXPECT_LE(rb.witness.cut.size(), k);
      expect_valid(make_B(n, k).core(), rb);
    }
}

TEST(Hamiltonicity, BipartiteSearch) {
  for (std::size_t n = 2; n <= 12; ++n) EXPECT_TRUE(is_hamiltonian_bipartite(make_complete_bipartite(n)).hamiltonian());
  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + i % 4;  // 2n up to 10
    const auto bg = random_bipartite_min_degree(rng, n, 1, 0.4);
    for (bool cut_first : {true, false}) {
      const auto r = is_hamiltonian_bipartite(bg, default_ham_budget, HamMethod::automatic, cut_first);
      EXPECT_EQ(r.hamiltonian(), oracle::hamiltonian(bg.core()));
      expect_valid(bg.core(), r);
    }
  }
}
