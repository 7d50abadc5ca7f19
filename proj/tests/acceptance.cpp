// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>

#include "hamspec/certifier.hpp"
#include "hamspec/graph6.hpp"
#include "hamspec/harness.hpp"
#include "hamspec/random.hpp"
#include "oracles.hpp"

using namespace hamspec;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0 && secs > budget_s) {
    o.require(false, "took " + std::to_string(secs) + " s");
  }
  std::printf("%s %d %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, name, secs, o.ok ? "" : ": ",
              o.detail.c_str());
  std::fflush(stdout);
  if (!o.ok) ++failures;
}

std::string first_failure(const harness::Report& r) {
  for (const auto& row : r.rows)
    if (row.status == harness::Status::fail)
      return row.experiment + " n=" + std::to_string(row.n) + " k=" + std::to_string(row.k) + " " + row.quantity +
             " " + row.note;
  return {};
}

}  // namespace

int main() {
  criterion(1, "quotient and dense spectral radius agree", 60, [] {
    Outcome o;
    for (std::size_t k = 1; k <= 3; ++k)
      for (std::size_t n = std::max<std::size_t>(2 * k + 1, 4); n <= 30; ++n)
        for (Family f : {Family::L, Family::N, Family::B})
          for (DeletedEdge d : {DeletedEdge::none, DeletedEdge::ZZ, DeletedEdge::XY, DeletedEdge::YZ}) {
            if (!allowed(f, d)) continue;
            FamilyGraph fg;
            try {
              fg = family_graph({f, n, k}, d);
            } catch (const std::invalid_argument&) {
              continue;  // no edge of that class at this order
            }
            const double q = quotient_lambda(quotient_of_family({f, n, k}, d));
            const double dense = spectral_dense(fg.graph).lambda1;
            o.require(std::abs(q - dense) <= 1e-8, std::string(to_string(f)) + " n=" + std::to_string(n) +
                                                       " k=" + std::to_string(k) + " " + to_string(d));
          }
    return o;
  });

  criterion(2, "exact polynomial identities and edge counts", 0, [] {
    Outcome o;
    for (std::int64_t k = 1; k <= 6; ++k) {
      for (std::int64_t n = k + 2; n <= 100; ++n) {
        const std::int64_t g = 2 * n * n - (k * k * k + 4 * k + 2) * n + k * k * k * k - k * k * k + 2 * k;
        o.require(eval_f(n, k, n - k - 1) == g && oracle::f_at(n, k, n - k - 1) == g, "f(n-k-1) at n=" + std::to_string(n));
        o.require(eval_g(k, n) == g, "g(n)");
        const std::int64_t low = -(n - k - 2) * (n - k - 2) * (n - k - 1) - k * k * (k - 1) * (n - k) - 2 * k * k;
        o.require(eval_f(n, k, n - k - 2) == low && oracle::f_at(n, k, n - k - 2) == low, "f(n-k-2)");
        const auto nu = static_cast<std::size_t>(n), ku = static_cast<std::size_t>(k);
        if (nu >= 2 * ku + 1) {
          o.require(make_N(nu, ku).edge_count() == oracle::N(nu, ku).size() &&
                        family_edge_count({Family::N, nu, ku}) == oracle::N(nu, ku).size(),
                    "e(N)");
          o.require(make_L(nu, ku).edge_count() == oracle::L(nu, ku).size() &&
                        family_edge_count({Family::L, nu, ku}) == oracle::L(nu, ku).size(),
                    "e(L)");
          o.require(make_B(nu, ku).edge_count() == oracle::B(nu, ku).size() &&
                        family_edge_count({Family::B, nu, ku}) == oracle::B(nu, ku).size(),
                    "e(B)");
        }
      }
      if (k % 2 == 0) o.require(eval_g(k, k * k * k / 2 + k + 2) == 4 - 2 * k * k, "g at the sharp order");
    }
    return o;
  });

  criterion(3, "single-edge deletions of N and L stay below n-k-1", 120, [] {
    Outcome o;
    const auto rep = harness::verify_deletions({1, 2}, {0, 16}, true);
    o.require(rep.ok(), first_failure(rep));
    o.require(rep.count(harness::Status::pass) > 0, "no rows");
    return o;
  });

  criterion(4, "order threshold is sharp at k=2, n=8", 0, [] {
    Outcome o;
    o.require(eval_g(std::int64_t{2}, std::int64_t{8}) == -4, "g(8) != -4");
    const double lam = quotient_lambda(quotient_of_family({Family::N, 8, 2}, DeletedEdge::ZZ));
    o.require(lam > 5.0 + 1e-6, "lambda(N(8,2) - ZZ) = " + harness::fmt12(lam));
    const double dense = spectral_dense(family_graph({Family::N, 8, 2}, DeletedEdge::ZZ).graph).lambda1;
    o.require(std::abs(dense - lam) < 1e-9, "dense disagrees");
    return o;
  });

  criterion(5, "random falsification suite", 300, [] {
    Outcome o;
    harness::ExperimentConfig cfg;  // 1000 general (n <= 12, k in {1,2}), 500 bipartite (2n <= 20, k = 1)
    const auto rep = harness::random_suite(cfg);
    o.require(rep.ok(), first_failure(rep));
    std::size_t cert = 0;
    for (const auto& row : rep.rows) cert += row.quantity == "certificate-resolved";
    o.require(cert == cfg.samples + cfg.bipartite_samples, "missing certificate rows");
    return o;
  });

  criterion(6, "extremal families are never certified Hamiltonian", 0, [] {
    Outcome o;
    for (std::size_t k = 1; 2 * k + 1 <= 20; ++k)
      for (std::size_t n = std::max<std::size_t>(2 * k + 1, 3); n <= 20; ++n) {
        const std::string at = " n=" + std::to_string(n) + " k=" + std::to_string(k);
        for (Family f : {Family::N, Family::L}) {
          const Graph g = family_graph({f, n, k}).graph;
          o.require(certify(g).verdict != Verdict::HamiltonianByTheorem, std::string("certify ") + to_string(f) + at);
          const auto r = is_hamiltonian(g);
          const bool cut = r.outcome == HamOutcome::non_hamiltonian && r.witness.kind == HamWitness::Kind::cut &&
                           oracle::components(g, r.witness.cut) > r.witness.cut.size();
          o.require(cut && (f == Family::L ? r.witness.cut.size() == 1 : r.witness.cut.size() <= k),
                    std::string("witness ") + to_string(f) + at);
        }
        const BipartiteGraph b = make_B(n, k);
        o.require(certify_bipartite(b).verdict != Verdict::HamiltonianByTheorem, "certify B" + at);
        const auto r = is_hamiltonian_bipartite(b);
        o.require(r.outcome == HamOutcome::non_hamiltonian && r.witness.kind == HamWitness::Kind::cut &&
                      r.witness.cut.size() <= k && oracle::components(b.core(), r.witness.cut) > r.witness.cut.size(),
                  "witness B" + at);
      }
    return o;
  });

  criterion(7, "bipartite backbone at k=1", 0, [] {
    Outcome o;
    const auto rep = harness::bipartite_backbone({7, 10}, 200, 7);
    o.require(rep.ok(), first_failure(rep));
    const auto proofs = harness::verify_proofs({1, 1}, {7, 40});
    for (const auto& row : proofs.rows)
      if (row.experiment == "proofs-B") o.require(row.status == harness::Status::pass, row.quantity + " n=" + std::to_string(row.n));
    return o;
  });

  criterion(8, "graph6 and family recognition round trips", 0, [] {
    Outcome o;
    for (std::size_t k = 1; 2 * k + 1 <= 30; ++k)
      for (std::size_t n = 2 * k + 1; n <= 30; ++n) {
        const std::string at = " n=" + std::to_string(n) + " k=" + std::to_string(k);
        for (Family f : {Family::N, Family::L, Family::B}) {
          const Graph g = family_graph({f, n, k}).graph;
          if (g.order() <= 30) o.require(decode_graph6(encode_graph6(g)) == g, std::string("graph6 ") + to_string(f) + at);
        }
        auto contains = [](const std::vector<FamilyParams>& v, const FamilyParams& p) {
          return std::find(v.begin(), v.end(), p) != v.end();
        };
        o.require(contains(recognize_family(make_N(n, k)), {Family::N, n, k}), "recognize N" + at);
        o.require(contains(recognize_family(make_L(n, k)), {Family::L, n, k}), "recognize L" + at);
        o.require(contains(recognize_family(make_B(n, k)), {Family::B, n, k}), "recognize B" + at);
      }
    Rng rng(8);
    for (int i = 0; i < 1000; ++i) {
      const Graph g = random_graph_min_degree(rng, 1 + i % 70, 0, 0.05 + 0.0009 * i);
      o.require(decode_graph6(encode_graph6(g)) == g, "graph6 random " + std::to_string(i));
    }
    return o;
  });

  return failures == 0 ? 0 : 1;
}
