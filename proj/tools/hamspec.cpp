// hamspec: certify graphs for Hamiltonicity and replay the spectral
// extremal checks. Exit codes: 0 all checks pass, 1 a check failed,
// 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hamspec/certifier.hpp"
#include "hamspec/families.hpp"
#include "hamspec/graph6.hpp"
#include "hamspec/harness.hpp"

namespace {

using namespace hamspec;
using harness::Range;

// "3" or "1:4"
Range parse_range(const std::string& s) {
  const auto colon = s.find(':');
  try {
    if (colon == std::string::npos) {
      const auto v = static_cast<std::size_t>(std::stoul(s));
      return {v, v};
    }
    return {static_cast<std::size_t>(std::stoul(s.substr(0, colon))),
            static_cast<std::size_t>(std::stoul(s.substr(colon + 1)))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--k", "expected K or KMIN:KMAX, got '" + s + "'");
  }
}

int emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open " << out << " for writing\n";
    return 2;
  }
  f << text;
  return f ? 0 : 2;
}

int finish(const harness::Report& rep, const std::string& out, bool verbose) {
  std::cout << harness::to_text(rep, !verbose);
  if (!out.empty())
    if (int rc = emit(harness::to_csv(rep), out)) return rc;
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral Hamiltonicity certifier and verification harness"};
  app.require_subcommand(1);

  std::string k_spec = "1:2";
  std::size_t n_min = 0, n_max = 16;
  std::uint64_t seed = 42;
  std::size_t samples = 1000;
  double tol = 1e-9;
  bool bipartite = false, all = false, force = false, verbose = false;
  std::string out, input;
  std::uint64_t budget = default_ham_budget;

  auto* certify_cmd = app.add_subcommand("certify", "certify graph6 records, one per line");
  certify_cmd->add_option("input", input, "graph6 file (default: standard input)");
  certify_cmd->add_flag("--bipartite", bipartite, "first n vertices form side A of a balanced bipartite graph");
  certify_cmd->add_option("--budget", budget, "exact-search work budget");
  certify_cmd->add_option("--out", out, "write records to this file");

  auto* prop = app.add_subcommand("verify-deletions", "single-edge deletions of N and L stay below n-k-1");
  prop->add_option("--k", k_spec, "K or KMIN:KMAX");
  prop->add_option("--n-min", n_min);
  prop->add_option("--n-max", n_max);
  prop->add_flag("--all", all, "check every edge, not one per class pair");
  prop->add_flag("--force", force, "also run orders below the threshold");
  prop->add_option("--tol", tol);
  prop->add_option("--out", out, "CSV report path");
  prop->add_flag("--verbose", verbose, "print every row");

  std::size_t sharp_k = 2;
  auto* sharp = app.add_subcommand("verify-sharpness", "the order threshold is best possible (even k)");
  sharp->add_option("--k", sharp_k)->required();
  sharp->add_option("--out", out, "CSV report path");

  auto* proofs = app.add_subcommand("verify-proofs", "numerical replay of the proof inequalities");
  proofs->add_option("--k", k_spec, "K or KMIN:KMAX");
  proofs->add_option("--n-min", n_min);
  proofs->add_option("--n-max", n_max);
  proofs->add_option("--out", out, "CSV report path");
  proofs->add_flag("--verbose", verbose, "print every row");

  auto* sweep_cmd = app.add_subcommand("sweep", "CSV grid of family spectral radii and thresholds");
  sweep_cmd->add_option("--k", k_spec, "K or KMIN:KMAX");
  sweep_cmd->add_option("--n-min", n_min);
  sweep_cmd->add_option("--n-max", n_max);
  sweep_cmd->add_option("--out", out, "CSV path (default: standard output)");

  std::size_t bip_samples = 500, bip_n_max = 10, rnd_n_max = 12;
  auto* rnd = app.add_subcommand("random-suite", "seeded falsification search");
  rnd->add_option("--k", k_spec, "K or KMIN:KMAX");
  rnd->add_option("--n-min", n_min);
  rnd->add_option("--n-max", rnd_n_max);
  rnd->add_option("--seed", seed);
  rnd->add_option("--samples", samples, "general samples");
  rnd->add_option("--bipartite-samples", bip_samples);
  rnd->add_option("--bipartite-n-max", bip_n_max, "largest side size");
  rnd->add_option("--tol", tol);
  rnd->add_option("--budget", budget);
  rnd->add_option("--out", out, "CSV report path");
  rnd->add_flag("--verbose", verbose, "print every row");

  std::string family = "N";
  std::size_t fam_n = 10, fam_k = 2;
  auto* enc = app.add_subcommand("encode", "graph6 of a named graph");
  enc->add_option("--family", family, "L, N, B, K (complete) or C (cycle)")->required();
  enc->add_option("--n", fam_n)->required();
  enc->add_option("--k", fam_k);

  auto* dec = app.add_subcommand("decode", "print order, size and edges of graph6 records");
  dec->add_option("input", input, "graph6 file (default: standard input)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*certify_cmd || *dec) {
      std::ifstream file;
      if (!input.empty() && input != "-") {
        file.open(input);
        if (!file) {
          std::cerr << "cannot open " << input << "\n";
          return 2;
        }
      }
      std::istream& in = (input.empty() || input == "-") ? std::cin : file;

      if (*dec) {
        std::string line;
        std::size_t lineno = 0;
        int rc = 0;
        while (std::getline(in, line)) {
          ++lineno;
          if (!line.empty() && line.back() == '\r') line.pop_back();
          if (line.empty()) continue;
          try {
            const Graph g = decode_graph6(line);
            std::cout << "n=" << g.order() << " e=" << g.edge_count() << " edges=";
            bool first = true;
            for (auto [u, v] : g.edges()) {
              std::cout << (first ? "" : ",") << u << "-" << v;
              first = false;
            }
            std::cout << "\n";
          } catch (const graph6_error& e) {
            std::cerr << "error line " << lineno << ": " << e.what() << "\n";
            rc = 2;
          }
        }
        return rc;
      }

      CertifyOptions opt;
      opt.budget = budget;
      const auto run = harness::certify_stream(in, bipartite, opt);
      std::ostringstream text;
      for (const auto& l : run.lines) text << l << "\n";
      if (int rc = emit(text.str(), out)) return rc;
      for (const auto& l : run.lines)
        if (l.rfind("error", 0) == 0) std::cerr << l << "\n";
      return run.exit_code();
    }

    if (*prop) {
      const Range ks = parse_range(k_spec);
      return finish(harness::verify_deletions(ks, {n_min, n_max}, all, force, tol), out, verbose);
    }
    if (*sharp) return finish(harness::verify_sharpness(sharp_k), out, true);
    if (*proofs) return finish(harness::verify_proofs(parse_range(k_spec), {n_min, n_max}), out, verbose);
    if (*sweep_cmd) return emit(harness::sweep(parse_range(k_spec), {n_min, n_max}), out);
    if (*rnd) {
      harness::ExperimentConfig cfg;
      cfg.ks = parse_range(k_spec);
      cfg.ns = {n_min ? n_min : 4, rnd_n_max};
      cfg.seed = seed;
      cfg.samples = samples;
      cfg.bipartite_samples = bip_samples;
      cfg.bipartite_ns = {3, bip_n_max};
      cfg.tol = tol;
      cfg.budget = budget;
      return finish(harness::random_suite(cfg), out, verbose);
    }
    if (*enc) {
      Graph g;
      if (family == "K") {
        g = make_complete(fam_n);
      } else if (family == "C") {
        g = make_cycle(fam_n);
      } else if (auto f = family_from_string(family)) {
        g = family_graph({*f, fam_n, fam_k}).graph;
      } else {
        std::cerr << "unknown family '" << family << "'\n";
        return 2;
      }
      std::cout << encode_graph6(g) << "\n";
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
