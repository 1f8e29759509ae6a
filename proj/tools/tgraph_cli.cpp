// tgraph: command-line front end for random threshold graph experiments.
//
// Exit codes: 0 success, 1 usage or validation error, 2 domain error
// (NotThreshold, verification mismatch).

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tgraph/creation_sequence.hpp"
#include "tgraph/distributions.hpp"
#include "tgraph/error.hpp"
#include "tgraph/experiment.hpp"
#include "tgraph/invariants.hpp"
#include "tgraph/io.hpp"
#include "tgraph/threshold_graph.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;

using Clock = std::chrono::steady_clock;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool ci_deterministic() {
  const char* v = std::getenv("CI_DETERMINISTIC");
  return v != nullptr && std::string(v) == "1";
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  if (ci_deterministic()) throw UsageError("--seed is required when CI_DETERMINISTIC=1");
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

long long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

struct GenArgs {
  std::size_t n = 0;
  std::size_t count = 1;
  std::optional<std::uint64_t> seed;
  std::string model = "weights";
};

int run_gen(const GenArgs& a) {
  if (a.n < 1) throw UsageError("--n must be at least 1");
  if (a.count < 1) throw UsageError("--count must be at least 1");
  const auto sampler =
      tgraph::sampler_for(a.model == "uniform" ? tgraph::SamplingModel::Uniform
                                               : tgraph::SamplingModel::Weights);
  for (const auto& s : tgraph::sample_sequences(a.n, a.count, resolve_seed(a.seed), sampler)) {
    std::cout << s.to_string() << '\n';
  }
  return kExitOk;
}

struct InvariantsArgs {
  std::string seq;
  std::vector<std::size_t> ks;
  std::string format = "json";
};

int run_invariants(const InvariantsArgs& a) {
  const auto s = tgraph::parse_sequence(a.seq);
  const auto report = tgraph::make_report(s, a.ks);
  if (a.format == "csv") {
    tgraph::write_report_csv(std::cout, report);
  } else {
    std::cout << tgraph::to_json(report).dump(2) << '\n';
  }
  return kExitOk;
}

struct DistArgs {
  std::size_t n = 0;
  std::string invariant;
  std::optional<std::size_t> k;
  std::string format = "json";
};

int run_dist(const DistArgs& a) {
  const auto start = Clock::now();
  if (a.invariant == "kcore" && !a.k) throw UsageError("--invariant kcore needs --k");
  const auto selector = tgraph::InvariantSelector::parse(a.invariant, a.k.value_or(0));
  const auto d = tgraph::closed_form_distribution(a.n, selector);
  const std::optional<std::size_t> k =
      selector.kind == tgraph::InvariantKind::KCore ? a.k : std::nullopt;
  if (a.format == "csv") {
    tgraph::write_distribution_csv(std::cout, d, k);
  } else {
    auto j = tgraph::distribution_report(d, k);
    j["invariant"] = selector.name();
    j["elapsed_ms"] = elapsed_ms(start);
    std::cout << j.dump(2) << '\n';
  }
  return kExitOk;
}

struct VerifyArgs {
  std::size_t n_max = 8;
  std::size_t k_max = 3;
  unsigned workers = 0;
};

int run_verify(const VerifyArgs& a) {
  const auto start = Clock::now();
  if (a.n_max < 1 || a.n_max > tgraph::kVerifyEnumerationCap) {
    throw UsageError("--n-max must be in 1.." + std::to_string(tgraph::kVerifyEnumerationCap));
  }
  tgraph::VerifyOptions options;
  options.n_max = a.n_max;
  options.k_max = a.k_max;
  options.workers = a.workers;
  const auto report = tgraph::verify(options);
  auto j = tgraph::verify_report(report, a.n_max, a.k_max);
  j["elapsed_ms"] = elapsed_ms(start);
  std::cout << j.dump(2) << '\n';
  if (!report.passed) {
    for (const auto& c : report.checks) {
      if (c.passed) continue;
      std::cerr << "MISMATCH " << c.name << " n=" << c.n;
      if (c.k) std::cerr << " k=" << *c.k;
      if (c.witness) std::cerr << " witness=\"" << *c.witness << '"';
      std::cerr << ": " << c.detail << '\n';
    }
    return kExitDomain;
  }
  return kExitOk;
}

struct UniformityArgs {
  std::size_t n = 0;
  std::uint64_t samples = 0;
  std::optional<std::uint64_t> seed;
  double alpha = tgraph::kDefaultAlpha;
  unsigned workers = 0;
};

int run_uniformity(const UniformityArgs& a) {
  const auto start = Clock::now();
  const auto seed = resolve_seed(a.seed);
  const auto result = tgraph::uniformity_test(a.n, a.samples, seed, a.alpha,
                                              tgraph::weights_sampler(), a.workers);
  auto j = tgraph::uniformity_report(result, seed);
  j["elapsed_ms"] = elapsed_ms(start);
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

int run_recognize(const std::string& path) {
  const auto g = tgraph::read_edge_list_file(path);
  std::cout << tgraph::recognize(g).to_string() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Threshold graphs from creation sequences: invariants, exact distributions, "
               "verification and sampling"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Sample random creation sequences");
  gen_cmd->add_option("--n", gen.n, "Number of vertices")->required();
  gen_cmd->add_option("--count", gen.count, "Number of sequences");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--model", gen.model, "Random model")
      ->check(CLI::IsMember({"weights", "uniform"}));

  InvariantsArgs inv;
  auto* inv_cmd = app.add_subcommand("invariants", "Closed-form invariants of one sequence");
  inv_cmd->add_option("--seq", inv.seq, "Creation sequence over {0,1}")->required();
  inv_cmd->add_option("--k", inv.ks, "k values for k-core sizes");
  inv_cmd->add_option("--format", inv.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  DistArgs dist;
  auto* dist_cmd = app.add_subcommand("dist", "Exact distribution of an invariant");
  dist_cmd->add_option("--n", dist.n, "Number of vertices")->required();
  dist_cmd->add_option("--invariant", dist.invariant, "Invariant")
      ->required()
      ->check(CLI::IsMember({"h", "matching", "nu", "cycle", "psi", "degeneracy", "kcore",
                             "planar", "hamiltonian", "clique"}));
  dist_cmd->add_option("--k", dist.k, "k for the k-core size distribution");
  dist_cmd->add_option("--format", dist.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Closed forms vs enumeration vs oracles");
  verify_cmd->add_option("--n-max", ver.n_max, "Largest order to check (<= 12)");
  verify_cmd->add_option("--k-max", ver.k_max, "Largest k for k-core checks");
  verify_cmd->add_option("--workers", ver.workers, "Worker threads (0 = all cores)");

  UniformityArgs uni;
  auto* uni_cmd = app.add_subcommand("uniformity", "Chi-square test of the weights model");
  uni_cmd->add_option("--n", uni.n, "Number of vertices (2..9)")->required();
  uni_cmd->add_option("--samples", uni.samples, "Number of samples")->required();
  uni_cmd->add_option("--seed", uni.seed, "Random seed");
  uni_cmd->add_option("--alpha", uni.alpha, "Significance level");
  uni_cmd->add_option("--workers", uni.workers, "Worker threads (0 = all cores)");

  std::string edge_file;
  auto* rec_cmd = app.add_subcommand("recognize", "Creation sequence of an edge-list graph");
  rec_cmd->add_option("path", edge_file, "Edge-list file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*inv_cmd) return run_invariants(inv);
    if (*dist_cmd) return run_dist(dist);
    if (*verify_cmd) return run_verify(ver);
    if (*uni_cmd) return run_uniformity(uni);
    if (*rec_cmd) return run_recognize(edge_file);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const tgraph::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == tgraph::ErrorCode::NotThreshold ? kExitDomain : kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
