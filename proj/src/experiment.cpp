#include "tgraph/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>

#include "tgraph/error.hpp"
#include "tgraph/invariants.hpp"
#include "tgraph/oracles.hpp"
#include "tgraph/stats.hpp"
#include "tgraph/threshold_graph.hpp"

namespace tgraph {

namespace {

using Tally = std::map<std::size_t, std::uint64_t>;

void require_order(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::OrderTooSmall, "order must be at least 1");
}

unsigned effective_workers(unsigned workers, std::uint64_t jobs) {
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, jobs)));
}

// Runs body(worker) on `workers` threads (inline when there is only one).
template <typename Body>
void run_workers(unsigned workers, Body&& body) {
  if (workers == 1) {
    body(0U);
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) threads.emplace_back([&body, w] { body(w); });
}

// Samples chunks w, w + workers, ... and hands each sequence to sink[w].
template <typename Sink>
void sample_chunked(std::size_t n, std::uint64_t samples, std::uint64_t seed,
                    const SequenceSampler& sampler, unsigned workers, std::vector<Sink>& sinks) {
  const std::uint64_t chunks = (samples + kSampleChunk - 1) / kSampleChunk;
  run_workers(workers, [&](unsigned w) {
    for (std::uint64_t c = w; c < chunks; c += workers) {
      Rng rng = make_stream(seed, c);
      const std::uint64_t begin = c * kSampleChunk;
      const std::uint64_t end = std::min(samples, begin + kSampleChunk);
      for (std::uint64_t i = begin; i < end; ++i) sinks[w](sampler(n, rng));
    }
  });
}

std::string first_with_value(std::size_t n, const InvariantSelector& invariant, std::size_t value) {
  for (const auto& s : enumerate_sequences(n - 1)) {
    if (invariant.evaluate(s) == value) return s.to_string();
  }
  return {};
}

std::string vertex_list(const std::vector<Vertex>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i]);
  }
  return out + "}";
}

}  // namespace

InvariantSelector InvariantSelector::parse(std::string_view name, std::size_t k) {
  if (name == "h") return {InvariantKind::H, 0};
  if (name == "nu" || name == "matching") return {InvariantKind::Nu, 0};
  if (name == "psi" || name == "cycle") return {InvariantKind::Psi, 0};
  if (name == "degeneracy") return {InvariantKind::Degeneracy, 0};
  if (name == "kcore") return {InvariantKind::KCore, k};
  if (name == "planar") return {InvariantKind::Planar, 0};
  if (name == "hamiltonian") return {InvariantKind::Hamiltonian, 0};
  if (name == "clique") return {InvariantKind::Clique, 0};
  throw std::invalid_argument("unknown invariant '" + std::string(name) + "'");
}

std::string InvariantSelector::name() const {
  switch (kind) {
    case InvariantKind::H: return "h";
    case InvariantKind::Nu: return "nu";
    case InvariantKind::Psi: return "psi";
    case InvariantKind::Degeneracy: return "degeneracy";
    case InvariantKind::KCore: return "kcore";
    case InvariantKind::Planar: return "planar";
    case InvariantKind::Hamiltonian: return "hamiltonian";
    case InvariantKind::Clique: return "clique";
  }
  return "unknown";
}

std::size_t InvariantSelector::evaluate(const CreationSequence& s) const {
  switch (kind) {
    case InvariantKind::H: return h(s);
    case InvariantKind::Nu: return matching_number(s);
    case InvariantKind::Psi: return longest_cycle(s);
    case InvariantKind::Degeneracy: return degeneracy(s);
    case InvariantKind::KCore: return k_core_size(s, k);
    case InvariantKind::Planar: return is_planar(s) ? 1 : 0;
    case InvariantKind::Hamiltonian: return is_hamiltonian(s) ? 1 : 0;
    case InvariantKind::Clique: return clique_number(s);
  }
  return 0;
}

ExactDistribution exhaustive_distribution(std::size_t n, const InvariantSelector& invariant,
                                          unsigned workers) {
  require_order(n);
  if (n > kExhaustiveOrderCap) {
    throw Error(ErrorCode::OrderCapExceeded, "exhaustive enumeration accepts n <= " +
                                                 std::to_string(kExhaustiveOrderCap));
  }
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  workers = effective_workers(workers, total);
  std::vector<Tally> tallies(workers);
  run_workers(workers, [&](unsigned w) {
    const std::uint64_t first = total * w / workers;
    const std::uint64_t last = total * (w + 1) / workers;
    for (const auto& s : SequenceSpace(n - 1, first, last)) ++tallies[w][invariant.evaluate(s)];
  });
  ExactDistribution d{n, {}};
  for (const auto& tally : tallies) {
    for (const auto& [value, c] : tally) d.counts[value] += c;
  }
  return d;
}

ExactDistribution closed_form_distribution(std::size_t n, const InvariantSelector& invariant) {
  switch (invariant.kind) {
    case InvariantKind::H: return dist_h(n);
    case InvariantKind::Nu: return dist_matching(n);
    case InvariantKind::Psi: return dist_longest_cycle(n);
    case InvariantKind::Degeneracy: return dist_degeneracy(n);
    case InvariantKind::KCore: return dist_k_core_size(n, invariant.k);
    case InvariantKind::Planar: return dist_planar(n);
    case InvariantKind::Hamiltonian: return dist_hamiltonian(n);
    case InvariantKind::Clique: return dist_clique(n);
  }
  throw std::logic_error("unhandled invariant");
}

SequenceSampler weights_sampler() {
  return [](std::size_t n, Rng& rng) {
    return weights_to_graph(sample_weights(n, rng)).sequence();
  };
}

SequenceSampler biased_digit_sampler(double p_one) {
  return [p_one](std::size_t n, Rng& rng) {
    CreationSequence s;
    for (std::size_t i = 1; i < n; ++i) s.push_back(uniform01(rng) < p_one ? 1 : 0);
    return s;
  };
}

SequenceSampler uniform_sampler() { return biased_digit_sampler(0.5); }

SequenceSampler sampler_for(SamplingModel model) {
  return model == SamplingModel::Weights ? weights_sampler() : uniform_sampler();
}

EmpiricalDistribution monte_carlo(std::size_t n, std::uint64_t samples, std::uint64_t seed,
                                  const InvariantSelector& invariant,
                                  const SequenceSampler& sampler, unsigned workers) {
  require_order(n);
  if (samples == 0) throw Error(ErrorCode::InsufficientSamples, "need at least one sample");
  const std::uint64_t chunks = (samples + kSampleChunk - 1) / kSampleChunk;
  workers = effective_workers(workers, chunks);
  std::vector<Tally> tallies(workers);
  std::vector<std::function<void(const CreationSequence&)>> sinks;
  for (unsigned w = 0; w < workers; ++w) {
    sinks.emplace_back([&tally = tallies[w], &invariant](const CreationSequence& s) {
      ++tally[invariant.evaluate(s)];
    });
  }
  sample_chunked(n, samples, seed, sampler, workers, sinks);
  EmpiricalDistribution out{n, {}, samples};
  for (const auto& tally : tallies) {
    for (const auto& [value, c] : tally) out.counts[value] += c;
  }
  return out;
}

std::vector<CreationSequence> sample_sequences(std::size_t n, std::uint64_t count,
                                               std::uint64_t seed,
                                               const SequenceSampler& sampler) {
  std::vector<CreationSequence> out;
  out.reserve(count);
  std::vector<std::function<void(const CreationSequence&)>> sinks{
      [&out](const CreationSequence& s) { out.push_back(s); }};
  sample_chunked(n, count, seed, sampler, 1, sinks);
  return out;
}

UniformityTestResult uniformity_test(std::size_t n, std::uint64_t samples, std::uint64_t seed,
                                     double alpha, const SequenceSampler& sampler,
                                     unsigned workers) {
  if (n < 2 || n > 9) {
    throw Error(ErrorCode::OrderOutOfRange,
                "uniformity test needs 2 <= n <= 9, got " + std::to_string(n));
  }
  const std::uint64_t cells = std::uint64_t{1} << (n - 1);
  if (samples < 100 * cells) {
    throw Error(ErrorCode::InsufficientSamples,
                "need at least " + std::to_string(100 * cells) + " samples for n=" +
                    std::to_string(n) + ", got " + std::to_string(samples));
  }
  const std::uint64_t chunks = (samples + kSampleChunk - 1) / kSampleChunk;
  workers = effective_workers(workers, chunks);
  std::vector<std::vector<std::uint64_t>> hits(workers, std::vector<std::uint64_t>(cells, 0));
  std::vector<std::function<void(const CreationSequence&)>> sinks;
  for (unsigned w = 0; w < workers; ++w) {
    sinks.emplace_back([&row = hits[w]](const CreationSequence& s) { ++row[s.value()]; });
  }
  sample_chunked(n, samples, seed, sampler, workers, sinks);

  UniformityTestResult result;
  result.n = n;
  result.samples = samples;
  result.cells = cells;
  result.df = cells - 1;
  result.alpha = alpha;
  result.observed.assign(cells, 0);
  for (const auto& row : hits) {
    for (std::uint64_t c = 0; c < cells; ++c) result.observed[c] += row[c];
  }
  const double expected = static_cast<double>(samples) / static_cast<double>(cells);
  for (auto o : result.observed) {
    const double diff = static_cast<double>(o) - expected;
    result.statistic += diff * diff / expected;
  }
  result.p_value = stats::chi_square_sf(result.statistic, static_cast<double>(result.df));
  result.reject = result.p_value < alpha;
  return result;
}

ComparisonReport compare_distributions(const ExactDistribution& exact,
                                       const EmpiricalDistribution& empirical) {
  if (exact.n != empirical.n) {
    throw Error(ErrorCode::OrderMismatch, "exact distribution has n=" + std::to_string(exact.n) +
                                              ", empirical has n=" +
                                              std::to_string(empirical.n));
  }
  if (empirical.total == 0) {
    throw Error(ErrorCode::InsufficientSamples, "empirical distribution is empty");
  }
  std::map<std::size_t, std::pair<double, std::uint64_t>> cells;  // value -> (p, observed)
  for (const auto& [value, c] : exact.counts) {
    cells[value].first = ExactProbability{exact.n, c}.value();
  }
  for (const auto& [value, c] : empirical.counts) cells[value].second += c;

  ComparisonReport report;
  const double total = static_cast<double>(empirical.total);
  double remainder_expected = 0.0;
  double remainder_observed = 0.0;
  bool has_remainder = false;
  std::uint64_t used_cells = 0;
  for (const auto& [value, cell] : cells) {
    const auto [p, observed] = cell;
    report.total_variation += std::fabs(p - static_cast<double>(observed) / total);
    const double expected = p * total;
    if (expected >= 5.0) {
      const double diff = static_cast<double>(observed) - expected;
      report.statistic += diff * diff / expected;
      ++used_cells;
    } else {
      remainder_expected += expected;
      remainder_observed += static_cast<double>(observed);
      has_remainder = has_remainder || expected > 0.0 || observed > 0;
    }
  }
  report.total_variation *= 0.5;
  if (has_remainder) {
    ++used_cells;
    const double diff = remainder_observed - remainder_expected;
    if (remainder_expected > 0.0) {
      report.statistic += diff * diff / remainder_expected;
    } else if (remainder_observed > 0.0) {
      report.statistic = std::numeric_limits<double>::infinity();
    }
  }
  report.df = used_cells > 0 ? used_cells - 1 : 0;
  if (std::isinf(report.statistic)) {
    report.p_value = 0.0;
  } else if (report.df == 0) {
    report.p_value = 1.0;
  } else {
    report.p_value = stats::chi_square_sf(report.statistic, static_cast<double>(report.df));
  }
  return report;
}

EmpiricalDistribution as_empirical(const ExactDistribution& exact) {
  EmpiricalDistribution out{exact.n, {}, 0};
  for (const auto& [value, c] : exact.counts) {
    const auto count = c.convert_to<std::uint64_t>();
    if (count) out.counts[value] = count;
    out.total += count;
  }
  return out;
}

VerifyReport verify(const VerifyOptions& options) {
  if (options.n_max > kVerifyEnumerationCap) {
    throw Error(ErrorCode::OrderCapExceeded, "verify accepts n-max <= " +
                                                 std::to_string(kVerifyEnumerationCap));
  }
  if (options.n_max < 1) {
    throw Error(ErrorCode::OrderTooSmall, "verify needs n-max >= 1");
  }
  if (options.oracle_n_max > kVerifyOracleCap) {
    throw Error(ErrorCode::OrderCapExceeded,
                "oracle sweep accepts n <= " + std::to_string(kVerifyOracleCap));
  }
  VerifyReport report;
  auto record = [&report](CheckResult check) {
    report.passed = report.passed && check.passed;
    report.checks.push_back(std::move(check));
  };

  // Closed forms against enumeration.
  for (std::size_t n = 1; n <= options.n_max; ++n) {
    std::vector<InvariantSelector> selectors = {
        {InvariantKind::H},          {InvariantKind::Nu},       {InvariantKind::Degeneracy},
        {InvariantKind::Planar},     {InvariantKind::Hamiltonian}, {InvariantKind::Clique}};
    if (n >= 3) selectors.push_back({InvariantKind::Psi});
    for (std::size_t k = 1; k <= options.k_max && k + 1 <= n; ++k) {
      selectors.push_back({InvariantKind::KCore, k});
    }
    for (const auto& sel : selectors) {
      CheckResult check;
      check.name = "closed_form." + sel.name();
      check.n = n;
      if (sel.kind == InvariantKind::KCore) check.k = sel.k;
      const auto enumerated = exhaustive_distribution(n, sel, options.workers);
      const auto closed = options.closed_form(n, sel);
      if (closed.total() != closed.denominator()) {
        check.passed = false;
        check.detail = "closed form sums to " + closed.total().str() + ", not " +
                       closed.denominator().str();
      }
      if (!(enumerated == closed)) {
        check.passed = false;
        std::set<std::size_t> values;
        for (const auto& [v, c] : enumerated.counts) values.insert(v);
        for (const auto& [v, c] : closed.counts) values.insert(v);
        for (auto v : values) {
          if (enumerated.count(v) == closed.count(v)) continue;
          check.detail = "value " + std::to_string(v) + ": enumeration " +
                         enumerated.count(v).str() + ", closed form " + closed.count(v).str();
          // A value the closed form invents has no witness sequence.
          if (auto w = first_with_value(n, sel, v); enumerated.count(v) != 0) check.witness = w;
          break;
        }
      }
      record(std::move(check));
    }
  }

  // Closed-form invariants against brute-force oracles, one check per
  // (property, n) naming the first disagreeing sequence.
  const std::size_t oracle_top = std::min(options.n_max, options.oracle_n_max);
  for (std::size_t n = 1; n <= oracle_top; ++n) {
    std::map<std::string, CheckResult> per_property;
    auto compare = [&](const std::string& name, const CreationSequence& s, bool ok,
                       const std::string& detail) {
      auto [it, fresh] = per_property.try_emplace(name);
      if (fresh) {
        it->second.name = "oracle." + name;
        it->second.n = n;
      }
      if (!ok && it->second.passed) {
        it->second.passed = false;
        it->second.witness = s.to_string();
        it->second.detail = detail;
      }
    };
    for (const auto& s : enumerate_sequences(n - 1)) {
      const auto g = ThresholdGraph(s).to_edge_list();
      auto eq = [&](const std::string& name, std::size_t closed, std::size_t oracle) {
        compare(name, s, closed == oracle,
                "closed form " + std::to_string(closed) + ", oracle " + std::to_string(oracle));
      };
      const std::size_t cycle = oracle_longest_cycle(g);
      eq("nu", matching_number(s), oracle_max_matching(g));
      eq("psi", longest_cycle(s), cycle);
      eq("clique", clique_number(s), oracle_clique_number(g));
      eq("degeneracy", degeneracy(s), oracle_degeneracy(g));
      eq("planar", is_planar(s), oracle_is_planar(g));
      eq("hamiltonian", is_hamiltonian(s), n >= 3 && cycle == n);
      for (std::size_t k = 1; k <= options.k_max; ++k) {
        const auto closed = k_core_members(s, k);
        const auto oracle = oracle_k_core(g, k);
        compare("kcore_" + std::to_string(k), s, closed == oracle,
                "closed form " + vertex_list(closed) + ", oracle " + vertex_list(oracle));
      }
    }
    for (auto& [name, check] : per_property) record(std::move(check));
  }

  // Induced subgraphs against subsequences.
  const std::size_t sub_top = std::min(options.subsequence_max_length, options.n_max - 1);
  {
    CheckResult check;
    check.name = "oracle.induced_subgraph";
    check.n = sub_top + 1;
    std::vector<CreationSequence> all;
    for (std::size_t m = 0; m <= sub_top; ++m) {
      for (const auto& s : enumerate_sequences(m)) all.push_back(s);
    }
    std::vector<EdgeListGraph> graphs;
    for (const auto& s : all) graphs.push_back(ThresholdGraph(s).to_edge_list());
    for (std::size_t i = 0; i < all.size() && check.passed; ++i) {
      for (std::size_t j = 0; j < all.size() && check.passed; ++j) {
        const bool closed = is_subsequence(all[i], all[j]);
        if (closed != oracle_is_induced_subgraph(graphs[i], graphs[j])) {
          check.passed = false;
          check.witness = all[i].to_string() + " in " + all[j].to_string();
          check.detail = std::string("subsequence test says ") + (closed ? "yes" : "no");
        }
      }
    }
    record(std::move(check));
  }
  return report;
}

}  // namespace tgraph
