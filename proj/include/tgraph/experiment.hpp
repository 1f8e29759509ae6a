#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tgraph/creation_sequence.hpp"
#include "tgraph/distributions.hpp"
#include "tgraph/rng.hpp"

namespace tgraph {

enum class InvariantKind { H, Nu, Psi, Degeneracy, KCore, Planar, Hamiltonian, Clique };

/// Which invariant a distribution is taken over. `k` is only read for KCore.
struct InvariantSelector {
  InvariantKind kind = InvariantKind::H;
  std::size_t k = 0;

  /// Accepts h, nu|matching, psi|cycle, degeneracy, kcore, planar,
  /// hamiltonian, clique. Throws std::invalid_argument otherwise.
  static InvariantSelector parse(std::string_view name, std::size_t k = 0);
  std::string name() const;
  /// Invariant value of gamma(s); booleans map to 0/1.
  std::size_t evaluate(const CreationSequence& s) const;

  friend bool operator==(const InvariantSelector&, const InvariantSelector&) = default;
};

inline constexpr std::size_t kExhaustiveOrderCap = 21;

/// Exact law of the invariant by tallying all 2^(n-1) sequences. The value
/// space is cut into `workers` contiguous ranges whose tallies are summed.
/// Throws Error(OrderCapExceeded) for n > 21.
ExactDistribution exhaustive_distribution(std::size_t n, const InvariantSelector& invariant,
                                          unsigned workers = 1);

/// The closed-form law matching `invariant`.
ExactDistribution closed_form_distribution(std::size_t n, const InvariantSelector& invariant);

struct EmpiricalDistribution {
  std::size_t n = 1;
  std::map<std::size_t, std::uint64_t> counts;
  std::uint64_t total = 0;
};

using SequenceSampler = std::function<CreationSequence(std::size_t n, Rng& rng)>;

/// Vertex-weights model: uniform weights, realize, recognize.
SequenceSampler weights_sampler();
/// n-1 independent fair digits.
SequenceSampler uniform_sampler();
/// n-1 independent digits, each one with probability `p_one`.
SequenceSampler biased_digit_sampler(double p_one);

enum class SamplingModel { Weights, Uniform };

SequenceSampler sampler_for(SamplingModel model);

/// Samples are drawn in fixed-size chunks; chunk c uses make_stream(seed, c),
/// so the result does not depend on the number of workers.
inline constexpr std::uint64_t kSampleChunk = 4096;

/// Draws `samples` graphs and tallies the invariant. Requires n >= 1.
EmpiricalDistribution monte_carlo(std::size_t n, std::uint64_t samples, std::uint64_t seed,
                                  const InvariantSelector& invariant,
                                  const SequenceSampler& sampler = weights_sampler(),
                                  unsigned workers = 1);

/// The first `count` sequences drawn for `seed`, in draw order.
std::vector<CreationSequence> sample_sequences(std::size_t n, std::uint64_t count,
                                               std::uint64_t seed, const SequenceSampler& sampler);

inline constexpr double kDefaultAlpha = 0.001;

struct UniformityTestResult {
  std::size_t n = 0;
  std::uint64_t samples = 0;
  std::uint64_t cells = 0;
  double statistic = 0.0;
  std::uint64_t df = 0;
  double p_value = 1.0;
  double alpha = kDefaultAlpha;
  bool reject = false;
  /// Hits per sequence, indexed by the sequence's binary value.
  std::vector<std::uint64_t> observed;
};

/// Chi-square test of the sampled sequences against the uniform law on all
/// 2^(n-1) sequences. Requires 2 <= n <= 9 (Error(OrderOutOfRange)) and at
/// least 100 expected hits per cell (Error(InsufficientSamples)).
UniformityTestResult uniformity_test(std::size_t n, std::uint64_t samples, std::uint64_t seed,
                                     double alpha = kDefaultAlpha,
                                     const SequenceSampler& sampler = weights_sampler(),
                                     unsigned workers = 1);

struct ComparisonReport {
  double total_variation = 0.0;
  double statistic = 0.0;
  std::uint64_t df = 0;
  double p_value = 1.0;
};

/// Total variation distance and a chi-square goodness-of-fit test. Cells with
/// expected count below 5 are pooled into one remainder cell, together with
/// any observed value outside the exact support.
ComparisonReport compare_distributions(const ExactDistribution& exact,
                                       const EmpiricalDistribution& empirical);

/// Exact counts reinterpreted as an empirical sample of size 2^(n-1).
EmpiricalDistribution as_empirical(const ExactDistribution& exact);

struct CheckResult {
  std::string name;
  std::size_t n = 0;
  std::optional<std::size_t> k;
  bool passed = true;
  std::string detail;
  std::optional<std::string> witness;
};

struct VerifyReport {
  bool passed = true;
  std::vector<CheckResult> checks;
};

using ClosedFormProvider =
    std::function<ExactDistribution(std::size_t n, const InvariantSelector& invariant)>;

inline constexpr std::size_t kVerifyEnumerationCap = 12;
inline constexpr std::size_t kVerifyOracleCap = 10;

struct VerifyOptions {
  std::size_t n_max = 8;
  std::size_t k_max = 3;
  /// Oracle comparisons run for n <= min(n_max, oracle_n_max).
  std::size_t oracle_n_max = kVerifyOracleCap;
  /// Induced-subgraph comparisons cover sequences up to this length.
  std::size_t subsequence_max_length = 5;
  unsigned workers = 1;
  ClosedFormProvider closed_form = closed_form_distribution;
};

/// Full sweep: closed forms against enumeration for every n <= n_max, closed
/// form invariants against brute-force oracles on every small graph, and the
/// subsequence criterion against induced-subgraph search. Throws
/// Error(OrderCapExceeded) if n_max > 12 or oracle_n_max > 10.
VerifyReport verify(const VerifyOptions& options);

}  // namespace tgraph
