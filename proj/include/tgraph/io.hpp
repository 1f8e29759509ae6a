#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "tgraph/distributions.hpp"
#include "tgraph/experiment.hpp"
#include "tgraph/invariants.hpp"

namespace tgraph {

using Json = nlohmann::ordered_json;

// Flat record with the stable field names n, ones, h, r, clique, planar, nu,
// hamiltonian, psi, degeneracy. Each requested k adds "kcore_<k>" and an entry
// {kcore_k, kcore_size} under "kcore".
Json to_json(const InvariantReport& report);
/// CSV header plus one row per requested k (a single row with empty k-core
/// columns when none was requested).
void write_report_csv(std::ostream& out, const InvariantReport& report);

/// Probability formatted with 12 significant digits.
std::string format_probability(double p);

/// Columns n,[k,]value,count,denominator,probability with a header row.
void write_distribution_csv(std::ostream& out, const ExactDistribution& d,
                            std::optional<std::size_t> k = std::nullopt);
/// Inverse of write_distribution_csv. Throws Error(MalformedInput).
ExactDistribution read_distribution_csv(std::istream& in);

/// Cells as an array of {value, count, probability}; counts are emitted as
/// JSON integers while they fit in 64 bits and as decimal strings beyond.
Json cells_json(const ExactDistribution& d);
Json cells_json(const EmpiricalDistribution& d);

/// {command, n, k?, denominator, cells}.
Json distribution_report(const ExactDistribution& d, std::optional<std::size_t> k = std::nullopt);
Json uniformity_report(const UniformityTestResult& result, std::uint64_t seed);
Json verify_report(const VerifyReport& report, std::size_t n_max, std::size_t k_max);

}  // namespace tgraph
