#include "tgraph/io.hpp"

#include <cstdio>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "tgraph/error.hpp"
#include "tgraph/rng.hpp"

namespace tgraph {

namespace {

Json count_json(const BigCount& c) {
  if (c <= std::numeric_limits<std::uint64_t>::max()) return c.convert_to<std::uint64_t>();
  return c.str();
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

Json to_json(const InvariantReport& report) {
  Json j;
  j["n"] = report.n;
  j["ones"] = report.ones;
  j["h"] = report.h;
  j["r"] = report.r;
  j["clique"] = report.clique;
  j["planar"] = report.planar;
  j["nu"] = report.nu;
  j["hamiltonian"] = report.hamiltonian;
  j["psi"] = report.psi;
  j["degeneracy"] = report.degeneracy;
  Json cores = Json::array();
  for (const auto& entry : report.kcores) {
    j["kcore_" + std::to_string(entry.k)] = entry.size;
    cores.push_back({{"kcore_k", entry.k}, {"kcore_size", entry.size}});
  }
  j["kcore"] = std::move(cores);
  return j;
}

void write_report_csv(std::ostream& out, const InvariantReport& report) {
  out << "n,ones,h,r,clique,planar,nu,hamiltonian,psi,degeneracy,kcore_k,kcore_size\n";
  auto prefix = [&] {
    out << report.n << ',' << report.ones << ',' << report.h << ',' << report.r << ','
        << report.clique << ',' << (report.planar ? 1 : 0) << ',' << report.nu << ','
        << (report.hamiltonian ? 1 : 0) << ',' << report.psi << ',' << report.degeneracy << ',';
  };
  if (report.kcores.empty()) {
    prefix();
    out << ",\n";
  }
  for (const auto& entry : report.kcores) {
    prefix();
    out << entry.k << ',' << entry.size << '\n';
  }
}

std::string format_probability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", p);
  return buf;
}

void write_distribution_csv(std::ostream& out, const ExactDistribution& d,
                            std::optional<std::size_t> k) {
  out << "n," << (k ? "k," : "") << "value,count,denominator,probability\n";
  const auto denom = d.denominator().str();
  for (const auto& [value, c] : d.counts) {
    out << d.n << ',';
    if (k) out << *k << ',';
    out << value << ',' << c.str() << ',' << denom << ','
        << format_probability(d.probability(value)) << '\n';
  }
}

ExactDistribution read_distribution_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::MalformedInput, "empty CSV");
  const auto header = split_csv(line);
  auto column = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    throw Error(ErrorCode::MalformedInput, "CSV header lacks column " + name);
  };
  const std::size_t n_col = column("n");
  const std::size_t value_col = column("value");
  const std::size_t count_col = column("count");
  const std::size_t denom_col = column("denominator");

  ExactDistribution d;
  bool first = true;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::MalformedInput, "line " + std::to_string(line_no) + ": expected " +
                                                 std::to_string(header.size()) + " fields");
    }
    try {
      const auto n = static_cast<std::size_t>(std::stoull(fields[n_col]));
      if (first) {
        d.n = n;
        first = false;
      } else if (n != d.n) {
        throw Error(ErrorCode::MalformedInput, "mixed orders in one table");
      }
      if (BigCount(fields[denom_col]) != d.denominator()) {
        throw Error(ErrorCode::MalformedInput, "denominator does not match 2^(n-1)");
      }
      d.counts[static_cast<std::size_t>(std::stoull(fields[value_col]))] = BigCount(fields[count_col]);
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw Error(ErrorCode::MalformedInput,
                  "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return d;
}

Json cells_json(const ExactDistribution& d) {
  Json cells = Json::array();
  for (const auto& [value, c] : d.counts) {
    cells.push_back({{"value", value}, {"count", count_json(c)}, {"probability", d.probability(value)}});
  }
  return cells;
}

Json cells_json(const EmpiricalDistribution& d) {
  Json cells = Json::array();
  for (const auto& [value, c] : d.counts) {
    cells.push_back({{"value", value},
                     {"count", c},
                     {"probability", static_cast<double>(c) / static_cast<double>(d.total)}});
  }
  return cells;
}

Json distribution_report(const ExactDistribution& d, std::optional<std::size_t> k) {
  Json j;
  j["command"] = "dist";
  j["n"] = d.n;
  if (k) j["k"] = *k;
  j["denominator"] = count_json(d.denominator());
  j["cells"] = cells_json(d);
  return j;
}

Json uniformity_report(const UniformityTestResult& result, std::uint64_t seed) {
  Json j;
  j["command"] = "uniformity";
  j["n"] = result.n;
  j["samples"] = result.samples;
  j["seed"] = seed;
  j["rng"] = std::string(kRngAlgorithm);
  j["denominator"] = result.cells;
  Json cells = Json::array();
  for (std::uint64_t v = 0; v < result.observed.size(); ++v) {
    cells.push_back({{"value", CreationSequence::from_value(v, result.n - 1).to_string()},
                     {"count", result.observed[v]}});
  }
  j["cells"] = std::move(cells);
  j["statistic"] = result.statistic;
  j["df"] = result.df;
  j["p_value"] = result.p_value;
  j["alpha"] = result.alpha;
  j["decision"] = result.reject ? "reject" : "accept";
  return j;
}

Json verify_report(const VerifyReport& report, std::size_t n_max, std::size_t k_max) {
  Json j;
  j["command"] = "verify";
  j["n_max"] = n_max;
  j["k_max"] = k_max;
  j["passed"] = report.passed;
  std::size_t failures = 0;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry{{"name", c.name}, {"n", c.n}, {"passed", c.passed}};
    if (c.k) entry["k"] = *c.k;
    if (!c.passed) {
      ++failures;
      entry["detail"] = c.detail;
      if (c.witness) entry["witness"] = *c.witness;
    }
    checks.push_back(std::move(entry));
  }
  j["check_count"] = report.checks.size();
  j["failures"] = failures;
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace tgraph
