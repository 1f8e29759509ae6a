#include "tgraph/distributions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tgraph/error.hpp"

namespace tgraph {

namespace {

std::int64_t as_signed(std::size_t x) { return static_cast<std::int64_t>(x); }

void require_order(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::OrderTooSmall, "order must be at least 1");
}

}  // namespace

BigCount binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigCount result = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

BigCount pow2(std::size_t e) { return BigCount(1) << e; }

BigCount ExactDistribution::total() const {
  BigCount sum = 0;
  for (const auto& [value, c] : counts) sum += c;
  return sum;
}

BigCount ExactDistribution::count(std::size_t value) const {
  auto it = counts.find(value);
  return it == counts.end() ? BigCount(0) : it->second;
}

double ExactDistribution::probability(std::size_t value) const {
  return ExactProbability{n, count(value)}.value();
}

ExactDistribution ExactDistribution::normalized() const {
  ExactDistribution out{n, {}};
  for (const auto& [value, c] : counts) {
    if (c != 0) out.counts.emplace(value, c);
  }
  return out;
}

double ExactProbability::value() const {
  // Scale before converting so huge counts keep their leading digits.
  return std::ldexp(count.convert_to<double>(), -static_cast<int>(n - 1));
}

BigCount h_count(std::size_t n, std::size_t k) {
  return binomial(as_signed(n) - 1, as_signed((n + k) / 2));
}

BigCount h_count_lattice_form(std::size_t n, std::size_t k) {
  return binomial(as_signed(n) - 1, as_signed(n) - 1 + as_signed(k) - as_signed((n + k - 1) / 2));
}

ExactDistribution dist_h(std::size_t n) {
  require_order(n);
  ExactDistribution d{n, {}};
  for (std::size_t k = 0; k + 1 <= n; ++k) {
    auto c = h_count(n, k);
    if (c != h_count_lattice_form(n, k)) {
      throw std::logic_error("h count forms disagree at n=" + std::to_string(n) +
                             ", k=" + std::to_string(k));
    }
    d.counts.emplace(k, std::move(c));
  }
  return d;
}

BigCount planar_count_polynomial(std::size_t n) {
  const std::int64_t m = as_signed(n);
  return BigCount((3 * m * m - 13 * m + 20) / 2);
}

BigCount planar_count_by_cases(std::size_t n) {
  const std::int64_t m = as_signed(n);
  return binomial(m - 1, 0) + binomial(m - 1, 1) + binomial(m - 1, 2) + binomial(m - 2, 2) +
         binomial(m - 3, 2);
}

ExactProbability prob_planar(std::size_t n) {
  require_order(n);
  if (n <= 4) return {n, pow2(n - 1)};
  return {n, planar_count_polynomial(n)};
}

ExactDistribution dist_planar(std::size_t n) {
  const auto p = prob_planar(n);
  ExactDistribution d{n, {}};
  d.counts.emplace(0, p.denominator() - p.count);
  d.counts.emplace(1, p.count);
  return d;
}

ExactDistribution dist_matching(std::size_t n) {
  require_order(n);
  ExactDistribution d{n, {}};
  for (std::size_t k = 0; 2 * k < n; ++k) d.counts.emplace(k, binomial(as_signed(n), as_signed(k)));
  if (n % 2 == 0) {
    d.counts.emplace(n / 2, binomial(as_signed(n) - 1, as_signed((n - 1) / 2)));
  }
  return d;
}

BigCount perfect_matching_count_alt(std::size_t n) {
  return binomial(as_signed(n) - 1, as_signed(n / 2));
}

ExactDistribution dist_longest_cycle(std::size_t n) {
  if (n < 3) {
    throw Error(ErrorCode::OrderTooSmall,
                "longest-cycle distribution needs n >= 3, got " + std::to_string(n));
  }
  ExactDistribution d{n, {}};
  d.counts.emplace(0, BigCount(n));
  for (std::size_t k = 3; k <= n; ++k) {
    const auto half = as_signed(k / 2);
    d.counts.emplace(k, binomial(as_signed(n) - 1, half) - binomial(as_signed(k) - 2, half));
  }
  return d;
}

ExactDistribution dist_degeneracy(std::size_t n) {
  require_order(n);
  ExactDistribution d{n, {}};
  for (std::size_t v = 0; v + 1 <= n; ++v) d.counts.emplace(v, binomial(as_signed(n) - 1, as_signed(v)));
  return d;
}

ExactDistribution dist_k_core_size(std::size_t n, std::size_t k) {
  require_order(n);
  if (k < 1 || k + 1 > n) {
    throw Error(ErrorCode::InvalidK, "k-core distribution needs 1 <= k <= n-1, got k=" +
                                         std::to_string(k) + ", n=" + std::to_string(n));
  }
  ExactDistribution d{n, {}};
  BigCount empty = 0;
  for (std::size_t i = 0; i < k; ++i) empty += binomial(as_signed(n) - 1, as_signed(i));
  d.counts.emplace(0, empty);
  for (std::size_t j = 1; j <= k; ++j) d.counts.emplace(j, 0);
  for (std::size_t j = k + 1; j <= n; ++j) {
    d.counts.emplace(j, pow2(j - k - 1) * binomial(as_signed(n + k - j - 1), as_signed(k) - 1));
  }
  return d;
}

ExactDistribution dist_hamiltonian(std::size_t n) {
  require_order(n);
  ExactDistribution d{n, {}};
  // A Hamiltonian sequence is an h = 0 sequence on n-1 vertices followed by a one.
  const BigCount yes = n >= 3 ? h_count(n - 1, 0) : BigCount(0);
  d.counts.emplace(0, d.denominator() - yes);
  d.counts.emplace(1, yes);
  return d;
}

ExactDistribution dist_clique(std::size_t n) {
  auto deg = dist_degeneracy(n);
  ExactDistribution d{n, {}};
  for (auto& [v, c] : deg.counts) d.counts.emplace(v + 1, c);
  return d;
}

}  // namespace tgraph
