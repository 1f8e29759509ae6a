#pragma once

#include <cstddef>
#include <cstdint>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

namespace tgraph {

using BigCount = boost::multiprecision::cpp_int;

/// C(a, b) with C(a, b) = 0 for b < 0 or b > a, and C(a, 0) = 1 for a >= 0.
/// Negative a also yields 0.
BigCount binomial(std::int64_t a, std::int64_t b);

BigCount pow2(std::size_t e);

/// Law of an invariant over the 2^(n-1) equally likely threshold graphs on n
/// vertices, held as exact counts over the common denominator 2^(n-1).
/// Values absent from the map have count zero.
struct ExactDistribution {
  std::size_t n = 1;
  std::map<std::size_t, BigCount> counts;

  BigCount denominator() const { return pow2(n - 1); }
  BigCount total() const;
  BigCount count(std::size_t value) const;
  double probability(std::size_t value) const;

  /// Drops zero-count entries so two distributions compare by support.
  ExactDistribution normalized() const;

  friend bool operator==(const ExactDistribution& a, const ExactDistribution& b) {
    const auto x = a.normalized();
    const auto y = b.normalized();
    return x.n == y.n && x.counts == y.counts;
  }
};

/// A single event probability count / 2^(n-1).
struct ExactProbability {
  std::size_t n = 1;
  BigCount count;

  BigCount denominator() const { return pow2(n - 1); }
  double value() const;
};

/// Staircase-walk count of length-(n-1) sequences with h = k, as stated:
/// C(n-1, floor((n+k)/2)).
BigCount h_count(std::size_t n, std::size_t k);
/// The same count in the form the lattice-path argument produces:
/// C(n-1, n-1+k - floor((n+k-1)/2)).
BigCount h_count_lattice_form(std::size_t n, std::size_t k);

/// Distribution of h(seq(G)). Requires n >= 1.
ExactDistribution dist_h(std::size_t n);

/// Planar count for n >= 4: (3n^2 - 13n + 20) / 2.
BigCount planar_count_polynomial(std::size_t n);
/// Planar count by direct case split: at most two ones, or three ones with
/// s_1 = 1 or (s_1, s_2) = (0, 1).
BigCount planar_count_by_cases(std::size_t n);
/// 2^(n-1) for n <= 4, polynomial branch for n >= 4.
ExactProbability prob_planar(std::size_t n);
/// Two-point distribution {1: planar, 0: non-planar}.
ExactDistribution dist_planar(std::size_t n);

/// Distribution of the matching number.
ExactDistribution dist_matching(std::size_t n);
/// Perfect-matching count for even n in the form C(n-1, floor(n/2)).
BigCount perfect_matching_count_alt(std::size_t n);

/// Distribution of the circumference; value 0 carries the n acyclic graphs.
/// Throws Error(OrderTooSmall) for n < 3.
ExactDistribution dist_longest_cycle(std::size_t n);

ExactDistribution dist_degeneracy(std::size_t n);

/// Distribution of |k-core|. Requires 1 <= k <= n-1, else Error(InvalidK).
ExactDistribution dist_k_core_size(std::size_t n, std::size_t k);

/// {1: Hamiltonian, 0: not}: last digit one and an h = 0 prefix.
ExactDistribution dist_hamiltonian(std::size_t n);

/// Clique number, the degeneracy law shifted by one.
ExactDistribution dist_clique(std::size_t n);

}  // namespace tgraph
