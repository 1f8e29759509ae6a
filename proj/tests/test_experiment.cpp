#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "test_util.hpp"
#include "tgraph/experiment.hpp"

using namespace tgraph;
using testing::code_of;

namespace {

const std::vector<std::string> kNames = {"h",      "nu",     "psi",         "degeneracy",
                                         "planar", "clique", "hamiltonian"};

}  // namespace

TEST_CASE("InvariantSelector::parse") {
  CHECK(InvariantSelector::parse("matching") == InvariantSelector::parse("nu"));
  CHECK(InvariantSelector::parse("cycle").kind == InvariantKind::Psi);
  CHECK(InvariantSelector::parse("kcore", 2).k == 2);
  CHECK(InvariantSelector::parse("h").name() == "h");
  CHECK_THROWS_AS(InvariantSelector::parse("girth"), std::invalid_argument);
}

TEST_CASE("exhaustive enumeration equals the closed forms") {
  for (std::size_t n = 1; n <= 14; ++n) {
    CAPTURE(n);
    for (const auto& name : kNames) {
      if (name == "psi" && n < 3) continue;
      const auto sel = InvariantSelector::parse(name);
      CHECK(exhaustive_distribution(n, sel) == closed_form_distribution(n, sel));
    }
    for (std::size_t k = 1; k <= 3 && k + 1 <= n; ++k) {
      const auto sel = InvariantSelector::parse("kcore", k);
      CHECK(exhaustive_distribution(n, sel) == closed_form_distribution(n, sel));
    }
  }
}

TEST_CASE("worker count does not change exhaustive results") {
  const auto sel = InvariantSelector::parse("psi");
  const auto serial = exhaustive_distribution(13, sel, 1);
  for (unsigned w : {2U, 3U, 7U, 64U}) CHECK(exhaustive_distribution(13, sel, w) == serial);
  CHECK(exhaustive_distribution(2, InvariantSelector::parse("h"), 8) ==
        exhaustive_distribution(2, InvariantSelector::parse("h"), 1));
}

TEST_CASE("exhaustive enumeration limits") {
  CHECK(code_of([] { exhaustive_distribution(22, InvariantSelector{}); }) ==
        ErrorCode::OrderCapExceeded);
  CHECK(code_of([] { exhaustive_distribution(0, InvariantSelector{}); }) ==
        ErrorCode::OrderTooSmall);
}

TEST_CASE("monte_carlo is reproducible and independent of workers") {
  const auto sel = InvariantSelector::parse("h");
  const auto a = monte_carlo(6, 20000, 99, sel);
  const auto b = monte_carlo(6, 20000, 99, sel, weights_sampler(), 4);
  CHECK(a.counts == b.counts);
  CHECK(a.total == 20000);
  const auto c = monte_carlo(6, 20000, 100, sel);
  CHECK(a.counts != c.counts);

  const auto seqs = sample_sequences(6, 10000, 5, uniform_sampler());
  const auto again = sample_sequences(6, 10000, 5, uniform_sampler());
  CHECK(seqs == again);
  CHECK(seqs.size() == 10000);
  for (const auto& s : seqs) CHECK(s.size() == 5);

  CHECK(code_of([&] { monte_carlo(6, 0, 1, sel); }) == ErrorCode::InsufficientSamples);
}

TEST_CASE("two-vertex graphs are an edge half of the time") {
  const auto mc = monte_carlo(2, 100000, 17, InvariantSelector::parse("nu"));
  const double share = static_cast<double>(mc.counts.at(1)) / mc.total;
  CHECK(std::abs(share - 0.5) < 0.01);
}

TEST_CASE("weight-model invariant laws match the exact laws") {
  for (std::size_t n = 2; n <= 8; ++n) {
    CAPTURE(n);
    for (const auto& name : {"h", "nu", "degeneracy"}) {
      const auto sel = InvariantSelector::parse(name);
      const auto exact = closed_form_distribution(n, sel);
      const auto mc = monte_carlo(n, 100000, 1000 + n, sel);
      const auto cmp = compare_distributions(exact, mc);
      CHECK(cmp.total_variation < 3.0 / std::sqrt(1e5));
      CHECK(cmp.p_value > 1e-4);
    }
  }
}

TEST_CASE("uniformity_test") {
  const auto res = uniformity_test(5, 40000, 7);
  CHECK(res.cells == 16);
  CHECK(res.df == 15);
  CHECK(res.observed.size() == 16);
  std::uint64_t sum = 0;
  for (auto c : res.observed) sum += c;
  CHECK(sum == 40000);
  CHECK_FALSE(res.reject);
  CHECK(res.p_value > 0.001);

  const auto biased = uniformity_test(2, 1000, 7, 0.001, biased_digit_sampler(0.7));
  CHECK(biased.reject);
  CHECK(biased.p_value < 1e-10);

  CHECK(code_of([] { uniformity_test(1, 1000, 1); }) == ErrorCode::OrderOutOfRange);
  CHECK(code_of([] { uniformity_test(10, 10000000, 1); }) == ErrorCode::OrderOutOfRange);
  CHECK(code_of([] { uniformity_test(5, 1599, 1); }) == ErrorCode::InsufficientSamples);
  CHECK_NOTHROW(uniformity_test(5, 1600, 1));
}

TEST_CASE("compare_distributions") {
  const auto exact = closed_form_distribution(7, InvariantSelector::parse("h"));
  const auto self = compare_distributions(exact, as_empirical(exact));
  CHECK(self.total_variation == 0.0);
  CHECK(self.statistic == doctest::Approx(0.0));
  CHECK(self.p_value == doctest::Approx(1.0));

  EmpiricalDistribution off{7, {{100, 50}}, 50};
  CHECK(compare_distributions(exact, off).total_variation == doctest::Approx(1.0));

  EmpiricalDistribution wrong_n{6, {{0, 5}}, 5};
  CHECK(code_of([&] { compare_distributions(exact, wrong_n); }) == ErrorCode::OrderMismatch);
  EmpiricalDistribution empty{7, {}, 0};
  CHECK(code_of([&] { compare_distributions(exact, empty); }) == ErrorCode::InsufficientSamples);
}

TEST_CASE("verify passes on the library closed forms") {
  VerifyOptions opt;
  opt.n_max = 9;
  const auto report = verify(opt);
  CHECK(report.passed);
  CHECK(report.checks.size() > 50);
  std::set<std::string> names;
  for (const auto& c : report.checks) {
    names.insert(c.name);
    CHECK(c.passed);
  }
  CHECK(names.count("closed_form.h") == 1);
  CHECK(names.count("oracle.planar") + names.count("closed_form.planar") == 2);
}

TEST_CASE("verify reports a corrupted closed form with a witness") {
  VerifyOptions opt;
  opt.n_max = 6;
  opt.closed_form = [](std::size_t n, const InvariantSelector& sel) {
    auto d = closed_form_distribution(n, sel);
    if (sel.kind == InvariantKind::Nu && n == 5) {
      d.counts[1] += 1;
      d.counts[2] -= 1;
    }
    return d;
  };
  const auto report = verify(opt);
  CHECK_FALSE(report.passed);
  std::size_t failures = 0;
  for (const auto& c : report.checks) {
    if (c.passed) continue;
    ++failures;
    CHECK(c.n == 5);
    REQUIRE(c.witness.has_value());
    CHECK(c.witness->size() == 4);
  }
  CHECK(failures == 1);
}

TEST_CASE("verify limits") {
  VerifyOptions opt;
  opt.n_max = 30;
  CHECK(code_of([&] { verify(opt); }) == ErrorCode::OrderCapExceeded);
  opt.n_max = 0;
  CHECK(code_of([&] { verify(opt); }) == ErrorCode::OrderTooSmall);
  opt.n_max = 5;
  opt.oracle_n_max = 11;
  CHECK(code_of([&] { verify(opt); }) == ErrorCode::OrderCapExceeded);
}
