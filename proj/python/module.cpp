#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tgraph/distributions.hpp"
#include "tgraph/error.hpp"
#include "tgraph/experiment.hpp"
#include "tgraph/invariants.hpp"
#include "tgraph/threshold_graph.hpp"

namespace py = pybind11;
using namespace tgraph;

namespace {

py::int_ to_py(const BigCount& c) {
  const auto text = c.str();
  return py::reinterpret_steal<py::int_>(PyLong_FromString(text.c_str(), nullptr, 10));
}

py::dict exact_dict(const ExactDistribution& d) {
  py::dict counts;
  for (const auto& [v, c] : d.counts) counts[py::int_(v)] = to_py(c);
  py::dict out;
  out["n"] = d.n;
  out["denominator"] = to_py(d.denominator());
  out["counts"] = counts;
  return out;
}

py::dict report_dict(const InvariantReport& r) {
  py::dict out;
  out["n"] = r.n;
  out["ones"] = r.ones;
  out["h"] = r.h;
  out["r"] = r.r;
  out["clique"] = r.clique;
  out["planar"] = r.planar;
  out["nu"] = r.nu;
  out["hamiltonian"] = r.hamiltonian;
  out["psi"] = r.psi;
  out["degeneracy"] = r.degeneracy;
  py::dict cores;
  for (const auto& e : r.kcores) cores[py::int_(e.k)] = e.size;
  out["kcore"] = cores;
  return out;
}

SamplingModel parse_model(const std::string& model) {
  if (model == "weights") return SamplingModel::Weights;
  if (model == "uniform") return SamplingModel::Uniform;
  throw std::invalid_argument("model must be 'weights' or 'uniform'");
}

}  // namespace

PYBIND11_MODULE(tgraph, m) {
  m.doc() = "Threshold graphs from binary creation sequences";
  m.attr("rng_algorithm") = std::string(kRngAlgorithm);

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("h", [](const std::string& s) { return h(parse_sequence(s)); }, py::arg("seq"));
  m.def("r", [](const std::string& s) { return r(parse_sequence(s)); }, py::arg("seq"));
  m.def(
      "is_subsequence",
      [](const std::string& a, const std::string& b) {
        return is_subsequence(parse_sequence(a), parse_sequence(b));
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "invariants",
      [](const std::string& s, const std::vector<std::size_t>& ks) {
        return report_dict(make_report(parse_sequence(s), ks));
      },
      py::arg("seq"), py::arg("ks") = std::vector<std::size_t>{},
      "Closed-form invariants of the graph built from `seq`.");

  m.def(
      "build_graph",
      [](const std::string& s) {
        const auto g = build_graph(parse_sequence(s)).to_edge_list();
        return py::make_tuple(g.order(), g.edges());
      },
      py::arg("seq"), "Returns (order, sorted edge list).");

  m.def(
      "recognize",
      [](std::size_t order, const std::vector<Edge>& edges) {
        return recognize(EdgeListGraph(order, edges)).to_string();
      },
      py::arg("order"), py::arg("edges"),
      "Creation sequence of a threshold graph; raises tgraph.Error otherwise.");

  m.def(
      "distribution",
      [](std::size_t n, const std::string& invariant, std::size_t k) {
        return exact_dict(closed_form_distribution(n, InvariantSelector::parse(invariant, k)));
      },
      py::arg("n"), py::arg("invariant"), py::arg("k") = 0,
      "Exact closed-form law; counts are Python ints over denominator 2^(n-1).");

  m.def(
      "exhaustive",
      [](std::size_t n, const std::string& invariant, std::size_t k, unsigned workers) {
        const auto sel = InvariantSelector::parse(invariant, k);
        py::gil_scoped_release release;
        auto d = exhaustive_distribution(n, sel, workers);
        py::gil_scoped_acquire acquire;
        return exact_dict(d);
      },
      py::arg("n"), py::arg("invariant"), py::arg("k") = 0, py::arg("workers") = 1);

  m.def(
      "monte_carlo",
      [](std::size_t n, std::uint64_t samples, std::uint64_t seed, const std::string& invariant,
         std::size_t k, const std::string& model, unsigned workers) {
        const auto sel = InvariantSelector::parse(invariant, k);
        const auto sampler = sampler_for(parse_model(model));
        EmpiricalDistribution d;
        {
          py::gil_scoped_release release;
          d = monte_carlo(n, samples, seed, sel, sampler, workers);
        }
        py::dict out;
        out["n"] = d.n;
        out["total"] = d.total;
        out["counts"] = d.counts;
        return out;
      },
      py::arg("n"), py::arg("samples"), py::arg("seed"), py::arg("invariant"), py::arg("k") = 0,
      py::arg("model") = "weights", py::arg("workers") = 1);

  m.def(
      "sample",
      [](std::size_t n, std::uint64_t count, std::uint64_t seed, const std::string& model) {
        std::vector<std::string> out;
        for (const auto& s : sample_sequences(n, count, seed, sampler_for(parse_model(model)))) {
          out.push_back(s.to_string());
        }
        return out;
      },
      py::arg("n"), py::arg("count"), py::arg("seed"), py::arg("model") = "weights");

  m.def(
      "uniformity_test",
      [](std::size_t n, std::uint64_t samples, std::uint64_t seed, double alpha, unsigned workers) {
        UniformityTestResult res;
        {
          py::gil_scoped_release release;
          res = uniformity_test(n, samples, seed, alpha, weights_sampler(), workers);
        }
        py::dict out;
        out["n"] = res.n;
        out["samples"] = res.samples;
        out["cells"] = res.cells;
        out["statistic"] = res.statistic;
        out["df"] = res.df;
        out["p_value"] = res.p_value;
        out["alpha"] = res.alpha;
        out["reject"] = res.reject;
        out["observed"] = res.observed;
        return out;
      },
      py::arg("n"), py::arg("samples"), py::arg("seed"), py::arg("alpha") = kDefaultAlpha,
      py::arg("workers") = 1);

  m.def(
      "verify",
      [](std::size_t n_max, std::size_t k_max) {
        VerifyOptions opt;
        opt.n_max = n_max;
        opt.k_max = k_max;
        VerifyReport report;
        {
          py::gil_scoped_release release;
          report = verify(opt);
        }
        py::list failures;
        for (const auto& c : report.checks) {
          if (!c.passed) failures.append(py::make_tuple(c.name, c.n, c.witness.value_or("")));
        }
        py::dict out;
        out["passed"] = report.passed;
        out["check_count"] = report.checks.size();
        out["failures"] = failures;
        return out;
      },
      py::arg("n_max") = 8, py::arg("k_max") = 3);
}
