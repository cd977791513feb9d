#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "compident/cli.hpp"
#include "compident/compositions.hpp"
#include "compident/identities.hpp"
#include "compident/stirling.hpp"
#include "compident/symfun.hpp"

namespace py = pybind11;
using namespace compident;

// Exact values cross the boundary as decimal or "p/q" strings; the Python
// layer turns them into int and fractions.Fraction.

namespace {

std::vector<std::string> strs(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

RandomPolicy make_policy(std::uint64_t seed, unsigned samples, std::optional<unsigned> sequence_samples,
                         const std::optional<std::string>& a, const std::optional<std::string>& b) {
  RandomPolicy policy;
  policy.seed = seed;
  policy.samples = samples;
  if (sequence_samples) policy.sequence_samples = *sequence_samples;
  if (a) policy.a = Rational::parse(*a);
  if (b) policy.b = Rational::parse(*b);
  return policy;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  // Translators run in reverse registration order: base class first.
  auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_ValueError);
  py::register_exception<UnknownIdentity>(m, "UnknownIdentity", domain_error.ptr());

  m.attr("DEFAULT_SEED") = kDefaultSeed;

  m.def("binomial", [](const std::string& n, std::int64_t k) { return binomial(Integer::parse(n), k).str(); });
  m.def("multichoose", [](const std::string& n, std::int64_t k) { return multichoose(Integer::parse(n), k).str(); });
  m.def("stirling1", [](int n, int t) { return stirling1(n, t).str(); });
  m.def("bernoulli", [](int n) { return bernoulli(n).str(); });
  m.def("gaussian_binomial", [](int n, int k) { return strs(gaussian_binomial(n, k).coeffs()); });
  m.def("compositions", [](int k, std::optional<int> r) {
    std::vector<std::vector<int>> out;
    if (r) {
      for (auto& c : enumerate_compositions(k, *r)) out.push_back(std::move(c.parts));
    } else {
      for (auto& c : enumerate_all_compositions(k)) out.push_back(std::move(c.parts));
    }
    return out;
  }, py::arg("k"), py::arg("r") = py::none());
  m.def("composition_transform", [](const std::vector<std::string>& terms) {
    std::vector<Rational> values;
    for (const auto& t : terms) values.push_back(Rational::parse(t));
    const TermSequence<Rational> seq = [&](int i) { return values[static_cast<std::size_t>(i - 1)]; };
    return composition_transform(seq, static_cast<int>(values.size())).str();
  });

  m.def("list_identities", [] {
    std::vector<std::string> out;
    for (const auto& d : list_identities()) out.push_back(to_json(d).dump());
    return out;
  });
  m.def("verify_case",
        [](const std::string& id, const std::map<std::string, std::int64_t>& params, std::uint64_t seed,
           const std::optional<std::string>& a, const std::optional<std::string>& b) {
          return to_json(verify_case(id, params, make_policy(seed, 5, std::nullopt, a, b))).dump();
        },
        py::arg("id"), py::arg("params"), py::arg("seed") = kDefaultSeed, py::arg("a") = py::none(),
        py::arg("b") = py::none());
  m.def("verify_range",
        [](const std::string& id, const std::map<std::string, std::pair<std::int64_t, std::int64_t>>& ranges,
           std::uint64_t seed, unsigned samples, std::optional<unsigned> sequence_samples,
           const std::optional<std::string>& a, const std::optional<std::string>& b, unsigned jobs) {
          RangeMap rm;
          for (const auto& [name, span] : ranges) rm[name] = Range{span.first, span.second};
          const RandomPolicy policy = make_policy(seed, samples, sequence_samples, a, b);
          py::gil_scoped_release release;
          return to_json(verify_range(id, rm, policy, jobs)).dump();
        },
        py::arg("id"), py::arg("ranges"), py::arg("seed") = kDefaultSeed, py::arg("samples") = 5,
        py::arg("sequence_samples") = py::none(), py::arg("a") = py::none(), py::arg("b") = py::none(),
        py::arg("jobs") = 1);
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = 0;
    {
      py::gil_scoped_release release;
      code = cli::run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  });
}
