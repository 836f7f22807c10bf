// Python bindings for the main operations: 2-adic arithmetic, polynomial
// parsing/evaluation, residue enumeration, and the claim runners.

#include "dp2cert/claims.hpp"
#include "dp2cert/models.hpp"
#include "dp2cert/padic.hpp"
#include "dp2cert/poly_text.hpp"
#include "dp2cert/residue_search.hpp"
#include "dp2cert/version.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

dp2::Rational make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  return dp2::Rational(dp2::Int(num)) / dp2::Rational(dp2::Int(den));
}

dp2::WeightedForm<dp2::Rational> parse_integral(const std::string& text) {
  return dp2::parse_form<dp2::Rational>(text, dp2::models::surface_vars(),
                                        dp2::models::surface_weights());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "certificate toolkit for a pointless del Pezzo surface of degree 2";
  m.attr("__version__") = dp2::kToolkitVersion;

  m.def(
      "val2",
      [](long long num, long long den) -> py::object {
        auto v = dp2::val2(make_rational(num, den));
        if (!v) return py::none();
        return py::int_(*v);
      },
      py::arg("num"), py::arg("den") = 1,
      "2-adic valuation of num/den; None for 0");

  m.def(
      "hensel_sqrt",
      [](long long a, unsigned k) {
        return py::int_(py::str(dp2::hensel_sqrt(dp2::Int(a), k).str()));
      },
      py::arg("a"), py::arg("k"),
      "square root of a (a = 1 mod 8) in Z2, truncated to k bits, root = 1 mod 4");

  m.def(
      "is_square_q2",
      [](long long num, long long den, unsigned precision) {
        return dp2::is_square_q2(dp2::PadicApprox::from_rational(make_rational(num, den), precision));
      },
      py::arg("num"), py::arg("den") = 1, py::arg("precision") = 16);

  m.def(
      "theta_residue",
      [](long long a_num, long long a_den, long long b_num, long long b_den, unsigned k) {
        const dp2::QuadExt<-7> x(make_rational(a_num, a_den), make_rational(b_num, b_den));
        const auto choice = dp2::EmbeddingChoice::theta1(k + 80);
        const auto img = dp2::embed_theta(x, choice, k + 8);
        return py::int_(py::str(img.residue_mod(k).str()));
      },
      py::arg("a_num"), py::arg("a_den"), py::arg("b_num"), py::arg("b_den"), py::arg("k"),
      "residue mod 2^k of theta1(a + b*sqrt(-7))");

  m.def(
      "eval_integral_form",
      [](const std::string& form_text, const std::vector<long long>& point) {
        const auto f = parse_integral(form_text);
        std::vector<dp2::Rational> pt;
        for (auto v : point) pt.emplace_back(v);
        return dp2::to_string(f.eval(pt));
      },
      py::arg("form"), py::arg("point"),
      "evaluate an integer form in w,x,y,z at an integer point");

  m.def(
      "enumerate_residues",
      [](const std::string& form_text, unsigned modulus_log2, bool primitive, unsigned jobs) {
        dp2::ResidueSearchSpec spec{parse_integral(form_text), modulus_log2,
                                    primitive ? dp2::Primitivity::AtLeastOneOdd
                                              : dp2::Primitivity::None};
        const auto r = dp2::enumerate_residue_solutions(spec, jobs);
        py::dict d;
        d["tuples_checked"] = r.tuples_checked;
        d["solutions"] = r.solutions;
        d["witnesses"] = r.witnesses;
        return d;
      },
      py::arg("form"), py::arg("modulus_log2") = 6, py::arg("primitive") = true,
      py::arg("jobs") = 1);

  m.def("registered_claims", [] { return dp2::registered_claims(); });

  m.def(
      "run_claim",
      [](const std::string& id, unsigned precision, const std::string& cache_dir,
         unsigned jobs) {
        dp2::RunConfig cfg;
        cfg.precision = precision;
        cfg.cache_dir = cache_dir;
        cfg.jobs = jobs;
        cfg.validate();
        return dp2::run_claim(id, cfg).to_json().dump();
      },
      py::arg("claim"), py::arg("precision") = 64, py::arg("cache_dir") = ".dp2cert-cache",
      py::arg("jobs") = 1, "run one claim; returns the certificate as a JSON string");

  m.def("surface_form_text", [] { return dp2::to_text(dp2::models::surface_form()); });
  m.def("local_model_text", [] { return dp2::to_text(dp2::models::local_model_form()); });
}
