// Python bindings for the liftlab core: code construction, lifting,
// weight distributions, closed forms, and design verification.
// Arbitrary-precision counts cross the boundary as python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>

#include "liftlab/design.hpp"
#include "liftlab/families.hpp"
#include "liftlab/field.hpp"
#include "liftlab/formulas.hpp"
#include "liftlab/lift.hpp"

namespace py = pybind11;
using namespace liftlab;

namespace {

std::pair<u32, u32> prime_power(u64 q) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  u64 p = q;
  for (u64 c = 2; c * c <= q; ++c)
    if (q % c == 0) {
      p = c;
      break;
    }
  u32 e = 0;
  u64 v = q;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  if (v != 1) throw std::invalid_argument("q must be a prime power");
  return {u32(p), e};
}

Field field_of(u64 q) {
  auto [p, e] = prime_power(q);
  return make_field(p, e);
}

py::int_ to_py(const BigInt& v) {
  PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::dict wd_to_dict(const WeightDistribution& wd) {
  py::dict d;
  for (const auto& [w, c] : wd.nonzero()) d[py::int_(w)] = to_py(c);
  return d;
}

WeightDistribution dict_to_wd(const py::dict& d, std::size_t n) {
  WeightDistribution wd;
  wd.n = n;
  wd.counts.assign(n + 1, 0);
  for (auto item : d) {
    auto w = item.first.cast<std::size_t>();
    if (w > n) throw std::invalid_argument("weight exceeds the length");
    wd.counts[w] = BigInt(py::str(item.second).cast<std::string>());
  }
  return wd;
}

const char* status_str(DesignStatus s) {
  switch (s) {
    case DesignStatus::verified:
      return "verified";
    case DesignStatus::not_a_design:
      return "not_a_design";
    case DesignStatus::complete_design:
      return "complete_design";
  }
  return "unknown";
}

py::dict cert_to_dict(const DesignCertificate& c) {
  py::dict d;
  d["t"] = c.t;
  d["v"] = c.v;
  d["k"] = c.k;
  d["lambda"] = to_py(c.lambda);
  d["b"] = to_py(c.b);
  d["status"] = status_str(c.status);
  if (c.status == DesignStatus::not_a_design) {
    d["witness_a"] = c.witness_a;
    d["witness_b"] = c.witness_b;
    d["count_a"] = to_py(c.count_a);
    d["count_b"] = to_py(c.count_b);
  }
  return d;
}

WdStrategy strategy_of(const std::string& method) {
  if (method == "auto") return WdStrategy::automatic;
  if (method == "direct") return WdStrategy::direct;
  if (method == "dual") return WdStrategy::via_dual;
  throw std::invalid_argument("method must be auto, direct, or dual");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "exact weight distributions and support designs of lifted linear codes";

  py::register_exception<BudgetError>(m, "BudgetError");
  py::register_exception<EmptySupportError>(m, "EmptySupportError");
  py::register_exception<ZeroDualError>(m, "ZeroDualError");

  py::class_<LinearCode>(m, "Code")
      .def_property_readonly("n", &LinearCode::n)
      .def_property_readonly("k", &LinearCode::k)
      .def_property_readonly(
          "q", [](const LinearCode& c) { return c.field()->order(); })
      .def("__repr__", [](const LinearCode& c) {
        std::string s = "Code([" + std::to_string(c.n()) + ", " +
                        std::to_string(c.k()) + "] over GF(" +
                        std::to_string(c.field()->order()) + "))";
        return s;
      });

  m.def(
      "field_info",
      [](u64 q) {
        Field f = field_of(q);
        py::dict d;
        d["p"] = f->p();
        d["e"] = f->e();
        d["order"] = f->order();
        d["modulus"] = f->modulus();
        d["primitive"] = f->primitive();
        return d;
      },
      py::arg("q"), "prime decomposition and modulus of GF(q)");

  m.def(
      "simplex", [](u64 q, unsigned m_) { return simplex(field_of(q), m_); },
      py::arg("q"), py::arg("m"));
  m.def(
      "hamming", [](u64 q, unsigned m_) { return hamming(field_of(q), m_); },
      py::arg("q"), py::arg("m"));
  m.def(
      "rm", [](unsigned r, unsigned m_) { return rm2(r, m_); }, py::arg("r"),
      py::arg("m"), "binary Reed-Muller code RM(r, m)");
  m.def(
      "prm",
      [](u64 q, unsigned m_, unsigned h) { return prm(field_of(q), m_, h); },
      py::arg("q"), py::arg("m"), py::arg("h"),
      "projective Reed-Muller code of degree h");

  m.def(
      "lift", [](const LinearCode& c, unsigned ell) { return lift(c, ell).code; },
      py::arg("code"), py::arg("ell"),
      "the same generator matrix read over GF(q^ell)");
  m.def("dual", &dual, py::arg("code"));

  m.def(
      "min_distance",
      [](const LinearCode& c, u64 budget, unsigned workers) {
        return min_distance(c, Budget{budget, kDefaultSubsetBudget}, workers);
      },
      py::arg("code"), py::arg("budget") = kDefaultEnumerationBudget,
      py::arg("workers") = 1);

  m.def(
      "weight_distribution",
      [](const LinearCode& c, const std::string& method, u64 budget,
         unsigned workers) {
        return wd_to_dict(weight_distribution(
            c, strategy_of(method), Budget{budget, kDefaultSubsetBudget},
            workers));
      },
      py::arg("code"), py::arg("method") = "auto",
      py::arg("budget") = kDefaultEnumerationBudget, py::arg("workers") = 1,
      "weights with nonzero counts, as a dict");

  m.def(
      "selector_weights",
      [](const LinearCode& c, unsigned ell, u64 budget, unsigned workers) {
        LiftedCode lc = lift(c, ell);
        return wd_to_dict(rank_spectrum_wd(
            lc, Budget{budget, kDefaultSubsetBudget}, workers));
      },
      py::arg("code"), py::arg("ell"),
      py::arg("budget") = kDefaultEnumerationBudget, py::arg("workers") = 1,
      "lifted weight distribution by selector-matrix enumeration");

  m.def(
      "macwilliams",
      [](const py::dict& weights, std::size_t n, u64 order, u64 dim) {
        return wd_to_dict(macwilliams(dict_to_wd(weights, n), order, dim));
      },
      py::arg("weights"), py::arg("n"), py::arg("order"), py::arg("dim"),
      "exact MacWilliams transform of a length-n distribution");

  m.def(
      "rank_count",
      [](u64 q, unsigned ell, unsigned m_, unsigned r) {
        return to_py(rank_count(q, ell, m_, r));
      },
      py::arg("q"), py::arg("ell"), py::arg("m"), py::arg("r"),
      "number of ell x m matrices over GF(q) of rank r");

  m.def(
      "hamming_wd",
      [](u64 q, unsigned m_) { return wd_to_dict(hamming_wd_formula(q, m_)); },
      py::arg("q"), py::arg("m"));
  m.def(
      "lifted_simplex_wd",
      [](u64 q, unsigned m_, unsigned ell) {
        return wd_to_dict(lifted_simplex_wd_formula(q, m_, ell));
      },
      py::arg("q"), py::arg("m"), py::arg("ell"));
  m.def(
      "lifted_hamming_wd",
      [](u64 q, unsigned m_, unsigned ell) {
        return wd_to_dict(lifted_hamming_wd_formula(q, m_, ell));
      },
      py::arg("q"), py::arg("m"), py::arg("ell"));
  m.def(
      "lifted_rm1_wd",
      [](unsigned m_, unsigned ell) {
        return wd_to_dict(lifted_rm1_wd_formula(m_, ell));
      },
      py::arg("m"), py::arg("ell"));
  m.def(
      "lifted_rm_m2_wd",
      [](unsigned m_, unsigned ell) {
        return wd_to_dict(lifted_rm_m2_wd_formula(m_, ell));
      },
      py::arg("m"), py::arg("ell"));

  m.def(
      "design",
      [](const LinearCode& c, unsigned w, unsigned t, u64 budget,
         u64 subset_budget, unsigned workers) {
        return cert_to_dict(support_design_certificate(
            c, w, t, Budget{budget, subset_budget}, workers));
      },
      py::arg("code"), py::arg("weight"), py::arg("t") = 2,
      py::arg("budget") = kDefaultEnumerationBudget,
      py::arg("subset_budget") = kDefaultSubsetBudget, py::arg("workers") = 1,
      "certificate for the supports of the weight-w codewords");

  m.def(
      "max_strength",
      [](const LinearCode& c, unsigned w, u64 budget, u64 subset_budget,
         unsigned workers) {
        SupportDesign d =
            supports(c, w, Budget{budget, subset_budget}, workers);
        auto [t, lambda] = max_strength(d, Budget{budget, subset_budget},
                                        workers);
        return py::make_tuple(t, to_py(lambda));
      },
      py::arg("code"), py::arg("weight"),
      py::arg("budget") = kDefaultEnumerationBudget,
      py::arg("subset_budget") = kDefaultSubsetBudget, py::arg("workers") = 1,
      "largest verified design strength and its lambda");

  m.def(
      "assmus_mattson",
      [](const LinearCode& c, unsigned t, u64 budget, unsigned workers) {
        AMReport r =
            assmus_mattson(c, t, Budget{budget, kDefaultSubsetBudget},
                           workers);
        py::dict d;
        d["t"] = r.t;
        d["v"] = r.v;
        d["d"] = r.d;
        d["d_dual"] = r.d_dual;
        d["w"] = r.w;
        d["w_dual"] = r.w_dual;
        d["s"] = r.s;
        d["applicable"] = r.applicable;
        d["guaranteed_primal"] = r.guaranteed_primal;
        d["guaranteed_dual"] = r.guaranteed_dual;
        return d;
      },
      py::arg("code"), py::arg("t") = 2,
      py::arg("budget") = kDefaultEnumerationBudget, py::arg("workers") = 1);

  m.def(
      "conjecture_rm1",
      [](unsigned m_, u64 budget, u64 subset_budget, unsigned workers) {
        ConjectureReport r =
            conjecture_rm1(m_, Budget{budget, subset_budget}, workers);
        py::dict d;
        d["m"] = r.m;
        d["agree"] = r.agree;
        d["lambda_observed"] = to_py(r.cert.lambda);
        d["lambda_conjectured"] = r.lambda_conjectured.get_str();
        d["design"] = cert_to_dict(r.cert);
        return d;
      },
      py::arg("m"), py::arg("budget") = kDefaultEnumerationBudget,
      py::arg("subset_budget") = kDefaultSubsetBudget, py::arg("workers") = 1,
      "observed vs predicted lambda for the weight 3*2^(m-2) design");
}
