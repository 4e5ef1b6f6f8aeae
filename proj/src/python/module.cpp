#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "picardium/cli.hpp"
#include "picardium/trivialise.hpp"
#include "picardium/verify.hpp"

namespace py = pybind11;
using namespace picardium;

namespace {

// cyclic ambient group with the standard associator family; elements picks
// the subgroup of Z/n
Trivialisation trivialise_cyclic(long n, long k, const std::vector<int>& elements) {
  FiniteGroup G = FiniteGroup::cyclic(static_cast<int>(n));
  Cochain psi = (k == 0) ? Cochain::zero(G, 3, 1) : standard_cyclic_cocycle(n, k);
  auto emb = SubgroupEmbedding::from_subset(G, elements);
  return trivialise(psi, emb);
}

py::dict trivialise_cyclic_py(long n, long k, const std::vector<int>& elements) {
  Trivialisation t = trivialise_cyclic(n, k, elements);
  py::dict d;
  d["solvable"] = t.solvable;
  d["order"] = t.Nprime;
  d["solution_count"] = t.solution_count;
  d["class_count"] = t.solvable ? trivialisation_classes(t.solutions, t.Nsecond).size() : 0;
  return d;
}

py::dict verify_cyclic_py(const std::string& theorem, long n, long k,
                          const std::vector<int>& elements) {
  FiniteGroup G = FiniteGroup::cyclic(static_cast<int>(n));
  Cochain psi = (k == 0) ? Cochain::zero(G, 3, 1) : standard_cyclic_cocycle(n, k);
  GradedCat c{CategoryContext(G, psi)};
  auto emb = SubgroupEmbedding::from_subset(G, elements);
  VerifyReport rep;
  if (theorem == "thm413") {
    rep = verify_thm_bijection(c, emb);
  } else {
    auto triv = trivialise(psi, emb);
    if (!triv.solvable) throw NotAdmissible("the associator does not trivialise on the subgroup");
    const Cochain& omega = triv.solutions.front();
    if (theorem == "prop45")
      rep = verify_prop_recover_H(c, emb, omega);
    else if (theorem == "thm414")
      rep = verify_thm_fixed_is_Q(c, emb, omega);
    else if (theorem == "appendix")
      rep = appendix_suite(c, emb, omega);
    else
      throw std::invalid_argument("unknown theorem '" + theorem +
                                  "' (expected prop45|thm413|thm414|appendix)");
  }
  py::dict d;
  d["pipeline"] = rep.pipeline;
  d["passed"] = rep.ok();
  py::list certs;
  for (const auto& cert : rep.certs) {
    py::dict e;
    e["claim"] = cert.claim;
    e["passed"] = cert.passed;
    e["witness"] = cert.witness;
    certs.append(e);
  }
  d["certs"] = certs;
  return d;
}

}  // namespace

PYBIND11_MODULE(_picardium, m) {
  m.doc() = "exact verification of twisted group algebras and their Morita lifts";

  m.def("run", &run_command, py::arg("args"),
        "run a CLI command in-process; returns the exit status (0 pass, 1 "
        "certificate failure, 2 input error)");

  m.def("trivialise_cyclic", &trivialise_cyclic_py, py::arg("n"), py::arg("k"),
        py::arg("elements"),
        "solve d(omega) = psi_k on a subgroup of Z/n; returns solvability, "
        "value-group order, solution and class counts");

  m.def("verify_cyclic", &verify_cyclic_py, py::arg("theorem"), py::arg("n"), py::arg("k"),
        py::arg("elements"),
        "run a named verification pipeline on a subgroup of Z/n with the "
        "standard associator psi_k; returns the certificate list");
}
