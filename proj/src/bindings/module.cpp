#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sidem/certificate.hpp"
#include "sidem/constructions.hpp"
#include "sidem/cyclotomic.hpp"
#include "sidem/exact_algebra.hpp"
#include "sidem/gf2_ring.hpp"
#include "sidem/idem_enum.hpp"
#include "sidem/numtheory.hpp"
#include "sidem/paper_suite.hpp"
#include "sidem/s_classify.hpp"

namespace py = pybind11;
using namespace sidem;

namespace {

py::dict report_to_dict(const SubgroupPairReport& r) {
  py::dict d;
  d["alpha_nontrivial_idempotent"] = r.alpha_nontrivial_idempotent;
  d["beta_squares_to_alpha"] = r.beta_squares_to_alpha;
  d["absorption_holds"] = r.absorption_holds;
  d["beta_excluded"] = r.beta_excluded;
  d["valid"] = r.valid();
  d["failed_requirements"] = r.failed_requirements();
  return d;
}

template <class K>
py::dict pair_to_dict(const SubgroupPair<K>& pair) {
  py::dict d;
  d["alpha"] = pair.alpha.to_string();
  d["beta"] = pair.beta.to_string();
  d["report"] = report_to_dict(pair.report);
  return d;
}

}  // namespace

PYBIND11_MODULE(_sidem, m) {
  m.doc() = "exact S-idempotent computations in group rings";

  py::register_exception<InconclusiveError>(m, "InconclusiveError");

  // ---- Z2[Cn] -------------------------------------------------------------
  py::class_<Gf2Element>(m, "Gf2Element")
      .def(py::init([](std::uint32_t n, const std::vector<std::int64_t>& exps) {
             return Gf2Element::make(n, exps);
           }),
           py::arg("n"), py::arg("exponents") = std::vector<std::int64_t>{})
      .def_static("zero", &Gf2Element::zero, py::arg("n"))
      .def_static("one", &Gf2Element::one, py::arg("n"))
      .def_static("parse", &Gf2Element::parse, py::arg("n"), py::arg("text"))
      .def_property_readonly("modulus", &Gf2Element::modulus)
      .def_property_readonly("support", &Gf2Element::support)
      .def("weight", &Gf2Element::weight)
      .def("is_zero", &Gf2Element::is_zero)
      .def("is_one", &Gf2Element::is_one)
      .def("add", &Gf2Element::add)
      .def("mul", &Gf2Element::mul)
      .def("square", &Gf2Element::square)
      .def("is_idempotent", &Gf2Element::is_idempotent)
      .def("complement_one", &Gf2Element::complement_one)
      .def("__add__", &Gf2Element::add)
      .def("__mul__", &Gf2Element::mul)
      .def("__eq__", [](const Gf2Element& a, const Gf2Element& b) { return a == b; })
      .def("__hash__", [](const Gf2Element& e) { return Gf2ElementHash{}(e); })
      .def("__str__", &Gf2Element::to_string)
      .def("__repr__", [](const Gf2Element& e) {
        return "Gf2Element(" + std::to_string(e.modulus()) + ", \"" + e.to_string() + "\")";
      });
  m.def("canonical_less", &canonical_less);

  // ---- number theory ------------------------------------------------------
  m.def("is_prime", &is_prime, py::arg("u"));
  m.def("lucas_lehmer", &lucas_lehmer, py::arg("k"));
  m.def(
      "mersenne_exponent",
      [](std::uint64_t p) -> py::object {
        const auto w = mersenne_exponent(p);
        if (!w) return py::none();
        return py::make_tuple(w->k, w->p);
      },
      py::arg("p"));
  m.def("fermat_divisibility", &fermat_divisibility, py::arg("k"));
  m.def("mult_order", &mult_order, py::arg("a"), py::arg("m"));

  py::class_<CycCoset>(m, "CycCoset")
      .def_readonly("modulus", &CycCoset::modulus)
      .def_readonly("leader", &CycCoset::leader)
      .def_readonly("members", &CycCoset::members)
      .def("__repr__", [](const CycCoset& c) {
        return "CycCoset(leader=" + std::to_string(c.leader) + ", size=" +
               std::to_string(c.members.size()) + ")";
      });
  m.def("cyclotomic_cosets", &cyclotomic_cosets, py::arg("m"), py::arg("odd_only") = false);

  // ---- idempotent enumeration ---------------------------------------------
  m.def("brute_force_idempotents", &brute_force_idempotents, py::arg("n"));
  m.def("coset_idempotents", &coset_idempotents, py::arg("n"));
  m.def("lift_to_even", &lift_to_even, py::arg("e"), py::arg("n"));
  m.def("hensel_lift", &hensel_lift, py::arg("e"), py::arg("n"));
  m.def("enumerate_idempotents", &enumerate_idempotents, py::arg("n"));

  // ---- S-classification ---------------------------------------------------
  py::enum_<AbsorptionLaw>(m, "AbsorptionLaw")
      .value("ABSORB_WITNESS", AbsorptionLaw::AbsorbWitness)
      .value("ABSORB_IDEMPOTENT", AbsorptionLaw::AbsorbIdempotent);
  py::enum_<WitnessMethod>(m, "WitnessMethod")
      .value("CONSTRUCTED", WitnessMethod::Constructed)
      .value("SEARCHED", WitnessMethod::Searched);
  py::enum_<SStatus>(m, "SStatus")
      .value("S", SStatus::S)
      .value("NOT_S", SStatus::NotS)
      .value("INCONCLUSIVE", SStatus::Inconclusive);

  py::class_<SWitness>(m, "SWitness")
      .def_readonly("beta", &SWitness::beta)
      .def_readonly("law", &SWitness::law)
      .def_readonly("method", &SWitness::method)
      .def("__repr__", [](const SWitness& w) {
        return "SWitness(" + w.beta.to_string() + ", " + to_string(w.law) + ", " +
               to_string(w.method) + ")";
      });

  py::class_<SquareRootSet>(m, "SquareRootSet")
      .def_readonly("solvable", &SquareRootSet::solvable)
      .def_readonly("particular", &SquareRootSet::particular)
      .def_readonly("kernel_basis", &SquareRootSet::kernel_basis)
      .def("kernel_dimension", &SquareRootSet::kernel_dimension)
      .def("enumerate", &SquareRootSet::enumerate, py::arg("cap_log2") = 20);
  m.def("square_roots", &square_roots, py::arg("x"));

  m.def("check_witness", &check_witness, py::arg("x"), py::arg("a"),
        py::arg("method") = WitnessMethod::Searched);
  m.def("find_witness", &find_witness, py::arg("x"), py::arg("kernel_cap") = 20);
  m.def("transfer_complement", &transfer_complement, py::arg("x"), py::arg("w"));

  py::class_<SEntry>(m, "SEntry")
      .def_readonly("idempotent", &SEntry::idempotent)
      .def_readonly("status", &SEntry::status)
      .def_readonly("witness", &SEntry::witness)
      .def("is_s", &SEntry::is_s);
  py::class_<SReport>(m, "SReport")
      .def_readonly("modulus", &SReport::modulus)
      .def_readonly("entries", &SReport::entries)
      .def_readonly("total", &SReport::total)
      .def_readonly("nontrivial", &SReport::nontrivial)
      .def_readonly("s_count", &SReport::s_count)
      .def_readonly("non_s_count", &SReport::non_s_count)
      .def_readonly("inconclusive_count", &SReport::inconclusive_count);
  m.def("classify", &classify, py::arg("n"), py::arg("kernel_cap") = 20);

  // ---- constructions ------------------------------------------------------
  py::class_<BasicSpec>(m, "BasicSpec")
      .def_readonly("p", &BasicSpec::p)
      .def_readonly("k", &BasicSpec::k)
      .def_readonly("l", &BasicSpec::l)
      .def_readonly("m", &BasicSpec::m)
      .def_readonly("x", &BasicSpec::x)
      .def_readonly("t", &BasicSpec::t);
  py::class_<BasicPair>(m, "BasicPair")
      .def_readonly("alpha", &BasicPair::alpha)
      .def_readonly("beta", &BasicPair::beta)
      .def_readonly("spec", &BasicPair::spec);
  py::class_<SumPair>(m, "SumPair")
      .def_readonly("alpha", &SumPair::alpha)
      .def_readonly("beta", &SumPair::beta);
  m.def("basic_pair", &basic_pair, py::arg("p"), py::arg("l"));
  m.def("enumerate_basic_pairs", &enumerate_basic_pairs, py::arg("p"));
  m.def("sum_pair", &sum_pair, py::arg("pairs"));
  m.def("theorem13_pair", &theorem13_pair, py::arg("q"));
  m.def("s_count_formula", &s_count_formula, py::arg("p"));

  py::class_<CensusReport>(m, "CensusReport")
      .def_readonly("p", &CensusReport::p)
      .def_readonly("k", &CensusReport::k)
      .def_readonly("m", &CensusReport::m)
      .def_readonly("expected_nontrivial", &CensusReport::expected_nontrivial)
      .def_readonly("enumerated_nontrivial", &CensusReport::enumerated_nontrivial)
      .def_readonly("count_ok", &CensusReport::count_ok)
      .def_readonly("family_matches", &CensusReport::family_matches)
      .def_readonly("witnesses_ok", &CensusReport::witnesses_ok)
      .def_readonly("detail", &CensusReport::detail)
      .def("all_ok", &CensusReport::all_ok);
  m.def("verify_census", &verify_census, py::arg("p"));

  // ---- exact characteristic-0 algebra -------------------------------------
  m.def("cyclotomic_polynomial", &cyclotomic_polynomial, py::arg("n"));

  py::class_<AbGroup>(m, "AbGroup")
      .def_static("cyclic", &AbGroup::cyclic, py::arg("n"))
      .def_static("product", &AbGroup::product, py::arg("m"), py::arg("n"))
      .def("size", &AbGroup::size)
      .def("exponent", &AbGroup::exponent)
      .def("describe", &AbGroup::describe)
      .def("__eq__", [](const AbGroup& a, const AbGroup& b) { return a == b; })
      .def("__repr__", [](const AbGroup& g) { return "AbGroup(" + g.describe() + ")"; });

  py::class_<CycloNumber>(m, "CycloNumber")
      .def_property_readonly("order", &CycloNumber::order)
      .def("is_zero", &CycloNumber::is_zero)
      .def("is_one", &CycloNumber::is_one)
      .def("is_rational", &CycloNumber::is_rational)
      .def("__eq__", [](const CycloNumber& a, const CycloNumber& b) { return a == b; })
      .def("__str__", &CycloNumber::to_string);

  py::class_<CycloElement>(m, "CycloElement")
      .def("group", &CycloElement::group)
      .def("is_zero", &CycloElement::is_zero)
      .def("is_one", &CycloElement::is_one)
      .def("is_idempotent", &CycloElement::is_idempotent)
      .def("add", &CycloElement::add)
      .def("mul", &CycloElement::mul)
      .def("negate", &CycloElement::negate)
      .def("__add__", &CycloElement::add)
      .def("__mul__", &CycloElement::mul)
      .def("__neg__", &CycloElement::negate)
      .def("__eq__", [](const CycloElement& a, const CycloElement& b) { return a == b; })
      .def("__str__", &CycloElement::to_string);

  m.def("primitive_idempotents", &primitive_idempotents, py::arg("group"));
  m.def("idempotent_from_mask", &idempotent_from_mask, py::arg("group"), py::arg("mask"));
  m.def("character_mask", &character_mask, py::arg("a"));
  m.def(
      "negation_witness",
      [](const CycloElement& alpha) {
        const auto w = negation_witness(alpha);
        return py::make_tuple(w.beta, w.law);
      },
      py::arg("alpha"));
  m.def("co_idempotents", &co_idempotents, py::arg("alpha"));

  m.def(
      "subgroup_pair_rational",
      [](std::uint32_t n, std::uint64_t p, int case_id) {
        return pair_to_dict(subgroup_idempotent_pair_rational(n, p, case_id));
      },
      py::arg("n"), py::arg("p"), py::arg("case_id"));
  m.def(
      "subgroup_pair_mod",
      [](std::uint64_t q, std::uint32_t n, std::uint64_t p, int case_id) {
        return pair_to_dict(subgroup_idempotent_pair_mod(q, n, p, case_id));
      },
      py::arg("q"), py::arg("n"), py::arg("p"), py::arg("case_id"));

  // ---- certificates ---------------------------------------------------------
  m.def(
      "reverify_certificate",
      [](const std::string& text) {
        return reverify_certificate(nlohmann::json::parse(text));
      },
      py::arg("certificate_json"),
      "re-check every witness identity embedded in a JSON certificate");

  // ---- verification suite -------------------------------------------------
  m.def(
      "run_paper_suite",
      [](std::uint64_t seed) {
        py::list out;
        for (const CriterionResult& r : run_paper_suite(seed)) {
          py::dict d;
          d["id"] = r.id;
          d["name"] = r.name;
          d["pass"] = r.pass;
          d["detail"] = r.detail;
          d["seconds"] = r.seconds;
          out.append(d);
        }
        return out;
      },
      py::arg("seed") = 20260808);
}
