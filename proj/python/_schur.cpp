#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schur/constructions.hpp"
#include "schur/enumerate.hpp"
#include "schur/io.hpp"
#include "schur/schurity.hpp"
#include "schur/verify.hpp"

namespace py = pybind11;
using namespace schur;

namespace {

py::object big(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.str()); }

std::vector<std::vector<Index>> members(const std::vector<Subgroup>& hs) {
  std::vector<std::vector<Index>> out;
  for (const auto& h : hs) out.push_back(h.members());
  return out;
}

SearchOptions search_options(std::size_t search_budget, std::size_t chain_budget, double time_limit, Budget& b) {
  if (time_limit > 0)
    b.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(time_limit));
  SearchOptions s;
  s.search_budget = search_budget;
  s.chain_budget = chain_budget;
  s.budget = &b;
  return s;
}

py::dict claim_dict(const Claim& c) {
  py::dict d;
  d["id"] = c.id;
  d["status"] = to_string(c.status);
  d["detail"] = c.detail;
  d["seconds"] = c.seconds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_schur, m) {
  m.doc() = "Schur rings over finite abelian groups";

  auto base = py::register_exception<Error>(m, "SchurError");
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
  py::register_exception<MalformedInput>(m, "MalformedInput", base.ptr());

  py::class_<AbelianGroup>(m, "AbelianGroup")
      .def(py::init<std::vector<int>>(), py::arg("orders"))
      .def_property_readonly("orders", &AbelianGroup::orders)
      .def_property_readonly("size", &AbelianGroup::size)
      .def_property_readonly("exponent", &AbelianGroup::exponent)
      .def("element", [](const AbelianGroup& g, Index i) { return g.element(i).residues; })
      .def("index", [](const AbelianGroup& g, std::vector<int> r) { return g.index(Element{std::move(r)}); })
      .def("mul", py::overload_cast<Index, Index>(&AbelianGroup::mul, py::const_))
      .def("inv", py::overload_cast<Index>(&AbelianGroup::inv, py::const_))
      .def("order", py::overload_cast<Index>(&AbelianGroup::order, py::const_))
      .def("subgroups", [](const AbelianGroup& g) { return members(g.subgroups()); })
      .def("__len__", &AbelianGroup::size)
      .def("__eq__", [](const AbelianGroup& a, const AbelianGroup& b) { return a == b; })
      .def("__repr__", [](const AbelianGroup& g) { return "AbelianGroup(" + g.to_string() + ")"; });

  py::class_<SRing>(m, "SRing")
      .def_property_readonly("group", &SRing::group)
      .def_property_readonly("classes", &SRing::classes)
      .def_property_readonly("labels", &SRing::labels)
      .def_property_readonly("rank", &SRing::rank)
      .def("class_of", &SRing::class_of)
      .def("basic_set", &SRing::basic_set)
      .def("inverse_class", &SRing::inverse_class)
      .def("structure_constant", &SRing::structure_constant, py::arg("x"), py::arg("y"), py::arg("z"))
      .def("to_json", &serialize_ring)
      .def_static("from_json", &parse_ring, py::arg("text"))
      .def("__eq__", [](const SRing& a, const SRing& b) { return a == b; })
      .def("__hash__", [](const SRing& a) { return py::hash(py::tuple(py::cast(a.labels()))); })
      .def("__repr__", [](const SRing& a) {
        return "SRing(" + a.group().to_string() + ", rank " + std::to_string(a.rank()) + ")";
      });

  m.def("make_sring", &make_sring, py::arg("group"), py::arg("classes"),
        "Validate a partition (lists of element indices); raises ValidationError.");
  m.def("validate", [](const AbelianGroup& g, Partition p) -> py::object {
    auto v = validate(g, std::move(p));
    if (std::holds_alternative<SRing>(v)) return py::none();
    return py::str(std::get<Violation>(v).message);
  }, py::arg("group"), py::arg("classes"), "None if valid, else the first violated axiom.");
  m.def("group_ring", &group_ring);
  m.def("trivial_sring", &trivial_sring);
  m.def("parse_rings", &parse_rings, py::arg("text"));

  m.def("enumerate_srings",
        [](const AbelianGroup& g, unsigned jobs, std::size_t max_order, std::size_t node_budget) {
          EnumerateOptions o;
          o.jobs = jobs;
          o.max_order = max_order;
          o.node_budget = node_budget;
          return enumerate_srings(g, o).rings;
        },
        py::arg("group"), py::arg("jobs") = 1, py::arg("max_order") = 81, py::arg("node_budget") = kDefaultSearchBudget,
        py::call_guard<py::gil_scoped_release>());
  m.def("enumerate_srings_brute", &enumerate_srings_brute, py::call_guard<py::gil_scoped_release>());
  m.def("cyclotomic_rings", &cyclotomic_rings, py::call_guard<py::gil_scoped_release>());
  m.def("cyclotomic_by_powers",
        [](const AbelianGroup& g, const std::vector<int>& powers) {
          std::vector<GroupMap> k{GroupMap::identity(g)};
          for (int p : powers) {
            std::vector<Index> images;
            for (std::size_t i = 0; i < g.rank(); ++i) images.push_back(g.pow(g.generator(i), p));
            k.push_back(map_from_generator_images(g, images));
          }
          return cyclotomic(g, k);
        },
        py::arg("group"), py::arg("powers"), "Cyc(K, G) with K generated by power maps x -> x^m.");
  m.def("classify_up_to_cayley", [](const std::vector<SRing>& rings) {
    std::vector<std::pair<SRing, std::size_t>> out;
    for (auto& c : classify_up_to_cayley(rings)) out.emplace_back(std::move(c.representative), c.size);
    return out;
  }, "List of (representative, orbit size).");
  m.def("filter_rings", py::overload_cast<const std::vector<SRing>&, const std::string&>(&filter_rings),
        py::arg("rings"), py::arg("names"));
  m.def("predicate_names", &predicate_names);

  m.def("table1", &table1, py::arg("row"), py::arg("n"), py::arg("x_power") = 1);
  m.def("tensor", &tensor);
  m.def("wreath", &wreath);
  m.def("a_subgroups", [](const SRing& a) { return members(a_subgroups(a)); });
  m.def("ring_radical", [](const SRing& a) { return ring_radical(a).members(); });
  m.def("is_regular", &is_regular);
  m.def("is_primitive", &is_primitive);
  m.def("is_quasi_thin", &is_quasi_thin);
  m.def("is_rational", py::overload_cast<const SRing&>(&is_rational));
  m.def("gw_sections", [](const SRing& a) {
    std::vector<std::pair<std::vector<Index>, std::vector<Index>>> out;
    for (const auto& s : gw_sections(a)) out.emplace_back(s.u.members(), s.l.members());
    return out;
  });

  m.def("is_schurian",
        [](const SRing& a, std::size_t search_budget, std::size_t chain_budget, double time_limit) {
          Budget b;
          SchurityResult r;
          {
            py::gil_scoped_release release;
            r = is_schurian(a, search_options(search_budget, chain_budget, time_limit, b));
          }
          py::dict d;
          d["schurian"] = r.schurian;
          d["aut_order"] = big(r.aut_order);
          d["stabilizer_orbits"] = r.stabilizer_orbits;
          d["split_class"] = r.split_class ? py::cast(*r.split_class) : py::none();
          d["witness"] = r.witness ? py::cast(*r.witness) : py::none();
          if (r.witness) {
            bool ok;
            {
              py::gil_scoped_release release;
              ok = verify_split_witness(a, r, search_budget);
            }
            d["witness_verified"] = ok;
          }
          return d;
        },
        py::arg("ring"), py::arg("search_budget") = kDefaultSearchBudget, py::arg("chain_budget") = kDefaultChainBudget,
        py::arg("time_limit") = 0.0,
        "dict with schurian, aut_order, stabilizer_orbits and, when non-schurian, a verified witness.");
  m.def("aut_order", [](const SRing& a) {
    BigInt order;
    {
      py::gil_scoped_release release;
      order = scheme_automorphisms(a).order;
    }
    return big(order);
  });

  auto bind_check = [&m](const char* name, Claim (*check)(int, const VerifyOptions&)) {
    m.def(name, [check](int n, unsigned jobs) {
      VerifyOptions o;
      o.jobs = jobs;
      Claim c;
      {
        py::gil_scoped_release release;
        c = check(n, o);
      }
      return claim_dict(c);
    }, py::arg("n"), py::arg("jobs") = 1);
  };
  bind_check("check_all_schurian", &check_all_schurian);
  bind_check("check_table1", &check_table1);
  bind_check("check_regular_classification", &check_regular_classification);
  bind_check("check_nonregular_tensor", &check_nonregular_tensor);
  bind_check("check_radical_wreath", &check_radical_wreath);
  bind_check("check_quotient_regular_orbits", &check_quotient_regular_orbits);

  m.def("verify_paper",
        [](int n, unsigned jobs, double time_limit) {
          VerifyOptions o;
          o.jobs = jobs;
          if (time_limit > 0)
            o.budget.deadline = std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                                       std::chrono::duration<double>(time_limit));
          std::vector<Claim> claims;
          {
            py::gil_scoped_release release;
            claims = verify_paper(n, o);
          }
          py::list out;
          for (const auto& c : claims) out.append(claim_dict(c));
          return out;
        },
        py::arg("n"), py::arg("jobs") = 1, py::arg("time_limit") = 0.0);
}
