// Python view of the core library. Point sets cross the boundary as sorted
// lists of point indices; spaces as FinSpace objects or their JSON text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "topolab/classify.hpp"
#include "topolab/compactify.hpp"
#include "topolab/discretize.hpp"
#include "topolab/ideals.hpp"
#include "topolab/io.hpp"
#include "topolab/symdual.hpp"
#include "topolab/verify.hpp"

namespace py = pybind11;
using namespace topolab;

namespace {

using Points = std::vector<std::size_t>;

PointSet to_set(const Points& pts) {
  PointSet s;
  for (auto p : pts) {
    if (p >= kMaxPoints) throw Error(ErrorKind::InvalidSet, "point index " + std::to_string(p) + " out of range");
    s = s.with(p);
  }
  return s;
}

Points to_list(PointSet s) { return {s.begin(), s.end()}; }

std::vector<PointSet> to_sets(const std::vector<Points>& v) {
  std::vector<PointSet> out;
  for (const auto& p : v) out.push_back(to_set(p));
  return out;
}

std::vector<Points> to_lists(const std::vector<PointSet>& v) {
  std::vector<Points> out;
  for (auto s : v) out.push_back(to_list(s));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite topological spaces: classification, discretizations, compactifications, ideals";

  py::register_exception<Error>(m, "TopolabError", PyExc_ValueError);

  py::class_<FinSpace>(m, "FinSpace")
      .def_static("discrete", &FinSpace::discrete)
      .def_static("anti_discrete", &FinSpace::anti_discrete)
      .def_static("sierpinski", &FinSpace::sierpinski)
      .def_static("from_opens",
                  [](std::size_t n, const std::vector<Points>& opens) { return FinSpace::from_opens(n, to_sets(opens)); })
      .def_static("generated",
                  [](std::size_t n, const std::vector<Points>& gens) {
                    const auto sets = to_sets(gens);
                    return make_space(n, sets);
                  },
                  py::arg("n"), py::arg("generators"))
      .def_static("random", &random_space, py::arg("n"), py::arg("seed"))
      .def_static("from_json", [](const std::string& text) { return io::parse_space(text).space; })
      .def("to_json", [](const FinSpace& x) { return io::space_to_line(x); })
      .def("__len__", &FinSpace::size)
      .def_property_readonly("opens", [](const FinSpace& x) { return to_lists(x.opens()); })
      .def("is_open", [](const FinSpace& x, const Points& s) { return x.is_open(to_set(s)); })
      .def("closure", [](const FinSpace& x, const Points& s) { return to_list(closure(x, to_set(s))); })
      .def("interior", [](const FinSpace& x, const Points& s) { return to_list(interior(x, to_set(s))); })
      .def("__eq__", [](const FinSpace& a, const FinSpace& b) { return a == b; })
      .def("__repr__", [](const FinSpace& x) { return "FinSpace(" + io::space_to_line(x) + ")"; });

  m.def("enumerate_topologies", &enumerate_topologies, py::arg("n"));
  m.def("count_topologies", [](std::size_t n) {
    std::size_t count = 0;
    for_each_topology(n, [&](const FinSpace&) { ++count; });
    return count;
  });

  m.def("classify", [](const FinSpace& x) { return io::classification_report(x).dump(); },
        "Classification report as a JSON string.");
  m.def("isolated_points", [](const FinSpace& x) { return to_list(isolated_points(x)); });
  m.def("is_scattered", &is_scattered);
  m.def("is_alpha_scattered", &is_alpha_scattered);
  m.def("alpha_opens", [](const FinSpace& x) { return to_lists(alpha_topology(x).alpha_space.opens()); });

  m.def("density", &density);
  m.def("full_discretizations", [](const FinSpace& x) {
    std::vector<Points> out;
    for (const auto& d : all_discretizations(x)) out.push_back(to_list(d.image));
    return out;
  });
  m.def("has_discretization", [](const FinSpace& x) { return has_discretization(x).exists; });

  m.def("hausdorff_quotient_count", [](const FinSpace& x) {
    const ThrpreReport r = verify_thrpre(x);
    if (!r.ok) throw Error(ErrorKind::InternalInvariantViolation, r.counterexample);
    return r.quotients;
  });

  m.def("is_gmp", [](const FinSpace& x, const Points& u) { return is_gmp(x, to_set(u)); });
  m.def("is_essential", [](const FinSpace& x, const Points& u) { return is_essential(x, to_set(u)); });
  m.def("essential_gmp_support", [](const FinSpace& x) -> std::optional<Points> {
    const EssentialGmp e = essential_gmp(x);
    if (!e.ideal) return std::nullopt;
    return to_list(e.ideal->support);
  });

  py::class_<SymSet>(m, "SymSet")
      .def(py::init([](const std::vector<SymSet::Residue>& residues, const std::vector<std::uint64_t>& plus,
                       const std::vector<std::uint64_t>& minus, bool infinity) {
             return SymSet::from_parts(residues, plus, minus, infinity);
           }),
           py::arg("residues") = std::vector<SymSet::Residue>{}, py::arg("plus") = std::vector<std::uint64_t>{},
           py::arg("minus") = std::vector<std::uint64_t>{}, py::arg("infinity") = false)
      .def_static("naturals", &SymSet::naturals)
      .def_static("evens", &SymSet::evens)
      .def_static("tail_from", &SymSet::tail_from)
      .def_static("infinity_point", &SymSet::infinity_point)
      .def("__contains__", [](const SymSet& s, std::uint64_t k) { return s.contains(k); })
      .def_property_readonly("has_infinity", &SymSet::contains_infinity)
      .def("__or__", &SymSet::operator|)
      .def("__and__", &SymSet::operator&)
      .def("__sub__", &SymSet::operator-)
      .def("complement", &SymSet::complement)
      .def("__eq__", [](const SymSet& a, const SymSet& b) { return a == b; })
      .def("__repr__", [](const SymSet& s) { return "SymSet(" + s.to_string() + ")"; });

  m.def("one_point_closure", [](const SymSet& s) { return sym_closure(SymKind::NatPlusInfinity, s); });
  m.def("one_point_is_open", [](const SymSet& s) { return sym_is_open(SymKind::NatPlusInfinity, s); });
  m.def("one_point_is_dense", [](const SymSet& s) { return sym_is_dense(SymKind::NatPlusInfinity, s); });

  m.def("verify",
        [](const std::string& suite, std::optional<std::size_t> exhaustive_max, std::size_t random_count, std::size_t max_n,
           std::uint64_t seed) {
          CorpusConfig cfg;
          cfg.exhaustive = exhaustive_max.has_value();
          cfg.exhaustive_max = exhaustive_max.value_or(0);
          cfg.random_count = random_count;
          cfg.random_max_n = max_n;
          cfg.seed = seed;
          const VerifyReport r = run_verification(suite, cfg);
          return py::make_tuple(r.ok(), r.summary());
        },
        py::arg("suite") = "all", py::arg("exhaustive_max") = std::optional<std::size_t>(4), py::arg("random_count") = 0, py::arg("max_n") = 8,
        py::arg("seed") = 7, "Run a verification suite; returns (ok, summary).");
}
