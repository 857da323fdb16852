#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "covenergy/covering.hpp"
#include "covenergy/families.hpp"
#include "covenergy/graph.hpp"
#include "covenergy/spectral.hpp"

namespace py = pybind11;
using namespace covenergy;

namespace {

CoverSet cover_of(const Graph& g, const std::vector<Vertex>& members) {
  return CoverSet(g.order(), members);
}

py::int_ to_py(const BigInt& v) {
  std::ostringstream os;
  os << v;
  return py::int_(py::reinterpret_steal<py::object>(
      PyLong_FromString(os.str().c_str(), nullptr, 10)));
}

py::list coefficients(const CharPoly& p) {
  py::list out;
  for (const auto& c : p.coefficients) out.append(to_py(c));
  return out;
}

py::tuple edge_tuple(const Edge& e) { return py::make_tuple(e.u, e.v); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Minimum 3-path coverings, covering matrices and covering energy";

  py::register_exception<Error>(m, "CoverError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n,
                       const std::vector<std::pair<Vertex, Vertex>>& edges) {
             return Graph(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Graph::order)
      .def_property_readonly("edges",
                             [](const Graph& g) {
                               py::list out;
                               for (const auto& e : g.edges())
                                 out.append(edge_tuple(e));
                               return out;
                             })
      .def("neighbors", &Graph::neighbors, py::arg("v"))
      .def("degree", &Graph::degree, py::arg("v"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("__len__", &Graph::order)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) +
               ", edges=" + std::to_string(g.size()) + ")";
      });

  m.def("enumerate_p3", [](const Graph& g) {
    py::list out;
    for (const auto& p : enumerate_p3(g)) out.append(py::make_tuple(p.x, p.y, p.z));
    return out;
  });
  m.def(
      "distance_to_set",
      [](const Graph& g, const std::vector<Vertex>& q,
         Vertex v) -> std::optional<std::size_t> {
        const auto d = distance_to_set(g, q, v);
        if (!d.reachable()) return std::nullopt;
        return d.value();
      },
      py::arg("g"), py::arg("q"), py::arg("v"),
      "Hop distance from v to q, or None when unreachable.");
  m.def("pendant_vertices", &pendant_vertices);
  m.def("is_connected", &is_connected);

  m.def("is_3_covering", [](const Graph& g, const std::vector<Vertex>& q) {
    return is_3_covering(g, cover_of(g, q));
  });
  m.def("is_2_covering", [](const Graph& g, const std::vector<Vertex>& q) {
    return is_2_covering(g, cover_of(g, q));
  });
  m.def(
      "min_3_covering_bruteforce",
      [](const Graph& g, std::size_t max_n) {
        return min_3_covering_bruteforce(g, max_n).members();
      },
      py::arg("g"), py::arg("max_n") = kDefaultBruteforceBound);
  m.def("min_3_covering_exact",
        [](const Graph& g) { return min_3_covering_exact(g).members(); });
  m.def("min_2_covering_exact",
        [](const Graph& g) { return min_2_covering_exact(g).members(); });
  m.def("classify_noncovered_edges",
        [](const Graph& g, const std::vector<Vertex>& q) {
          py::list out;
          for (const auto& c : classify_noncovered_edges(g, cover_of(g, q))) {
            py::dict d;
            d["edge"] = edge_tuple(c.edge);
            d["classes"] = edge_class_names(c.classes);
            d["reason"] = c.reason;
            out.append(d);
          }
          return out;
        });
  m.def("classify_vertex",
        [](const Graph& g, const std::vector<Vertex>& q, Vertex v) {
          std::vector<std::string> names;
          for (auto k : classify_vertex(g, cover_of(g, q), v).cases)
            names.emplace_back(to_string(k));
          return names;
        });
  m.def("check_distance_theorems",
        [](const Graph& g, const std::vector<Vertex>& q) {
          const auto r = check_distance_theorems(g, cover_of(g, q));
          py::list ws;
          for (const auto& w : r.witnesses) {
            py::dict d;
            d["theorem"] = w.theorem;
            d["kind"] = w.kind;
            d["vertices"] = w.vertices;
            d["detail"] = w.detail;
            ws.append(d);
          }
          py::dict out;
          out["theorem"] = r.theorem;
          out["pass"] = r.pass();
          out["witnesses"] = ws;
          return out;
        });
  m.def("characterization_holds",
        [](const Graph& g, const std::vector<Vertex>& q) {
          return characterization_holds(g, cover_of(g, q));
        });

  m.def("covering_matrix", [](const Graph& g, const std::vector<Vertex>& q) {
    const auto mat = build_covering_matrix(g, cover_of(g, q));
    std::vector<std::vector<double>> rows(mat.dim(),
                                          std::vector<double>(mat.dim()));
    for (std::size_t i = 0; i < mat.dim(); ++i)
      for (std::size_t j = 0; j < mat.dim(); ++j) rows[i][j] = mat(i, j);
    return rows;
  });
  m.def("eigenvalues", [](const Graph& g, const std::vector<Vertex>& q) {
    return eigenvalues_symmetric(build_covering_matrix(g, cover_of(g, q)))
        .eigenvalues;
  });
  m.def("char_poly", [](const Graph& g, const std::vector<Vertex>& q) {
    return coefficients(char_poly(build_covering_matrix(g, cover_of(g, q))));
  });

  py::class_<EnergyReport>(m, "EnergyReport")
      .def_property_readonly(
          "cover", [](const EnergyReport& r) { return r.cover.members(); })
      .def_property_readonly(
          "eigenvalues",
          [](const EnergyReport& r) { return r.spectrum.eigenvalues; })
      .def_property_readonly("clusters",
                             [](const EnergyReport& r) {
                               py::list out;
                               for (const auto& c : r.spectrum.clusters)
                                 out.append(
                                     py::make_tuple(c.value, c.multiplicity));
                               return out;
                             })
      .def_readonly("energy", &EnergyReport::energy)
      .def_property_readonly("method", [](const EnergyReport& r) {
        return std::string(to_string(r.method));
      });
  m.def("covering_energy", [](const Graph& g, const std::vector<Vertex>& q) {
    return covering_energy(g, cover_of(g, q));
  });

  m.def(
      "gen_star_rays",
      [](std::size_t rays, std::size_t ray_len) {
        return gen_star_rays(StarParams{rays, ray_len});
      },
      py::arg("m"), py::arg("ray_len"));
  m.def("gen_path", &gen_path);
  m.def("gen_complete", &gen_complete);
  m.def("gen_random", &gen_random, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def(
      "solve_cubic_real",
      [](double b, double c, double d) {
        return solve_cubic_real(CubicCoeffs{b, c, d});
      },
      py::arg("b"), py::arg("c"), py::arg("d"));
  m.def("star3_char_poly",
        [](std::size_t mm) { return coefficients(star3_char_poly(mm)); });
  m.def("star3_spectrum_closed",
        [](std::size_t mm) { return star3_spectrum_closed(mm).eigenvalues(); });
  m.def("star3_energy_closed", &star3_energy_closed);
  m.def("star1_energy_closed", &star1_energy_closed);

  py::class_<RadicandReport>(m, "RadicandReport")
      .def_readonly("m", &RadicandReport::m)
      .def_readonly("delta1", &RadicandReport::delta1)
      .def_readonly("delta0", &RadicandReport::delta0)
      .def_readonly("direct_expansion", &RadicandReport::direct_expansion)
      .def_readonly("direct_closed_form", &RadicandReport::direct_closed_form)
      .def_readonly("simplified", &RadicandReport::simplified)
      .def_readonly("agree", &RadicandReport::agree)
      .def_readonly("direct_negative", &RadicandReport::direct_negative);
  m.def("radicand_discrepancy_report", &radicand_discrepancy_report);
}
