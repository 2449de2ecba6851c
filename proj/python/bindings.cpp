#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "gbasic/generate.hpp"
#include "gbasic/io.hpp"

namespace py = pybind11;
using namespace gbasic;

// The heavy objects cross the boundary as JSON strings; the Python wrapper
// in gbasic/__init__.py turns them into dicts.  Scalars cross natively.
namespace {

Field field_of(const std::string& name, unsigned long prime) {
  if (name == "Q") return Field::rationals();
  if (name == "Fp") return Field::prime_field(prime);
  throw validation_error("field must be Q or Fp");
}

json jparse(const std::string& s) {
  try {
    return json::parse(s);
  } catch (const json::exception& e) {
    throw parse_error(e.what());
  }
}

PointSet points_of(const std::string& s, const Field& f) {
  return points_from_json(jparse(s), f);
}

std::vector<std::vector<int>> py_monomials(int num_vars, int degree) {
  return monomials(num_vars, degree);
}

int py_hilbert(const std::string& pts, int degree, const std::string& field,
               unsigned long prime) {
  return hilbert_function(points_of(pts, field_of(field, prime)), degree);
}

std::vector<std::string> py_ideal_basis(const std::string& pts, int degree,
                                        const std::string& field,
                                        unsigned long prime) {
  std::vector<std::string> out;
  for (const HomogPoly& f :
       ideal_basis(points_of(pts, field_of(field, prime)), degree))
    out.push_back(f.str());
  return out;
}

std::string py_betti(const std::string& pts, const std::string& field,
                     unsigned long prime, int threads) {
  return betti_to_json(
             betti_table(points_of(pts, field_of(field, prime)), threads))
      .dump();
}

bool py_satisfies_cb(const std::string& pts, int degree,
                     const std::string& field, unsigned long prime,
                     int threads) {
  return satisfies_cb(points_of(pts, field_of(field, prime)), degree,
                      threads);
}

int py_cb_index(const std::string& pts, const std::string& field,
                unsigned long prime, int threads) {
  return cb_index(points_of(pts, field_of(field, prime)), threads);
}

std::string py_verify_bounds(const std::string& pts, const std::string& field,
                             unsigned long prime, int threads) {
  return cb_report_to_json(
             verify_bounds(points_of(pts, field_of(field, prime)), threads))
      .dump();
}

std::vector<int> py_mu(const std::string& mod, const std::string& pts,
                       const std::string& field, unsigned long prime) {
  Field f = field_of(field, prime);
  ModulePresentation m = module_from_json(jparse(mod), f);
  PointSet z = points_of(pts, f);
  std::vector<int> out;
  for (int i = 0; i < z.size(); ++i) out.push_back(mu(m, z[i]));
  return out;
}

std::vector<bool> py_fitting(const std::string& mod, int index,
                             const std::string& pts, const std::string& field,
                             unsigned long prime) {
  Field f = field_of(field, prime);
  ModulePresentation m = module_from_json(jparse(mod), f);
  PointSet z = points_of(pts, f);
  std::vector<bool> out;
  for (int i = 0; i < z.size(); ++i)
    out.push_back(fitting_vanishes_at(m, index, z[i]));
  return out;
}

std::string py_shrink_once(const std::string& mod, const std::string& secs,
                           const std::string& pts,
                           const std::vector<int>& weights,
                           const std::string& field, unsigned long prime) {
  Field f = field_of(field, prime);
  ModulePresentation m = module_from_json(jparse(mod), f);
  std::vector<Section> sections = sections_from_json(jparse(secs), m);
  PointSet z = points_of(pts, f);
  ShrinkResult res = shrink_once(m, sections, z.points(), weights);
  return json{{"step", shrink_step_to_json(res.step)},
              {"sections", sections_to_json(res.sections)}}
      .dump();
}

std::string py_basic_elements(const std::string& mod, const std::string& secs,
                              const std::string& pts,
                              const std::vector<int>& weights, int keep,
                              const std::string& field, unsigned long prime) {
  Field f = field_of(field, prime);
  ModulePresentation m = module_from_json(jparse(mod), f);
  std::vector<Section> sections = sections_from_json(jparse(secs), m);
  PointSet z = points_of(pts, f);
  BasicElementsResult res =
      basic_elements(m, sections, z.points(), weights, keep);
  return json{{"transform", transform_to_json(res.transform)},
              {"sections", sections_to_json(res.sections)}}
      .dump();
}

std::string py_serre_section(const std::string& mod, const std::string& secs,
                             const std::string& pts, const std::string& field,
                             unsigned long prime) {
  Field f = field_of(field, prime);
  ModulePresentation m = module_from_json(jparse(mod), f);
  std::vector<Section> sections = sections_from_json(jparse(secs), m);
  PointSet z = points_of(pts, f);
  return section_to_json(serre_section(m, sections, z.points())).dump();
}

std::vector<int> py_width(const std::string& mod, const std::string& secs,
                          const std::string& pts, const std::string& field,
                          unsigned long prime) {
  Field f = field_of(field, prime);
  ModulePresentation m = module_from_json(jparse(mod), f);
  std::vector<Section> sections = sections_from_json(jparse(secs), m);
  PointSet z = points_of(pts, f);
  std::vector<int> out;
  for (int i = 0; i < z.size(); ++i)
    out.push_back(section_images_in_fiber(m, sections, z[i]).width);
  return out;
}

std::string py_grid(int a, int b, const std::string& field,
                    unsigned long prime) {
  return points_to_json(grid_points(a, b, field_of(field, prime))).dump();
}

std::string py_random(int n, unsigned long seed, const std::string& field,
                      unsigned long prime) {
  return points_to_json(random_points(n, seed, field_of(field, prime)))
      .dump();
}

std::string py_simplex(const std::string& field, unsigned long prime) {
  return points_to_json(simplex_points(field_of(field, prime))).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact-arithmetic core for graded modules over polynomial rings";

  py::register_exception<error>(m, "GbasicError");
  py::register_exception<hypothesis_error>(m, "HypothesisError");

  m.def("monomials", &py_monomials, py::arg("num_vars"), py::arg("degree"));
  m.def("hilbert_function", &py_hilbert, py::arg("points_json"),
        py::arg("degree"), py::arg("field") = "Q", py::arg("prime") = 0);
  m.def("ideal_basis", &py_ideal_basis, py::arg("points_json"),
        py::arg("degree"), py::arg("field") = "Q", py::arg("prime") = 0);
  m.def("betti_table", &py_betti, py::arg("points_json"),
        py::arg("field") = "Q", py::arg("prime") = 0, py::arg("threads") = 1);
  m.def("satisfies_cb", &py_satisfies_cb, py::arg("points_json"),
        py::arg("degree"), py::arg("field") = "Q", py::arg("prime") = 0,
        py::arg("threads") = 1);
  m.def("cb_index", &py_cb_index, py::arg("points_json"),
        py::arg("field") = "Q", py::arg("prime") = 0, py::arg("threads") = 1);
  m.def("verify_bounds", &py_verify_bounds, py::arg("points_json"),
        py::arg("field") = "Q", py::arg("prime") = 0, py::arg("threads") = 1);
  m.def("mu", &py_mu, py::arg("module_json"), py::arg("points_json"),
        py::arg("field") = "Q", py::arg("prime") = 0);
  m.def("fitting_vanishes", &py_fitting, py::arg("module_json"),
        py::arg("index"), py::arg("points_json"), py::arg("field") = "Q",
        py::arg("prime") = 0);
  m.def("shrink_once", &py_shrink_once, py::arg("module_json"),
        py::arg("sections_json"), py::arg("points_json"), py::arg("weights"),
        py::arg("field") = "Q", py::arg("prime") = 0);
  m.def("basic_elements", &py_basic_elements, py::arg("module_json"),
        py::arg("sections_json"), py::arg("points_json"), py::arg("weights"),
        py::arg("keep"), py::arg("field") = "Q", py::arg("prime") = 0);
  m.def("serre_section", &py_serre_section, py::arg("module_json"),
        py::arg("sections_json"), py::arg("points_json"),
        py::arg("field") = "Q", py::arg("prime") = 0);
  m.def("width", &py_width, py::arg("module_json"), py::arg("sections_json"),
        py::arg("points_json"), py::arg("field") = "Q", py::arg("prime") = 0);
  m.def("grid_points", &py_grid, py::arg("a"), py::arg("b"),
        py::arg("field") = "Q", py::arg("prime") = 0);
  m.def("random_points", &py_random, py::arg("n"), py::arg("seed"),
        py::arg("field") = "Q", py::arg("prime") = 0);
  m.def("simplex_points", &py_simplex, py::arg("field") = "Q",
        py::arg("prime") = 0);
}
