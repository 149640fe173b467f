#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ringline/builtins.hpp"
#include "ringline/classify.hpp"
#include "ringline/ideals.hpp"
#include "ringline/proj_line.hpp"
#include "ringline/report.hpp"
#include "ringline/ring.hpp"
#include "ringline/ring_spec.hpp"
#include "ringline/verify.hpp"

namespace py = pybind11;
using namespace ringline;

namespace {

std::vector<std::size_t> to_indices(const py::sequence& seq) {
  std::vector<std::size_t> out;
  for (const auto& item : seq) out.push_back(item.cast<std::size_t>());
  return out;
}

}  // namespace

PYBIND11_MODULE(_ringline, m) {
  m.doc() =
      "Exact finite commutative rings with unity, their ideals and "
      "quotients, and the projective lines over them";

  py::enum_<ElementClass>(m, "ElementClass")
      .value("ZERO", ElementClass::Zero)
      .value("UNIT", ElementClass::Unit)
      .value("ZERO_DIVISOR", ElementClass::ZeroDivisor);

  py::enum_<ZdWeight>(m, "ZdWeight")
      .value("SLIM", ZdWeight::Slim)
      .value("FAT", ZdWeight::Fat);

  py::enum_<Layer>(m, "Layer")
      .value("NUCLEUS", Layer::Nucleus)
      .value("INNER_SHELL", Layer::InnerShell)
      .value("OUTER_SHELL", Layer::OuterShell);

  py::enum_<Suite>(m, "Suite")
      .value("AXIOMS", Suite::Axioms)
      .value("IDEALS", Suite::Ideals)
      .value("LINE", Suite::Line)
      .value("TABLES", Suite::Tables)
      .value("ALL", Suite::All);

  py::enum_<TableChoice>(m, "TableChoice")
      .value("INNER", TableChoice::Inner)
      .value("OUTER", TableChoice::Outer)
      .value("CROSS", TableChoice::Cross)
      .value("NUCLEUS", TableChoice::Nucleus);

  py::enum_<ExportFormat>(m, "ExportFormat")
      .value("TEXT", ExportFormat::Text)
      .value("CSV", ExportFormat::Csv)
      .value("DOT", ExportFormat::Dot);

  py::enum_<GraphTarget>(m, "GraphTarget")
      .value("DISTANT_GRAPH", GraphTarget::DistantGraph)
      .value("NEIGHBOUR_GRAPH", GraphTarget::NeighbourGraph)
      .value("SHELL_SUBGRAPH", GraphTarget::ShellSubgraph);

  py::enum_<ShellChoice>(m, "ShellChoice")
      .value("INNER", ShellChoice::Inner)
      .value("OUTER", ShellChoice::Outer);

  py::class_<Element>(m, "Element")
      .def_property_readonly("index", &Element::index)
      .def_property_readonly("name", &Element::name)
      .def_property_readonly("ring", &Element::ring)
      .def("cls", &Element::cls)
      .def("inverse", &Element::inverse)
      .def("coordinates", &product_coordinates,
           "Coordinates in the factors of a product ring")
      .def("__add__",
           [](const Element& a, const Element& b) { return a + b; })
      .def("__mul__",
           [](const Element& a, const Element& b) { return a * b; })
      .def("__sub__",
           [](const Element& a, const Element& b) { return a - b; })
      .def("__neg__", [](const Element& a) { return -a; })
      .def("__eq__",
           [](const Element& a, const Element& b) { return a == b; })
      .def("__hash__",
           [](const Element& a) { return std::hash<std::size_t>()(a.index()); })
      .def("__repr__", [](const Element& a) {
        return "<Element " + a.name() + " of " + a.ring().label() + ">";
      });

  py::class_<Ring>(m, "Ring")
      .def_property_readonly("size", &Ring::size)
      .def_property_readonly("label", &Ring::label)
      .def_property_readonly("characteristic", &Ring::characteristic)
      .def("element",
           py::overload_cast<std::size_t>(&Ring::element, py::const_))
      .def("element",
           py::overload_cast<std::string_view>(&Ring::element, py::const_))
      .def("zero", &Ring::zero)
      .def("one", &Ring::one)
      .def("units", &Ring::units)
      .def("zero_divisors", &Ring::zero_divisors, py::arg("include_zero"))
      .def("is_field", &Ring::is_field)
      .def("is_product", &Ring::is_product)
      .def("factors", &Ring::factors)
      .def("names",
           [](const Ring& r) {
             std::vector<std::string> out;
             for (std::uint16_t i = 0; i < r.size(); ++i)
               out.push_back(r.name(i));
             return out;
           })
      .def("same", &Ring::same)
      .def("__repr__",
           [](const Ring& r) { return "<Ring " + r.label() + ">"; });

  py::class_<Ideal>(m, "Ideal")
      .def_readonly("ring", &Ideal::ring)
      .def_readonly("elements", &Ideal::elements)
      .def_readonly("principal", &Ideal::principal)
      .def_readonly("generator", &Ideal::generator)
      .def_readonly("maximal", &Ideal::maximal)
      .def("display", &Ideal::display)
      .def("__repr__",
           [](const Ideal& i) { return "<Ideal " + i.display() + ">"; });

  py::class_<QuotientRing>(m, "QuotientRing")
      .def_readonly("base", &QuotientRing::base)
      .def_readonly("ideal", &QuotientRing::ideal)
      .def_readonly("ring", &QuotientRing::ring)
      .def_readonly("projection", &QuotientRing::projection)
      .def("project", &QuotientRing::project);

  py::class_<RingMap>(m, "RingMap")
      .def_readonly("source", &RingMap::source)
      .def_readonly("target", &RingMap::target)
      .def_readonly("images", &RingMap::images)
      .def_readonly("isomorphism", &RingMap::isomorphism);

  py::class_<Subring>(m, "Subring")
      .def_readonly("elements", &Subring::elements)
      .def_readonly("unity", &Subring::unity)
      .def_readonly("unity_inherited", &Subring::unity_inherited);

  py::class_<Mat2>(m, "Mat2")
      .def(py::init<Element, Element, Element, Element>(), py::arg("a"),
           py::arg("b"), py::arg("c"), py::arg("d"))
      .def_readonly("a", &Mat2::a)
      .def_readonly("b", &Mat2::b)
      .def_readonly("c", &Mat2::c)
      .def_readonly("d", &Mat2::d);

  py::class_<PointLabel>(m, "PointLabel")
      .def_readonly("layer", &PointLabel::layer)
      .def_readonly("series", &PointLabel::series)
      .def_readonly("index", &PointLabel::index)
      .def_readonly("tag", &PointLabel::tag)
      .def("__str__", &PointLabel::str)
      .def("__repr__",
           [](const PointLabel& l) { return "<PointLabel " + l.str() + ">"; });

  py::class_<ShellTable>(m, "ShellTable")
      .def_readonly("row_labels", &ShellTable::row_labels)
      .def_readonly("col_labels", &ShellTable::col_labels)
      .def_readonly("cells", &ShellTable::cells);

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("passed", &CheckResult::passed)
      .def_readonly("detail", &CheckResult::detail)
      .def("__repr__", [](const CheckResult& c) {
        return std::string(c.passed ? "<PASS " : "<FAIL ") + c.name + ">";
      });

  py::class_<ProjectiveLine>(m, "ProjectiveLine")
      .def(py::init<Ring>())
      .def_property_readonly("ring", &ProjectiveLine::ring)
      .def("point_count", &ProjectiveLine::point_count)
      .def("point", &ProjectiveLine::point)
      .def("point_name", &ProjectiveLine::point_name)
      .def("point_index", &ProjectiveLine::point_index)
      .def("distant", &ProjectiveLine::distant)
      .def("neighbour", &ProjectiveLine::neighbour)
      .def("distant_degree", &ProjectiveLine::distant_degree)
      .def("distant_edge_count", &ProjectiveLine::distant_edge_count)
      .def("neighbourhood", &ProjectiveLine::neighbourhood)
      .def("common_neighbourhood",
           [](const ProjectiveLine& line, const py::sequence& points) {
             return line.common_neighbourhood(to_indices(points));
           })
      .def("transitivity_counterexample",
           &ProjectiveLine::transitivity_counterexample)
      .def("__len__", &ProjectiveLine::point_count)
      .def("__repr__", [](const ProjectiveLine& line) {
        return "<ProjectiveLine over " + line.ring().label() + " with " +
               std::to_string(line.point_count()) + " points>";
      });

  m.def("make_gf", &make_gf, py::arg("p"), "The prime field GF(p)");
  m.def("direct_product", &direct_product, py::arg("factors"));
  m.def("ring_from_spec", &ring_from_spec, py::arg("text"));
  m.def("builtin_ring", &builtin_ring, py::arg("name"));
  m.def("resolve_ring_argument", &resolve_ring_argument, py::arg("arg"));
  m.def("builtin_isomorphism_class", &builtin_isomorphism_class);

  m.def("principal_ideal", &principal_ideal);
  m.def("all_ideals", &all_ideals);
  m.def("maximal_ideals", &maximal_ideals);
  m.def("jacobson_radical", &jacobson_radical);
  m.def("is_local", &is_local);
  m.def("quotient", &quotient);
  m.def("find_isomorphism", &find_isomorphism);
  m.def("is_homomorphism", &is_homomorphism);
  m.def("is_isomorphism_map", &is_isomorphism_map);
  m.def("subrings", &subrings, py::arg("ring"),
        py::arg("require_inherited_unity"));
  m.def("subring_as_ring", [](const Ring& r, const py::sequence& elements) {
    std::vector<std::uint16_t> idx;
    for (const auto& item : elements) idx.push_back(item.cast<std::uint16_t>());
    return subring_as_ring(r, idx);
  });

  m.def("det2", &det2);
  m.def("is_invertible_2x2", &is_invertible_2x2);
  m.def("is_admissible", &is_admissible, py::arg("alpha"), py::arg("beta"));
  m.def("build_line", &build_line);

  m.def("is_gf2_cubed", &is_gf2_cubed);
  m.def("zero_divisor_weight", &zero_divisor_weight);
  m.def("label_point", &label_point);
  m.def("point_by_label", &point_by_label);
  m.def("inner_shell_labels", &inner_shell_labels);
  m.def("outer_shell_labels", &outer_shell_labels);
  m.def("nucleus_labels", &nucleus_labels);
  m.def("shell_table", [](const ProjectiveLine& line,
                          const std::vector<std::string>& rows,
                          const std::vector<std::string>& cols) {
    return shell_table(line, rows, cols);
  });
  m.def("layer_census", &layer_census);

  m.def("ring_report", &ring_report);
  m.def("ideals_report", &ideals_report);
  m.def("line_report", &line_report);
  m.def("tables_report", &tables_report);
  m.def("render_table", &render_table);
  m.def("export_graph", &export_graph, py::arg("ring"), py::arg("target"),
        py::arg("format"), py::arg("shell") = ShellChoice::Inner);
  m.def("run_suite", &run_suite);
  m.def("render_check_report", &render_check_report);

  m.def("admissible_by_completion", &admissible_by_completion);
  m.def("invertible_by_search", &invertible_by_search);

  m.attr("__version__") = "0.1.0";
}
