#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "porism/porism.hpp"

namespace py = pybind11;
using namespace porism;

namespace {

// Rationals cross the boundary as fractions.Fraction; inputs may be int,
// str or Fraction.
Scalar to_scalar(const py::handle& h) {
  return Scalar::parse(py::str(h).cast<std::string>());
}

py::object to_fraction(const Scalar& s) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(s.str());
}

Vec3 to_vec(const py::sequence& s) {
  if (py::len(s) != 3) throw py::value_error("expected three coordinates");
  return {to_scalar(s[0]), to_scalar(s[1]), to_scalar(s[2])};
}

HomPoint to_point(const py::sequence& s) { return HomPoint(to_vec(s)); }
HomLine to_line(const py::sequence& s) { return HomLine(to_vec(s)); }

std::vector<HomPoint> to_points(const py::sequence& s) {
  std::vector<HomPoint> out;
  for (const auto& p : s) out.push_back(to_point(py::reinterpret_borrow<py::sequence>(p)));
  return out;
}

py::tuple from_vec(const Vec3& v) {
  return py::make_tuple(to_fraction(v[0]), to_fraction(v[1]), to_fraction(v[2]));
}

py::tuple from_point(const HomPoint& p) { return from_vec(p.coords()); }
py::tuple from_line(const HomLine& l) { return from_vec(l.coords()); }

py::list from_points(const std::vector<HomPoint>& ps) {
  py::list out;
  for (const auto& p : ps) out.append(from_point(p));
  return out;
}

py::tuple from_mat(const Mat3& m) {
  return py::make_tuple(from_vec(m.row(0)), from_vec(m.row(1)), from_vec(m.row(2)));
}

// Upper-triangle coefficients a11 a12 a13 a22 a23 a33.
Conic to_conic(const py::sequence& s) {
  if (py::len(s) != 6) throw py::value_error("a conic is given by six coefficients");
  return Conic::from_coefficients(to_scalar(s[0]), to_scalar(s[1]), to_scalar(s[2]),
                                  to_scalar(s[3]), to_scalar(s[4]), to_scalar(s[5]));
}

py::tuple from_conic(const Conic& c) {
  const Mat3& a = c.matrix();
  return py::make_tuple(to_fraction(a(0, 0)), to_fraction(a(0, 1)), to_fraction(a(0, 2)),
                        to_fraction(a(1, 1)), to_fraction(a(1, 2)), to_fraction(a(2, 2)));
}

py::object from_cross_ratio(const CrossRatio& r) {
  return r.is_infinite() ? py::object(py::none()) : to_fraction(r.value());
}

py::dict from_position(const LinePosition& pos) {
  py::dict d;
  if (const auto* s = std::get_if<Secant>(&pos)) {
    d["kind"] = "secant";
    d["points"] = py::make_tuple(from_point(s->r), from_point(s->s));
  } else if (const auto* s = std::get_if<SecantIrrational>(&pos)) {
    d["kind"] = "secant_irrational";
    d["discriminant"] = to_fraction(s->discriminant);
  } else if (const auto* t = std::get_if<Tangent>(&pos)) {
    d["kind"] = "tangent";
    d["points"] = py::make_tuple(from_point(t->r));
  } else {
    d["kind"] = "missing";
  }
  return d;
}

template <std::size_t N>
std::array<HomPoint, N> fixed(const std::vector<HomPoint>& v) {
  if (v.size() != N) throw py::value_error("expected " + std::to_string(N) + " points");
  return [&]<std::size_t... I>(std::index_sequence<I...>) {
    return std::array<HomPoint, N>{v[I]...};
  }(std::make_index_sequence<N>{});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact projective geometry of reversion porisms on conics";

  static py::exception<GeometryError> geometry_error(m, "GeometryError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const GeometryError& e) {
      py::object err = py::reinterpret_borrow<py::object>(geometry_error.ptr())(e.what());
      err.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(geometry_error.ptr(), err.ptr());
    }
  });

  m.def("unit_circle", [] { return from_conic(Conic::unit_circle()); });
  m.def("join", [](py::sequence p, py::sequence q) { return from_line(join(to_point(p), to_point(q))); });
  m.def("meet", [](py::sequence l, py::sequence k) { return from_point(meet(to_line(l), to_line(k))); });
  m.def("cross_ratio", [](py::sequence a, py::sequence b, py::sequence c, py::sequence d) {
    return from_cross_ratio(cross_ratio(to_point(a), to_point(b), to_point(c), to_point(d)));
  }, "cr(A,B;C,D); None when infinite");
  m.def("polar", [](py::sequence c, py::sequence p) { return from_line(polar(to_conic(c), to_point(p))); });
  m.def("line_position", [](py::sequence c, py::sequence l) {
    return from_position(line_position(to_conic(c), to_line(l)));
  });
  m.def("conic_through_five_points", [](py::sequence pts) {
    return from_conic(conic_through_five_points(fixed<5>(to_points(pts))));
  });
  m.def("radical_axis", [](py::sequence c1, py::sequence c2) {
    return from_line(radical_axis(to_conic(c1), to_conic(c2)));
  });
  m.def("pencil_member", [](py::sequence c, py::sequence l, py::handle mu) {
    return from_conic(pencil_member(to_conic(c), to_line(l), to_scalar(mu)));
  });
  m.def("reversion_matrix", [](py::sequence c, py::sequence p) {
    return from_mat(reversion_matrix(to_conic(c), to_point(p)).matrix());
  }, "Canonical integer matrix of the reversion about p");
  m.def("three_to_one", [](py::sequence c, py::sequence u, py::sequence v, py::sequence w) {
    return from_point(three_to_one(to_conic(c), to_point(u), to_point(v), to_point(w)));
  });
  m.def("closing_property", [](py::sequence c, py::sequence centers) {
    return closing_property(to_conic(c), to_points(centers));
  });
  m.def("trace_polygon", [](py::sequence c, py::sequence centers, py::sequence a1) {
    const PolygonTrace t = trace_polygon(to_conic(c), to_points(centers), to_point(a1));
    return py::make_tuple(from_points(t.vertices), t.closed);
  }, "(vertices, closed)");
  m.def("closing_line", [](py::sequence c, py::sequence prefix) {
    return from_line(closing_line(to_conic(c), to_points(prefix)));
  });
  m.def("complete_porism", [](py::sequence c, py::sequence prefix, py::sequence next) {
    return from_point(complete_porism(to_conic(c), to_points(prefix), to_point(next)));
  });
  m.def("fixed_elements", [](py::sequence c, py::sequence centers) {
    const Conic conic = to_conic(c);
    const FixedElements fe = fixed_elements(conic, compose_reversions(conic, to_points(centers)));
    py::dict d = from_position(fe.position);
    d["line"] = from_line(fe.line);
    d["pole"] = from_point(fe.pole);
    return d;
  }, "Fixed line, its pole and position of the composite of the given reversions");
  m.def("butterfly_secant_criterion", [](py::sequence c, py::sequence centers) {
    const SecantCriterion s = butterfly_secant_criterion(to_conic(c), fixed<4>(to_points(centers)));
    return py::make_tuple(s.closes, from_cross_ratio(s.outer), from_cross_ratio(s.inner));
  }, "(closes, cr(R,S;P1,P4), cr(R,S;P2,P3))");
  m.def("butterfly_tangent_criterion", [](py::sequence c, py::sequence contact, py::sequence centers) {
    return butterfly_tangent_criterion(to_conic(c), to_point(contact), fixed<4>(to_points(centers))).closes;
  });
  m.def("conjugate_scene", [](py::sequence c, py::sequence l, py::sequence centers) {
    return from_points(conjugate_scene(to_conic(c), to_line(l), to_points(centers)));
  });
  m.def("transfer_check", [](py::sequence c, py::sequence centers, py::sequence d) {
    return transfer_check(PorismScene(to_conic(c), to_points(centers)), to_conic(d));
  });
}
