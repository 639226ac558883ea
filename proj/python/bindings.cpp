#include "torusk/cocycle.hpp"
#include "torusk/errors.hpp"
#include "torusk/ktheory.hpp"
#include "torusk/lattice.hpp"
#include "torusk/spectral.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace py = pybind11;
using namespace torusk;

namespace {

using PyMatrix = std::vector<std::vector<py::int_>>;
using PyTerms = py::dict;

Integer to_integer(const py::int_& x) { return Integer(py::str(x).cast<std::string>()); }

py::int_ to_py(const Integer& x) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

IntMatrix to_matrix(const PyMatrix& rows, std::size_t cols_if_empty = 0) {
    std::vector<std::vector<Integer>> out;
    for (const auto& row : rows) {
        out.emplace_back();
        for (const auto& x : row)
            out.back().push_back(to_integer(x));
    }
    return IntMatrix::from_rows(out, cols_if_empty);
}

py::list to_py(const IntMatrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.append(to_py(m(i, j)));
        rows.append(row);
    }
    return rows;
}

// Classes cross as {tuple(subset): coeff}.
KClass to_kclass(int d, const PyTerms& terms) {
    KClass k(d);
    for (const auto& [key, value] : terms) {
        Subset s;
        for (const auto& i : key)
            s.push_back(i.cast<int>());
        k.add(s, to_integer(value.cast<py::int_>()));
    }
    return k;
}

py::dict to_py(const KClass& k) {
    py::dict out;
    for (const auto& [s, c] : k.terms())
        out[py::tuple(py::cast(s))] = to_py(c);
    return out;
}

} // namespace

PYBIND11_MODULE(_torusk, m) {
    m.doc() = "Integer K-theory of tori, cocycle indices and truncated spectral triples";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ArithmeticError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    m.def("determinant", [](const PyMatrix& a) { return to_py(determinant(to_matrix(a))); });
    m.def("smith_normal_form", [](const PyMatrix& a) {
        const SmithForm s = smith_normal_form(to_matrix(a));
        return py::make_tuple(to_py(s.U), to_py(s.D), to_py(s.V));
    }, "Returns (U, D, V) with U·A·V = D.");
    m.def("kernel_lattice", [](const PyMatrix& a, std::size_t cols) { return to_py(kernel_lattice(to_matrix(a, cols))); },
          py::arg("a"), py::arg("cols") = 0);

    m.def("wedge", [](int d, const PyTerms& a, const PyTerms& b) { return to_py(wedge(to_kclass(d, a), to_kclass(d, b))); });
    m.def("pairing", [](int d, const PyTerms& a, const PyTerms& b) {
        return to_py(pairing(to_kclass(d, a), to_kclass(d, b)));
    });
    m.def("fm_transform", [](int d, const PyTerms& a) { return to_py(fm_transform(to_kclass(d, a))); });
    m.def("fm_inverse", [](int d, const PyTerms& a) { return to_py(fm_inverse(to_kclass(d, a))); });
    m.def("class_of_subtorus", [](int d, const PyMatrix& basis, int orientation) {
        return to_py(class_of_subtorus(Subtorus::make(d, to_matrix(basis), orientation)));
    }, py::arg("d"), py::arg("basis"), py::arg("orientation") = 1);
    m.def("perp_subtorus", [](int d, const PyMatrix& basis, int orientation) {
        const Subtorus t = perp_subtorus(Subtorus::make(d, to_matrix(basis), orientation));
        return py::make_tuple(to_py(t.basis), t.orientation);
    }, py::arg("d"), py::arg("basis"), py::arg("orientation") = 1);

    m.def("equations_to_parametrization", [](const PyMatrix& a, const PyMatrix& u) {
        return to_py(equations_to_parametrization(to_matrix(a), to_matrix(u)).param);
    });
    m.def("intersection_index", [](int d, int n, const PyMatrix& param) {
        return to_py(intersection_index(GeometricCocycle::make(d, n, to_matrix(param, d))));
    });
    m.def("cocycle_class", [](int d, int n, const PyMatrix& param) {
        return to_py(cocycle_class(GeometricCocycle::make(d, n, to_matrix(param, d))));
    });
    m.def("euler_torsion_order", [](const py::int_& chi) -> std::optional<py::int_> {
        const TorsionOrder t = euler_torsion_order(to_integer(chi));
        if (!t.is_finite())
            return std::nullopt;
        return to_py(*t.order);
    }, "Order of the boundary class, or None when it is non-torsion.");

    m.def("dolbeault_index", [](int cutoff, double tol) { return numerical_index(build_dolbeault_torus(cutoff), tol); },
          py::arg("cutoff"), py::arg("tol") = 1e-8);
    m.def("heisenberg_index", [](long p, long q, int cutoff, double tol) {
        return numerical_index(heisenberg_model(p, q, cutoff), tol);
    }, py::arg("p"), py::arg("q"), py::arg("cutoff") = 200, py::arg("tol") = 1e-8);
    m.def("rotated_angle", &rotated_angle);
    m.def("commutator_norms", [](double theta, int cutoff) {
        const auto op = build_dolbeault_torus(cutoff);
        const auto [u, v] = representation_generators(theta, cutoff);
        return std::make_tuple(commutator_norm(op, u), commutator_norm(op, v));
    });
    m.def("weyl_exponent", [](const std::string& op, int cutoff, double lo, double hi, int n, int d) {
        if (op == "dolbeault")
            return weyl_exponent(build_dolbeault_torus(cutoff), lo, hi);
        if (op == "schrodinger")
            return weyl_exponent(build_schrodinger_product(n, d, cutoff), lo, hi);
        throw ValidationError("operator must be dolbeault or schrodinger");
    }, py::arg("op"), py::arg("cutoff"), py::arg("lo"), py::arg("hi"), py::arg("n") = 1, py::arg("d") = 1);
}
