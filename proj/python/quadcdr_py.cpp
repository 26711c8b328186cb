#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quadcdr/cdr_check.hpp"
#include "quadcdr/error.hpp"
#include "quadcdr/factor.hpp"
#include "quadcdr/literal.hpp"
#include "quadcdr/oracle.hpp"

namespace py = pybind11;

// Python int <-> mpz_class through the decimal string; exact at any size.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr()))
            return false;
        value = mpz_class(py::str(src).cast<std::string>(), 10);
        return true;
    }

    static handle cast(const mpz_class& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};
}  // namespace pybind11::detail

using namespace quadcdr;

namespace {

py::tuple triple(const Ideal& I) { return py::make_tuple(I.a(), I.b(), I.c()); }

}  // namespace

PYBIND11_MODULE(_quadcdr, m) {
    m.doc() = "Exact ideal arithmetic and containment-division checks in quadratic orders";

    static py::exception<Error> error_type(m, "QuadCdrError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object cls = py::reinterpret_borrow<py::object>(error_type.ptr());
            py::object exc = cls(std::string(error_code_name(e.code())) + ": " + e.what());
            exc.attr("code") = std::string(error_code_name(e.code()));
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    py::class_<RingSpec>(m, "RingSpec")
        .def_readonly("d", &RingSpec::d)
        .def_readonly("f", &RingSpec::f)
        .def_readonly("T", &RingSpec::T)
        .def_readonly("Nc", &RingSpec::Nc)
        .def_readonly("disc", &RingSpec::disc)
        .def_property_readonly("is_maximal", &RingSpec::is_maximal)
        .def("__eq__", [](const RingSpec& a, const RingSpec& b) { return a == b; })
        .def("__repr__", [](const RingSpec& r) { return "RingSpec(" + describe(r) + ")"; });

    m.def("make_ring", &make_ring, py::arg("d"), py::arg("f") = 1);
    m.def("parse_ring_spec", [](const std::string& s) { return parse_ring_spec(s); });

    py::class_<Element>(m, "Element")
        .def(py::init<Int, Int>(), py::arg("x"), py::arg("y") = 0)
        .def_readonly("x", &Element::x)
        .def_readonly("y", &Element::y)
        .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
        .def("__repr__", [](const Element& e) { return "Element(" + e.x.get_str() + ", " + e.y.get_str() + ")"; });

    m.def("elem_mul", &elem_mul);
    m.def("elem_norm", &elem_norm);

    py::class_<Ideal>(m, "Ideal")
        .def_property_readonly("ring", &Ideal::ring)
        .def_property_readonly("a", &Ideal::a)
        .def_property_readonly("b", &Ideal::b)
        .def_property_readonly("c", &Ideal::c)
        .def_property_readonly("triple", &triple)
        .def("norm", &Ideal::norm)
        .def("is_unit", &Ideal::is_unit)
        .def("__eq__", [](const Ideal& a, const Ideal& b) { return a == b; })
        .def("__lt__", [](const Ideal& a, const Ideal& b) { return a < b; })
        .def("__hash__", [](const Ideal& I) { return py::hash(py::str(render(I) + describe(I.ring()))); })
        .def("__mul__", [](const Ideal& a, const Ideal& b) { return mul(a, b); })
        .def("__str__", &render)
        .def("__repr__", [](const Ideal& I) { return "Ideal" + render_triple(I); });

    m.def("validate_hnf", &validate_hnf);
    m.def("unit_ideal", &unit_ideal);
    m.def("from_generators", [](const RingSpec& r, const std::vector<Element>& gens) {
        return from_generators(r, gens);
    });
    m.def("parse_ideal", [](const RingSpec& r, const std::string& s) { return parse_ideal_literal(r, s); });
    m.def("contains", &contains, py::arg("J"), py::arg("I"), "True iff I is contained in J.");
    m.def("mul", &mul);
    m.def("colon", &colon);
    m.def("divide_exact", &divide_exact);
    m.def("enumerate_of_norm", [](const RingSpec& r, const Int& n) { return enumerate_of_norm(r, n).members; });
    m.def("enumerate_up_to", [](const RingSpec& r, const Int& n) { return enumerate_up_to(r, n).members; });
    m.def("is_prime", &is_prime);

    m.def("split_rational_prime", [](const RingSpec& r, const Int& p) {
        SplitResult s = split_rational_prime(r, p);
        return py::make_tuple(split_kind_name(s.kind), s.primes);
    });
    m.def(
        "factor_ideal",
        [](const Ideal& I, std::optional<unsigned long> max_steps) {
            Factorization fz = factor_ideal(I, max_steps);
            return py::make_tuple(fz.factors, fz.chain.ideals());
        },
        py::arg("I"), py::arg("max_steps") = py::none());
    m.def("check_dicc_chain", [](const std::vector<Ideal>& chain) {
        DiccCheck c = check_dicc_chain(chain);
        return py::make_tuple(c.is_divisor_chain, c.stationary_at);
    });

    m.def(
        "check_cdr",
        [](const RingSpec& r, const Int& bound) {
            CdrReport rep = check_cdr(r, bound);
            py::list violations;
            for (const Violation& v : rep.violations)
                violations.append(py::make_tuple(v.I, v.J));
            py::dict out;
            out["verdict"] = verdict_name(rep.verdict);
            out["universe_size"] = rep.universe_size;
            out["pairs_checked"] = rep.pairs_checked;
            out["dedekind_expected"] = rep.dedekind_expected;
            out["violations"] = violations;
            return out;
        },
        py::arg("ring"), py::arg("norm_bound"));
    m.def("classify_ring", [](const RingSpec& r, const Int& bound) {
        Classification c = classify_ring(r, bound);
        return py::make_tuple(c.dedekind, verdict_name(c.cdr_verdict), c.consistent);
    });

    m.def("brute_divide", &oracle::brute_divide);
    m.def("count_ideals", &oracle::count_ideals);
}
