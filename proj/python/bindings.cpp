#include "sympoly/cli.hpp"
#include "sympoly/identities.hpp"
#include "sympoly/partfunc.hpp"
#include "sympoly/pcore.hpp"
#include "sympoly/symfunc.hpp"
#include "sympoly/trec.hpp"
#include "sympoly/verify.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;

// Rationals cross the boundary as fractions.Fraction; integers, Fractions
// and "p/q" strings are accepted on input.
namespace pybind11::detail {

template <>
struct type_caster<sympoly::BigInt> {
    PYBIND11_TYPE_CASTER(sympoly::BigInt, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = sympoly::BigInt(py::str(src).cast<std::string>(), 10);
        return true;
    }

    static handle cast(const sympoly::BigInt& z, return_value_policy, handle) {
        return PyLong_FromString(z.get_str(10).c_str(), nullptr, 10);
    }
};

template <>
struct type_caster<sympoly::Rational> {
    PYBIND11_TYPE_CASTER(sympoly::Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        try {
            if (PyBool_Check(src.ptr())) return false;
            if (PyLong_Check(src.ptr()) || PyUnicode_Check(src.ptr())) {
                value = sympoly::parse_rational(py::str(src).cast<std::string>());
                return true;
            }
            if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
                const auto num = py::str(src.attr("numerator")).cast<std::string>();
                const auto den = py::str(src.attr("denominator")).cast<std::string>();
                if (den == "0") return false;
                value = sympoly::make_rational(sympoly::BigInt(num, 10), sympoly::BigInt(den, 10));
                return true;
            }
        } catch (const std::exception&) {
            return false;
        }
        return false;
    }

    static handle cast(const sympoly::Rational& q, return_value_policy, handle) {
        static py::object fraction = py::module_::import("fractions").attr("Fraction");
        py::object num = py::reinterpret_steal<py::object>(PyLong_FromString(q.get_num().get_str(10).c_str(), nullptr, 10));
        py::object den = py::reinterpret_steal<py::object>(PyLong_FromString(q.get_den().get_str(10).c_str(), nullptr, 10));
        return fraction(num, den).release();
    }
};

}  // namespace pybind11::detail

namespace {

sympoly::Family family_of(const std::string& name) {
    if (name == "E") return sympoly::Family::E;
    if (name == "s" || name == "sigma") return sympoly::Family::Sigma;
    throw py::value_error("family must be 'E' or 's'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    using namespace sympoly;
    m.doc() = "Exact rational P_n, T_r, f_r and W_1 with verification suites";

    m.def("bernoulli", &bernoulli, py::arg("k"));
    m.def("binomial", &binomial, py::arg("a"), py::arg("b"));
    m.def("factorial", [](unsigned long a) { return factorial(a); }, py::arg("a"));
    m.def("parse_rational", [](const std::string& s) { return parse_rational(s); });

    m.def("power_sums", [](const PointTuple& x, int count) {
        const auto v = power_sums(x, count).values();
        return std::vector<Rational>(v.begin(), v.end());
    }, py::arg("x"), py::arg("count"));
    m.def("partitions_of", [](int w) {
        std::vector<std::vector<int>> out;
        for (const auto& p : partitions_of(w)) out.push_back(p.parts());
        return out;
    }, py::arg("w"));

    py::class_<PowerSumPoly>(m, "PowerSumPoly")
        .def(py::init<>())
        .def("coeff", [](const PowerSumPoly& p, std::vector<int> parts) { return p.coeff(PartitionMonomial(std::move(parts))); })
        .def("to_dict", [](const PowerSumPoly& p, const std::string& family) {
            py::dict out;
            for (const auto& [mono, c] : p.terms()) out[py::str(mono.to_string(family_of(family)))] = py::cast(c);
            return out;
        }, py::arg("family") = "E")
        .def("display", [](const PowerSumPoly& p, const std::string& family) { return p.to_display(family_of(family)); },
             py::arg("family") = "E")
        .def("eval_at", [](const PowerSumPoly& p, const PointTuple& x) {
            return p.eval(power_sums(x, std::max(p.max_index(), 1)));
        }, py::arg("x"))
        .def("flip_even_signs", &PowerSumPoly::flip_even_signs)
        .def("homogeneous_weight", &PowerSumPoly::homogeneous_weight)
        .def("__len__", &PowerSumPoly::size)
        .def("__eq__", [](const PowerSumPoly& a, const PowerSumPoly& b) { return a == b; })
        .def("__add__", [](const PowerSumPoly& a, const PowerSumPoly& b) { return a + b; })
        .def("__str__", [](const PowerSumPoly& p) { return p.to_string(); })
        .def("__repr__", [](const PowerSumPoly& p) { return "PowerSumPoly(" + p.to_string() + ")"; });

    m.def("eval_P", [](unsigned long n, const PointTuple& x, std::size_t cap) { return eval_P(n, x, cap); }, py::arg("n"), py::arg("x"), py::arg("max_vars") = kDefaultSubsetCap);
    m.def("eval_P_recursive", [](unsigned long n, const PointTuple& x) { return eval_P_recursive(n, x); }, py::arg("n"), py::arg("x"));
    m.def("eval_T_via_P", [](unsigned long r, const PointTuple& x) { return eval_T_via_P(r, x); }, py::arg("r"), py::arg("x"));
    m.def("eval_T_direct", [](unsigned long r, const PointTuple& x) { return eval_T_direct(r, x); }, py::arg("r"), py::arg("x"));
    m.def("interpolate_powersum", [](const std::function<Rational(const PointTuple&)>& f, int w, std::uint64_t seed) {
        return interpolate_powersum([&](std::span<const Rational> x) { return f(PointTuple(x.begin(), x.end())); }, w, seed);
    }, py::arg("evaluate"), py::arg("w"), py::arg("seed") = kDefaultSeed);
    m.def("compute_T_poly", &compute_T_poly, py::arg("r"), py::arg("seed") = kDefaultSeed);

    m.def("eval_f", [](unsigned long r, const PointTuple& d) { return eval_f(r, d); }, py::arg("r"), py::arg("d"));
    m.def("compute_f_poly", &compute_f_poly, py::arg("r"), py::arg("seed") = kDefaultSeed);
    m.def("eval_W1", [](const Rational& s, const PointTuple& d) { return eval_W1(s, d); }, py::arg("s"), py::arg("d"));
    m.def("count_partitions_brute", [](unsigned long s, const PointTuple& d) { return count_partitions_brute(s, d); },
          py::arg("s"), py::arg("d"));

    m.def("cnr_recursive", [](unsigned n, unsigned r) {
        const auto v = cnr_recursive(n, r);
        return py::make_tuple(py::cast(v.value), v.terms);
    }, py::arg("n"), py::arg("r"));
    m.def("cnr_closed", &cnr_closed, py::arg("n"), py::arg("r"));
    m.def("relation26_elimination", &relation26_elimination, py::arg("n"));

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_property_readonly("claim", &VerificationReport::claim)
        .def_property_readonly("total", &VerificationReport::total)
        .def_property_readonly("passed", &VerificationReport::passed)
        .def_property_readonly("status", &VerificationReport::status)
        .def_property_readonly("failure_count", [](const VerificationReport& r) { return r.failures().size(); })
        .def("to_json", [](const VerificationReport& r) { return r.to_json().dump(); })
        .def("__repr__", &VerificationReport::summary);

    m.def("check_parity", [](const PointTuple& d, const PointTuple& s) { return check_parity(d, s); }, py::arg("d"), py::arg("s_values"));
    m.def("check_recursion", [](const PointTuple& d, const PointTuple& s) { return check_recursion(d, s); }, py::arg("d"), py::arg("s_values"));
    m.def("check_proximity", [](const PointTuple& d, unsigned blocks) { return check_proximity(d, blocks); }, py::arg("d"), py::arg("blocks") = 3);
    m.def("verify_conjecture1", &verify_conjecture1, py::arg("max_r"), py::arg("seed") = kDefaultSeed);
    m.def("verify_conjecture2", &verify_conjecture2, py::arg("m"), py::arg("seed") = kDefaultSeed, py::arg("trials") = 50);
    m.def("verify_relation26", [](const std::string& family, unsigned n, unsigned mm, std::uint64_t seed, unsigned trials) {
        return verify_relation26(family == "f" ? RatioFamily::F : RatioFamily::T, n, mm, seed, trials);
    }, py::arg("family"), py::arg("n"), py::arg("m"), py::arg("seed") = kDefaultSeed, py::arg("trials") = 50);
    m.def("verify_bounds", &verify_bounds, py::arg("max_r"), py::arg("m"), py::arg("seed") = kDefaultSeed,
          py::arg("trials") = 200);
    m.def("verify_power_sum_relations", &verify_power_sum_relations, py::arg("m"), py::arg("seed") = kDefaultSeed,
          py::arg("trials") = 200);
    m.def("verify_lemmas", &verify_lemmas, py::arg("max_n") = 10, py::arg("max_m") = 6,
          py::arg("seed") = kDefaultSeed, py::arg("trials") = 200);
    m.def("verify_eq28_equivalence", &verify_eq28_equivalence, py::arg("n"));

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));

    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<InterpolationError>(m, "InterpolationError", PyExc_RuntimeError);
}
