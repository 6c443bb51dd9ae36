#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>

#include "dirichlet/census.hpp"
#include "dirichlet/characters.hpp"
#include "dirichlet/error.hpp"
#include "dirichlet/lseries.hpp"
#include "dirichlet/modular_index.hpp"
#include "dirichlet/primes.hpp"
#include "dirichlet/quadratic.hpp"

namespace py = pybind11;
using namespace dirichlet;

namespace {

std::vector<i64> to_vector(std::span<const i64> s) { return {s.begin(), s.end()}; }

py::dict l_value_dict(const LValue& v) {
    py::dict d;
    d["value"] = v.value;
    d["error_bound"] = v.error_bound;
    d["method"] = std::string(to_string(v.method));
    d["s"] = v.s;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Dirichlet characters, L-functions and primes in arithmetic progressions";

    static py::exception<Error> error_type(m, "DirichletError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type.ptr())(e.what());
            exc.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    py::class_<OddPrimePower>(m, "OddPrimePower")
        .def_readonly("prime", &OddPrimePower::prime)
        .def_readonly("exponent", &OddPrimePower::exponent)
        .def_readonly("modulus", &OddPrimePower::modulus)
        .def_readonly("order", &OddPrimePower::order)
        .def_readonly("primitive_root", &OddPrimePower::primitive_root);

    py::class_<ModulusFactorization>(m, "ModulusFactorization")
        .def_readonly("k", &ModulusFactorization::k)
        .def_readonly("two_exponent", &ModulusFactorization::two_exponent)
        .def_readonly("odd_factors", &ModulusFactorization::odd_factors)
        .def_readonly("group_order", &ModulusFactorization::group_order)
        .def("component_orders", &ModulusFactorization::component_orders);

    m.def("factorize_modulus", &factorize_modulus, py::arg("k"));
    m.def("primitive_root", &primitive_root, py::arg("p"), py::arg("pi") = 1);
    m.def("index", &dirichlet::index, py::arg("n"), py::arg("p"), py::arg("pi") = 1);
    m.def(
        "index_system", [](i64 n, i64 k) { return index_system(n, factorize_modulus(k)).components(); },
        py::arg("n"), py::arg("k"));

    py::class_<Character>(m, "Character")
        .def(py::init([](i64 k, std::vector<i64> exponents) {
                 return Character(factorize_modulus(k), std::move(exponents));
             }),
             py::arg("k"), py::arg("exponents"))
        .def_property_readonly("k", &Character::k)
        .def_property_readonly("exponents", [](const Character& c) { return to_vector(c.exponents()); })
        .def_property_readonly("component_orders", [](const Character& c) { return to_vector(c.component_orders()); })
        .def_property_readonly("label", &Character::label)
        .def_property_readonly("character_class", [](const Character& c) { return std::string(to_string(classify(c))); })
        .def("__call__", &Character::operator(), py::arg("n"))
        .def("values", &Character::values)
        .def("conjugate", &conjugate)
        .def("__eq__", &Character::operator==)
        .def("__repr__", [](const Character& c) { return "Character('" + c.label() + "')"; });

    m.def(
        "enumerate_characters", [](i64 k) { return enumerate_characters(factorize_modulus(k)); }, py::arg("k"));
    m.def("parse_character", &parse_character_label, py::arg("label"));
    m.def(
        "orthogonality_sum", [](i64 k, i64 n, i64 mm) { return orthogonality_sum(factorize_modulus(k), n, mm); },
        py::arg("k"), py::arg("n"), py::arg("m"));

    m.def(
        "dirichlet_series",
        [](const Character& chi, double s, std::uint64_t N, bool em_tail) {
            return l_value_dict(dirichlet_series(chi, s, N, {.euler_maclaurin_tail = em_tail}));
        },
        py::arg("chi"), py::arg("s"), py::arg("N") = 1000000, py::arg("em_tail") = false);
    m.def(
        "euler_product",
        [](const Character& chi, double s, std::uint64_t Q) { return l_value_dict(euler_product(chi, s, Q)); },
        py::arg("chi"), py::arg("s"), py::arg("Q") = 1000000);
    m.def(
        "l_one_integral", [](const Character& chi) { return l_value_dict(l_one_integral(chi)); }, py::arg("chi"));
    m.def(
        "l_one_closed_form", [](const Character& chi) { return l_value_dict(l_one_closed_form_prime(chi)); },
        py::arg("chi"));
    m.def(
        "log_l",
        [](const Character& chi, double s, std::uint64_t Q) {
            const auto r = log_l(chi, s, Q);
            py::dict d;
            d["value"] = r.value;
            d["error_bound"] = r.error_bound;
            d["tracking_steps"] = r.tracking_steps;
            return d;
        },
        py::arg("chi"), py::arg("s"), py::arg("Q") = 1000000);
    m.def(
        "pole_scan",
        [](i64 k, std::optional<std::vector<double>> rho) {
            const auto r = principal_pole_scan(factorize_modulus(k), rho ? *rho : default_pole_grid());
            py::dict d;
            d["k"] = r.k;
            d["rho"] = r.rho_values;
            d["residue_estimates"] = r.residue_estimates;
            d["extrapolated_residue"] = r.extrapolated_residue;
            d["expected"] = r.expected;
            return d;
        },
        py::arg("k"), py::arg("rho") = py::none());

    m.def(
        "primes_up_to", [](std::uint64_t n) { return sieve(n); }, py::arg("n"));
    m.def(
        "census",
        [](std::uint64_t N, i64 k) {
            const auto r = census(N, k);
            py::dict d;
            d["N"] = r.N;
            d["k"] = r.k;
            d["counts"] = r.counts;
            d["excluded"] = r.excluded;
            d["total"] = r.total;
            d["ratio_spread"] = r.ratio_spread;
            return d;
        },
        py::arg("N"), py::arg("k"));
    m.def(
        "census_csv",
        [](std::uint64_t N, i64 k) {
            std::ostringstream out;
            write_census_csv(out, census(N, k));
            return out.str();
        },
        py::arg("N"), py::arg("k"));
    m.def(
        "identity_check",
        [](i64 k, i64 mm, double rho, std::uint64_t N, std::uint64_t Q) {
            const auto c = ap_identity_check(k, mm, rho, N, Q);
            py::dict d;
            d["lhs"] = c.lhs;
            d["rhs"] = c.rhs;
            d["discrepancy"] = c.discrepancy;
            d["bound"] = c.bound;
            d["passed"] = c.passed();
            return d;
        },
        py::arg("k"), py::arg("m"), py::arg("rho"), py::arg("N") = 1000000, py::arg("Q") = 1000000);
    m.def(
        "divergence_probe",
        [](i64 k, i64 mm, std::vector<double> rho, std::uint64_t N) {
            const auto r = divergence_probe(k, mm, rho, N);
            py::list points;
            for (const auto& p : r.points) {
                py::dict d;
                d["rho"] = p.rho;
                d["lhs"] = p.lhs;
                d["tail_estimate"] = p.tail_estimate;
                d["corrected"] = p.corrected();
                points.append(d);
            }
            py::dict d;
            d["points"] = points;
            d["monotone"] = r.monotone;
            d["fitted_increment"] = r.fitted_increment;
            d["expected_increment"] = r.expected_increment;
            return d;
        },
        py::arg("k"), py::arg("m"), py::arg("rho"), py::arg("N") = 1000000);

    m.def("legendre", &legendre, py::arg("n"), py::arg("p"));
    m.def("legendre_character", &legendre_character, py::arg("p"));
    m.def(
        "residue_sums",
        [](i64 p) {
            const auto r = residue_sums(p);
            return py::make_tuple(r.residues, r.nonresidues);
        },
        py::arg("p"));
    m.def("gauss_sum", &gauss_sum, py::arg("p"));
    m.def("l_one_quadratic", &l_one_quadratic, py::arg("p"));
    m.def("sin_product_ratio", &sin_product_ratio, py::arg("p"));
    m.def(
        "pell_minus4",
        [](i64 p) {
            const auto s = pell_minus4(p);
            return py::make_tuple(s.g, s.h, s.k);
        },
        py::arg("p"));
}
