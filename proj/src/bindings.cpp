#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "gmfq/analysis.hpp"
#include "gmfq/arith.hpp"
#include "gmfq/eigenform.hpp"
#include "gmfq/errors.hpp"
#include "gmfq/exponents.hpp"
#include "gmfq/reports.hpp"

namespace py = pybind11;
using namespace gmfq;

namespace {

py::object to_py(const nlohmann::json& value) {
    using nlohmann::json;
    switch (value.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(value.get<bool>());
        case json::value_t::number_integer:
            return py::int_(value.get<std::int64_t>());
        case json::value_t::number_unsigned:
            return py::int_(value.get<std::uint64_t>());
        case json::value_t::number_float:
            return py::float_(value.get<double>());
        case json::value_t::string:
            return py::str(value.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& item : value) out.append(to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = value.begin(); it != value.end(); ++it) {
                out[py::str(it.key())] = to_py(it.value());
            }
            return out;
        }
        default:
            return py::none();
    }
}

py::object fraction(const BigRational& q) {
    static py::object ctor = py::module_::import("fractions").attr("Fraction");
    py::object num = py::module_::import("builtins").attr("int")(q.get_num().get_str());
    py::object den = py::module_::import("builtins").attr("int")(q.get_den().get_str());
    return ctor(num, den);
}

LoadOptions make_options(const std::string& backend, const std::string& cache_dir, int threads) {
    LoadOptions opts;
    opts.backend = backend;
    opts.cache_dir = cache_dir;
    opts.threads = threads;
    return opts;
}

Eigenform load(const std::string& key, std::int64_t bound, const PrimeTable& table,
               const std::string& backend, const std::string& cache_dir, int threads) {
    return load_eigenform(key, bound, table, make_options(backend, cache_dir, threads));
}

} // namespace

PYBIND11_MODULE(_gmfq, m) {
    m.doc() = "q-exponents of generalized modular functions";

    py::register_exception<CatalogueError>(m, "CatalogueError", PyExc_LookupError);
    py::register_exception<IntegrityError>(m, "IntegrityError", PyExc_RuntimeError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);
    py::register_exception<ShapeError>(m, "ShapeError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<PrimeTable>(m, "PrimeTable")
        .def(py::init<std::int64_t>(), py::arg("bound"))
        .def_property_readonly("bound", &PrimeTable::bound)
        .def("primes", [](const PrimeTable& t) { return t.primes(); })
        .def("is_prime", &PrimeTable::is_prime, py::arg("n"))
        .def("pi", &PrimeTable::pi, py::arg("x"))
        .def("mobius", &PrimeTable::mobius, py::arg("n"))
        .def("sigma0", &PrimeTable::sigma0, py::arg("n"));

    m.def("sieve_primes", [](std::int64_t bound) { return PrimeTable(bound).primes(); },
          py::arg("bound"), "All primes <= bound, ascending");
    m.def("psi2", &psi2, py::arg("n"));
    m.def("st_measure", py::overload_cast<double, double>(&st_measure), py::arg("a"),
          py::arg("b"), "Sato-Tate mass of [a, b]");
    m.def("prime_exponent", [](std::int64_t bp, std::int64_t p) {
              return fraction(prime_exponent(bp, p));
          },
          py::arg("bp"), py::arg("p"), "c(p) = (1 - b(p)) / p");

    m.def("load_eigenform",
          [](const std::string& key, std::int64_t limit, const std::string& backend,
             const std::string& cache_dir, int threads) {
              PrimeTable table(std::max<std::int64_t>(limit, 2));
              Eigenform form = load(key, limit, table, backend, cache_dir, threads);
              py::dict out;
              out["level"] = form.level;
              out["cm"] = form.cm;
              out["source"] = form.source;
              py::list coeffs;
              for (std::int64_t n = 1; n <= form.bound(); ++n) coeffs.append(form.coeff(n));
              out["coeffs"] = coeffs; // coeffs[i] is b(i+1)
              return out;
          },
          py::arg("key"), py::arg("limit"), py::arg("backend") = "auto",
          py::arg("cache_dir") = "", py::arg("threads") = 1,
          "Eigenform coefficients b(1..limit) for a catalogue level or CSV path");

    m.def("qexponents",
          [](const std::string& key, std::int64_t limit, const std::string& backend,
             const std::string& cache_dir, int threads) {
              PrimeTable table(std::max<std::int64_t>(limit, 2));
              Eigenform form = load(key, limit, table, backend, cache_dir, threads);
              ExponentSeries exponents = exponents_from_eigenform(form, limit, table);
              py::list out;
              for (std::int64_t n = 1; n <= exponents.bound(); ++n) {
                  out.append(fraction(exponents.at(n)));
              }
              return out; // out[i] is c(i+1)
          },
          py::arg("key"), py::arg("limit"), py::arg("backend") = "auto",
          py::arg("cache_dir") = "", py::arg("threads") = 1,
          "Exact q-exponents c(1..limit) as fractions");

    m.def("sign_density",
          [](const std::string& key, std::int64_t xmax, const std::string& backend,
             const std::string& cache_dir, int threads) {
              PrimeTable table(std::max<std::int64_t>(xmax, 2));
              Eigenform form = load(key, xmax, table, backend, cache_dir, threads);
              return to_py(to_json(sign_density(form, xmax, table)));
          },
          py::arg("key"), py::arg("xmax"), py::arg("backend") = "auto",
          py::arg("cache_dir") = "", py::arg("threads") = 1);

    m.def("satotate",
          [](const std::string& key, std::int64_t xmax, int bins, const std::string& backend,
             const std::string& cache_dir, int threads) {
              PrimeTable table(std::max<std::int64_t>(xmax, 2));
              Eigenform form = load(key, xmax, table, backend, cache_dir, threads);
              return to_py(to_json(st_histogram(form, xmax, bins, table)));
          },
          py::arg("key"), py::arg("xmax"), py::arg("bins") = 20, py::arg("backend") = "auto",
          py::arg("cache_dir") = "", py::arg("threads") = 1);

    m.def("pair_signs",
          [](const std::string& key1, const std::string& key2, std::int64_t xmax,
             const std::string& backend, const std::string& cache_dir, int threads) {
              PrimeTable table(std::max<std::int64_t>(xmax, 2));
              Eigenform f1 = load(key1, xmax, table, backend, cache_dir, threads);
              Eigenform f2 = load(key2, xmax, table, backend, cache_dir, threads);
              SignDensityReport signs = pair_sign_density(f1, f2, xmax, table);
              std::vector<JointDensity> quadrants;
              for (const auto& [i1, i2] : {std::pair{Interval{0, 1}, Interval{0, 1}},
                                           {Interval{0, 1}, Interval{-1, 0}},
                                           {Interval{-1, 0}, Interval{0, 1}},
                                           {Interval{-1, 0}, Interval{-1, 0}}}) {
                  quadrants.push_back(pair_joint_histogram(f1, f2, xmax, i1, i2, table));
              }
              return to_py(pair_report_json(signs, quadrants));
          },
          py::arg("key1"), py::arg("key2"), py::arg("xmax"), py::arg("backend") = "auto",
          py::arg("cache_dir") = "", py::arg("threads") = 1);

    m.def("cm_scan",
          [](const std::string& key, std::int64_t xmax, const std::string& backend,
             const std::string& cache_dir, int threads) {
              PrimeTable table(std::max<std::int64_t>(xmax, 2));
              Eigenform form = load(key, xmax, table, backend, cache_dir, threads);
              return to_py(cm_report_json(form.level, xmax, cm_value_scan(form, xmax, table)));
          },
          py::arg("key"), py::arg("xmax"), py::arg("backend") = "auto",
          py::arg("cache_dir") = "", py::arg("threads") = 1);

    m.def("integrality",
          [](const std::string& key, std::int64_t limit, const std::string& backend,
             const std::string& cache_dir, int threads) {
              PrimeTable table(std::max<std::int64_t>(limit, 2));
              Eigenform form = load(key, limit, table, backend, cache_dir, threads);
              ExponentSeries exponents = exponents_from_eigenform(form, limit, table);
              return to_py(to_json(integrality_scan(exponents, limit, table)));
          },
          py::arg("key"), py::arg("limit"), py::arg("backend") = "auto",
          py::arg("cache_dir") = "", py::arg("threads") = 1);

    m.def("first_sign_change",
          [](const std::string& key, std::int64_t limit, const std::string& backend,
             const std::string& cache_dir, int threads) {
              PrimeTable table(std::max<std::int64_t>(limit, 2));
              Eigenform form = load(key, limit, table, backend, cache_dir, threads);
              ExponentSeries exponents = exponents_from_eigenform(form, limit, table);
              return to_py(to_json(first_sign_change(exponents, form.level, table)));
          },
          py::arg("key"), py::arg("limit") = 64, py::arg("backend") = "auto",
          py::arg("cache_dir") = "", py::arg("threads") = 1);

    m.def("catalogue_levels", [] {
        py::list out;
        for (const auto& entry : catalogue()) out.append(entry.level);
        return out;
    });
}
