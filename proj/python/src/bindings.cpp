/**************************************************************************
 * bindings.cpp
 *
 * Copyright 2026 The grscount Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "grscount/census.hpp"
#include "grscount/cli.hpp"
#include "grscount/error.hpp"
#include "grscount/formulas.hpp"
#include "grscount/gf.hpp"

namespace py = pybind11;
using namespace grscount;

namespace {


// Python ints are arbitrary precision; go through the decimal string.
py::object py_int(const BigInt& v) { return py::module_::import("builtins").attr("int")(v.get_str()); }

template <class Fn>
BigInt released(Fn&& fn) {
    py::gil_scoped_release nogil;
    return fn();
}

py::dict report_dict(const CountReport& r) {
    py::dict params;
    params["q"] = r.q ? py::object(py::int_(*r.q)) : py::none();
    params["k"] = r.k ? py::object(py::int_(*r.k)) : py::none();
    params["n"] = r.n ? py::object(py::int_(*r.n)) : py::none();
    params["r"] = r.r ? py::object(py::int_(*r.r)) : py::none();
    py::dict d;
    d["label"] = r.label;
    d["params"] = params;
    d["expected"] = r.expected;
    d["observed"] = r.observed;
    d["method"] = r.method;
    d["workers"] = r.workers;
    d["elapsed_ms"] = r.elapsed_ms;
    d["match"] = r.match;
    return d;
}

CensusOptions options(unsigned workers, std::uint64_t budget, std::uint64_t seed) { return {workers, budget, seed}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact counts of GRS and MDS codes over small finite fields";

    static py::exception<Error> error(m, "GrsCountError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, py::str(e.what()));
        }
    });

    py::class_<Field>(m, "Field")
        .def(py::init([](unsigned q) { return Field::of_order(q); }), py::arg("q"))
        .def_property_readonly("order", &Field::order)
        .def_property_readonly("characteristic", &Field::characteristic)
        .def("add", &Field::add)
        .def("sub", &Field::sub)
        .def("mul", &Field::mul)
        .def("neg", &Field::neg)
        .def("inv", [](const Field& f, Elem a) {
            if (a == 0) throw Error(Errc::InvalidArgument, "zero has no inverse");
            return f.inv(a);
        })
        .def("__repr__", [](const Field& f) { return "Field(" + std::to_string(f.order()) + ")"; });

    m.def("gamma_grs", [](unsigned k, unsigned n, unsigned q) { return py_int(gamma_grs(k, n, q)); },
          py::arg("k"), py::arg("n"), py::arg("q"));
    m.def("gamma_grs_hyper", [](unsigned q) { return py_int(gamma_grs_hyper(q)); }, py::arg("q"));
    m.def("gamma_mds3", [](unsigned n, unsigned q) { return py_int(gamma_mds3(n, q)); }, py::arg("n"), py::arg("q"));
    m.def("s_kn_size", [](unsigned k, unsigned n, unsigned q) { return py_int(s_kn_size(k, n, q)); },
          py::arg("k"), py::arg("n"), py::arg("q"));
    m.def("check_asymptotic_grs", &check_asymptotic_grs, py::arg("n"));
    m.def("check_asymptotic_mds3", &check_asymptotic_mds3, py::arg("n"));

    m.def(
        "enumerate_grs",
        [](unsigned q, unsigned k, unsigned n, unsigned workers, std::uint64_t budget) {
            const Field f = Field::of_order(q);
            return py_int(released([&] { return enumerate_grs(f, k, n, options(workers, budget, 1)).count; }));
        },
        py::arg("q"), py::arg("k"), py::arg("n"), py::arg("workers") = 1, py::arg("budget") = 0);
    m.def(
        "count_mds",
        [](unsigned q, unsigned k, unsigned n, unsigned workers, std::uint64_t budget) {
            const Field f = Field::of_order(q);
            return py_int(released([&] { return count_mds_bruteforce(f, k, n, options(workers, budget, 1)); }));
        },
        py::arg("q"), py::arg("k"), py::arg("n"), py::arg("workers") = 1, py::arg("budget") = 0);
    m.def(
        "count_grs_among_mds",
        [](unsigned q, unsigned n, unsigned workers, std::uint64_t budget) {
            const Field f = Field::of_order(q);
            MdsGrsCount c;
            {
                py::gil_scoped_release nogil;
                c = count_grs_among_mds_dim3(f, n, options(workers, budget, 1));
            }
            return py::make_tuple(py_int(c.mds), py_int(c.grs));
        },
        py::arg("q"), py::arg("n"), py::arg("workers") = 1, py::arg("budget") = 0,
        "(MDS count, GRS count) for [n, 3] codes over GF(q).");

    m.def(
        "verify",
        [](const std::string& name, std::optional<unsigned> q, std::optional<unsigned> k, std::optional<unsigned> n,
           std::optional<unsigned> r, unsigned workers, std::uint64_t budget, std::uint64_t seed) {
            RunConfig c;
            c.command = "verify";
            c.name = name;
            c.q = q;
            c.k = k;
            c.n = n;
            c.r = r;
            c.workers = workers;
            c.budget = budget;
            c.seed = seed;
            CountReport rep;
            {
                py::gil_scoped_release nogil;
                rep = run_verification(c);
            }
            return report_dict(rep);
        },
        py::arg("name"), py::arg("q") = py::none(), py::arg("k") = py::none(), py::arg("n") = py::none(),
        py::arg("r") = py::none(), py::arg("workers") = 1, py::arg("budget") = 0, py::arg("seed") = 1);

    m.def(
        "table1",
        [](bool verify, unsigned workers, std::uint64_t budget) {
            RunConfig c;
            c.workers = workers;
            c.budget = budget;
            std::vector<Table1Row> rows;
            {
                py::gil_scoped_release nogil;
                rows = table1_rows(c, verify);
            }
            py::list out;
            for (const auto& r : rows) {
                py::dict d;
                d["q"] = r.q;
                d["n"] = r.n;
                d["grs"] = py_int(r.grs);
                d["mds"] = py_int(r.mds);
                d["verified"] = r.verified;
                d["status"] = r.status;
                out.append(d);
            }
            return out;
        },
        py::arg("verify") = false, py::arg("workers") = 1, py::arg("budget") = 0);
}
