#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "tamarib/gk.hpp"
#include "tamarib/io.hpp"
#include "tamarib/poset.hpp"
#include "tamarib/tamari.hpp"
#include "tamarib/theorem.hpp"

namespace py = pybind11;
using namespace tamarib;

namespace {

// Type-B tuples cross the boundary as Python tuples of ints with math.inf for infinity.
py::tuple to_py(const TBVector& v) {
    py::tuple t(static_cast<std::size_t>(v.n()));
    for (int i = 0; i < v.n(); ++i) {
        if (v[i].is_inf())
            t[i] = py::float_(INFINITY);
        else
            t[i] = py::int_(v[i].value());
    }
    return t;
}

TBVector tb_from_py(const py::sequence& seq) {
    std::vector<TBSymbol> entries;
    for (auto item : seq) {
        if (py::isinstance<py::str>(item)) {
            const auto s = item.cast<std::string>();
            if (s != "inf") throw py::value_error("entries must be ints or inf");
            entries.push_back(TBSymbol::inf());
        } else if (py::isinstance<py::float_>(item)) {
            const double d = item.cast<double>();
            if (std::isinf(d) && d > 0)
                entries.push_back(TBSymbol::inf());
            else if (d == std::floor(d))
                entries.push_back(TBSymbol::finite(static_cast<int>(d)));
            else
                throw py::value_error("entries must be ints or inf");
        } else {
            entries.push_back(TBSymbol::finite(item.cast<int>()));
        }
    }
    return TBVector(std::move(entries));
}

py::list chain_to_py(const std::vector<TBVector>& chain) {
    py::list out;
    for (const auto& v : chain) out.append(to_py(v));
    return out;
}

py::object report_to_py(const VerificationReport& r) {
    return py::module_::import("json").attr("loads")(to_json(r).dump());
}

py::dict validation_to_py(const Validation& v) {
    py::dict d;
    d["valid"] = v.valid;
    d["rule"] = v.rule;
    d["i"] = v.i;
    d["j"] = v.j;
    return d;
}

LevelMode parse_mode(const std::string& mode) {
    if (mode == "lowest") return LevelMode::lowest;
    if (mode == "highest") return LevelMode::highest;
    if (mode == "shifted") return LevelMode::shifted;
    throw py::value_error("mode must be lowest, highest or shifted");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Type-B Tamari lattices, Greene-Kleitman partitions and chain-length verification.";

    py::register_exception<MalformedVector>(m, "MalformedVector", PyExc_ValueError);
    py::register_exception<OrderViolation>(m, "OrderViolation", PyExc_ValueError);

    py::class_<Poset>(m, "Poset")
        .def_static(
            "from_covers",
            [](std::vector<std::string> labels, std::vector<Cover> covers) {
                return Poset::from_relations(std::move(labels), covers);
            },
            py::arg("labels"), py::arg("covers"))
        .def("__len__", &Poset::size)
        .def_property_readonly("labels", &Poset::labels)
        .def_property_readonly("covers", &Poset::covers)
        .def("leq", &Poset::leq)
        .def("less", &Poset::less);

    m.def("validate_type_b", [](const py::sequence& v) { return validation_to_py(validate_type_b(tb_from_py(v))); });
    m.def("validate_type_a", [](std::vector<int> v) { return validation_to_py(validate_type_a(TAVector(std::move(v)))); });
    m.def("enumerate_type_b", [](int n) { return chain_to_py(enumerate_type_b(n)); });
    m.def("enumerate_type_a", [](int n) {
        std::vector<std::vector<int>> out;
        for (const auto& v : enumerate_type_a(n)) out.push_back(v.entries());
        return out;
    });
    m.def("entry_sum", [](const py::sequence& v) { return entry_sum(tb_from_py(v)); });
    m.def("format_type_b", [](const py::sequence& v) { return to_string(tb_from_py(v)); });
    m.def("parse_type_b", [](const std::string& s) { return to_py(parse_tb_vector(s)); });

    m.def("type_b_poset", [](int n) { return build_type_b_lattice(n).poset; });
    m.def("type_a_poset", [](int n) { return build_type_a_lattice(n).poset; });

    m.def("longest_chain_length", &longest_chain_length);
    m.def("level_map", [](const Poset& p, const std::string& mode) { return level_map(p, parse_mode(mode)).level; },
          py::arg("poset"), py::arg("mode") = "lowest");
    m.def("leveled_members", [](const Poset& p) { return leveled_subposet(p).members; });
    m.def("dual", &dual);
    m.def("is_isomorphic", &is_isomorphic);
    m.def("is_lattice", &is_lattice);

    m.def("gk_partition", [](const Poset& p) { return gk_partition(p).parts; });
    m.def("max_k_chain_union", [](const Poset& p, std::size_t k) {
        auto f = max_k_chain_union(p, k);
        return py::make_tuple(f.total, f.chains);
    });
    m.def("max_k_antichain_union", [](const Poset& p, std::size_t k) {
        auto f = max_k_antichain_union(p, k);
        return py::make_tuple(f.total, f.antichains);
    });

    m.def("first_chain", [](int n) { return chain_to_py(first_chain(n)); });
    m.def("second_chain", [](int n, bool with_prefix) { return chain_to_py(second_chain(n, with_prefix)); },
          py::arg("n"), py::arg("with_prefix") = false);

    m.def("verify_lemma1", [](int n) { return report_to_py(verify_lemma1(n)); });
    m.def("verify_theorem1", [](int n) { return report_to_py(verify_theorem1(n)); });
    m.def("verify_antichain_partition",
          [](int n) { return report_to_py(verify_antichain_partition(build_type_b_lattice(n))); });
    m.def("structural_remarks", [](int n) {
        py::list out;
        for (const auto& r : structural_remarks(n)) out.append(report_to_py(r));
        return out;
    });
}
