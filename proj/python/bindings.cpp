#include <Python.h>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "invseq/catalog.hpp"
#include "invseq/gentree.hpp"
#include "invseq/io.hpp"
#include "invseq/oracle.hpp"

namespace py = pybind11;
using namespace invseq;

namespace {

py::int_ to_py(const Int& v) {
    const std::string s = v.get_str();
    return py::reinterpret_steal<py::int_>(PyLong_FromString(s.c_str(), nullptr, 10));
}

py::list to_py(const std::vector<Int>& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

Int from_py(const py::int_& v) { return Int(py::str(v).cast<std::string>(), 10); }

std::vector<Int> terms(const std::string& patterns, int n, std::optional<std::string> method,
                       std::uint64_t budget) {
    catalog::Options o;
    o.method = std::move(method);
    o.budget = budget;
    py::gil_scoped_release release;
    return catalog::fast_terms(PatternSet::parse(patterns), n, o);
}

}  // namespace

PYBIND11_MODULE(_invseq, m) {
    m.doc() = "Exact enumeration of pattern-avoiding inversion sequences";

    static py::exception<BudgetExceeded> budget_exc(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const BudgetExceeded& e) {
            py::set_error(budget_exc, e.what());
        } catch (const catalog::NotImplemented& e) {
            PyErr_SetString(PyExc_NotImplementedError, e.what());
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });
    m.attr("DEFAULT_BUDGET") = oracle::kDefaultBudget;

    m.def(
        "terms",
        [](const std::string& patterns, int n, std::optional<std::string> method, std::uint64_t budget) {
            return to_py(terms(patterns, n, std::move(method), budget));
        },
        py::arg("patterns"), py::arg("n"), py::arg("method") = py::none(),
        py::arg("budget") = oracle::kDefaultBudget,
        "Exact terms t_0..t_n. `method` is a registered method id or 'brute'.");

    m.def("canonical_key", [](const std::string& patterns) { return PatternSet::parse(patterns).key(); });

    m.def(
        "family",
        [](const std::string& patterns) -> py::object {
            const catalog::Family* f = catalog::find(PatternSet::parse(patterns));
            if (!f) return py::none();
            py::dict d;
            d["patterns"] = f->key;
            d["methods"] = f->methods;
            d["oeis"] = f->oeis;
            d["oeis_offset"] = f->oeis_offset;
            d["aliases"] = f->aliases;
            d["construction"] = f->construction;
            return std::move(d);
        },
        "Registry entry for a pattern set after alias resolution, or None.");

    m.def("registered", [] {
        std::vector<std::string> keys;
        for (const auto& f : catalog::registry()) keys.push_back(f.key);
        return keys;
    });

    m.def(
        "crosscheck",
        [](const std::string& patterns, int small, int large, std::uint64_t budget) {
            const auto rep = [&] {
                py::gil_scoped_release release;
                return catalog::crosscheck(PatternSet::parse(patterns), small, large, budget);
            }();
            py::list rows;
            for (const auto& c : rep.comparisons) {
                py::dict d;
                d["lhs"] = c.lhs;
                d["rhs"] = c.rhs;
                d["n_max"] = c.n_max;
                d["mismatch"] = c.mismatch ? py::object(py::int_(*c.mismatch)) : py::none();
                rows.append(d);
            }
            return py::make_tuple(rep.ok(), rows);
        },
        py::arg("patterns"), py::arg("small") = 8, py::arg("large") = 100,
        py::arg("budget") = oracle::kDefaultBudget, "Returns (ok, comparisons).");

    m.def("avoids", [](const std::vector<int>& seq, const std::string& patterns) {
        return avoids(seq, PatternSet::parse(patterns));
    });
    m.def("is_inv_seq", [](const std::vector<int>& seq, int shift) { return is_shifted_inv_seq(seq, shift); },
          py::arg("seq"), py::arg("shift") = 0);

    m.def("rule_ids", &gentree::rule_ids);
    m.def("rule_terms", [](const std::string& id, int n) {
        return to_py(gentree::run_rule(gentree::rule_by_id(id), n));
    });

    m.def(
        "to_bfile",
        [](const std::vector<py::int_>& values, int offset) {
            std::vector<Int> v;
            for (const auto& x : values) v.push_back(from_py(x));
            return io::emit_bfile(v, offset);
        },
        py::arg("terms"), py::arg("offset") = 1);
    m.def(
        "from_bfile",
        [](const std::string& text, int offset) {
            std::istringstream in(text);
            return to_py(io::terms_from_bfile(io::parse_bfile(in), offset));
        },
        py::arg("text"), py::arg("offset") = 1);
}
