// Python front end. Labels cross the boundary as plain strings and scalars
// as fractions.Fraction; the exact arithmetic stays on the C++ side.
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tenskit/basis.hpp"
#include "tenskit/checks.hpp"
#include "tenskit/error.hpp"
#include "tenskit/exprlang.hpp"
#include "tenskit/io.hpp"
#include "tenskit/metric.hpp"

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace tenskit;

namespace pybind11 {
namespace detail {

// Scalar <-> fractions.Fraction. Floats are refused on input: the engine
// is exact and a binary float rarely means the rational it prints as.
template <>
struct type_caster<tenskit::Scalar> {
public:
    PYBIND11_TYPE_CASTER(tenskit::Scalar, const_name("Fraction"));

    bool load(handle src, bool)
    {
        if (py::isinstance<py::float_>(src))
            return false;
        try {
            if (py::isinstance<py::int_>(src) || py::isinstance<py::str>(src)) {
                value = tenskit::scalar_from_string(py::str(src).cast<std::string>());
                return true;
            }
            if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
                const std::string num = py::str(src.attr("numerator")).cast<std::string>();
                const std::string den = py::str(src.attr("denominator")).cast<std::string>();
                value = tenskit::scalar_from_string(num + "/" + den);
                return true;
            }
        } catch (const tenskit::Error&) {
            return false;
        } catch (const py::error_already_set&) {
            return false;
        }
        return false;
    }

    static handle cast(const tenskit::Scalar& s, return_value_policy, handle)
    {
        const py::object fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(tenskit::scalar_to_string(s)).release();
    }
};

} // namespace detail
} // namespace pybind11

namespace {

std::vector<IndexLabel> parse_labels(const std::vector<std::string>& texts)
{
    std::vector<IndexLabel> out;
    out.reserve(texts.size());
    for (const auto& t : texts)
        out.push_back(IndexLabel::parse(t));
    return out;
}

std::vector<std::string> label_strs(const std::vector<IndexLabel>& labels)
{
    std::vector<std::string> out;
    out.reserve(labels.size());
    for (const auto& l : labels)
        out.push_back(l.str());
    return out;
}

std::vector<std::pair<IndexLabel, IndexLabel>>
parse_pairs(const std::vector<std::pair<std::string, std::string>>& pairs)
{
    std::vector<std::pair<IndexLabel, IndexLabel>> out;
    out.reserve(pairs.size());
    for (const auto& [a, b] : pairs)
        out.emplace_back(IndexLabel::parse(a), IndexLabel::parse(b));
    return out;
}

Array array_from_entries(int dim, int subs, int supers, const std::vector<Scalar>& entries)
{
    Array a(dim, Valence{subs, supers});
    if (entries.size() != a.size())
        fail_domain("expected " + std::to_string(a.size()) + " entries, got " +
                    std::to_string(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i)
        a.flat(i) = entries[i];
    return a;
}

std::vector<Scalar> flat_entries(const Array& a)
{
    std::vector<Scalar> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(a.flat(i));
    return out;
}

std::string repr_tensor(const TensorMap& t)
{
    std::ostringstream os;
    os << "TensorMap(dim=" << t.dim() << ", subs=[";
    for (std::size_t i = 0; i < t.subs().size(); ++i)
        os << (i ? ", " : "") << "'" << t.subs()[i].str() << "'";
    os << "], supers=[";
    for (std::size_t i = 0; i < t.supers().size(); ++i)
        os << (i ? ", " : "") << "'" << t.supers()[i].str() << "'";
    os << "], basis='" << t.basis() << "')";
    return os.str();
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "exact tensor-map calculator (C++ core)";
    m.attr("__version__") = "0.1.0";

    py::register_exception<Error>(m, "TenskitError");

    py::class_<TensorMap>(m, "TensorMap")
        .def(py::init([](int dim, const std::vector<std::string>& subs,
                         const std::vector<std::string>& supers,
                         const std::vector<Scalar>& entries, const std::string& basis) {
                 return TensorMap(dim, parse_labels(subs), parse_labels(supers),
                                  array_from_entries(dim, static_cast<int>(subs.size()),
                                                     static_cast<int>(supers.size()), entries),
                                  basis);
             }),
             py::arg("dim"), py::arg("subs"), py::arg("supers"), py::arg("entries"),
             py::arg("basis") = "e")
        .def_property_readonly("dim", &TensorMap::dim)
        .def_property_readonly("subs", [](const TensorMap& t) { return label_strs(t.subs()); })
        .def_property_readonly("supers",
                               [](const TensorMap& t) { return label_strs(t.supers()); })
        .def_property_readonly("basis", [](const TensorMap& t) { return t.basis(); })
        .def_property_readonly("entries",
                               [](const TensorMap& t) { return flat_entries(t.coeffs()); })
        .def(
            "at",
            [](const TensorMap& t, const Multi& subs, const Multi& supers) {
                return t.coeffs().at(subs, supers);
            },
            py::arg("subs"), py::arg("supers"))
        .def(py::self == py::self)
        .def("__repr__", &repr_tensor);

    py::class_<Metric>(m, "Metric")
        .def(py::init([](int dim, const std::vector<Scalar>& entries) {
                 return Metric(array_from_entries(dim, 2, 0, entries));
             }),
             py::arg("dim"), py::arg("entries"))
        .def_property_readonly("dim", &Metric::dim)
        .def_property_readonly("entries", [](const Metric& g) { return flat_entries(g.g()); })
        .def_property_readonly("inverse_entries",
                               [](const Metric& g) { return flat_entries(g.ginv()); });

    py::class_<BasisChange>(m, "BasisChange")
        .def(py::init([](int dim, const std::vector<Scalar>& entries, const std::string& from,
                         const std::string& to) {
                 return BasisChange(array_from_entries(dim, 1, 1, entries), from, to);
             }),
             py::arg("dim"), py::arg("entries"), py::arg("from_basis") = "",
             py::arg("to_basis") = "")
        .def_property_readonly("dim", &BasisChange::dim)
        .def_property_readonly("entries", [](const BasisChange& c) { return flat_entries(c.a()); })
        .def_property_readonly("inverse_entries",
                               [](const BasisChange& c) { return flat_entries(c.ainv()); })
        .def_property_readonly("from_basis", [](const BasisChange& c) { return c.from(); })
        .def_property_readonly("to_basis", [](const BasisChange& c) { return c.to(); });

    m.def(
        "compose",
        [](const TensorMap& s, const TensorMap& t,
           const std::vector<std::pair<std::string, std::string>>& pairs) {
            return compose_general(s, t, MatchSpec{parse_pairs(pairs)});
        },
        py::arg("s"), py::arg("t"),
        py::arg("pairs") = std::vector<std::pair<std::string, std::string>>{},
        "General composition; each pair matches a subscript of s with a superscript of t.");
    m.def("inner", &inner, py::arg("s"), py::arg("t"),
          "Match all subscripts of s against all superscripts of t in order.");
    m.def("outer", &outer, py::arg("s"), py::arg("t"));
    m.def(
        "contract",
        [](const TensorMap& t, const std::vector<std::pair<std::string, std::string>>& pairs) {
            return contract(t, parse_pairs(pairs));
        },
        py::arg("t"), py::arg("pairs"));
    m.def("add", &tm_add, py::arg("a"), py::arg("b"));
    m.def("scale", &tm_scale, py::arg("k"), py::arg("t"));
    m.def(
        "permute",
        [](const TensorMap& t, const std::vector<int>& subPerm,
           const std::vector<int>& superPerm) { return permute(t, subPerm, superPerm); },
        py::arg("t"), py::arg("sub_perm"), py::arg("super_perm"));
    m.def(
        "relabel",
        [](const TensorMap& t, const std::vector<std::string>& subs,
           const std::vector<std::string>& supers) {
            return relabel(t, parse_labels(subs), parse_labels(supers));
        },
        py::arg("t"), py::arg("subs"), py::arg("supers"));
    m.def(
        "apply_multi",
        [](const TensorMap& t, const std::vector<std::vector<Scalar>>& vectors) {
            std::vector<Array> args;
            args.reserve(vectors.size());
            for (const auto& v : vectors)
                args.push_back(array_from_entries(t.dim(), 0, 1, v));
            return flat_entries(apply_multi(t, args));
        },
        py::arg("t"), py::arg("vectors"),
        "Apply t to coordinate vectors, one per subscript; returns flat image coordinates.");

    m.def(
        "lower_index",
        [](const TensorMap& t, const std::string& label, const Metric& g) {
            return lower_index(t, IndexLabel::parse(label), g);
        },
        py::arg("t"), py::arg("label"), py::arg("metric"));
    m.def(
        "raise_index",
        [](const TensorMap& t, const std::string& label, const Metric& g) {
            return raise_index(t, IndexLabel::parse(label), g);
        },
        py::arg("t"), py::arg("label"), py::arg("metric"));
    m.def(
        "dual_shift",
        [](const TensorMap& t, const std::string& label) {
            return dual_shift(t, IndexLabel::parse(label));
        },
        py::arg("t"), py::arg("label"));

    m.def("transform", &transform, py::arg("t"), py::arg("change"));
    m.def("transform_operator", &transform_operator, py::arg("t"), py::arg("change"));
    m.def("compose_changes", &compose_changes, py::arg("second"), py::arg("first"));
    m.def("scalar_invariance_check", &scalar_invariance_check, py::arg("t"), py::arg("changes"));

    m.def(
        "eval_expr",
        [](const std::string& text, const Env& env) {
            const ExprPtr e = parse_expr_text(text);
            return evaluate(validate(*e, env), env);
        },
        py::arg("text"), py::arg("env"),
        "Parse, validate against the environment, and evaluate an expression.");
    m.def(
        "pretty",
        [](const std::string& text) { return pretty_print(*parse_expr_text(text)); },
        py::arg("text"));
    m.def(
        "plan", [](const std::string& text) { return plan_text(build_plan(*parse_expr_text(text))); },
        py::arg("text"));

    m.def(
        "to_json",
        [](const TensorMap& t, const std::string& name) {
            return tensor_to_json(t, name).dump(2) + "\n";
        },
        py::arg("t"), py::arg("name") = "");
    m.def(
        "from_json",
        [](const std::string& text) {
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(text);
            } catch (const nlohmann::json::exception& e) {
                fail_usage(std::string("malformed JSON: ") + e.what());
            }
            std::string name;
            TensorMap t = tensor_from_json(j, &name);
            return py::make_tuple(std::move(t), name);
        },
        py::arg("text"), "Returns (tensor, name); name is empty when the field is absent.");

    m.def("suite_names", [] { return suite_names(); });
    m.def(
        "run_suite",
        [](const std::string& name, int dim, std::uint64_t seed, int cases) {
            const SuiteResult r = run_suite(name, dim, seed, cases);
            return py::make_tuple(r.cases, r.failures);
        },
        py::arg("name"), py::arg("dim") = 2, py::arg("seed") = 1, py::arg("cases") = 100,
        "Run one randomized verification suite; returns (cases, failures).");
}
