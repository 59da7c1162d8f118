#include "mealy/asymptotics.hpp"
#include "mealy/automaton.hpp"
#include "mealy/automaton_io.hpp"
#include "mealy/errors.hpp"
#include "mealy/i2.hpp"
#include "mealy/monoid.hpp"
#include "mealy/series.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mealy;

namespace {

py::int_ to_py(const mpz_class& v) {
    return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10)));
}

py::list to_py(const BigSeries& s) {
    py::list out;
    for (const auto& c : s.coefficients()) out.append(to_py(c));
    return out;
}

py::dict nf_dict(const i2::NormalForm& nf) {
    py::dict d;
    d["word"] = i2::format_gen_word(i2::nf_to_word(nf));
    d["form"] = nf.to_string();
    d["length"] = nf.length();
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Mealy automata, the I2 semigroup and its growth series";

    py::register_exception<InputDomainError>(m, "InputDomainError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_AssertionError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<MealyAutomaton>(m, "MealyAutomaton")
        .def(py::init<std::size_t, std::vector<std::vector<State>>, std::vector<std::vector<Letter>>,
                      std::vector<std::string>>(),
             py::arg("alphabet_size"), py::arg("transition"), py::arg("output"),
             py::arg("labels") = std::vector<std::string>{})
        .def_property_readonly("alphabet_size", &MealyAutomaton::alphabet_size)
        .def_property_readonly("state_count", &MealyAutomaton::state_count)
        .def_property_readonly("labels", &MealyAutomaton::labels)
        .def("next", &MealyAutomaton::next)
        .def("out", &MealyAutomaton::out)
        .def("__eq__", [](const MealyAutomaton& a, const MealyAutomaton& b) { return a == b; })
        .def("__repr__", [](const MealyAutomaton& a) { return format_automaton(a); });

    m.def("i2_automaton", &i2_automaton);
    m.def("identity_automaton", &identity_automaton, py::arg("alphabet_size"));
    m.def("parse_automaton", [](const std::string& text) { return parse_automaton(text); });
    m.def("apply", [](const MealyAutomaton& a, State q, const LetterWord& w) { return apply(a, q, w); });
    m.def("product", &product);
    m.def("power", [](const MealyAutomaton& a, std::size_t n) { return power(a, n); });
    m.def("minimize", [](const MealyAutomaton& a) { return minimize(a); });
    m.def("automaton_growth", [](const MealyAutomaton& a, std::size_t N, std::size_t max_states) {
        return automaton_growth(a, N, Limits{max_states});
    }, py::arg("a"), py::arg("N"), py::arg("max_states") = Limits{}.max_states);
    m.def("is_invertible", &is_invertible);
    m.def("are_isomorphic", &are_isomorphic);
    m.def("are_similar", &are_similar);

    m.def("quotient_order", [](unsigned n) { return to_py(quotient_order(n)); });
    m.def("quotient_order_formula", [](unsigned n) { return to_py(quotient_order_formula(n)); });
    m.def("endomorphism_count", [](unsigned mm, unsigned k) { return to_py(endomorphism_count(mm, k)); });
    m.def("hausdorff_sequence", &hausdorff_sequence);
    m.def("stabilized_growth", [](std::size_t n) {
        const auto g = stabilized_growth(i2_automaton(), n);
        py::dict d;
        d["level"] = g.level;
        d["sphere"] = g.sphere;
        d["ball"] = g.ball;
        return d;
    });

    m.def("reduce", [](const std::string& w) {
        const auto r = i2::reduce_counted(i2::parse_gen_word(w));
        auto d = nf_dict(r.form);
        d["steps"] = r.steps;
        return d;
    });
    m.def("reduce_quotient", [](const std::string& w, unsigned n) {
        return nf_dict(i2::reduce_quotient(i2::parse_gen_word(w), n));
    });
    m.def("words_equal", [](const std::string& a, const std::string& b) {
        return i2::words_equal(i2::parse_gen_word(a), i2::parse_gen_word(b));
    });
    m.def("width", [](const std::string& w) { return i2::width(i2::parse_gen_word(w)); });
    m.def("verify_relation", &i2::verify_relation, py::arg("p"), py::arg("level"));
    m.def("verify_left_zero", [](unsigned n) {
        const auto c = i2::verify_left_zero(n);
        return py::make_tuple(c.holds_at_n, c.fails_at_n_plus_1);
    });
    m.def("enumerate_normal_forms", &i2::enumerate_normal_forms);

    m.def("odd_distinct_partitions", [](std::size_t N) { return to_py(odd_distinct_partitions(N)); });
    m.def("word_growth_coeffs", [](std::size_t N) { return to_py(word_growth_coeffs(N)); });
    m.def("automaton_growth_coeffs", [](std::size_t N) { return to_py(automaton_growth_coeffs(N)); });
    m.def("ball_growth_coeffs", [](std::size_t N) { return to_py(ball_growth_coeffs(N)); });
    m.def("richmond_asymptote", [](std::vector<unsigned> a, unsigned M, unsigned s, double n) {
        return static_cast<double>(richmond_asymptote(a, M, s, n));
    });
    m.def("richmond_asymptote_corrected", [](std::vector<unsigned> a, unsigned M, unsigned s, double n) {
        return static_cast<double>(richmond_asymptote_corrected(a, M, s, n));
    });
}
