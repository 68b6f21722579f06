#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ideal/ideal_lang.hpp"
#include "ideal/inter_decomp.hpp"
#include "ideal/io.hpp"
#include "ideal/oracle.hpp"
#include "ideal/union_decomp.hpp"

namespace py = pybind11;
using namespace ideal;

namespace {

std::vector<char> to_alphabet(const std::string& letters) {
    return std::vector<char>(letters.begin(), letters.end());
}

std::string alphabet_string(const Dfa& a) { return std::string(a.alphabet.begin(), a.alphabet.end()); }

WordSet make_wordset(const std::string& alphabet, const std::vector<std::string>& words) {
    return WordSet(to_alphabet(alphabet), words);
}

py::object comparison_tuple(const Comparison& c) {
    return py::make_tuple(c.holds,
                          c.certificate ? py::cast(c.certificate->word) : py::none().cast<py::object>());
}

}  // namespace

PYBIND11_MODULE(ideal_automata, m) {
    m.doc() = "checks and decompositions for minimal DFAs of ideal languages";

    py::register_exception<Error>(m, "IdealError");
    py::register_exception<ParseError>(m, "FormatError");

    py::enum_<ProductMode>(m, "ProductMode")
        .value("INTER", ProductMode::Inter)
        .value("UNION", ProductMode::Union);

    py::class_<Dfa>(m, "Dfa")
        .def_static("from_json", [](const std::string& text) { return parse_automaton_json(text); })
        .def("to_json", &emit_automaton_json)
        .def("to_dot", &emit_dot)
        .def_property_readonly("states", [](const Dfa& a) { return a.state_count; })
        .def_property_readonly("alphabet", &alphabet_string)
        .def_property_readonly("initial", [](const Dfa& a) { return a.initial; })
        .def_property_readonly("finals",
                               [](const Dfa& a) {
                                   std::vector<int> out;
                                   for (State q = 0; q < a.state_count; ++q)
                                       if (a.is_final(q)) out.push_back(q);
                                   return out;
                               })
        .def("accepts", [](const Dfa& a, const std::string& w) { return accepts(a, w); })
        .def("minimize", [](const Dfa& a) { return minimize(a); })
        .def("is_minimal", [](const Dfa& a) { return is_minimal(a); })
        .def("equivalent", [](const Dfa& a, const Dfa& b) { return comparison_tuple(equivalent(a, b)); })
        .def("includes", [](const Dfa& a, const Dfa& b) { return comparison_tuple(includes(a, b)); })
        .def("__eq__", [](const Dfa& a, const Dfa& b) { return a == b; })
        .def("__repr__", [](const Dfa& a) {
            return "<Dfa states=" + std::to_string(a.state_count) + " alphabet='" +
                   alphabet_string(a) + "'>";
        });

    py::class_<IdealAutomaton>(m, "IdealAutomaton")
        .def_property_readonly("dfa", [](const IdealAutomaton& a) { return a.dfa; })
        .def_property_readonly("states", &IdealAutomaton::state_count)
        .def_property_readonly("final_state", [](const IdealAutomaton& a) { return a.final_state; })
        .def_property_readonly("ranks",
                               [](const IdealAutomaton& a) { return a.rank_table.ranks(); })
        .def_property_readonly("linear", &IdealAutomaton::linear)
        .def("__repr__", [](const IdealAutomaton& a) {
            return "<IdealAutomaton states=" + std::to_string(a.state_count()) + ">";
        });

    py::class_<DecompComponent>(m, "Component")
        .def_readonly("dfa", &DecompComponent::dfa)
        .def_readonly("tag", &DecompComponent::tag);

    py::class_<Decomposition>(m, "Decomposition")
        .def_property_readonly("mode",
                               [](const Decomposition& d) { return decomp_mode_name(d.mode); })
        .def_readonly("source", &Decomposition::source)
        .def_readonly("components", &Decomposition::components)
        .def_readonly("verified", &Decomposition::verified)
        .def("to_json", &emit_decomposition_json);

    py::class_<Witness>(m, "Witness")
        .def_readonly("factors", &Witness::factors)
        .def_readonly("word", &Witness::word);

    m.def("product", [](ProductMode mode, const std::vector<Dfa>& parts) {
        return product(mode, parts);
    });
    m.def("check_ideal", &check_ideal);
    m.def("lmin", [](const IdealAutomaton& a) { return lmin(a).words; });
    m.def("shuffle_ideal", [](const std::string& alphabet, const std::vector<std::string>& words) {
        return shuffle_ideal(make_wordset(alphabet, words));
    });
    m.def("principal_automaton", [](const std::string& w, const std::string& alphabet) {
        return principal_automaton(w, to_alphabet(alphabet));
    });
    m.def("concat", &concat);
    m.def("concat_power", &concat_power);
    m.def("ladder_automaton", &ladder_automaton);
    m.def("is_subword",
          [](const std::string& u, const std::string& v) { return is_subword(u, v); });

    m.def("separator", [](const IdealAutomaton& a) {
        SeparatorInfo info = separator(a);
        return py::make_tuple(info.sep, info.sep_rank, info.sep_set);
    });
    m.def("family_automaton", &family_automaton);
    m.def("decompose_nonlinear", &decompose_nonlinear, py::arg("a"), py::arg("verify") = true);
    m.def("decompose_linear", &decompose_linear, py::arg("a"), py::arg("verify") = true);
    m.def("damping_indices",
          [](const IdealAutomaton& a) { return damping_scan(a).damping_indices; });
    m.def("accelerating_indices",
          [](const IdealAutomaton& a) { return accel_scan(a).accelerating_indices; });
    m.def("is_inter_prime", &is_inter_prime);
    m.def("is_union_prime", &is_union_prime);
    m.def("witness", &witness);
    m.def(
        "decompose_inter_recursive",
        [](const IdealAutomaton& a, bool verify) {
            RecursiveDecomposition r = decompose_inter_recursive(a, verify);
            return py::make_tuple(r.decomposition, r.linear_leaf_count, r.raw_leaf_count);
        },
        py::arg("a"), py::arg("verify") = true);
    m.def("decompose_union", &decompose_union, py::arg("a"), py::arg("verify") = true);

    m.def("enumerate_language", [](const Dfa& a, int max_len) {
        return enumerate_language(a, max_len).words;
    });
    m.def("subword_closure",
          [](const std::string& alphabet, const std::vector<std::string>& words, int max_len) {
              return subword_closure(make_wordset(alphabet, words), max_len).words;
          });
    m.def(
        "exhaustive_prime",
        [](const IdealAutomaton& a, ProductMode mode) { return exhaustive_prime(a, mode); },
        py::arg("a"), py::arg("mode"));
}
