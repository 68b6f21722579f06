// ideal -- checks and decompositions for minimal DFAs of ideal languages.
//
// Exit codes (stable, scripts rely on them):
//   0  success (check: input is an ideal; prime: composite; decompose/verify: ok)
//   1  I/O error, malformed input or bad parameters
//   2  input does not recognize a non-empty ideal
//   3  input is prime for the requested mode (no decomposition / no witness)
//   4  verify: a component is not strictly smaller than the original
//   5  verify: combined language differs from the original

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ideal/ideal_lang.hpp"
#include "ideal/inter_decomp.hpp"
#include "ideal/io.hpp"
#include "ideal/union_decomp.hpp"

using namespace ideal;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitNotIdeal = 2;
constexpr int kExitPrime = 3;
constexpr int kExitSize = 4;
constexpr int kExitMismatch = 5;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << text;
}

Dfa load_automaton(const std::string& path) { return parse_automaton_json(read_file(path)); }

void emit_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

struct CheckReport {
    bool trim = false;
    bool minimal = false;
    bool ideal = false;
    bool linear = false;
    std::optional<IdealAutomaton> validated;
    std::string not_ideal_word, not_ideal_upper;
};

CheckReport run_checks(const Dfa& a) {
    CheckReport r;
    r.trim = trim_check(a).trim;
    r.minimal = is_minimal(a);
    try {
        r.validated = check_ideal(a);
        r.ideal = true;
        r.linear = r.validated->linear();
    } catch (const Error& e) {
        if (e.code != ErrorCode::NotIdeal && e.code != ErrorCode::EmptyLanguage) throw;
        r.not_ideal_word = e.word;
        r.not_ideal_upper = e.upper_word;
    }
    return r;
}

int cmd_check(const std::string& path, bool as_json) {
    Dfa a = load_automaton(path);
    CheckReport r = run_checks(a);
    if (as_json) {
        json j;
        j["schema"] = "ideal.report/1";
        j["command"] = "check";
        j["states"] = a.state_count;
        j["alphabet"] = json::array();
        for (char c : a.alphabet) j["alphabet"].push_back(std::string(1, c));
        j["trim"] = r.trim;
        j["minimal"] = r.minimal;
        j["ideal"] = r.ideal;
        if (r.ideal) {
            j["linear"] = r.linear;
            j["final_state"] = r.validated->final_state;
            j["ranks"] = r.validated->rank_table.ranks();
        } else if (!r.not_ideal_word.empty() || !r.not_ideal_upper.empty()) {
            j["certificate"] = {{"word", r.not_ideal_word}, {"upper_word", r.not_ideal_upper}};
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "states:  " << a.state_count << "\n";
        std::cout << "trim:    " << (r.trim ? "yes" : "no") << "\n";
        std::cout << "minimal: " << (r.minimal ? "yes" : "no") << "\n";
        std::cout << "ideal:   " << (r.ideal ? "yes" : "no") << "\n";
        if (r.ideal) {
            std::cout << "linear:  " << (r.linear ? "yes" : "no") << "\n";
            std::cout << "ranks:  ";
            for (int rank : r.validated->rank_table.ranks()) std::cout << " " << rank;
            std::cout << "\n";
        } else {
            std::cout << "certificate: '" << r.not_ideal_word << "' is accepted but '"
                      << r.not_ideal_upper << "' is not\n";
        }
    }
    return r.ideal ? kExitOk : kExitNotIdeal;
}

int cmd_prime(const std::string& path, const std::string& mode) {
    IdealAutomaton ia = check_ideal(load_automaton(path));
    if (!ia.linear()) {
        Linearity lin = is_linear(ia.order);
        std::cout << "composite: non-linear, states " << lin.certificate->a << " and "
                  << lin.certificate->b << " are incomparable\n";
        return kExitOk;
    }
    if (mode == "inter") {
        DampingScan scan = damping_scan(ia);
        if (auto k = scan.first_damping()) {
            std::cout << "composite: damping between q" << (*k - 1) << ",q" << *k << "\n";
            return kExitOk;
        }
    } else {
        AccelScan scan = accel_scan(ia);
        if (!scan.accelerating_indices.empty()) {
            std::cout << "composite: accelerating at q" << scan.accelerating_indices.front()
                      << "\n";
            return kExitOk;
        }
    }
    std::cout << "prime\n";
    return kExitPrime;
}

int cmd_witness(const std::string& path) {
    IdealAutomaton ia = check_ideal(load_automaton(path));
    try {
        Witness w = witness(ia);
        std::cout << "witness: " << (w.word.empty() ? "(empty word)" : w.word) << "\n";
        for (size_t i = 0; i < w.factors.size(); ++i)
            std::cout << "  w(" << i + 1 << ") = " << w.factors[i] << "\n";
        return kExitOk;
    } catch (const Error& e) {
        if (e.code == ErrorCode::DampingPresent || e.code == ErrorCode::NonLinearInput) {
            std::cout << "composite: no witness exists\n";
            return kExitPrime;
        }
        throw;
    }
}

int cmd_decompose(const std::string& path, const std::string& mode, bool recursive,
                  bool no_verify, bool dot, const std::string& out_dir) {
    IdealAutomaton ia = check_ideal(load_automaton(path));
    Decomposition d;
    try {
        if (mode == "union") {
            d = decompose_union(ia, !no_verify);
        } else if (recursive) {
            RecursiveDecomposition r = decompose_inter_recursive(ia, !no_verify);
            if (r.decomposition.mode == DecompMode::Leaf) {
                std::cout << "prime: no decomposition\n";
                return kExitPrime;
            }
            d = std::move(r.decomposition);
        } else if (!ia.linear()) {
            d = decompose_nonlinear(ia, !no_verify);
        } else {
            d = decompose_linear(ia, !no_verify);
        }
    } catch (const Error& e) {
        if (e.code == ErrorCode::PrimeInput || e.code == ErrorCode::NoDampingPattern) {
            std::cout << "prime: no decomposition\n";
            return kExitPrime;
        }
        throw;
    }

    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        std::filesystem::path base(out_dir);
        write_file((base / "decomposition.json").string(), emit_decomposition_json(d));
        for (size_t i = 0; i < d.components.size(); ++i) {
            std::string stem = "component_" + std::to_string(i);
            write_file((base / (stem + ".json")).string(),
                       emit_automaton_json(d.components[i].dfa));
            if (dot) write_file((base / (stem + ".dot")).string(), emit_dot(d.components[i].dfa));
        }
    } else {
        std::cout << emit_decomposition_json(d);
    }
    std::cerr << d.components.size() << " components, "
              << (d.verified ? "verified" : "not verified") << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& original_path, const std::vector<std::string>& component_paths,
               const std::string& mode) {
    Dfa original = load_automaton(original_path);
    std::vector<Dfa> components;
    for (const std::string& p : component_paths) components.push_back(load_automaton(p));
    for (size_t i = 0; i < components.size(); ++i) {
        if (components[i].state_count >= original.state_count) {
            std::cout << "size violation: component " << i << " has "
                      << components[i].state_count << " states, original has "
                      << original.state_count << "\n";
            return kExitSize;
        }
    }
    ProductMode pm = (mode == "union") ? ProductMode::Union : ProductMode::Inter;
    Comparison eq = equivalent(product(pm, components), original);
    if (!eq.holds) {
        std::cout << "language mismatch: counterexample '" << eq.certificate->word << "'\n";
        return kExitMismatch;
    }
    std::cout << "ok\n";
    return kExitOk;
}

int cmd_gen(const std::string& family, int n, const std::string& base, const std::string& word,
            const std::string& words, const std::string& words_file, std::string alphabet,
            const std::string& out) {
    Dfa result;
    if (family == "fig6" || family == "ladder") {
        result = ladder_automaton(n).dfa;
    } else if (family == "power") {
        if (base.empty()) throw ParseError("--base is required for the power family");
        IdealAutomaton b = check_ideal(load_automaton(base));
        result = concat_power(b, n).dfa;
    } else if (family == "principal") {
        if (word.empty()) throw ParseError("--word is required for the principal family");
        if (alphabet.empty()) alphabet = word;
        result = principal_automaton(word, std::vector<char>(alphabet.begin(), alphabet.end()));
    } else {  // shuffle
        WordSet k;
        if (!words_file.empty()) {
            k = parse_wordset_text(read_file(words_file));
        } else {
            if (words.empty()) throw ParseError("--words or --words-file is required for shuffle");
            std::vector<std::string> list;
            std::string cur;
            for (char c : words) {
                if (c == ',') {
                    list.push_back(cur);
                    cur.clear();
                } else {
                    cur.push_back(c);
                }
            }
            list.push_back(cur);
            if (alphabet.empty())
                for (const std::string& w : list) alphabet += w;
            k = WordSet(std::vector<char>(alphabet.begin(), alphabet.end()), list);
        }
        result = shuffle_ideal(k).dfa;
    }
    emit_output(emit_automaton_json(result), out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"checks and decompositions for minimal DFAs of ideal languages"};
    app.require_subcommand(1);

    std::string file, out, out_dir, mode = "inter";
    bool as_json = false, recursive = false, no_verify = false, dot = false;

    auto* check = app.add_subcommand("check", "validate and classify an automaton");
    check->add_option("file", file)->required();
    check->add_flag("--json", as_json, "machine-readable report");

    auto* minimize_cmd = app.add_subcommand("minimize", "emit the minimal automaton");
    minimize_cmd->add_option("file", file)->required();
    minimize_cmd->add_option("-o,--out", out);

    auto* lmin_cmd = app.add_subcommand("lmin", "emit the generator set of an ideal");
    lmin_cmd->add_option("file", file)->required();

    auto* prime = app.add_subcommand("prime", "decide primality for a mode");
    prime->add_option("file", file)->required();
    prime->add_option("--mode", mode)->check(CLI::IsMember({"inter", "union"}));

    auto* witness_cmd = app.add_subcommand("witness", "emit a primality witness");
    witness_cmd->add_option("file", file)->required();

    auto* decompose = app.add_subcommand("decompose", "decompose into smaller ideal automata");
    decompose->add_option("file", file)->required();
    decompose->add_option("--mode", mode)->check(CLI::IsMember({"inter", "union"}));
    decompose->add_flag("--recursive", recursive, "refine to intersection-prime leaves");
    decompose->add_flag("--no-verify", no_verify, "skip the equivalence re-check");
    decompose->add_flag("--dot", dot, "also write DOT files");
    decompose->add_option("--out", out_dir, "write components into this directory");

    std::vector<std::string> verify_files;
    auto* verify = app.add_subcommand("verify", "check a decomposition against its source");
    verify->add_option("files", verify_files, "original followed by components")
        ->required()
        ->expected(-2);
    verify->add_option("--mode", mode)->check(CLI::IsMember({"inter", "union"}));

    std::string family, base, word, words, words_file, alphabet;
    int n = 1;
    auto* gen = app.add_subcommand("gen", "generate fixture automata");
    gen->add_option("--family", family)
        ->required()
        ->check(CLI::IsMember({"fig6", "ladder", "power", "principal", "shuffle"}));
    gen->add_option("-n", n);
    gen->add_option("--base", base);
    gen->add_option("--word", word);
    gen->add_option("--words", words);
    gen->add_option("--words-file", words_file);
    gen->add_option("--alphabet", alphabet);
    gen->add_option("-o,--out", out);

    auto* export_dot = app.add_subcommand("export-dot", "render an automaton as DOT");
    export_dot->add_option("file", file)->required();
    export_dot->add_option("-o,--out", out);

    try {
        app.parse(argc, argv);
        if (check->parsed()) return cmd_check(file, as_json);
        if (minimize_cmd->parsed()) {
            emit_output(emit_automaton_json(minimize(load_automaton(file))), out);
            return kExitOk;
        }
        if (lmin_cmd->parsed()) {
            std::cout << emit_wordset_text(lmin(check_ideal(load_automaton(file))));
            return kExitOk;
        }
        if (prime->parsed()) return cmd_prime(file, mode);
        if (witness_cmd->parsed()) return cmd_witness(file);
        if (decompose->parsed())
            return cmd_decompose(file, mode, recursive, no_verify, dot, out_dir);
        if (verify->parsed())
            return cmd_verify(verify_files.front(),
                              {verify_files.begin() + 1, verify_files.end()}, mode);
        if (export_dot->parsed()) {
            emit_output(emit_dot(load_automaton(file)), out);
            return kExitOk;
        }
        if (gen->parsed())
            return cmd_gen(family, n, base, word, words, words_file, alphabet, out);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitIo;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error [" << error_code_name(e.code) << "]: " << e.what() << "\n";
        switch (e.code) {
            case ErrorCode::NotIdeal:
            case ErrorCode::EmptyLanguage:
                return kExitNotIdeal;
            case ErrorCode::PrimeInput:
            case ErrorCode::NoDampingPattern:
                return kExitPrime;
            default:
                return kExitIo;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitIo;
}
