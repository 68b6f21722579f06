#include "ideal/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ideal {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

RawAutomaton raw_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("automaton must be a JSON object");
    for (const char* key : {"alphabet", "states", "initial", "finals", "transitions"})
        if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");

    RawAutomaton raw;
    if (!j["alphabet"].is_array()) throw ParseError("'alphabet' must be an array of letters");
    for (const json& entry : j["alphabet"]) {
        if (!entry.is_string()) throw ParseError("alphabet entries must be strings");
        raw.alphabet.push_back(entry.get<std::string>());
    }
    if (!j["states"].is_number_integer()) throw ParseError("'states' must be an integer");
    raw.states = j["states"].get<int>();
    if (!j["initial"].is_number_integer()) throw ParseError("'initial' must be an integer");
    raw.initial = j["initial"].get<int>();
    if (!j["finals"].is_array()) throw ParseError("'finals' must be an array");
    for (const json& entry : j["finals"]) {
        if (!entry.is_number_integer()) throw ParseError("final entries must be integers");
        raw.finals.push_back(entry.get<int>());
    }
    if (!j["transitions"].is_array()) throw ParseError("'transitions' must be an array");
    for (const json& entry : j["transitions"]) {
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
            !entry[1].is_string() || !entry[2].is_number_integer())
            throw ParseError("transitions must be [state, letter, state] triples");
        raw.transitions.emplace_back(entry[0].get<int>(), entry[1].get<std::string>(),
                                     entry[2].get<int>());
    }
    size_t expected = raw.alphabet.empty()
                          ? 0
                          : [&raw] {
                                std::set<std::string> distinct(raw.alphabet.begin(),
                                                               raw.alphabet.end());
                                return distinct.size() * static_cast<size_t>(raw.states);
                            }();
    if (raw.transitions.size() != expected)
        throw ParseError("expected exactly states x alphabet transitions, got " +
                         std::to_string(raw.transitions.size()));
    return raw;
}

json automaton_to_json(const Dfa& a) {
    json j;
    j["alphabet"] = json::array();
    for (char c : a.alphabet) j["alphabet"].push_back(std::string(1, c));
    j["states"] = a.state_count;
    j["initial"] = a.initial;
    j["finals"] = json::array();
    for (State q = 0; q < a.state_count; ++q)
        if (a.is_final(q)) j["finals"].push_back(q);
    j["transitions"] = json::array();
    for (State q = 0; q < a.state_count; ++q)
        for (int x = 0; x < a.letter_count(); ++x)
            j["transitions"].push_back({q, std::string(1, a.alphabet[x]), a.step(q, x)});
    return j;
}

}  // namespace

Dfa parse_automaton_json(std::string_view text) {
    return validate(raw_from_json(parse_json(text)));
}

std::string emit_automaton_json(const Dfa& a) {
    return automaton_to_json(a).dump(2) + "\n";
}

std::string emit_dot(const Dfa& a) {
    std::ostringstream out;
    out << "digraph dfa {\n";
    out << "  rankdir=LR;\n";
    out << "  __start [shape=point];\n";
    for (State q = 0; q < a.state_count; ++q)
        out << "  q" << q << " [shape=" << (a.is_final(q) ? "doublecircle" : "circle") << "];\n";
    out << "  __start -> q" << a.initial << ";\n";
    for (State q = 0; q < a.state_count; ++q) {
        for (State r = 0; r < a.state_count; ++r) {
            std::string letters;
            for (int x = 0; x < a.letter_count(); ++x)
                if (a.step(q, x) == r) {
                    if (!letters.empty()) letters += ',';
                    letters += a.alphabet[x];
                }
            if (!letters.empty())
                out << "  q" << q << " -> q" << r << " [label=\"" << letters << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

WordSet parse_wordset_text(std::string_view text) {
    std::vector<std::string> words;
    std::vector<char> alphabet;
    bool alphabet_given = false;

    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        line = line.substr(start);
        if (line[0] == '#') continue;
        if (line.rfind("@alphabet", 0) == 0) {
            std::string letters = line.substr(9);
            size_t pos = letters.find_first_not_of(" \t");
            if (pos == std::string::npos) throw ParseError("@alphabet header names no letters");
            for (char c : letters.substr(pos)) alphabet.push_back(c);
            alphabet_given = true;
            continue;
        }
        if (line == "\"\"") {
            words.emplace_back();
            continue;
        }
        words.push_back(line);
    }
    if (!alphabet_given)
        for (const std::string& w : words)
            for (char c : w) alphabet.push_back(c);
    if (alphabet.empty()) throw ParseError("word set has no letters and no @alphabet header");
    return WordSet(std::move(alphabet), std::move(words));
}

std::string emit_wordset_text(const WordSet& k) {
    std::ostringstream out;
    out << "@alphabet ";
    for (char c : k.alphabet) out << c;
    out << "\n";
    for (const std::string& w : k.words) out << (w.empty() ? "\"\"" : w) << "\n";
    return out.str();
}

std::string emit_decomposition_json(const Decomposition& d) {
    json j;
    j["mode"] = decomp_mode_name(d.mode);
    j["source"] = automaton_to_json(d.source);
    j["verified"] = d.verified;
    j["components"] = json::array();
    for (const DecompComponent& c : d.components)
        j["components"].push_back({{"tag", c.tag}, {"automaton", automaton_to_json(c.dfa)}});
    return j.dump(2) + "\n";
}

Decomposition parse_decomposition_json(std::string_view text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("mode") || !j.contains("source") ||
        !j.contains("components"))
        throw ParseError("decomposition must carry 'mode', 'source' and 'components'");
    Decomposition d;
    std::string mode = j["mode"].get<std::string>();
    if (mode == "inter")
        d.mode = DecompMode::Inter;
    else if (mode == "union")
        d.mode = DecompMode::Union;
    else if (mode == "leaf")
        d.mode = DecompMode::Leaf;
    else
        throw ParseError("unknown decomposition mode '" + mode + "'");
    d.source = validate(raw_from_json(j["source"]));
    d.verified = j.value("verified", false);
    for (const json& entry : j["components"]) {
        if (!entry.is_object() || !entry.contains("tag") || !entry.contains("automaton"))
            throw ParseError("components must carry 'tag' and 'automaton'");
        d.components.push_back(
            {validate(raw_from_json(entry["automaton"])), entry["tag"].get<std::string>()});
    }
    return d;
}

}  // namespace ideal
