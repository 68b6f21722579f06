#include "ideal/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

namespace ideal {

WordSet enumerate_language(const Dfa& a, int max_len) {
    if (max_len < 0) throw Error(ErrorCode::IndexOutOfRange, "max_len must be non-negative");
    std::vector<std::string> found;
    std::string word;
    // Depth-first in letter order emits each length level in lexicographic
    // order; WordSet re-sorts into canonical shortlex order anyway.
    auto walk = [&](auto&& self, State q) -> void {
        if (a.is_final(q)) found.push_back(word);
        if (static_cast<int>(word.size()) == max_len) return;
        for (int x = 0; x < a.letter_count(); ++x) {
            word.push_back(a.alphabet[x]);
            self(self, a.step(q, x));
            word.pop_back();
        }
    };
    walk(walk, a.initial);
    return WordSet(a.alphabet, std::move(found));
}

WordSet subword_closure(const WordSet& k, int max_len) {
    if (max_len < 0) throw Error(ErrorCode::IndexOutOfRange, "max_len must be non-negative");
    std::vector<std::string> found;
    std::string word;
    auto walk = [&](auto&& self) -> void {
        for (const std::string& u : k.words)
            if (is_subword(u, word)) {
                found.push_back(word);
                break;
            }
        if (static_cast<int>(word.size()) == max_len) return;
        for (char c : k.alphabet) {
            word.push_back(c);
            self(self);
            word.pop_back();
        }
    };
    walk(walk);
    return WordSet(k.alphabet, std::move(found));
}

OracleCaps OracleCaps::from_env() {
    OracleCaps caps;
    if (const char* env = std::getenv("IDEAL_ORACLE_CAP")) {
        int value = std::atoi(env);
        if (value > 0) caps.max_states = value;
    }
    return caps;
}

void for_each_dfa(int state_count, const std::vector<char>& alphabet,
                  const std::function<void(const Dfa&)>& fn) {
    const int sigma = static_cast<int>(alphabet.size());
    const int cells = state_count * sigma;

    Dfa dfa;
    dfa.alphabet = alphabet;
    dfa.state_count = state_count;
    dfa.transitions.assign(cells, 0);
    dfa.finals.assign(state_count, false);

    // Odometer over transition tables, initial states and final sets.
    for (;;) {
        for (State init = 0; init < state_count; ++init) {
            dfa.initial = init;
            for (unsigned mask = 0; mask < (1u << state_count); ++mask) {
                for (State q = 0; q < state_count; ++q) dfa.finals[q] = (mask >> q) & 1;
                fn(dfa);
            }
        }
        int cell = 0;
        while (cell < cells && dfa.transitions[cell] == state_count - 1)
            dfa.transitions[cell++] = 0;
        if (cell == cells) break;
        ++dfa.transitions[cell];
    }
}

namespace {

// Distinct languages of complete DFAs strictly smaller than `bound`,
// represented by their canonical minimal automata.
std::vector<Dfa> languages_below(int bound, const std::vector<char>& alphabet) {
    std::set<std::vector<int>> seen;
    std::vector<Dfa> out;
    auto key_of = [](const Dfa& m) {
        std::vector<int> key;
        key.push_back(m.state_count);
        key.push_back(m.initial);
        for (bool f : m.finals) key.push_back(f);
        for (State t : m.transitions) key.push_back(t);
        return key;
    };
    for (int k = 1; k < bound; ++k) {
        for_each_dfa(k, alphabet, [&](const Dfa& candidate) {
            Dfa minimal = minimize(candidate);
            if (seen.insert(key_of(minimal)).second) out.push_back(std::move(minimal));
        });
    }
    return out;
}

}  // namespace

bool exhaustive_prime(const IdealAutomaton& a, ProductMode mode, const OracleCaps& caps) {
    if (a.state_count() > caps.max_states)
        throw Error(ErrorCode::TooLarge, "oracle capped at " + std::to_string(caps.max_states) +
                                             " states, input has " +
                                             std::to_string(a.state_count()));
    if (a.dfa.letter_count() > caps.max_alphabet)
        throw Error(ErrorCode::TooLarge,
                    "oracle capped at " + std::to_string(caps.max_alphabet) +
                        " letters, input has " + std::to_string(a.dfa.letter_count()));

    // Any decomposition may be assumed to use every admissible component:
    // adding components only tightens an intersection towards L(a) (resp.
    // grows a union towards L(a)), so the all-components combination decides
    // compositeness exactly.
    std::optional<Dfa> combined;
    for (const Dfa& candidate : languages_below(a.state_count(), a.dfa.alphabet)) {
        bool admissible = (mode == ProductMode::Inter) ? includes(a.dfa, candidate).holds
                                                       : includes(candidate, a.dfa).holds;
        if (!admissible) continue;
        if (!combined)
            combined = candidate;
        else
            combined = minimize(product(mode, {*combined, candidate}));
        if (equivalent(*combined, a.dfa).holds) return false;  // composite
    }
    return true;
}

}  // namespace ideal
