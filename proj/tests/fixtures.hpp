#pragma once

#include <random>
#include <string>
#include <vector>

#include "ideal/dfa.hpp"
#include "ideal/ideal_lang.hpp"

namespace fixtures {

using ideal::Dfa;
using ideal::RawAutomaton;
using ideal::State;

inline Dfa make_dfa(const std::string& alphabet, int states, int initial,
                    const std::vector<int>& finals,
                    const std::vector<std::tuple<int, char, int>>& triples) {
    RawAutomaton raw;
    for (char c : alphabet) raw.alphabet.push_back(std::string(1, c));
    raw.states = states;
    raw.initial = initial;
    raw.finals = finals;
    for (const auto& [src, letter, dst] : triples)
        raw.transitions.emplace_back(src, std::string(1, letter), dst);
    return ideal::validate(raw);
}

/// 4-state linear composite over {a,b,c}: the minimal automaton of the ideal
/// generated by {ab, ba, bb, ca, cb}. Has a damping pattern between q0 and
/// q1 and an accelerating pattern in q2.
inline Dfa linear4() {
    return make_dfa("abc", 4, 0, {3},
                    {{0, 'a', 1},
                     {0, 'b', 2},
                     {0, 'c', 2},
                     {1, 'a', 1},
                     {1, 'b', 3},
                     {1, 'c', 2},
                     {2, 'a', 3},
                     {2, 'b', 3},
                     {2, 'c', 2},
                     {3, 'a', 3},
                     {3, 'b', 3},
                     {3, 'c', 3}});
}

/// linear4 with its first chain state removed (initial q1).
inline Dfa linear4_reduced0() {
    return make_dfa("abc", 3, 0, {2},
                    {{0, 'a', 0},
                     {0, 'b', 2},
                     {0, 'c', 1},
                     {1, 'a', 2},
                     {1, 'b', 2},
                     {1, 'c', 1},
                     {2, 'a', 2},
                     {2, 'b', 2},
                     {2, 'c', 2}});
}

/// linear4 with its second chain state removed.
inline Dfa linear4_reduced1() {
    return make_dfa("abc", 3, 0, {2},
                    {{0, 'a', 1},
                     {0, 'b', 1},
                     {0, 'c', 1},
                     {1, 'a', 2},
                     {1, 'b', 2},
                     {1, 'c', 1},
                     {2, 'a', 2},
                     {2, 'b', 2},
                     {2, 'c', 2}});
}

/// 8-state non-linear ideal automaton over {a,b}: the minimal automaton of
/// the ideal generated by {aba, abb, bbbaa}. States: 0 initial, chain
/// 0 < 1 < 2, then the order branches at state 2 into the incomparable
/// states 3 (short branch, via 6) and 4 (long branch, via 5 and 6); 7 is the
/// accepting sink.
inline Dfa nonlinear8() {
    return make_dfa("ab", 8, 0, {7},
                    {{0, 'a', 3},
                     {0, 'b', 1},
                     {1, 'a', 3},
                     {1, 'b', 2},
                     {2, 'a', 3},
                     {2, 'b', 4},
                     {3, 'a', 3},
                     {3, 'b', 6},
                     {4, 'a', 5},
                     {4, 'b', 4},
                     {5, 'a', 7},
                     {5, 'b', 6},
                     {6, 'a', 7},
                     {6, 'b', 7},
                     {7, 'a', 7},
                     {7, 'b', 7}});
}

/// Expected family automaton of nonlinear8 for branch state 3: the family
/// drops states 4 and 5, and the escaping transition (2, b) is redirected to
/// the target of (3, b). Renumbered 0..5 preserving the original order.
inline Dfa nonlinear8_family_small() {
    return make_dfa("ab", 6, 0, {5},
                    {{0, 'a', 3},
                     {0, 'b', 1},
                     {1, 'a', 3},
                     {1, 'b', 2},
                     {2, 'a', 3},
                     {2, 'b', 4},  // redirected
                     {3, 'a', 3},
                     {3, 'b', 4},
                     {4, 'a', 5},
                     {4, 'b', 5},
                     {5, 'a', 5},
                     {5, 'b', 5}});
}

/// Expected family automaton of nonlinear8 for branch state 4: drops state 3;
/// the escaping transitions (0,a), (1,a), (2,a) are redirected to the target
/// of (4, a). Renumbered 0..6 preserving the original order.
inline Dfa nonlinear8_family_large() {
    return make_dfa("ab", 7, 0, {6},
                    {{0, 'a', 4},  // redirected
                     {0, 'b', 1},
                     {1, 'a', 4},  // redirected
                     {1, 'b', 2},
                     {2, 'a', 4},  // redirected
                     {2, 'b', 3},
                     {3, 'a', 4},
                     {3, 'b', 3},
                     {4, 'a', 6},
                     {4, 'b', 5},
                     {5, 'a', 6},
                     {5, 'b', 6},
                     {6, 'a', 6},
                     {6, 'b', 6}});
}

/// Generator words of the 8-state ideal over {a,b,c} whose ranks are
/// 0,1,2,2,3,4,4,5.
inline ideal::WordSet three_word_generators() {
    return ideal::WordSet({'a', 'b', 'c'}, {"cabb", "cacca", "cbca"});
}

/// Minimal automaton of exactly {"ab"} over {a,b}; not subword-closed.
inline Dfa exact_ab() {
    return make_dfa("ab", 4, 0, {2},
                    {{0, 'a', 1},
                     {0, 'b', 3},
                     {1, 'a', 3},
                     {1, 'b', 2},
                     {2, 'a', 3},
                     {2, 'b', 3},
                     {3, 'a', 3},
                     {3, 'b', 3}});
}

/// 1-state automaton accepting every word.
inline Dfa sigma_star(const std::string& alphabet) {
    std::vector<std::tuple<int, char, int>> triples;
    for (char c : alphabet) triples.emplace_back(0, c, 0);
    return make_dfa(alphabet, 1, 0, {0}, triples);
}

/// Random complete DFA; finals may be empty.
inline Dfa random_dfa(std::mt19937& rng, int max_states, const std::string& alphabet) {
    std::uniform_int_distribution<int> state_count(1, max_states);
    int n = state_count(rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<std::tuple<int, char, int>> triples;
    std::vector<int> finals;
    for (int q = 0; q < n; ++q) {
        for (char c : alphabet) triples.emplace_back(q, c, pick(rng));
        if (coin(rng)) finals.push_back(q);
    }
    return make_dfa(alphabet, n, pick(rng), finals, triples);
}

/// Random non-empty word set: up to max_words words of length <= max_len.
inline ideal::WordSet random_wordset(std::mt19937& rng, const std::string& alphabet,
                                     int max_words, int max_len) {
    std::uniform_int_distribution<int> word_count(1, max_words);
    std::uniform_int_distribution<int> word_len(0, max_len);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(alphabet.size()) - 1);
    std::vector<std::string> words;
    int count = word_count(rng);
    for (int i = 0; i < count; ++i) {
        std::string w;
        int len = word_len(rng);
        for (int j = 0; j < len; ++j) w.push_back(alphabet[pick(rng)]);
        words.push_back(std::move(w));
    }
    std::vector<char> sigma(alphabet.begin(), alphabet.end());
    return ideal::WordSet(sigma, std::move(words));
}

/// Independent rank oracle: length of the longest loop-free path from the
/// initial state to `target`, by exhaustive simple-path search.
inline int longest_loopfree_path(const Dfa& a, State target) {
    int best = -1;
    std::vector<bool> on_path(a.state_count, false);
    auto dfs = [&](auto&& self, State q, int len) -> void {
        if (q == target) best = std::max(best, len);
        on_path[q] = true;
        for (int x = 0; x < a.letter_count(); ++x) {
            State r = a.step(q, x);
            if (!on_path[r]) self(self, r, len + 1);
        }
        on_path[q] = false;
    };
    dfs(dfs, a.initial, 0);
    return best;
}

/// Independent subword-closure membership: exhaustive embedding search over
/// all index subsequences of v.
inline bool embeds_somewhere(const std::string& u, const std::string& v) {
    if (u.empty()) return true;
    if (v.empty()) return false;
    auto rec = [&](auto&& self, size_t i, size_t j) -> bool {
        if (i == u.size()) return true;
        if (j == v.size()) return false;
        if (u[i] == v[j] && self(self, i + 1, j + 1)) return true;
        return self(self, i, j + 1);
    };
    return rec(rec, 0, 0);
}

}  // namespace fixtures
