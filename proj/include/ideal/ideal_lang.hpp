#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ideal/dfa.hpp"
#include "ideal/order.hpp"

namespace ideal {

/// Finite set of words over a fixed alphabet, sorted by length then
/// lexicographically, without duplicates.
struct WordSet {
    std::vector<char> alphabet;
    std::vector<std::string> words;

    WordSet() = default;
    WordSet(std::vector<char> alphabet, std::vector<std::string> words);

    bool contains(std::string_view w) const;
    bool operator==(const WordSet&) const = default;
};

/// Word-length-then-lexicographic comparison, the canonical word order.
bool shortlex_less(const std::string& a, const std::string& b);

/// True iff u embeds in v as a subsequence.
bool is_subword(std::string_view u, std::string_view v);

/// A Dfa validated as minimal, trim, and recognizing a non-empty ideal
/// (a language closed under inserting arbitrary letters anywhere).
/// Caches the reachability order and ranks; such automata are partially
/// ordered with a unique final state that is a sink.
struct IdealAutomaton {
    Dfa dfa;
    ReachOrder order;
    RankTable rank_table;
    State final_state = -1;

    int state_count() const { return dfa.state_count; }
    bool linear() const;
};

/// Validates that L(a) is a non-empty ideal, minimizing first if needed.
/// The check verifies, for every state q and letter x, that the residual of
/// q is included in the residual of step(q, x); closure under one letter
/// insertion implies closure under all insertions.
///
/// Throws NotIdeal with a certificate pair (w, w'): w accepted, w' an
/// upper-word of w rejected. Throws EmptyLanguage when L(a) is empty.
IdealAutomaton check_ideal(const Dfa& a);

/// The unique minimum-cardinality generator set of L(a): all accepted words
/// with no accepted strict subword.
WordSet lmin(const IdealAutomaton& a);

/// Minimal automaton of the ideal generated by `k` (the union of the
/// principal ideals of its words). Requires a non-empty word set.
IdealAutomaton shuffle_ideal(const WordSet& k);

/// The (|w|+1)-state chain automaton recognizing the principal ideal of w:
/// state i advances to i+1 on w[i] and loops on every other letter; the last
/// state is an accepting sink. The result is already minimal.
Dfa principal_automaton(std::string_view w, const std::vector<char>& alphabet);

/// Serial composition: drops a's final state, redirects transitions entering
/// it to b's initial state, and keeps b intact. The composite is re-validated
/// as a minimal ideal automaton.
IdealAutomaton concat(const IdealAutomaton& a, const IdealAutomaton& b);

/// Builds the composite as a raw Dfa without re-validating. Used to iterate
/// the construction cheaply; callers validate the final result.
Dfa concat_raw(const Dfa& a, State a_final, const Dfa& b);

/// Iterated composition a^n (n >= 1).
IdealAutomaton concat_power(const IdealAutomaton& a, int n);

/// Two-rail ladder automaton over {a,b,c} with `n` crossing sections:
/// a start state, n pairs of mutually incomparable rail states, and an
/// accepting sink; 2n+2 states in total. Validated as a non-linear ideal
/// automaton. Its recursive intersection decomposition has 2^n linear leaves.
IdealAutomaton ladder_automaton(int n);

}  // namespace ideal
