#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace ideal {

using State = int;

/// Error categories raised by library operations. Each error names the
/// offending element in its message; structured payloads are kept on the
/// exception for programmatic use.
enum class ErrorCode {
    MissingTransition,
    DuplicateTransition,
    BadIndex,
    AlphabetMismatch,
    EmptyList,
    UnknownLetter,
    NotPartiallyOrdered,
    NotIdeal,
    EmptyLanguage,
    LinearInput,
    NonLinearInput,
    NotInSeparatorSet,
    IndexOutOfRange,
    NoDampingPattern,
    DampingPresent,
    PrimeInput,
    TooLarge,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code(code) {}

    ErrorCode code;
    // Optional payloads, populated depending on the code.
    std::vector<State> states;   // offending state(s), cycle for NotPartiallyOrdered
    char letter = '\0';          // offending letter, if any
    std::string word;            // witness word (NotIdeal: the accepted word)
    std::string upper_word;      // NotIdeal: rejected upper-word
};

/// Replayable explanation of a failed check.
struct Certificate {
    enum class Kind { Word, StatePair, SingleState, Letter };
    Kind kind;
    std::string word;     // Kind::Word
    State a = -1;         // StatePair / SingleState
    State b = -1;         // StatePair
    char letter = '\0';   // Kind::Letter

    static Certificate make_word(std::string w);
    static Certificate make_state_pair(State a, State b);
    static Certificate make_state(State s);
    static Certificate make_letter(char c);
};

/// Unvalidated automaton description, as produced by parsers.
struct RawAutomaton {
    std::vector<std::string> alphabet;  // letters as 1-character strings
    int states = 0;
    int initial = 0;
    std::vector<int> finals;
    std::vector<std::tuple<int, std::string, int>> transitions;
};

/// Complete deterministic finite automaton with a dense transition table.
///
/// States are 0..state_count-1. The alphabet is sorted and duplicate-free;
/// its order is canonical for all iteration, numbering and tie-breaking.
struct Dfa {
    std::vector<char> alphabet;
    int state_count = 0;
    State initial = 0;
    std::vector<bool> finals;        // finals[q]
    std::vector<State> transitions;  // transitions[q * alphabet.size() + letter_pos]

    int letter_count() const { return static_cast<int>(alphabet.size()); }

    State step(State q, int letter_pos) const {
        return transitions[static_cast<size_t>(q) * alphabet.size() + letter_pos];
    }
    State& step_ref(State q, int letter_pos) {
        return transitions[static_cast<size_t>(q) * alphabet.size() + letter_pos];
    }

    bool is_final(State q) const { return finals[q]; }

    /// Position of letter c in the alphabet, or -1.
    int letter_pos(char c) const;

    /// True if q loops to itself on every letter.
    bool is_sink(State q) const;

    bool operator==(const Dfa& other) const = default;
};

enum class ProductMode { Inter, Union };

/// Builds a Dfa from a raw description, checking completeness, determinism
/// and index ranges. The alphabet is deduplicated and sorted.
Dfa validate(const RawAutomaton& raw);

/// Runs the automaton on a word. Throws UnknownLetter for foreign letters.
bool accepts(const Dfa& a, std::string_view word);

/// State reached from `from` after reading `word`.
State run_from(const Dfa& a, State from, std::string_view word);

struct TrimCheck {
    bool trim = false;
    std::optional<Certificate> certificate;  // a violating state
    explicit operator bool() const { return trim; }
};

/// True iff every state is reachable from the initial state and reaches
/// some final state.
TrimCheck trim_check(const Dfa& a);

/// Renumbers the reachable part of `a` by breadth-first discovery order from
/// the initial state, letters in alphabet order. Unreachable states are
/// dropped. Two automata are isomorphic iff their canonical forms are equal.
Dfa canonicalize(const Dfa& a);

/// Unique minimal complete DFA for L(a), in canonical numbering.
Dfa minimize(const Dfa& a);

/// True iff `a` is its own minimization (states all reachable, residuals
/// pairwise distinct).
bool is_minimal(const Dfa& a);

struct Comparison {
    bool holds = false;
    std::optional<Certificate> certificate;  // shortest lex-least witness word
    explicit operator bool() const { return holds; }
};

/// Language equality; on failure the certificate is the shortest word in the
/// symmetric difference (ties broken lexicographically by alphabet order).
Comparison equivalent(const Dfa& a, const Dfa& b);

/// Language inclusion L(a) <= L(b); certificate is the shortest word in
/// L(a) \ L(b) otherwise.
Comparison includes(const Dfa& a, const Dfa& b);

/// Reachable product automaton recognizing the intersection (resp. union)
/// of the part languages. States discovered breadth-first in canonical order.
Dfa product(ProductMode mode, const std::vector<Dfa>& parts);

/// Copy of `a` with the initial state replaced; recognizes the residual of
/// L(a) in q.
Dfa reroot(const Dfa& a, State q);

/// Matrix of "bad" state pairs (p, r) where the residual of p is NOT
/// included in the residual of r. Computed by one backward closure over the
/// self-product; row-major, size state_count^2.
std::vector<bool> residual_noninclusion(const Dfa& a);

}  // namespace ideal
