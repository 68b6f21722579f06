#pragma once

#include <string>
#include <string_view>

#include "ideal/decomposition.hpp"
#include "ideal/dfa.hpp"
#include "ideal/ideal_lang.hpp"

namespace ideal {

/// Raised on malformed input files; distinct from semantic Error codes so
/// the CLI can map it to the I/O exit code.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

/// Parses the canonical JSON automaton format:
///   { "alphabet": ["a","b"], "states": 2, "initial": 0, "finals": [1],
///     "transitions": [[0,"a",1], ...] }
/// Exactly states x |alphabet| transition triples are required. Validation
/// errors surface as Error, malformed JSON as ParseError.
Dfa parse_automaton_json(std::string_view text);

/// Emits the canonical JSON form: sorted keys, two-space indent, transitions
/// sorted by (state, letter), trailing newline. parse(emit(a)) round-trips
/// bit-identically for canonical-form inputs.
std::string emit_automaton_json(const Dfa& a);

/// Deterministic DOT rendering: one node per state (doublecircle for
/// finals), one edge per (source, target) pair labeled with the
/// comma-joined letter set, nodes and edges in ascending order.
std::string emit_dot(const Dfa& a);

/// Word-set text format: one word per line, '#' starts a comment line,
/// blank lines are skipped, and an optional '@alphabet abc' header fixes the
/// alphabet (inferred from the words otherwise). The empty word is written
/// as "".
WordSet parse_wordset_text(std::string_view text);
std::string emit_wordset_text(const WordSet& k);

/// Decomposition JSON:
///   { "mode": "inter", "source": <automaton>, "verified": true,
///     "components": [{ "tag": "reduced:k=1", "automaton": <automaton> }] }
std::string emit_decomposition_json(const Decomposition& d);
Decomposition parse_decomposition_json(std::string_view text);

}  // namespace ideal
