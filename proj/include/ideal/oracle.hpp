#pragma once

#include <functional>
#include <vector>

#include "ideal/dfa.hpp"
#include "ideal/ideal_lang.hpp"

namespace ideal {

/// All words of length <= max_len accepted by `a`, in canonical order
/// (length-major, then lexicographic).
WordSet enumerate_language(const Dfa& a, int max_len);

/// All words of length <= max_len over k's alphabet having some word of k as
/// a subword, computed by direct embedding tests over the full word space.
WordSet subword_closure(const WordSet& k, int max_len);

/// Size guards for the exhaustive primality oracle. The defaults keep the
/// full sweep cheap; IDEAL_ORACLE_CAP overrides the state cap when set.
struct OracleCaps {
    int max_states = 4;
    int max_alphabet = 2;

    static OracleCaps from_env();
};

/// Enumerates every complete DFA with exactly `state_count` states over the
/// given alphabet (all transition tables, initial states and final sets) and
/// calls fn on each. Exhaustive and unashamedly brute force.
void for_each_dfa(int state_count, const std::vector<char>& alphabet,
                  const std::function<void(const Dfa&)>& fn);

/// Decides primality literally from the definition: a is composite for
/// intersection iff the intersection of ALL strictly smaller automata whose
/// languages contain L(a) equals L(a); dually for union with the union of
/// all strictly smaller automata whose languages are contained in L(a).
/// Throws TooLarge beyond the caps.
bool exhaustive_prime(const IdealAutomaton& a, ProductMode mode,
                      const OracleCaps& caps = OracleCaps::from_env());

}  // namespace ideal
