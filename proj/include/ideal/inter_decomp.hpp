#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ideal/decomposition.hpp"
#include "ideal/ideal_lang.hpp"

namespace ideal {

/// Separator data of a non-linear ideal automaton: the last state before the
/// order branches into incomparable parts.
///
/// sep_rank is the largest n such that every rank up to n holds exactly one
/// state; sep is the unique state of that rank, and sep_set the states of
/// rank sep_rank + 1. Always 2 <= |sep_set| <= |alphabet|, and sep has a
/// direct transition to each member of sep_set.
struct SeparatorInfo {
    State sep = -1;
    int sep_rank = -1;
    std::vector<State> sep_set;  // sorted by state index
};

SeparatorInfo separator(const IdealAutomaton& a);

/// Restriction of `a` to the family of rho (ancestors and descendants).
/// Transitions that would leave the family are redirected through the least
/// comparable state whose successor stays inside. Requires rho in
/// separator(a).sep_set; the result is strictly smaller than `a` and
/// recognizes an ideal.
Dfa family_automaton(const IdealAutomaton& a, State rho);

/// Intersection decomposition of a non-linear ideal automaton into its family
/// automata, one per separator-set state. With `verify`, the component
/// product is re-checked equivalent to the input.
Decomposition decompose_nonlinear(const IdealAutomaton& a, bool verify = true);

/// Per-pair letter sets of a linear automaton under its chain numbering:
/// sets(i, j) holds the letters driving chain state i to chain state j.
struct DampingScan {
    std::vector<State> chain;                    // chain index -> state id
    std::vector<std::vector<std::string>> sets;  // sets[i][j], letters in alphabet order
    std::vector<int> damping_indices;            // all k with a damping pattern at (k-1, k)

    int chain_length() const { return static_cast<int>(chain.size()); }
    const std::string& letters(int i, int j) const { return sets[i][j]; }
    bool damping_at(int k) const;
    std::optional<int> first_damping() const;
};

/// Scans a linear ideal automaton for damping patterns: indices k in
/// [1, n-1] (states numbered q_0..q_n along the chain) where every letter
/// that loops on q_{k-1} or moves q_{k-1} to q_k also loops on q_k.
DampingScan damping_scan(const IdealAutomaton& a);

/// Removes chain state q_k (0 <= k <= n-1) and redirects every transition
/// entering it to q_{k+1}; the initial state becomes q_1 when k = 0. The
/// result is linear, one state smaller, and recognizes an ideal.
Dfa reduced_automaton(const IdealAutomaton& a, int k);

/// Intersection decomposition of a linear composite automaton: picks the
/// smallest damping index k and returns the reduced automata for k-1 and k.
Decomposition decompose_linear(const IdealAutomaton& a, bool verify = true);

/// An ideal automaton is intersection-prime iff it is linear and has no
/// damping pattern.
bool is_inter_prime(const IdealAutomaton& a);

/// A primality witness of a prime linear automaton: w_wit is rejected by the
/// automaton yet accepted by every strictly smaller automaton whose language
/// contains it. Factors satisfy step(q_{i-1}, w(i)) = q_i != step(q_i, w(i));
/// duplicating any single factor in place yields an accepted word.
struct Witness {
    std::vector<std::string> factors;
    std::string word;  // concatenation of the factors
};

/// Builds a witness per the damping-free structure, choosing the
/// lexicographically least admissible letters. Requires a linear automaton
/// with no damping pattern and at least two states.
Witness witness(const IdealAutomaton& a);

/// Result of refining an automaton to intersection-prime leaves.
struct RecursiveDecomposition {
    Decomposition decomposition;  // flattened; equivalent leaves deduplicated
    int linear_leaf_count = 0;    // leaves produced by non-linear splitting alone
    int raw_leaf_count = 0;       // prime leaves before deduplication
};

/// Repeatedly applies the non-linear and linear decompositions until every
/// leaf is intersection-prime. Components are re-minimized and re-validated
/// before recursing. A prime input yields mode Leaf with the input as its
/// only component.
RecursiveDecomposition decompose_inter_recursive(const IdealAutomaton& a, bool verify = true);

}  // namespace ideal
