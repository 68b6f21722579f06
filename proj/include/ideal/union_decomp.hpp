#pragma once

#include <string>
#include <vector>

#include "ideal/decomposition.hpp"
#include "ideal/ideal_lang.hpp"
#include "ideal/inter_decomp.hpp"

namespace ideal {

/// Accelerating-pattern scan of a linear ideal automaton under its chain
/// numbering. State q_i has an accelerating pattern when every letter
/// entering it from q_{i-1} also enters it from some strictly earlier state
/// q_j, j <= i-2.
struct AccelScan {
    std::vector<State> chain;                  // chain index -> state id
    std::vector<std::string> entering;         // entering[i]: letters from q_{i-1} to q_i
    std::vector<std::string> from_below;       // from_below[i]: letters from some q_j, j <= i-2
    std::vector<int> accelerating_indices;     // all i with an accelerating pattern

    bool accelerating_at(int i) const;
};

AccelScan accel_scan(const IdealAutomaton& a);

/// An ideal automaton is union-prime iff it is linear with no accelerating
/// pattern; equivalently its size is m+1 where m is the length of the
/// longest generator. Both routes are evaluated and must agree.
bool is_union_prime(const IdealAutomaton& a);

/// Union decomposition of a composite ideal automaton into the principal
/// automata of its generator set, sorted by generator word. Every component
/// is union-prime and strictly smaller than the input.
Decomposition decompose_union(const IdealAutomaton& a, bool verify = true);

}  // namespace ideal
