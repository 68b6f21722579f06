#pragma once

#include <optional>
#include <vector>

#include "ideal/dfa.hpp"

namespace ideal {

/// Comparability classification of all state pairs under the reachability
/// preorder: q <= r iff some word drives q to r.
class ReachOrder {
public:
    ReachOrder() = default;
    ReachOrder(int state_count, std::vector<bool> leq);

    bool leq(State q, State r) const { return leq_[index(q, r)]; }
    bool less(State q, State r) const { return q != r && leq(q, r); }
    bool comparable(State q, State r) const { return leq(q, r) || leq(r, q); }
    bool incomparable(State q, State r) const { return !comparable(q, r); }

    /// True when no two distinct states lie on a common cycle, i.e. the
    /// preorder is antisymmetric.
    bool is_partial_order() const;

    /// Some pair of distinct states with q <= r <= q, if the relation is not
    /// antisymmetric.
    std::optional<std::pair<State, State>> cycle_pair() const;

    int state_count() const { return n_; }

private:
    size_t index(State q, State r) const { return static_cast<size_t>(q) * n_ + r; }

    int n_ = 0;
    std::vector<bool> leq_;
};

/// Ranks of all states: the length of a longest path from the initial state
/// that visits no state twice. Defined on partially ordered automata, where
/// dropping self-loops leaves a DAG.
class RankTable {
public:
    RankTable() = default;
    RankTable(std::vector<int> ranks);

    int rank(State q) const { return ranks_[q]; }
    const std::vector<int>& ranks() const { return ranks_; }

    /// Number of states of rank m (0 when m is out of range).
    int count_at(int m) const;
    int max_rank() const { return static_cast<int>(counts_.size()) - 1; }

private:
    std::vector<int> ranks_;
    std::vector<int> counts_;
};

/// Computes the comparability classification by per-state graph search.
ReachOrder reach_order(const Dfa& a);

/// Computes ranks of all states. Requires every state reachable from the
/// initial state and every cycle to be a self-loop; otherwise throws
/// NotPartiallyOrdered with a non-trivial cycle's state list.
RankTable ranks(const Dfa& a);
RankTable ranks(const Dfa& a, const ReachOrder& order);

struct Linearity {
    bool linear = false;
    std::optional<Certificate> certificate;  // an incomparable pair
    explicit operator bool() const { return linear; }
};

/// True iff the reachability preorder is total.
Linearity is_linear(const Dfa& a);
Linearity is_linear(const ReachOrder& order);

}  // namespace ideal
