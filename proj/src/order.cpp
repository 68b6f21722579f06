#include "ideal/order.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace ideal {

ReachOrder::ReachOrder(int state_count, std::vector<bool> leq)
    : n_(state_count), leq_(std::move(leq)) {}

bool ReachOrder::is_partial_order() const { return !cycle_pair().has_value(); }

std::optional<std::pair<State, State>> ReachOrder::cycle_pair() const {
    for (State q = 0; q < n_; ++q)
        for (State r = q + 1; r < n_; ++r)
            if (leq(q, r) && leq(r, q)) return std::make_pair(q, r);
    return std::nullopt;
}

RankTable::RankTable(std::vector<int> ranks) : ranks_(std::move(ranks)) {
    int max_rank = 0;
    for (int r : ranks_) max_rank = std::max(max_rank, r);
    counts_.assign(max_rank + 1, 0);
    for (int r : ranks_) ++counts_[r];
}

int RankTable::count_at(int m) const {
    if (m < 0 || m >= static_cast<int>(counts_.size())) return 0;
    return counts_[m];
}

ReachOrder reach_order(const Dfa& a) {
    const int n = a.state_count;
    std::vector<bool> leq(static_cast<size_t>(n) * n, false);
    std::vector<State> stack;
    for (State q = 0; q < n; ++q) {
        // Depth-first reachability from q.
        stack.assign(1, q);
        leq[static_cast<size_t>(q) * n + q] = true;
        while (!stack.empty()) {
            State cur = stack.back();
            stack.pop_back();
            for (int x = 0; x < a.letter_count(); ++x) {
                State r = a.step(cur, x);
                if (!leq[static_cast<size_t>(q) * n + r]) {
                    leq[static_cast<size_t>(q) * n + r] = true;
                    stack.push_back(r);
                }
            }
        }
    }
    return ReachOrder(n, std::move(leq));
}

namespace {

// Shortest state path from `from` to `to` (inclusive), by BFS.
std::vector<State> state_path(const Dfa& a, State from, State to) {
    std::vector<int> parent(a.state_count, -2);
    std::queue<State> todo;
    parent[from] = -1;
    todo.push(from);
    while (!todo.empty()) {
        State q = todo.front();
        todo.pop();
        if (q == to) break;
        for (int x = 0; x < a.letter_count(); ++x) {
            State r = a.step(q, x);
            if (parent[r] == -2) {
                parent[r] = q;
                todo.push(r);
            }
        }
    }
    std::vector<State> path;
    for (State cur = to; cur != -1; cur = parent[cur]) path.push_back(cur);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

RankTable ranks(const Dfa& a) { return ranks(a, reach_order(a)); }

RankTable ranks(const Dfa& a, const ReachOrder& order) {
    if (auto cycle = order.cycle_pair()) {
        auto [q, r] = *cycle;
        // Stitch together q -> r -> q, dropping the duplicated endpoints.
        std::vector<State> fwd = state_path(a, q, r);
        std::vector<State> back = state_path(a, r, q);
        fwd.insert(fwd.end(), back.begin() + 1, back.end());
        fwd.pop_back();
        Error e(ErrorCode::NotPartiallyOrdered,
                "states " + std::to_string(q) + " and " + std::to_string(r) +
                    " lie on a non-trivial cycle");
        e.states = fwd;
        throw e;
    }

    const int n = a.state_count;
    // Kahn's algorithm on the self-loop-free graph, then a longest-path sweep.
    std::vector<int> indegree(n, 0);
    for (State q = 0; q < n; ++q)
        for (int x = 0; x < a.letter_count(); ++x) {
            State r = a.step(q, x);
            if (r != q) ++indegree[r];
        }
    std::vector<State> topo;
    topo.reserve(n);
    std::queue<State> ready;
    for (State q = 0; q < n; ++q)
        if (indegree[q] == 0) ready.push(q);
    while (!ready.empty()) {
        State q = ready.front();
        ready.pop();
        topo.push_back(q);
        for (int x = 0; x < a.letter_count(); ++x) {
            State r = a.step(q, x);
            if (r != q && --indegree[r] == 0) ready.push(r);
        }
    }

    std::vector<int> rank(n, -1);
    rank[a.initial] = 0;
    for (State q : topo) {
        if (rank[q] < 0) continue;  // not reachable from the initial state
        for (int x = 0; x < a.letter_count(); ++x) {
            State r = a.step(q, x);
            if (r != q) rank[r] = std::max(rank[r], rank[q] + 1);
        }
    }
    for (State q = 0; q < n; ++q)
        if (rank[q] < 0)
            throw std::invalid_argument("state " + std::to_string(q) +
                                        " is unreachable from the initial state");
    return RankTable(std::move(rank));
}

Linearity is_linear(const Dfa& a) { return is_linear(reach_order(a)); }

Linearity is_linear(const ReachOrder& order) {
    for (State q = 0; q < order.state_count(); ++q)
        for (State r = q + 1; r < order.state_count(); ++r)
            if (order.incomparable(q, r)) return {false, Certificate::make_state_pair(q, r)};
    return {true, std::nullopt};
}

}  // namespace ideal
