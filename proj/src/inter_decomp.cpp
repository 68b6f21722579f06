#include "ideal/inter_decomp.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace ideal {

namespace {

void require_nonlinear(const IdealAutomaton& a) {
    if (a.linear()) throw Error(ErrorCode::LinearInput, "automaton is linear");
}

void require_linear(const IdealAutomaton& a) {
    if (!a.linear()) throw Error(ErrorCode::NonLinearInput, "automaton is not linear");
}

// Chain numbering of a linear automaton: state ranks are exactly 0..n, so
// sorting by rank recovers the total order.
std::vector<State> chain_of(const IdealAutomaton& a) {
    std::vector<State> chain(a.state_count());
    for (State q = 0; q < a.state_count(); ++q) chain[a.rank_table.rank(q)] = q;
    return chain;
}

bool subset(const std::string& small, const std::string& big) {
    for (char c : small)
        if (big.find(c) == std::string::npos) return false;
    return true;
}

}  // namespace

SeparatorInfo separator(const IdealAutomaton& a) {
    require_nonlinear(a);
    const RankTable& rt = a.rank_table;
    int r = 0;
    while (rt.count_at(r + 1) == 1) ++r;
    SeparatorInfo info;
    info.sep_rank = r;
    for (State q = 0; q < a.state_count(); ++q) {
        if (rt.rank(q) == r) info.sep = q;
        if (rt.rank(q) == r + 1) info.sep_set.push_back(q);
    }
    assert(info.sep_set.size() >= 2 &&
           info.sep_set.size() <= static_cast<size_t>(a.dfa.letter_count()));
    return info;
}

Dfa family_automaton(const IdealAutomaton& a, State rho) {
    SeparatorInfo info = separator(a);
    if (std::find(info.sep_set.begin(), info.sep_set.end(), rho) == info.sep_set.end())
        throw Error(ErrorCode::NotInSeparatorSet,
                    "state " + std::to_string(rho) + " is not in the separator set");

    const Dfa& dfa = a.dfa;
    const ReachOrder& ord = a.order;
    std::vector<bool> in_family(dfa.state_count, false);
    std::vector<State> members;
    for (State q = 0; q < dfa.state_count; ++q)
        if (ord.leq(q, rho) || ord.leq(rho, q)) {
            in_family[q] = true;
            members.push_back(q);
        }

    // The ancestors of rho form a chain; sort it by rank.
    std::vector<State> ancestors;
    for (State q : members)
        if (ord.leq(q, rho)) ancestors.push_back(q);
    std::sort(ancestors.begin(), ancestors.end(), [&](State x, State y) {
        return a.rank_table.rank(x) < a.rank_table.rank(y);
    });

    std::vector<State> renumber(dfa.state_count, -1);
    for (size_t i = 0; i < members.size(); ++i) renumber[members[i]] = static_cast<State>(i);

    Dfa out;
    out.alphabet = dfa.alphabet;
    out.state_count = static_cast<int>(members.size());
    out.initial = renumber[dfa.initial];
    out.finals.assign(out.state_count, false);
    out.finals[renumber[a.final_state]] = true;
    out.transitions.assign(static_cast<size_t>(out.state_count) * out.alphabet.size(), -1);

    for (State q : members) {
        for (int x = 0; x < dfa.letter_count(); ++x) {
            State target = dfa.step(q, x);
            if (!in_family[target]) {
                // Redirect through the least state above q whose successor on
                // x stays in the family. Since the target escaped, q is below
                // rho; walk the ancestor chain upward from q. rho itself
                // always qualifies, so the walk terminates.
                auto it = std::find(ancestors.begin(), ancestors.end(), q);
                assert(it != ancestors.end());
                for (;; ++it) {
                    assert(it != ancestors.end());
                    if (in_family[dfa.step(*it, x)]) {
                        target = dfa.step(*it, x);
                        break;
                    }
                }
            }
            out.step_ref(renumber[q], x) = renumber[target];
        }
    }
    assert(out.state_count < dfa.state_count);
    return out;
}

Decomposition decompose_nonlinear(const IdealAutomaton& a, bool verify) {
    SeparatorInfo info = separator(a);
    Decomposition out;
    out.mode = DecompMode::Inter;
    out.source = a.dfa;
    for (State rho : info.sep_set)
        out.components.push_back(
            {family_automaton(a, rho), "family:rho=" + std::to_string(rho)});
    if (verify) {
        std::vector<Dfa> parts;
        for (const DecompComponent& c : out.components) parts.push_back(c.dfa);
        Comparison eq = equivalent(product(ProductMode::Inter, parts), a.dfa);
        if (!eq.holds)
            throw std::logic_error("family decomposition does not recover the input language");
        out.verified = true;
    }
    return out;
}

bool DampingScan::damping_at(int k) const {
    return std::find(damping_indices.begin(), damping_indices.end(), k) != damping_indices.end();
}

std::optional<int> DampingScan::first_damping() const {
    if (damping_indices.empty()) return std::nullopt;
    return damping_indices.front();
}

DampingScan damping_scan(const IdealAutomaton& a) {
    require_linear(a);
    const Dfa& dfa = a.dfa;
    DampingScan scan;
    scan.chain = chain_of(a);
    const int count = static_cast<int>(scan.chain.size());

    std::vector<int> position(dfa.state_count);
    for (int i = 0; i < count; ++i) position[scan.chain[i]] = i;

    scan.sets.assign(count, std::vector<std::string>(count));
    for (int i = 0; i < count; ++i)
        for (int x = 0; x < dfa.letter_count(); ++x)
            scan.sets[i][position[dfa.step(scan.chain[i], x)]].push_back(dfa.alphabet[x]);

    // States are q_0..q_n with n = count - 1; damping patterns live between
    // consecutive non-final states, i.e. k ranges over [1, n-1].
    for (int k = 1; k <= count - 2; ++k) {
        std::string entering = scan.sets[k - 1][k - 1] + scan.sets[k - 1][k];
        if (subset(entering, scan.sets[k][k])) scan.damping_indices.push_back(k);
    }
    return scan;
}

Dfa reduced_automaton(const IdealAutomaton& a, int k) {
    require_linear(a);
    std::vector<State> chain = chain_of(a);
    const int n = static_cast<int>(chain.size()) - 1;
    if (k < 0 || k > n - 1)
        throw Error(ErrorCode::IndexOutOfRange,
                    "reduction index " + std::to_string(k) + " out of range [0, " +
                        std::to_string(n - 1) + "]");

    const Dfa& dfa = a.dfa;
    // New states follow the chain with position k removed.
    std::vector<int> new_pos(chain.size(), -1);
    int next = 0;
    for (int i = 0; i <= n; ++i)
        if (i != k) new_pos[i] = next++;

    std::vector<int> position(dfa.state_count);
    for (int i = 0; i <= n; ++i) position[chain[i]] = i;

    Dfa out;
    out.alphabet = dfa.alphabet;
    out.state_count = n;  // one fewer than n + 1
    out.initial = (k == 0) ? new_pos[1] : new_pos[0];
    out.finals.assign(out.state_count, false);
    out.finals[new_pos[n]] = true;
    out.transitions.assign(static_cast<size_t>(out.state_count) * out.alphabet.size(), -1);
    for (int i = 0; i <= n; ++i) {
        if (i == k) continue;
        for (int x = 0; x < dfa.letter_count(); ++x) {
            int target = position[dfa.step(chain[i], x)];
            if (target == k) target = k + 1;
            out.step_ref(new_pos[i], x) = new_pos[target];
        }
    }
    return out;
}

Decomposition decompose_linear(const IdealAutomaton& a, bool verify) {
    DampingScan scan = damping_scan(a);
    std::optional<int> k = scan.first_damping();
    if (!k) throw Error(ErrorCode::NoDampingPattern, "automaton has no damping pattern");

    Decomposition out;
    out.mode = DecompMode::Inter;
    out.source = a.dfa;
    out.components.push_back({reduced_automaton(a, *k - 1), "reduced:k=" + std::to_string(*k - 1)});
    out.components.push_back({reduced_automaton(a, *k), "reduced:k=" + std::to_string(*k)});
    if (verify) {
        Comparison eq = equivalent(
            product(ProductMode::Inter, {out.components[0].dfa, out.components[1].dfa}), a.dfa);
        if (!eq.holds)
            throw std::logic_error("reduced-pair decomposition does not recover the input language");
        out.verified = true;
    }
    return out;
}

bool is_inter_prime(const IdealAutomaton& a) {
    if (!a.linear()) return false;
    return damping_scan(a).damping_indices.empty();
}

Witness witness(const IdealAutomaton& a) {
    require_linear(a);
    if (a.state_count() < 2)
        throw std::invalid_argument("witness construction needs at least two states");
    DampingScan scan = damping_scan(a);
    if (!scan.damping_indices.empty())
        throw Error(ErrorCode::DampingPresent,
                    "automaton has a damping pattern at index " +
                        std::to_string(scan.damping_indices.front()));

    auto minus = [](const std::string& lhs, const std::string& rhs) {
        std::string out;
        for (char c : lhs)
            if (rhs.find(c) == std::string::npos) out.push_back(c);
        return out;
    };

    Witness wit;
    const int n = scan.chain_length() - 1;
    for (int i = 1; i <= n - 1; ++i) {
        std::string direct = minus(scan.letters(i - 1, i), scan.letters(i, i));
        if (!direct.empty()) {
            wit.factors.push_back(std::string(1, direct[0]));
        } else {
            std::string stay = minus(scan.letters(i - 1, i - 1), scan.letters(i, i));
            assert(!stay.empty() && !scan.letters(i - 1, i).empty());
            wit.factors.push_back({stay[0], scan.letters(i - 1, i)[0]});
        }
        wit.word += wit.factors.back();
    }
    return wit;
}

namespace {

struct RecursionState {
    bool verify;
    std::vector<DecompComponent> leaves;
    int linear_leaves = 0;
    int raw_leaves = 0;
};

void refine_linear(const IdealAutomaton& a, const std::string& tag, RecursionState& st) {
    DampingScan scan = damping_scan(a);
    std::optional<int> k = scan.first_damping();
    if (!k) {
        st.leaves.push_back({a.dfa, tag});
        ++st.raw_leaves;
        return;
    }
    Decomposition split = decompose_linear(a, st.verify);
    for (DecompComponent& comp : split.components)
        refine_linear(check_ideal(comp.dfa), comp.tag, st);
}

void refine(const IdealAutomaton& a, const std::string& tag, RecursionState& st) {
    if (a.linear()) {
        ++st.linear_leaves;
        refine_linear(a, tag, st);
        return;
    }
    Decomposition split = decompose_nonlinear(a, st.verify);
    for (DecompComponent& comp : split.components) refine(check_ideal(comp.dfa), comp.tag, st);
}

}  // namespace

RecursiveDecomposition decompose_inter_recursive(const IdealAutomaton& a, bool verify) {
    RecursionState st;
    st.verify = verify;
    refine(a, "leaf", st);

    RecursiveDecomposition out;
    out.linear_leaf_count = st.linear_leaves;
    out.raw_leaf_count = st.raw_leaves;

    // Iterating the two constructions yields at most 2^(2|A|) prime leaves.
    if (a.state_count() < 30) {
        unsigned long long bound = 1ull << std::min(62, 2 * a.state_count());
        if (static_cast<unsigned long long>(st.raw_leaves) > bound)
            throw std::logic_error("prime-leaf count exceeds the expected bound");
    }

    Decomposition& d = out.decomposition;
    d.source = a.dfa;
    if (st.raw_leaves == 1 && st.leaves.front().tag == "leaf") {
        d.mode = DecompMode::Leaf;
        d.components = std::move(st.leaves);
        d.verified = verify;
        return out;
    }

    d.mode = DecompMode::Inter;
    for (DecompComponent& leaf : st.leaves) {
        // Leaves are minimal and canonically numbered, so equal languages
        // mean equal tables.
        bool duplicate = false;
        for (const DecompComponent& kept : d.components)
            if (kept.dfa == leaf.dfa) {
                duplicate = true;
                break;
            }
        if (!duplicate) d.components.push_back(std::move(leaf));
    }
    if (verify) {
        std::vector<Dfa> parts;
        for (const DecompComponent& c : d.components) parts.push_back(c.dfa);
        Comparison eq = equivalent(product(ProductMode::Inter, parts), a.dfa);
        if (!eq.holds)
            throw std::logic_error("recursive decomposition does not recover the input language");
        d.verified = true;
    }
    return out;
}

}  // namespace ideal
