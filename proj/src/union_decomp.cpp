#include "ideal/union_decomp.hpp"

#include <algorithm>
#include <stdexcept>

namespace ideal {

bool AccelScan::accelerating_at(int i) const {
    return std::find(accelerating_indices.begin(), accelerating_indices.end(), i) !=
           accelerating_indices.end();
}

AccelScan accel_scan(const IdealAutomaton& a) {
    if (!a.linear()) throw Error(ErrorCode::NonLinearInput, "automaton is not linear");
    const Dfa& dfa = a.dfa;
    const int count = a.state_count();

    std::vector<State> chain(count);
    for (State q = 0; q < count; ++q) chain[a.rank_table.rank(q)] = q;
    std::vector<int> position(count);
    for (int i = 0; i < count; ++i) position[chain[i]] = i;

    AccelScan scan;
    scan.chain = chain;
    scan.entering.assign(count, "");
    scan.from_below.assign(count, "");
    for (int i = 0; i < count; ++i)
        for (int x = 0; x < dfa.letter_count(); ++x) {
            int j = position[dfa.step(chain[i], x)];
            if (j == i + 1) scan.entering[j].push_back(dfa.alphabet[x]);
            if (j >= i + 2) scan.from_below[j].push_back(dfa.alphabet[x]);
        }
    for (std::string& s : scan.from_below) std::sort(s.begin(), s.end());

    for (int i = 1; i <= count - 1; ++i) {
        bool all_covered = true;
        for (char c : scan.entering[i])
            if (scan.from_below[i].find(c) == std::string::npos) {
                all_covered = false;
                break;
            }
        if (all_covered && i >= 2) scan.accelerating_indices.push_back(i);
        // i = 1 has no strictly earlier source, so no pattern is possible
        // there; entering[1] is never empty on a minimal chain.
    }
    return scan;
}

bool is_union_prime(const IdealAutomaton& a) {
    bool structural = a.linear() && accel_scan(a).accelerating_indices.empty();

    // Independent route: prime iff the automaton is as small as its longest
    // generator forces, |A| = m + 1.
    WordSet generators = lmin(a);
    size_t m = 0;
    for (const std::string& w : generators.words) m = std::max(m, w.size());
    bool by_size = static_cast<size_t>(a.state_count()) == m + 1;

    if (structural != by_size)
        throw std::logic_error("union-primality criteria disagree: pattern route says " +
                               std::to_string(structural) + ", size route says " +
                               std::to_string(by_size));
    return structural;
}

Decomposition decompose_union(const IdealAutomaton& a, bool verify) {
    if (is_union_prime(a)) throw Error(ErrorCode::PrimeInput, "automaton is union-prime");

    WordSet generators = lmin(a);
    Decomposition out;
    out.mode = DecompMode::Union;
    out.source = a.dfa;
    for (const std::string& w : generators.words) {
        Dfa component = principal_automaton(w, a.dfa.alphabet);
        if (component.state_count >= a.state_count())
            throw std::logic_error("principal component is not smaller than the input");
        out.components.push_back({std::move(component), "principal:w=" + w});
    }
    if (verify) {
        std::vector<Dfa> parts;
        for (const DecompComponent& c : out.components) parts.push_back(c.dfa);
        Comparison eq = equivalent(product(ProductMode::Union, parts), a.dfa);
        if (!eq.holds)
            throw std::logic_error("principal decomposition does not recover the input language");
        out.verified = true;
    }
    return out;
}

}  // namespace ideal
