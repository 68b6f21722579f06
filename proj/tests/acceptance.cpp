// Acceptance suite: one self-contained check per criterion, each printed as a
// single PASS/FAIL line with its measured wall time. The process exit code is
// the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "ideal/ideal_lang.hpp"
#include "ideal/inter_decomp.hpp"
#include "ideal/oracle.hpp"
#include "ideal/union_decomp.hpp"

using namespace ideal;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& message) {
        pass = false;
        note(message);
    }

    void note(const std::string& message) {
        if (!detail.empty()) detail += "; ";
        detail += message;
    }
};

int failures = 0;

void run_criterion(int number, const std::string& label, double budget_seconds,
                   const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.fail(std::string("exception: ") + e.what());
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > budget_seconds) {
        std::ostringstream msg;
        msg << "exceeded " << budget_seconds << "s budget";
        out.fail(msg.str());
    }
    std::printf("%s criterion %d: %s (%.2fs)%s%s\n", out.pass ? "PASS" : "FAIL", number,
                label.c_str(), seconds, out.detail.empty() ? "" : " -- ",
                out.detail.c_str());
    std::fflush(stdout);
    if (!out.pass) ++failures;
}

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (int x : xs) {
        if (!out.empty()) out += ",";
        out += std::to_string(x);
    }
    return out;
}

std::string join_words(const WordSet& k) {
    std::string out;
    for (const std::string& w : k.words) {
        if (!out.empty()) out += ",";
        out += w.empty() ? "(eps)" : w;
    }
    return out;
}

// --- shared fixture populations ---------------------------------------------

// Every minimal automaton of a non-empty ideal over {a,b} with at most
// `max_states` states, enumerated exhaustively: generator sets are exactly
// the non-empty antichains over {a,b}^{<=3} (a minimal automaton with n
// states forces generators shorter than n), filtered by size. Distinct
// antichains generate distinct ideals.
std::vector<IdealAutomaton> all_small_ideal_automata(int max_states) {
    std::vector<std::string> words;
    for (int len = 0; len <= 3; ++len)
        for (int m = 0; m < (1 << len); ++m) {
            std::string w;
            for (int i = 0; i < len; ++i) w.push_back((m >> i) & 1 ? 'b' : 'a');
            words.push_back(w);
        }
    std::vector<IdealAutomaton> out;
    const int total = static_cast<int>(words.size());
    for (unsigned mask = 1; mask < (1u << total); ++mask) {
        std::vector<std::string> set;
        for (int i = 0; i < total; ++i)
            if (mask & (1u << i)) set.push_back(words[i]);
        bool antichain = true;
        for (const std::string& u : set)
            for (const std::string& v : set)
                if (u != v && is_subword(u, v)) antichain = false;
        if (!antichain) continue;
        IdealAutomaton ia = shuffle_ideal(WordSet({'a', 'b'}, set));
        if (ia.state_count() <= max_states) out.push_back(std::move(ia));
    }
    return out;
}

std::vector<IdealAutomaton> random_population() {
    std::vector<IdealAutomaton> out;
    std::mt19937 rng(987654321);
    const std::string alphabets[] = {"ab", "abc", "abc", "a"};
    for (int i = 0; i < 200; ++i)
        out.push_back(
            shuffle_ideal(fixtures::random_wordset(rng, alphabets[i % 4], 3, 4)));
    return out;
}

// --- criteria ----------------------------------------------------------------

void criterion_1(Outcome& out) {
    IdealAutomaton ia =
        shuffle_ideal(WordSet({'a', 'b', 'c'}, {"cabb", "cacca", "cbca"}));
    if (!is_minimal(ia.dfa)) out.fail("construction is not minimal");
    if (ia.state_count() != 8)
        out.fail("expected 8 states, measured " + std::to_string(ia.state_count()));
    std::vector<int> ranks = ia.rank_table.ranks();
    std::sort(ranks.begin(), ranks.end());
    const std::vector<int> expected = {0, 1, 2, 2, 3, 4, 4, 5};
    if (ranks != expected)
        out.fail("expected ranks " + join_ints(expected) + ", measured " + join_ints(ranks));
}

void criterion_2(Outcome& out) {
    IdealAutomaton ia = check_ideal(fixtures::nonlinear8());
    SeparatorInfo info = separator(ia);
    if (info.sep_set.size() != 2)
        out.fail("separator set has size " + std::to_string(info.sep_set.size()));

    Dfa small = family_automaton(ia, info.sep_set[0]);
    Dfa large = family_automaton(ia, info.sep_set[1]);
    if (small.state_count > large.state_count) std::swap(small, large);
    if (canonicalize(small) != canonicalize(fixtures::nonlinear8_family_small()))
        out.fail("6-state family automaton differs from the expected table");
    if (canonicalize(large) != canonicalize(fixtures::nonlinear8_family_large()))
        out.fail("7-state family automaton differs from the expected table");

    Comparison eq = equivalent(product(ProductMode::Inter, {small, large}), ia.dfa);
    if (!eq.holds) out.fail("family product differs on '" + eq.certificate->word + "'");
}

void criterion_3(Outcome& out) {
    IdealAutomaton ia = check_ideal(fixtures::linear4());
    DampingScan scan = damping_scan(ia);
    if (scan.damping_indices != std::vector<int>{1})
        out.fail("damping indices {" + join_ints(scan.damping_indices) + "}, expected {1}");
    Dfa r0 = reduced_automaton(ia, 0);
    Dfa r1 = reduced_automaton(ia, 1);
    if (canonicalize(r0) != canonicalize(fixtures::linear4_reduced0()))
        out.fail("first reduced automaton differs from the expected table");
    if (canonicalize(r1) != canonicalize(fixtures::linear4_reduced1()))
        out.fail("second reduced automaton differs from the expected table");
    Comparison eq = equivalent(product(ProductMode::Inter, {r0, r1}), ia.dfa);
    if (!eq.holds) out.fail("reduced product differs on '" + eq.certificate->word + "'");
}

void criterion_4(Outcome& out) {
    IdealAutomaton ia = check_ideal(fixtures::linear4());
    AccelScan scan = accel_scan(ia);
    if (scan.accelerating_indices != std::vector<int>{2})
        out.fail("accelerating indices {" + join_ints(scan.accelerating_indices) +
                 "}, expected {2}");
    WordSet gens = lmin(ia);
    if (gens.words != std::vector<std::string>{"ab", "ba", "bb", "ca", "cb"})
        out.fail("generator set differs");
    Decomposition d = decompose_union(ia);
    if (d.components.size() != 5)
        out.fail(std::to_string(d.components.size()) + " components, expected 5");
    std::vector<Dfa> parts;
    for (const DecompComponent& c : d.components) {
        if (c.dfa.state_count != 3 || c.dfa.state_count >= ia.state_count())
            out.fail("component '" + c.tag + "' has wrong size");
        parts.push_back(c.dfa);
    }
    Comparison eq = equivalent(product(ProductMode::Union, parts), ia.dfa);
    if (!eq.holds) out.fail("principal union differs on '" + eq.certificate->word + "'");
}

void criterion_5(Outcome& out) {
    for (int n = 1; n <= 3; ++n) {
        RecursiveDecomposition r = decompose_inter_recursive(ladder_automaton(n));
        if (r.linear_leaf_count != (1 << n))
            out.fail("ladder(" + std::to_string(n) + "): " +
                     std::to_string(r.linear_leaf_count) + " linear leaves, expected " +
                     std::to_string(1 << n));
        if (!r.decomposition.verified) out.fail("ladder decomposition not verified");
    }
}

void criterion_6(Outcome& out) {
    IdealAutomaton base = check_ideal(fixtures::linear4());
    for (int n = 1; n <= 3; ++n) {
        IdealAutomaton power = concat_power(base, n);
        if (power.state_count() != 3 * n + 1)
            out.fail("power " + std::to_string(n) + " has " +
                     std::to_string(power.state_count()) + " states");
        RecursiveDecomposition r = decompose_inter_recursive(power);
        if (r.raw_leaf_count != (1 << n))
            out.fail("power(" + std::to_string(n) + "): " + std::to_string(r.raw_leaf_count) +
                     " prime leaves, expected " + std::to_string(1 << n));
        for (const DecompComponent& c : r.decomposition.components)
            if (!is_inter_prime(check_ideal(c.dfa))) out.fail("non-prime leaf " + c.tag);
        if (!r.decomposition.verified) out.fail("power decomposition not verified");
    }
}

void criterion_7(Outcome& out) {
    std::vector<IdealAutomaton> population = all_small_ideal_automata(4);
    int checked = 0;
    for (const IdealAutomaton& ia : population) {
        bool fast_inter = is_inter_prime(ia);
        bool fast_union = is_union_prime(ia);
        bool slow_inter = exhaustive_prime(ia, ProductMode::Inter);
        bool slow_union = exhaustive_prime(ia, ProductMode::Union);
        ++checked;
        if (fast_inter != slow_inter)
            out.fail("intersection disagreement on {" + join_words(lmin(ia)) + "}");
        if (fast_union != slow_union)
            out.fail("union disagreement on {" + join_words(lmin(ia)) + "}");
    }
    if (checked < 10) out.fail("population unexpectedly small");
    out.note(std::to_string(checked) + " automata");
}

void criterion_8(Outcome& out) {
    int inter_splits = 0, union_splits = 0;
    for (const IdealAutomaton& ia : random_population()) {
        if (!is_inter_prime(ia)) {
            ++inter_splits;
            Decomposition d =
                ia.linear() ? decompose_linear(ia) : decompose_nonlinear(ia);
            if (!d.verified) out.fail("intersection decomposition failed to verify");
            for (const DecompComponent& c : d.components) {
                if (c.dfa.state_count >= ia.state_count()) out.fail("oversized component");
                check_ideal(c.dfa);  // throws when a component is not an ideal
            }
        }
        if (!is_union_prime(ia)) {
            ++union_splits;
            Decomposition d = decompose_union(ia);
            if (!d.verified) out.fail("union decomposition failed to verify");
            for (const DecompComponent& c : d.components) {
                if (c.dfa.state_count >= ia.state_count()) out.fail("oversized component");
                check_ideal(c.dfa);
            }
        }
    }
    out.note(std::to_string(inter_splits) + " intersection splits, " +
             std::to_string(union_splits) + " union splits");
}

void criterion_9(Outcome& out) {
    // Witness soundness on named prime fixtures plus the exhaustive sweep.
    std::vector<IdealAutomaton> primes;
    primes.push_back(check_ideal(principal_automaton("ab", {'a', 'b'})));
    primes.push_back(check_ideal(principal_automaton("cabb", {'a', 'b', 'c'})));
    primes.push_back(check_ideal(principal_automaton("abcabc", {'a', 'b', 'c'})));
    for (IdealAutomaton& ia : all_small_ideal_automata(4))
        if (ia.state_count() >= 2 && is_inter_prime(ia)) primes.push_back(std::move(ia));

    int sweep_checked = 0;
    for (const IdealAutomaton& ia : primes) {
        Witness w = witness(ia);
        if (accepts(ia.dfa, w.word)) out.fail("witness accepted by its own automaton");
        for (size_t j = 0; j < w.factors.size(); ++j) {
            std::string doubled;
            for (size_t t = 0; t < w.factors.size(); ++t) {
                doubled += w.factors[t];
                if (t == j) doubled += w.factors[t];
            }
            if (!accepts(ia.dfa, doubled)) out.fail("doubled factor rejected");
        }
        // Every strictly smaller automaton covering the language accepts the
        // witness; exhaustive over the 2-letter populations.
        if (ia.dfa.letter_count() == 2 && ia.state_count() <= 4) {
            for (int k = 1; k < ia.state_count(); ++k)
                for_each_dfa(k, ia.dfa.alphabet, [&](const Dfa& candidate) {
                    if (!includes(ia.dfa, candidate).holds) return;
                    ++sweep_checked;
                    if (!accepts(candidate, w.word))
                        out.fail("a smaller covering automaton rejects the witness");
                });
        }
    }
    out.note(std::to_string(primes.size()) + " prime fixtures, " +
             std::to_string(sweep_checked) + " covering automata");
}

void criterion_10(Outcome& out) {
    // is_union_prime internally cross-asserts the structural characterization
    // against the size characterization and throws on any mismatch.
    std::vector<IdealAutomaton> population;
    population.push_back(check_ideal(fixtures::linear4()));
    population.push_back(check_ideal(fixtures::nonlinear8()));
    population.push_back(shuffle_ideal(WordSet({'a', 'b', 'c'}, {"cabb", "cacca", "cbca"})));
    population.push_back(check_ideal(fixtures::sigma_star("ab")));
    for (int n = 1; n <= 3; ++n) population.push_back(ladder_automaton(n));
    IdealAutomaton base = check_ideal(fixtures::linear4());
    for (int n = 1; n <= 3; ++n) population.push_back(concat_power(base, n));
    for (IdealAutomaton& ia : all_small_ideal_automata(4)) population.push_back(std::move(ia));
    for (IdealAutomaton& ia : random_population()) population.push_back(std::move(ia));

    int checked = 0;
    for (const IdealAutomaton& ia : population) {
        try {
            is_union_prime(ia);
            ++checked;
        } catch (const std::logic_error& e) {
            out.fail(e.what());
        }
    }
    out.note(std::to_string(checked) + " fixtures");
}

void smoke_benchmark(Outcome& out) {
    IdealAutomaton big = concat_power(check_ideal(fixtures::linear4()), 333);
    if (big.state_count() != 1000)
        out.fail("expected 1000 states, built " + std::to_string(big.state_count()));
    auto start = std::chrono::steady_clock::now();
    Decomposition d = decompose_linear(big, /*verify=*/false);
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (d.components.size() != 2) out.fail("expected two components");
    out.note("decompose took " + std::to_string(static_cast<int>(seconds * 1000)) +
             "ms");
    if (seconds >= 1.0) out.fail("decomposition exceeded 1s");
}

}  // namespace

int main() {
    run_criterion(1, "three-word ideal reproduces the published size and ranks", 1.0,
                  criterion_1);
    run_criterion(2, "branching example: separator and family automata", 1.0, criterion_2);
    run_criterion(3, "linear example: damping pair and reduced automata", 1.0, criterion_3);
    run_criterion(4, "linear example: accelerating state and principal union", 1.0, criterion_4);
    run_criterion(5, "ladder family splits into 2^n linear leaves", 10.0, criterion_5);
    run_criterion(6, "power family refines into 2^n prime leaves", 10.0, criterion_6);
    run_criterion(7, "fast primality matches the exhaustive oracle", 300.0, criterion_7);
    run_criterion(8, "random shuffle ideals decompose soundly", 120.0, criterion_8);
    run_criterion(9, "witnesses are rejected at home, accepted by smaller covers", 300.0,
                  criterion_9);
    run_criterion(10, "union primality routes agree on every fixture", 300.0, criterion_10);
    run_criterion(11, "smoke benchmark: 1000-state linear decompose under 1s", 30.0,
                  smoke_benchmark);
    if (failures) std::printf("%d criteria failed\n", failures);
    return failures;
}
