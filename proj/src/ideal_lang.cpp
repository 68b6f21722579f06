#include "ideal/ideal_lang.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace ideal {

bool shortlex_less(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

WordSet::WordSet(std::vector<char> alphabet_in, std::vector<std::string> words_in)
    : alphabet(std::move(alphabet_in)), words(std::move(words_in)) {
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    std::sort(words.begin(), words.end(), shortlex_less);
    words.erase(std::unique(words.begin(), words.end()), words.end());
    for (const std::string& w : words)
        for (char c : w)
            if (!std::binary_search(alphabet.begin(), alphabet.end(), c)) {
                Error e(ErrorCode::UnknownLetter,
                        std::string("word '") + w + "' uses letter '" + c + "' not in alphabet");
                e.letter = c;
                e.word = w;
                throw e;
            }
}

bool WordSet::contains(std::string_view w) const {
    for (const std::string& u : words)
        if (u == w) return true;
    return false;
}

bool is_subword(std::string_view u, std::string_view v) {
    size_t i = 0;
    for (char c : v) {
        if (i < u.size() && u[i] == c) ++i;
        if (i == u.size()) return true;
    }
    return i == u.size();
}

bool IdealAutomaton::linear() const { return is_linear(order).linear; }

namespace {

// Shortest lex-least word driving the automaton from `from` to `to`.
std::string shortest_word_between(const Dfa& a, State from, State to) {
    std::vector<int> parent_state(a.state_count, -2);
    std::vector<int> parent_letter(a.state_count, -1);
    std::queue<State> todo;
    parent_state[from] = -1;
    todo.push(from);
    while (!todo.empty()) {
        State q = todo.front();
        todo.pop();
        if (q == to) break;
        for (int x = 0; x < a.letter_count(); ++x) {
            State r = a.step(q, x);
            if (parent_state[r] == -2) {
                parent_state[r] = q;
                parent_letter[r] = x;
                todo.push(r);
            }
        }
    }
    std::string word;
    for (State cur = to; parent_state[cur] != -1; cur = parent_state[cur])
        word.push_back(a.alphabet[parent_letter[cur]]);
    std::reverse(word.begin(), word.end());
    return word;
}

// Shortest lex-least word accepted from p but not from r; caller guarantees
// one exists.
std::string residual_separating_word(const Dfa& a, State p, State r) {
    Dfa rerooted_p = reroot(a, p);
    Dfa rerooted_r = reroot(a, r);
    Comparison inc = includes(rerooted_p, rerooted_r);
    return inc.certificate->word;
}

}  // namespace

IdealAutomaton check_ideal(const Dfa& raw) {
    Dfa a = minimize(raw);

    bool has_final = false;
    for (State q = 0; q < a.state_count; ++q) has_final = has_final || a.is_final(q);
    if (!has_final) throw Error(ErrorCode::EmptyLanguage, "automaton recognizes the empty language");

    // Single-letter-insertion closure: R(q) must be included in R(step(q, x))
    // for every state and letter.
    std::vector<bool> bad = residual_noninclusion(a);
    for (State q = 0; q < a.state_count; ++q) {
        for (int x = 0; x < a.letter_count(); ++x) {
            State r = a.step(q, x);
            if (!bad[static_cast<size_t>(q) * a.state_count + r]) continue;
            std::string prefix = shortest_word_between(a, a.initial, q);
            std::string tail = residual_separating_word(a, q, r);
            Error e(ErrorCode::NotIdeal, "language is not closed under letter insertion: '" +
                                             prefix + tail + "' is accepted but '" + prefix +
                                             a.alphabet[x] + tail + "' is not");
            e.word = prefix + tail;
            e.upper_word = prefix + a.alphabet[x] + tail;
            e.letter = a.alphabet[x];
            throw e;
        }
    }

    IdealAutomaton out;
    out.order = reach_order(a);
    out.rank_table = ranks(a, out.order);  // minimal ideal automata are partially ordered
    for (State q = 0; q < a.state_count; ++q)
        if (a.is_final(q)) {
            out.final_state = q;
            break;
        }
    out.dfa = std::move(a);
    return out;
}

WordSet lmin(const IdealAutomaton& a) {
    const Dfa& dfa = a.dfa;
    // Every generator has a run that strictly advances in the reachability
    // order at each step: a run re-entering a state only burns self-loops,
    // and deleting those letters leaves an accepted strict subword.
    std::vector<std::string> advancing;
    std::string cur;
    auto dfs = [&](auto&& self, State q) -> void {
        if (dfa.is_final(q)) {
            advancing.push_back(cur);
            return;
        }
        for (int x = 0; x < dfa.letter_count(); ++x) {
            State r = dfa.step(q, x);
            if (r == q) continue;
            cur.push_back(dfa.alphabet[x]);
            self(self, r);
            cur.pop_back();
        }
    };
    dfs(dfs, dfa.initial);

    std::vector<std::string> keep;
    for (const std::string& w : advancing) {
        // Drop w when some strict subword (one deleted letter suffices by
        // induction) is also accepted.
        bool minimal = true;
        for (size_t skip = 0; skip < w.size() && minimal; ++skip) {
            std::string sub = w.substr(0, skip) + w.substr(skip + 1);
            if (accepts(dfa, sub)) minimal = false;
        }
        if (minimal) keep.push_back(w);
    }
    return WordSet(dfa.alphabet, std::move(keep));
}

Dfa principal_automaton(std::string_view w, const std::vector<char>& alphabet) {
    RawAutomaton raw;
    for (char c : alphabet) raw.alphabet.push_back(std::string(1, c));
    raw.states = static_cast<int>(w.size()) + 1;
    raw.initial = 0;
    raw.finals = {static_cast<int>(w.size())};

    std::vector<char> sorted(alphabet);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (char c : w)
        if (!std::binary_search(sorted.begin(), sorted.end(), c)) {
            Error e(ErrorCode::UnknownLetter, std::string("letter '") + c + "' not in alphabet");
            e.letter = c;
            throw e;
        }

    for (int i = 0; i <= static_cast<int>(w.size()); ++i) {
        for (char c : sorted) {
            int target = (i < static_cast<int>(w.size()) && c == w[i]) ? i + 1 : i;
            raw.transitions.emplace_back(i, std::string(1, c), target);
        }
    }
    return validate(raw);
}

IdealAutomaton shuffle_ideal(const WordSet& k) {
    if (k.words.empty()) throw Error(ErrorCode::EmptyList, "generator set is empty");
    std::vector<Dfa> parts;
    parts.reserve(k.words.size());
    for (const std::string& w : k.words) parts.push_back(principal_automaton(w, k.alphabet));
    return check_ideal(product(ProductMode::Union, parts));
}

Dfa concat_raw(const Dfa& a, State a_final, const Dfa& b) {
    if (a.alphabet != b.alphabet)
        throw Error(ErrorCode::AlphabetMismatch, "automata have different alphabets");

    // States: a's states minus its final, then b's states.
    const int an = a.state_count;
    std::vector<State> map_a(an, -1);
    int next = 0;
    for (State q = 0; q < an; ++q)
        if (q != a_final) map_a[q] = next++;
    const int b_base = next;

    Dfa out;
    out.alphabet = a.alphabet;
    out.state_count = b_base + b.state_count;
    out.initial = (a.initial == a_final) ? b_base + b.initial : map_a[a.initial];
    out.finals.assign(out.state_count, false);
    for (State q = 0; q < b.state_count; ++q) out.finals[b_base + q] = b.finals[q];
    out.transitions.assign(static_cast<size_t>(out.state_count) * out.alphabet.size(), -1);

    for (State q = 0; q < an; ++q) {
        if (q == a_final) continue;
        for (int x = 0; x < a.letter_count(); ++x) {
            State r = a.step(q, x);
            out.step_ref(map_a[q], x) = (r == a_final) ? b_base + b.initial : map_a[r];
        }
    }
    for (State q = 0; q < b.state_count; ++q)
        for (int x = 0; x < b.letter_count(); ++x)
            out.step_ref(b_base + q, x) = b_base + b.step(q, x);
    return out;
}

IdealAutomaton concat(const IdealAutomaton& a, const IdealAutomaton& b) {
    return check_ideal(concat_raw(a.dfa, a.final_state, b.dfa));
}

IdealAutomaton concat_power(const IdealAutomaton& a, int n) {
    if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "power must be at least 1");
    Dfa acc = a.dfa;
    State acc_final = a.final_state;
    for (int i = 1; i < n; ++i) {
        acc = concat_raw(acc, acc_final, a.dfa);
        // The composite keeps b's unique final sink as its only final state.
        acc_final = -1;
        for (State q = 0; q < acc.state_count; ++q)
            if (acc.is_final(q)) acc_final = q;
    }
    return check_ideal(acc);
}

IdealAutomaton ladder_automaton(int n) {
    if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "ladder needs at least one section");
    const std::vector<char> sigma = {'a', 'b', 'c'};
    RawAutomaton raw;
    raw.alphabet = {"a", "b", "c"};
    raw.states = 2 * n + 2;
    raw.initial = 0;
    const int last = 2 * n + 1;  // accepting sink
    raw.finals = {last};

    auto top = [](int k) { return 2 * k - 1; };
    auto bottom = [](int k) { return 2 * k; };
    // Rail loop letters alternate along the ladder.
    auto top_loop = [](int k) { return (k % 2 == 1) ? 'b' : 'c'; };
    auto bottom_loop = [](int k) { return (k % 2 == 1) ? 'c' : 'b'; };

    auto add = [&raw](int src, char c, int dst) {
        raw.transitions.emplace_back(src, std::string(1, c), dst);
    };

    add(0, 'a', 0);
    add(0, 'b', top(1));
    add(0, 'c', bottom(1));
    for (int k = 1; k <= n; ++k) {
        char tl = top_loop(k);
        char bl = bottom_loop(k);
        add(top(k), tl, top(k));
        add(bottom(k), bl, bottom(k));
        if (k < n) {
            // 'a' crosses between rails; the remaining letter stays on the rail.
            char straight_top = (tl == 'b') ? 'c' : 'b';
            char straight_bottom = (bl == 'b') ? 'c' : 'b';
            add(top(k), 'a', bottom(k + 1));
            add(top(k), straight_top, top(k + 1));
            add(bottom(k), 'a', top(k + 1));
            add(bottom(k), straight_bottom, bottom(k + 1));
        } else {
            for (char c : sigma) {
                if (c != tl) add(top(k), c, last);
                if (c != bl) add(bottom(k), c, last);
            }
        }
    }
    for (char c : sigma) add(last, c, last);

    IdealAutomaton out = check_ideal(validate(raw));
    if (out.linear())
        throw std::logic_error("ladder automaton is unexpectedly linear");
    return out;
}

}  // namespace ideal
