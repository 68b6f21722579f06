#include "ideal/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace ideal {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MissingTransition: return "MissingTransition";
        case ErrorCode::DuplicateTransition: return "DuplicateTransition";
        case ErrorCode::BadIndex: return "BadIndex";
        case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
        case ErrorCode::EmptyList: return "EmptyList";
        case ErrorCode::UnknownLetter: return "UnknownLetter";
        case ErrorCode::NotPartiallyOrdered: return "NotPartiallyOrdered";
        case ErrorCode::NotIdeal: return "NotIdeal";
        case ErrorCode::EmptyLanguage: return "EmptyLanguage";
        case ErrorCode::LinearInput: return "LinearInput";
        case ErrorCode::NonLinearInput: return "NonLinearInput";
        case ErrorCode::NotInSeparatorSet: return "NotInSeparatorSet";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::NoDampingPattern: return "NoDampingPattern";
        case ErrorCode::DampingPresent: return "DampingPresent";
        case ErrorCode::PrimeInput: return "PrimeInput";
        case ErrorCode::TooLarge: return "TooLarge";
    }
    return "Unknown";
}

Certificate Certificate::make_word(std::string w) {
    Certificate c;
    c.kind = Kind::Word;
    c.word = std::move(w);
    return c;
}

Certificate Certificate::make_state_pair(State a, State b) {
    Certificate c;
    c.kind = Kind::StatePair;
    c.a = a;
    c.b = b;
    return c;
}

Certificate Certificate::make_state(State s) {
    Certificate c;
    c.kind = Kind::SingleState;
    c.a = s;
    return c;
}

Certificate Certificate::make_letter(char l) {
    Certificate c;
    c.kind = Kind::Letter;
    c.letter = l;
    return c;
}

int Dfa::letter_pos(char c) const {
    for (int i = 0; i < letter_count(); ++i)
        if (alphabet[i] == c) return i;
    return -1;
}

bool Dfa::is_sink(State q) const {
    for (int x = 0; x < letter_count(); ++x)
        if (step(q, x) != q) return false;
    return true;
}

namespace {

Error make_error(ErrorCode code, const std::string& msg) { return Error(code, msg); }

}  // namespace

Dfa validate(const RawAutomaton& raw) {
    if (raw.states <= 0)
        throw make_error(ErrorCode::BadIndex, "state count must be positive, got " +
                                                  std::to_string(raw.states));

    // Deduplicate and sort the alphabet; letters must be single characters.
    std::set<char> letters;
    for (const std::string& s : raw.alphabet) {
        if (s.size() != 1)
            throw make_error(ErrorCode::BadIndex, "alphabet entry '" + s + "' is not a single character");
        letters.insert(s[0]);
    }
    if (letters.empty())
        throw make_error(ErrorCode::BadIndex, "alphabet is empty");

    Dfa dfa;
    dfa.alphabet.assign(letters.begin(), letters.end());
    dfa.state_count = raw.states;
    dfa.finals.assign(raw.states, false);
    dfa.transitions.assign(static_cast<size_t>(raw.states) * dfa.alphabet.size(), -1);

    if (raw.initial < 0 || raw.initial >= raw.states)
        throw make_error(ErrorCode::BadIndex, "initial state " + std::to_string(raw.initial) +
                                                  " out of range");
    dfa.initial = raw.initial;

    for (int f : raw.finals) {
        if (f < 0 || f >= raw.states)
            throw make_error(ErrorCode::BadIndex, "final state " + std::to_string(f) + " out of range");
        dfa.finals[f] = true;
    }

    for (const auto& [src, letter, dst] : raw.transitions) {
        if (src < 0 || src >= raw.states)
            throw make_error(ErrorCode::BadIndex, "transition source " + std::to_string(src) +
                                                      " out of range");
        if (dst < 0 || dst >= raw.states)
            throw make_error(ErrorCode::BadIndex, "transition target " + std::to_string(dst) +
                                                      " out of range");
        if (letter.size() != 1)
            throw make_error(ErrorCode::BadIndex, "transition letter '" + letter +
                                                      "' is not a single character");
        int pos = dfa.letter_pos(letter[0]);
        if (pos < 0) {
            Error e(ErrorCode::BadIndex,
                    std::string("transition letter '") + letter + "' not in alphabet");
            e.letter = letter[0];
            throw e;
        }
        State& slot = dfa.step_ref(src, pos);
        if (slot != -1) {
            Error e(ErrorCode::DuplicateTransition,
                    "duplicate transition from state " + std::to_string(src) + " on '" + letter + "'");
            e.states = {src};
            e.letter = letter[0];
            throw e;
        }
        slot = dst;
    }

    for (State q = 0; q < dfa.state_count; ++q) {
        for (int x = 0; x < dfa.letter_count(); ++x) {
            if (dfa.step(q, x) == -1) {
                Error e(ErrorCode::MissingTransition,
                        "missing transition from state " + std::to_string(q) + " on '" +
                            std::string(1, dfa.alphabet[x]) + "'");
                e.states = {q};
                e.letter = dfa.alphabet[x];
                throw e;
            }
        }
    }
    return dfa;
}

bool accepts(const Dfa& a, std::string_view word) {
    return a.is_final(run_from(a, a.initial, word));
}

State run_from(const Dfa& a, State from, std::string_view word) {
    State q = from;
    for (char c : word) {
        int pos = a.letter_pos(c);
        if (pos < 0) {
            Error e(ErrorCode::UnknownLetter, std::string("letter '") + c + "' not in alphabet");
            e.letter = c;
            throw e;
        }
        q = a.step(q, pos);
    }
    return q;
}

namespace {

std::vector<bool> reachable_from(const Dfa& a, State start) {
    std::vector<bool> seen(a.state_count, false);
    std::queue<State> todo;
    seen[start] = true;
    todo.push(start);
    while (!todo.empty()) {
        State q = todo.front();
        todo.pop();
        for (int x = 0; x < a.letter_count(); ++x) {
            State r = a.step(q, x);
            if (!seen[r]) {
                seen[r] = true;
                todo.push(r);
            }
        }
    }
    return seen;
}

}  // namespace

TrimCheck trim_check(const Dfa& a) {
    std::vector<bool> fwd = reachable_from(a, a.initial);
    for (State q = 0; q < a.state_count; ++q)
        if (!fwd[q]) return {false, Certificate::make_state(q)};

    // Backward reachability from the final states.
    std::vector<std::vector<State>> preds(a.state_count);
    for (State q = 0; q < a.state_count; ++q)
        for (int x = 0; x < a.letter_count(); ++x) preds[a.step(q, x)].push_back(q);
    std::vector<bool> coreach(a.state_count, false);
    std::queue<State> todo;
    for (State q = 0; q < a.state_count; ++q)
        if (a.is_final(q)) {
            coreach[q] = true;
            todo.push(q);
        }
    while (!todo.empty()) {
        State q = todo.front();
        todo.pop();
        for (State p : preds[q])
            if (!coreach[p]) {
                coreach[p] = true;
                todo.push(p);
            }
    }
    for (State q = 0; q < a.state_count; ++q)
        if (!coreach[q]) return {false, Certificate::make_state(q)};
    return {true, std::nullopt};
}

Dfa canonicalize(const Dfa& a) {
    std::vector<State> number(a.state_count, -1);
    std::vector<State> order;
    order.reserve(a.state_count);
    number[a.initial] = 0;
    order.push_back(a.initial);
    for (size_t i = 0; i < order.size(); ++i) {
        State q = order[i];
        for (int x = 0; x < a.letter_count(); ++x) {
            State r = a.step(q, x);
            if (number[r] == -1) {
                number[r] = static_cast<State>(order.size());
                order.push_back(r);
            }
        }
    }
    Dfa out;
    out.alphabet = a.alphabet;
    out.state_count = static_cast<int>(order.size());
    out.initial = 0;
    out.finals.assign(out.state_count, false);
    out.transitions.assign(static_cast<size_t>(out.state_count) * out.alphabet.size(), -1);
    for (State q = 0; q < out.state_count; ++q) {
        State old = order[q];
        out.finals[q] = a.finals[old];
        for (int x = 0; x < a.letter_count(); ++x) out.step_ref(q, x) = number[a.step(old, x)];
    }
    return out;
}

Dfa minimize(const Dfa& a) {
    Dfa r = canonicalize(a);  // drop unreachable states first
    const int n = r.state_count;
    const int sigma = r.letter_count();

    // Moore partition refinement to the coarsest congruence.
    std::vector<int> cls(n);
    for (State q = 0; q < n; ++q) cls[q] = r.finals[q] ? 1 : 0;
    int class_count = 2;
    // A single class when all states agree on acceptance.
    {
        bool any_final = false, any_nonfinal = false;
        for (State q = 0; q < n; ++q) (r.finals[q] ? any_final : any_nonfinal) = true;
        if (!any_final || !any_nonfinal) {
            std::fill(cls.begin(), cls.end(), 0);
            class_count = 1;
        }
    }

    for (;;) {
        std::map<std::vector<int>, int> signature_to_class;
        std::vector<int> next_cls(n);
        std::vector<int> sig(sigma + 1);
        for (State q = 0; q < n; ++q) {
            sig[0] = cls[q];
            for (int x = 0; x < sigma; ++x) sig[x + 1] = cls[r.step(q, x)];
            auto [it, inserted] =
                signature_to_class.emplace(sig, static_cast<int>(signature_to_class.size()));
            next_cls[q] = it->second;
        }
        int next_count = static_cast<int>(signature_to_class.size());
        cls.swap(next_cls);
        if (next_count == class_count) break;
        class_count = next_count;
    }

    Dfa quotient;
    quotient.alphabet = r.alphabet;
    quotient.state_count = class_count;
    quotient.initial = cls[r.initial];
    quotient.finals.assign(class_count, false);
    quotient.transitions.assign(static_cast<size_t>(class_count) * sigma, -1);
    for (State q = 0; q < n; ++q) {
        if (r.finals[q]) quotient.finals[cls[q]] = true;
        for (int x = 0; x < sigma; ++x) quotient.step_ref(cls[q], x) = cls[r.step(q, x)];
    }
    return canonicalize(quotient);
}

bool is_minimal(const Dfa& a) {
    return minimize(a).state_count == a.state_count;
}

namespace {

void require_same_alphabet(const Dfa& a, const Dfa& b) {
    if (a.alphabet != b.alphabet)
        throw Error(ErrorCode::AlphabetMismatch, "automata have different alphabets");
}

// Breadth-first search over the pair product of a and b for the first pair
// where `bad` holds. Letters are explored in alphabet order, so the first hit
// is reached by the shortest, lexicographically least word.
template <typename BadPred>
std::optional<std::string> pair_search(const Dfa& a, const Dfa& b, BadPred bad) {
    const int nb = b.state_count;
    auto idx = [nb](State p, State q) { return static_cast<size_t>(p) * nb + q; };
    std::vector<bool> seen(static_cast<size_t>(a.state_count) * nb, false);
    struct Node {
        State p, q;
        int via_letter;
        int parent;
    };
    std::vector<Node> nodes;
    std::deque<int> todo;

    auto push = [&](State p, State q, int letter, int parent) {
        if (seen[idx(p, q)]) return;
        seen[idx(p, q)] = true;
        nodes.push_back({p, q, letter, parent});
        todo.push_back(static_cast<int>(nodes.size()) - 1);
    };
    push(a.initial, b.initial, -1, -1);
    while (!todo.empty()) {
        int id = todo.front();
        todo.pop_front();
        Node node = nodes[id];
        if (bad(node.p, node.q)) {
            std::string word;
            for (int cur = id; nodes[cur].parent != -1; cur = nodes[cur].parent)
                word.push_back(a.alphabet[nodes[cur].via_letter]);
            std::reverse(word.begin(), word.end());
            return word;
        }
        for (int x = 0; x < a.letter_count(); ++x) push(a.step(node.p, x), b.step(node.q, x), x, id);
    }
    return std::nullopt;
}

}  // namespace

Comparison equivalent(const Dfa& a, const Dfa& b) {
    require_same_alphabet(a, b);
    auto word = pair_search(a, b, [&](State p, State q) { return a.is_final(p) != b.is_final(q); });
    if (!word) return {true, std::nullopt};
    return {false, Certificate::make_word(*word)};
}

Comparison includes(const Dfa& a, const Dfa& b) {
    require_same_alphabet(a, b);
    auto word = pair_search(a, b, [&](State p, State q) { return a.is_final(p) && !b.is_final(q); });
    if (!word) return {true, std::nullopt};
    return {false, Certificate::make_word(*word)};
}

Dfa product(ProductMode mode, const std::vector<Dfa>& parts) {
    if (parts.empty()) throw Error(ErrorCode::EmptyList, "product requires at least one automaton");
    for (size_t i = 1; i < parts.size(); ++i) require_same_alphabet(parts[0], parts[i]);

    const int sigma = parts[0].letter_count();
    std::map<std::vector<State>, State> number;
    std::vector<std::vector<State>> tuples;

    std::vector<State> start;
    start.reserve(parts.size());
    for (const Dfa& p : parts) start.push_back(p.initial);
    number.emplace(start, 0);
    tuples.push_back(start);

    Dfa out;
    out.alphabet = parts[0].alphabet;
    out.initial = 0;

    std::vector<State> flat;
    for (size_t i = 0; i < tuples.size(); ++i) {
        std::vector<State> cur = tuples[i];
        for (int x = 0; x < sigma; ++x) {
            std::vector<State> next(cur.size());
            for (size_t k = 0; k < parts.size(); ++k) next[k] = parts[k].step(cur[k], x);
            auto [it, inserted] = number.emplace(next, static_cast<State>(tuples.size()));
            if (inserted) tuples.push_back(std::move(next));
            flat.push_back(it->second);
        }
    }

    out.state_count = static_cast<int>(tuples.size());
    out.transitions = std::move(flat);
    out.finals.assign(out.state_count, false);
    for (State q = 0; q < out.state_count; ++q) {
        bool all = true, any = false;
        for (size_t k = 0; k < parts.size(); ++k) {
            bool f = parts[k].is_final(tuples[q][k]);
            all = all && f;
            any = any || f;
        }
        out.finals[q] = (mode == ProductMode::Inter) ? all : any;
    }
    return out;
}

Dfa reroot(const Dfa& a, State q) {
    if (q < 0 || q >= a.state_count)
        throw Error(ErrorCode::BadIndex, "state " + std::to_string(q) + " out of range");
    Dfa out = a;
    out.initial = q;
    return out;
}

std::vector<bool> residual_noninclusion(const Dfa& a) {
    const int n = a.state_count;
    const int sigma = a.letter_count();
    auto idx = [n](State p, State r) { return static_cast<size_t>(p) * n + r; };

    // Inverse transition lists, per letter.
    std::vector<std::vector<std::vector<State>>> inv(
        sigma, std::vector<std::vector<State>>(n));
    for (State q = 0; q < n; ++q)
        for (int x = 0; x < sigma; ++x) inv[x][a.step(q, x)].push_back(q);

    std::vector<bool> bad(static_cast<size_t>(n) * n, false);
    std::queue<std::pair<State, State>> todo;
    for (State p = 0; p < n; ++p)
        for (State r = 0; r < n; ++r)
            if (a.is_final(p) && !a.is_final(r)) {
                bad[idx(p, r)] = true;
                todo.emplace(p, r);
            }
    // (p, r) is bad when some letter leads it into a bad pair.
    while (!todo.empty()) {
        auto [p, r] = todo.front();
        todo.pop();
        for (int x = 0; x < sigma; ++x)
            for (State pp : inv[x][p])
                for (State rr : inv[x][r])
                    if (!bad[idx(pp, rr)]) {
                        bad[idx(pp, rr)] = true;
                        todo.emplace(pp, rr);
                    }
    }
    return bad;
}

}  // namespace ideal
