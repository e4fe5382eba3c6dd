#pragma once

// Fibonacci-automatic sequences and their shifted and linear subsequences.
//
// A sequence DFAO has arity 1, reads canonical representations msd-first,
// never defines a transition on 1 out of a state entered on 1, and carries
// one output letter per live state.  h(i) is the output after reading
// encode(i); leading zeros do not change it.

#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "fibaut/algorithms.hpp"
#include "fibaut/automaton.hpp"
#include "fibaut/zeckendorf.hpp"

namespace fibaut::subsequences {

// Output after reading encode(i).
inline int seq_eval(const dfao& m, std::uint64_t i) {
    if (m.core.arity != 1)
        throw std::invalid_argument("seq_eval: sequence DFAO must have arity 1");
    state_id s = m.core.initial;
    for (char ch : zeck::encode(i)) {
        s = m.core.next[s][ch - '0'];
        if (s == no_state)
            throw std::invalid_argument("seq_eval: transition missing on a canonical input");
    }
    const int letter = m.output[s];
    if (letter < 0) throw std::invalid_argument("seq_eval: final state has no output");
    return letter;
}

// f(i) = last digit of encode(i).  Two states: "last digit was 0/none" and
// "last digit was 1".
inline dfao fib_word() {
    dfao m;
    m.core.arity = 1;
    const state_id q0 = m.core.add_state(false);
    const state_id q1 = m.core.add_state(false);
    m.core.initial = q0;
    m.core.next[q0][0] = q0;
    m.core.next[q0][1] = q1;
    m.core.next[q1][0] = q0;
    m.output = {0, 1};
    return m;
}

// t(i) = number of ones in encode(i), mod 2.  States are (parity, last digit).
inline dfao fib_thue_morse() {
    dfao m;
    m.core.arity = 1;
    state_id id[2][2];
    for (int parity = 0; parity <= 1; ++parity)
        for (int last = 0; last <= 1; ++last) {
            id[parity][last] = m.core.add_state(false);
            m.output.push_back(parity);
        }
    m.core.initial = id[0][0];
    for (int parity = 0; parity <= 1; ++parity)
        for (int last = 0; last <= 1; ++last)
            for (int digit = 0; digit <= 1; ++digit) {
                if (last == 1 && digit == 1) continue;
                m.core.next[id[parity][last]][digit] = id[(parity + digit) % 2][digit];
            }
    return m;
}

// Same skeleton with the output map replaced by the state identity.
inline dfao interior(const dfao& m) {
    dfao out = m;
    for (state_id s = 0; s < out.n_states(); ++s) out.output[s] = s;
    return out;
}

namespace detail {

inline state_id state_after(const dfao& m, std::uint64_t i) {
    state_id s = m.core.initial;
    for (char ch : zeck::encode(i)) {
        s = m.core.next[s][ch - '0'];
        if (s == no_state)
            throw std::invalid_argument("sequence DFAO lacks a transition on a canonical input");
    }
    return s;
}

}  // namespace detail

// DFAO for i -> h(i+c), built over sliding windows of c+1 pairs
// (state of h' at value v+j, last digit of encode(v+j)).  Reading a digit
// expands every pair into its one-digit extensions, which enumerates the
// values reachable by appending one digit in increasing order, and keeps
// the slice [a, a+c].
//
// Window coherence is validated during construction: while the witness
// value v of a window stays below `witness_check_bound`, the stored pairs
// must equal the directly evaluated ones.
inline dfao shift(const dfao& m_in, std::uint64_t c,
                  std::uint64_t witness_check_bound = 10000) {
    const dfao m = minimize_dfao(m_in);
    using window = std::vector<std::pair<state_id, int>>;

    window init;
    for (std::uint64_t j = 0; j <= c; ++j)
        init.emplace_back(detail::state_after(m, j), zeck::last_bit(j));

    dfao out;
    out.core.arity = 1;
    // A witness per window is the value of some input word reaching it; the
    // pair (value, shifted value Σ e_i F_{i-1}) updates in lockstep:
    //   [wa] = [w0] + a = v + p + a,   prev(wa) = v + a.
    struct witness {
        std::uint64_t v = 0, p = 0;
    };
    std::map<window, state_id> index;
    std::deque<std::pair<window, witness>> queue;
    auto intern = [&](const window& w, witness wit) {
        auto it = index.find(w);
        if (it != index.end()) return it->second;
        if (wit.v + c < witness_check_bound) {
            for (std::uint64_t j = 0; j <= c; ++j) {
                if (w[j].first != detail::state_after(m, wit.v + j) ||
                    w[j].second != zeck::last_bit(wit.v + j))
                    throw std::logic_error("shift: window does not match its witness value");
            }
        }
        const state_id id = out.core.add_state(false);
        out.output.push_back(m.output[w.back().first]);
        index.emplace(w, id);
        queue.emplace_back(w, wit);
        return id;
    };
    out.core.initial = intern(init, witness{});

    while (!queue.empty()) {
        auto [win, wit] = queue.front();
        queue.pop_front();
        const state_id src = index[win];

        window expanded;
        for (const auto& [state, bit] : win) {
            const state_id on0 = m.core.next[state][0];
            if (on0 == no_state)
                throw std::invalid_argument("shift: source DFAO lacks a 0-transition");
            expanded.emplace_back(on0, 0);
            if (bit == 0) {
                const state_id on1 = m.core.next[state][1];
                if (on1 == no_state)
                    throw std::invalid_argument(
                        "shift: source DFAO lacks a 1-transition after digit 0");
                expanded.emplace_back(on1, 1);
            }
        }
        for (int digit = 0; digit <= 1; ++digit) {
            if (digit == 1 && win.front().second == 1) continue;  // input would contain "11"
            const std::size_t first = static_cast<std::size_t>(digit);
            if (expanded.size() < first + c + 1) continue;
            window next_win(expanded.begin() + first, expanded.begin() + first + c + 1);
            witness next_wit;
            if (wit.v >= witness_check_bound) {
                next_wit = witness{witness_check_bound, 0};  // past the checked range
            } else {
                next_wit.v = wit.v + wit.p + digit;
                next_wit.p = wit.v + digit;
            }
            const state_id dst = intern(next_win, next_wit);
            out.core.next[src][digit] = dst;
        }
    }
    return minimize_dfao(out);
}

// One state of the linear-subsequence UFAO: the affine recognizer's diff
// state on (input, guessed track) plus the h-automaton state on the guess.
struct ufao_state {
    int a_prev = 0, b_prev = 0;
    long long d = 0, d_prev = 0;
    state_id h = no_state;

    friend bool operator<(const ufao_state& l, const ufao_state& r) {
        return std::tie(l.a_prev, l.b_prev, l.d, l.d_prev, l.h) <
               std::tie(r.a_prev, r.b_prev, r.d, r.d_prev, r.h);
    }
};

struct linear_build {
    dfao machine;             // determinized, not yet minimized
    std::size_t ufao_states;  // reachable UFAO states
    std::size_t det_states;   // reachable subsets
};

// DFAO for i -> h(n i + c) built as a UFAO that guesses the track carrying
// n i + c, then determinized.  The initial set holds one state per guessed
// value v in [0, 2n-1]: the pair differences are (v, drop_last_value(v)),
// the remembered digit is f[v], and the h-component has read encode(v).
// During determinization every reachable subset must carry pairwise
// distinct, consecutive current differences; a violation means the
// construction is broken, so it throws.
inline linear_build linear_subseq_raw(const dfao& m_in, std::uint64_t n, std::uint64_t c) {
    if (n < 1) throw std::invalid_argument("linear_subseq: n must be positive");
    if (c >= n) throw std::invalid_argument("linear_subseq: requires c < n");
    const dfao m = minimize_dfao(m_in);
    const long long ln = static_cast<long long>(n);
    const long long lo = -ln, hi = 2 * ln - 1;

    // enumerate reachable UFAO states
    std::map<ufao_state, state_id> index;
    std::deque<ufao_state> queue;
    std::vector<ufao_state> states;
    auto intern = [&](const ufao_state& st) {
        auto it = index.find(st);
        if (it != index.end()) return it->second;
        const state_id id = static_cast<state_id>(states.size());
        states.push_back(st);
        index.emplace(st, id);
        queue.push_back(st);
        return id;
    };
    std::vector<state_id> initial;
    for (std::uint64_t v = 0; v < 2 * n; ++v) {
        const long long dv = static_cast<long long>(v);
        const long long dp = static_cast<long long>(zeck::drop_last_value(v));
        initial.push_back(intern(
            ufao_state{0, zeck::last_bit(v), dv, dp, detail::state_after(m, v)}));
    }
    ufao u;
    u.core.arity = 1;
    while (!queue.empty()) {
        const ufao_state st = queue.front();
        queue.pop_front();
        for (int a = 0; a <= 1; ++a) {
            if (st.a_prev == 1 && a == 1) continue;
            for (int b = 0; b <= 1; ++b) {
                if (st.b_prev == 1 && b == 1) continue;
                const state_id h_next = m.core.next[st.h][b];
                if (h_next == no_state) continue;
                const long long g =
                    st.d + st.d_prev + (st.b_prev - ln * st.a_prev) + (b - ln * a);
                if (g < lo || g > hi) continue;
                intern(ufao_state{a, b, g, st.d, h_next});
            }
        }
    }
    // materialize the NFA now that the state count is known
    for (const auto& st : states)
        u.core.add_state(st.d == static_cast<long long>(c));
    u.output.assign(states.size(), -1);
    for (std::size_t s = 0; s < states.size(); ++s)
        if (u.core.accepting[s]) u.output[s] = m.output[states[s].h];
    for (std::size_t s = 0; s < states.size(); ++s) {
        const ufao_state& st = states[s];
        for (int a = 0; a <= 1; ++a) {
            if (st.a_prev == 1 && a == 1) continue;
            for (int b = 0; b <= 1; ++b) {
                if (st.b_prev == 1 && b == 1) continue;
                const state_id h_next = m.core.next[st.h][b];
                if (h_next == no_state) continue;
                const long long g =
                    st.d + st.d_prev + (st.b_prev - ln * st.a_prev) + (b - ln * a);
                if (g < lo || g > hi) continue;
                u.core.next[s][a].push_back(index[ufao_state{a, b, g, st.d, h_next}]);
            }
        }
    }
    for (auto& row : u.core.next)
        for (auto& targets : row) {
            std::sort(targets.begin(), targets.end());
            targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        }
    u.core.initial = initial;
    std::sort(u.core.initial.begin(), u.core.initial.end());
    u.core.initial.erase(std::unique(u.core.initial.begin(), u.core.initial.end()),
                         u.core.initial.end());

    linear_build out;
    out.ufao_states = states.size();
    std::size_t subsets = 0;
    out.machine = determinize_ufao(u, [&](const std::vector<state_id>& members) {
        ++subsets;
        std::set<long long> ds;
        for (state_id s : members) ds.insert(states[s].d);
        if (ds.size() != members.size())
            throw std::logic_error("linear_subseq: duplicate current difference in a subset");
        if (!ds.empty() && *ds.rbegin() - *ds.begin() + 1 != static_cast<long long>(ds.size()))
            throw std::logic_error(
                "linear_subseq: subset differences are not a consecutive range");
    });
    out.det_states = subsets;
    return out;
}

inline dfao linear_subseq(const dfao& m, std::uint64_t n, std::uint64_t c) {
    return minimize_dfao(linear_subseq_raw(m, n, c).machine);
}

// A prolongable morphism with a coding, read off a sequence DFAO: the
// letters are the states, gamma(q) lists the targets on 0 and (when
// defined) 1, and the coding is the output map.
struct morphism {
    std::vector<std::vector<int>> rules;  // letter -> word over letters
    std::vector<int> coding;              // letter -> output letter
    int start = 0;

    std::size_t size() const {
        std::size_t total = 0;
        for (const auto& r : rules) total += r.size();
        return total;
    }
};

inline morphism to_morphism(const dfao& m) {
    morphism out;
    out.start = m.core.initial;
    for (state_id s = 0; s < m.n_states(); ++s) {
        std::vector<int> rule;
        if (m.core.next[s][0] == no_state)
            throw std::invalid_argument("to_morphism: state lacks a 0-transition");
        rule.push_back(m.core.next[s][0]);
        if (m.core.next[s][1] != no_state) rule.push_back(m.core.next[s][1]);
        out.rules.push_back(std::move(rule));
        out.coding.push_back(m.output[s]);
    }
    return out;
}

// First `length` letters of the fixed point gamma^ω(start), uncoded.
inline std::vector<int> iterate_letters(const morphism& mo, std::size_t length) {
    if (mo.rules.empty() || mo.rules[mo.start].empty() ||
        mo.rules[mo.start].front() != mo.start)
        throw std::invalid_argument("iterate: morphism is not prolongable");
    std::vector<int> word{mo.start};
    while (word.size() < length) {
        std::vector<int> next;
        for (int letter : word) {
            for (int image : mo.rules[letter]) {
                next.push_back(image);
                if (next.size() >= length) break;
            }
            if (next.size() >= length) break;
        }
        if (next.size() <= word.size())
            throw std::invalid_argument("iterate: morphism does not grow from its start letter");
        word = std::move(next);
    }
    word.resize(length);
    return word;
}

// First `length` letters of the coded fixed point.
inline std::vector<int> iterate_morphism(const morphism& mo, std::size_t length) {
    std::vector<int> word = iterate_letters(mo, length);
    for (int& letter : word) letter = mo.coding[letter];
    return word;
}

// Isomorphism up to letter renaming; the bijection is forced by walking the
// rules from the two start letters.
inline bool morphism_isomorphic(const morphism& a, const morphism& b) {
    if (a.rules.size() != b.rules.size()) return false;
    std::vector<int> map_ab(a.rules.size(), -1);
    std::vector<int> map_ba(b.rules.size(), -1);
    std::deque<std::pair<int, int>> queue{{a.start, b.start}};
    map_ab[a.start] = b.start;
    map_ba[b.start] = a.start;
    while (!queue.empty()) {
        const auto [la, lb] = queue.front();
        queue.pop_front();
        if (a.coding[la] != b.coding[lb]) return false;
        const auto& ra = a.rules[la];
        const auto& rb = b.rules[lb];
        if (ra.size() != rb.size()) return false;
        for (std::size_t i = 0; i < ra.size(); ++i) {
            const int xa = ra[i], xb = rb[i];
            if (map_ab[xa] == -1 && map_ba[xb] == -1) {
                map_ab[xa] = xb;
                map_ba[xb] = xa;
                queue.emplace_back(xa, xb);
            } else if (map_ab[xa] != xb || map_ba[xb] != xa) {
                return false;
            }
        }
    }
    return true;
}

inline std::string morphism_to_text(const morphism& mo) {
    std::string out;
    for (std::size_t letter = 0; letter < mo.rules.size(); ++letter) {
        out += std::to_string(letter) + " ->";
        for (int image : mo.rules[letter]) out += " " + std::to_string(image);
        out += "\n";
    }
    for (std::size_t letter = 0; letter < mo.coding.size(); ++letter)
        out += "coding " + std::to_string(letter) + " -> " +
               std::to_string(mo.coding[letter]) + "\n";
    return out;
}

// Number of distinct length-`len` factors of the generated sequence.
// Sliding window over a generated prefix; the prefix is doubled until the
// count is unchanged twice in a row, which is a conservative stability
// heuristic rather than an exact bound.
inline std::uint64_t subword_count(const dfao& m_in, std::size_t len) {
    if (len < 1) throw std::invalid_argument("subword_count: len must be positive");
    const dfao m = minimize_dfao(m_in);
    const std::size_t m_states = static_cast<std::size_t>(m.n_states());
    std::size_t prefix = std::max<std::size_t>(10 * len * m_states * m_states, 10000);

    auto count_at = [&](std::size_t n) {
        std::string letters;
        letters.reserve(n);
        for (std::uint64_t i = 0; i < n; ++i)
            letters.push_back(static_cast<char>(seq_eval(m, i)));
        std::unordered_set<std::string> seen;
        for (std::size_t i = 0; i + len <= letters.size(); ++i)
            seen.insert(letters.substr(i, len));
        return seen.size();
    };

    std::size_t count = count_at(prefix);
    int stable = 0;
    while (stable < 2) {
        prefix *= 2;
        const std::size_t next = count_at(prefix);
        if (next == count)
            ++stable;
        else
            stable = 0;
        count = next;
    }
    return count;
}

}  // namespace fibaut::subsequences
