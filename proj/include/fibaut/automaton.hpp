#pragma once

// Automaton value types over k-track binary digit alphabets.
//
// A k-track symbol is packed into an int with track 0 in the most
// significant bit, so ascending symbol order equals lexicographic order of
// the digit tuple.  Transitions are partial: the unique dead state is never
// materialized, a missing transition means "reject every extension".

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibaut/zeckendorf.hpp"

namespace fibaut {

using state_id = std::int32_t;
inline constexpr state_id no_state = -1;

using zeck::track_word;

inline int num_symbols(int arity) { return 1 << arity; }

inline int symbol_digit(int sym, int arity, int track) {
    return (sym >> (arity - 1 - track)) & 1;
}

struct dfa {
    int arity = 1;
    state_id initial = 0;
    std::vector<std::vector<state_id>> next;  // [state][symbol], no_state = missing
    std::vector<char> accepting;

    int n_states() const { return static_cast<int>(next.size()); }
    int n_symbols() const { return num_symbols(arity); }

    state_id add_state(bool acc = false) {
        next.emplace_back(n_symbols(), no_state);
        accepting.push_back(acc ? 1 : 0);
        return static_cast<state_id>(next.size() - 1);
    }

    state_id step(state_id s, int sym) const { return next[s][sym]; }

    std::size_t n_transitions() const {
        std::size_t count = 0;
        for (const auto& row : next)
            for (state_id t : row)
                if (t != no_state) ++count;
        return count;
    }
};

// DFA skeleton plus one output letter per state; -1 marks "no output".
struct dfao {
    dfa core;
    std::vector<int> output;

    int n_states() const { return core.n_states(); }
};

struct nfa {
    int arity = 1;
    std::vector<state_id> initial;                       // sorted set
    std::vector<std::vector<std::vector<state_id>>> next;  // [state][symbol] -> sorted targets
    std::vector<char> accepting;

    int n_states() const { return static_cast<int>(next.size()); }
    int n_symbols() const { return num_symbols(arity); }

    state_id add_state(bool acc = false) {
        next.emplace_back(n_symbols());
        accepting.push_back(acc ? 1 : 0);
        return static_cast<state_id>(next.size() - 1);
    }

    std::size_t n_transitions() const {
        std::size_t count = 0;
        for (const auto& row : next)
            for (const auto& targets : row) count += targets.size();
        return count;
    }
};

// NFA plus outputs on accepting states; every input must see at most one
// output among its reachable accepting states.
struct ufao {
    nfa core;
    std::vector<int> output;  // -1 on non-accepting states
};

inline void check_arity(int automaton_arity, const track_word& w, const char* who) {
    if (w.arity() != automaton_arity)
        throw std::invalid_argument(std::string(who) + ": input arity does not match automaton");
}

inline bool run(const dfa& m, const track_word& w) {
    check_arity(m.arity, w, "run(dfa)");
    state_id s = m.initial;
    for (std::size_t j = 0; j < w.length(); ++j) {
        s = m.next[s][w.column(j)];
        if (s == no_state) return false;
    }
    return m.accepting[s] != 0;
}

// Output after consuming the whole input; nullopt when a transition is
// missing or the final state carries no output.
inline std::optional<int> run(const dfao& m, const track_word& w) {
    check_arity(m.core.arity, w, "run(dfao)");
    state_id s = m.core.initial;
    for (std::size_t j = 0; j < w.length(); ++j) {
        s = m.core.next[s][w.column(j)];
        if (s == no_state) return std::nullopt;
    }
    if (m.output[s] < 0) return std::nullopt;
    return m.output[s];
}

inline bool run_nfa(const nfa& m, const track_word& w) {
    check_arity(m.arity, w, "run_nfa");
    std::vector<state_id> cur = m.initial;
    for (std::size_t j = 0; j < w.length() && !cur.empty(); ++j) {
        const int sym = w.column(j);
        std::vector<state_id> nxt;
        for (state_id s : cur)
            for (state_id t : m.next[s][sym]) nxt.push_back(t);
        std::sort(nxt.begin(), nxt.end());
        nxt.erase(std::unique(nxt.begin(), nxt.end()), nxt.end());
        cur = std::move(nxt);
    }
    for (state_id s : cur)
        if (m.accepting[s]) return true;
    return false;
}

}  // namespace fibaut
