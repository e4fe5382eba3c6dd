#pragma once

// Direct constructions of the arithmetic recognizers: [y] = [x] + c,
// [y] = [x] - c, [y] = n[x] + c, [x] = c, and the three-track adder
// [x] + [y] = [z].
//
// All of them track the running difference of the two newest prefixes as a
// pair (d, d_prev) together with the last digit read on each track, using
// the recurrence D(xa'a, yb'b) = D(x,y) + D(xa',yb') + (b-na) + (b'-na').
// A difference outside the clamp interval can never come back to an
// accepting value, so those transitions fall into the implicit dead state.
// Construction is forward from the initial state; the minimizer removes the
// states that are not co-accessible.

#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "fibaut/algorithms.hpp"
#include "fibaut/automaton.hpp"
#include "fibaut/constants.hpp"

namespace fibaut::relations {

// One recognizer state before minimization: last digits read on the two
// tracks plus the two newest running differences.
struct diff_state {
    int a_prev = 0;
    int b_prev = 0;
    long long d = 0;
    long long d_prev = 0;

    friend bool operator<(const diff_state& l, const diff_state& r) {
        return std::tie(l.a_prev, l.b_prev, l.d, l.d_prev) <
               std::tie(r.a_prev, r.b_prev, r.d, r.d_prev);
    }
};

struct built_relation {
    dfa machine;                   // raw: forward-reachable states only
    std::vector<diff_state> info;  // annotation per raw state
};

namespace detail {

// Forward exploration over diff states for [y] = n[x] + c with the given
// clamp interval; accepting means d == accept_d at the end of input.
// States are interned through a packed 64-bit key: the interval width stays
// well under 2^31 for every supported parameter, and the raw automaton can
// reach millions of states for large c before trimming.
inline built_relation explore_difference(long long n, long long accept_d, long long lo,
                                         long long hi) {
    built_relation out;
    out.machine.arity = 2;
    auto pack = [lo](const diff_state& st) {
        return static_cast<std::uint64_t>(st.a_prev) |
               (static_cast<std::uint64_t>(st.b_prev) << 1) |
               (static_cast<std::uint64_t>(st.d - lo) << 2) |
               (static_cast<std::uint64_t>(st.d_prev - lo) << 33);
    };
    std::unordered_map<std::uint64_t, state_id> index;
    std::deque<diff_state> queue;
    auto intern = [&](const diff_state& st) {
        auto [it, fresh] = index.try_emplace(pack(st), out.machine.n_states());
        if (!fresh) return it->second;
        const state_id id = out.machine.add_state(st.d == accept_d);
        out.info.push_back(st);
        queue.push_back(st);
        return id;
    };
    out.machine.initial = intern(diff_state{});
    while (!queue.empty()) {
        const diff_state st = queue.front();
        queue.pop_front();
        const state_id src = index[pack(st)];
        for (int a = 0; a <= 1; ++a) {
            if (st.a_prev == 1 && a == 1) continue;
            for (int b = 0; b <= 1; ++b) {
                if (st.b_prev == 1 && b == 1) continue;
                const long long g =
                    st.d + st.d_prev + (b - n * a) + (st.b_prev - n * st.a_prev);
                if (g < lo || g > hi) continue;
                const state_id dst = intern(diff_state{a, b, g, st.d});
                out.machine.next[src][(a << 1) | b] = dst;
            }
        }
    }
    return out;
}

}  // namespace detail

// Raw recognizer for [y] = [x] + c; differences clamp to [0, c].
inline built_relation add_const_raw(std::uint64_t c) {
    return detail::explore_difference(1, static_cast<long long>(c), 0,
                                      static_cast<long long>(c));
}

inline dfa add_const(std::uint64_t c) { return minimize(add_const_raw(c).machine); }

// [y] = [x] - c is add_const with the tracks exchanged.
inline dfa sub_const(std::uint64_t c) { return minimize(swap_tracks(add_const(c), 0, 1)); }

// Raw recognizer for [y] = n[x] + c; differences clamp to I_n = [-n, 2n-1].
inline built_relation affine_raw(std::uint64_t n, std::uint64_t c) {
    if (n < 1) throw std::invalid_argument("affine: n must be positive");
    if (c >= n) throw std::invalid_argument("affine: requires c < n");
    const long long ln = static_cast<long long>(n);
    return detail::explore_difference(ln, static_cast<long long>(c), -ln, 2 * ln - 1);
}

inline dfa affine(std::uint64_t n, std::uint64_t c) {
    return minimize(affine_raw(n, c).machine);
}

// Linear chain accepting exactly 0^j (c).
inline dfa eq_const(std::uint64_t c) {
    const zeck::word w = zeck::encode(c);
    dfa out;
    out.arity = 1;
    out.initial = out.add_state(c == 0);
    out.next[0][0] = 0;  // leading zeros
    state_id prev = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const state_id s = out.add_state(i + 1 == w.size());
        out.next[prev][w[i] - '0'] = s;
        prev = s;
    }
    return out;
}

// Three-track adder state: previous digit per track plus the two newest
// differences d = [z..] - [x..] - [y..].
struct adder_state {
    int a_prev = 0, b_prev = 0, e_prev = 0;
    long long d = 0, d_prev = 0;

    friend bool operator<(const adder_state& l, const adder_state& r) {
        return std::tie(l.a_prev, l.b_prev, l.e_prev, l.d, l.d_prev) <
               std::tie(r.a_prev, r.b_prev, r.e_prev, r.d, r.d_prev);
    }
};

struct built_adder {
    dfa machine;
    std::vector<adder_state> info;
};

// Raw adder with an explicit clamp interval; used by the derivation test.
inline built_adder adder_raw(long long lo, long long hi) {
    built_adder out;
    out.machine.arity = 3;
    std::map<adder_state, state_id> index;
    std::deque<adder_state> queue;
    auto intern = [&](const adder_state& st) {
        auto it = index.find(st);
        if (it != index.end()) return it->second;
        const state_id id = out.machine.add_state(st.d == 0);
        out.info.push_back(st);
        index.emplace(st, id);
        queue.push_back(st);
        return id;
    };
    out.machine.initial = intern(adder_state{});
    while (!queue.empty()) {
        const adder_state st = queue.front();
        queue.pop_front();
        const state_id src = index[st];
        for (int a = 0; a <= 1; ++a) {
            if (st.a_prev == 1 && a == 1) continue;
            for (int b = 0; b <= 1; ++b) {
                if (st.b_prev == 1 && b == 1) continue;
                for (int e = 0; e <= 1; ++e) {
                    if (st.e_prev == 1 && e == 1) continue;
                    const long long g = st.d + st.d_prev + (e - a - b) +
                                        (st.e_prev - st.a_prev - st.b_prev);
                    if (g < lo || g > hi) continue;
                    const state_id dst = intern(adder_state{a, b, e, g, st.d});
                    out.machine.next[src][(a << 2) | (b << 1) | e] = dst;
                }
            }
        }
    }
    return out;
}

// Accepts x × y × z iff [x] + [y] = [z], minimized.
inline dfa adder() {
    return minimize(adder_raw(frozen::adder_diff_min, frozen::adder_diff_max).machine);
}

// The adder extended with one step of memory: previous adder state plus the
// previous first-track and last-track digits.  Language-equal to adder();
// the extra granularity is what the recursive pipelines compose with.
struct adder_annotation {
    state_id state = no_state;       // current adder state
    state_id prev_state = no_state;  // adder state one column ago
    int prev_first_digit = 0;        // digit a read one column ago
    int prev_last_digit = 0;         // digit e read one column ago
};

struct built_annotated_adder {
    dfa machine;
    std::vector<adder_annotation> info;
};

inline built_annotated_adder adder_annotated() {
    const dfa base = adder();
    built_annotated_adder out;
    out.machine.arity = 3;
    using key = std::tuple<state_id, state_id, int, int>;
    std::map<key, state_id> index;
    std::deque<key> queue;
    auto intern = [&](state_id s, state_id prev, int a, int e) {
        const key k{s, prev, a, e};
        auto it = index.find(k);
        if (it != index.end()) return it->second;
        const state_id id = out.machine.add_state(base.accepting[s] != 0);
        out.info.push_back(adder_annotation{s, prev, a, e});
        index.emplace(k, id);
        queue.push_back(k);
        return id;
    };
    out.machine.initial = intern(base.initial, base.initial, 0, 0);
    while (!queue.empty()) {
        const auto [s, prev, pa, pe] = queue.front();
        queue.pop_front();
        const state_id src = index[{s, prev, pa, pe}];
        for (int sym = 0; sym < base.n_symbols(); ++sym) {
            const state_id t = base.next[s][sym];
            if (t == no_state) continue;
            const int a = symbol_digit(sym, 3, 0);
            const int e = symbol_digit(sym, 3, 2);
            out.machine.next[src][sym] = intern(t, s, a, e);
        }
    }
    return out;
}

}  // namespace fibaut::relations
