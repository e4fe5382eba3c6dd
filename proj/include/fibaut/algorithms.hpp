#pragma once

// Generic automaton algorithms: trimming, Hopcroft minimization (DFA and
// DFAO variants), products over shared tracks, existential projection of a
// track, subset construction, and canonical-form equivalence.
//
// Every algorithm returns a freshly numbered automaton; numbering is BFS
// order from the initial state with symbols taken in ascending (that is,
// lexicographic digit) order, so equal languages minimize to byte-identical
// structures.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fibaut/automaton.hpp"

namespace fibaut {

// Raised when subset construction on a UFAO finds one reachable subset whose
// accepting members disagree on output; that always means the construction
// that produced the UFAO is broken.
struct ambiguity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<char> accessible_states(const dfa& m) {
    std::vector<char> seen(m.n_states(), 0);
    std::deque<state_id> queue{m.initial};
    seen[m.initial] = 1;
    while (!queue.empty()) {
        const state_id s = queue.front();
        queue.pop_front();
        for (int sym = 0; sym < m.n_symbols(); ++sym) {
            const state_id t = m.next[s][sym];
            if (t != no_state && !seen[t]) {
                seen[t] = 1;
                queue.push_back(t);
            }
        }
    }
    return seen;
}

// States from which some state with goal[s] != 0 is reachable.  The reverse
// adjacency is built flat (CSR) so this scales to the raw constructions,
// which can run to millions of states before trimming.
inline std::vector<char> coaccessible_states(const dfa& m, const std::vector<char>& goal) {
    const std::size_t n = static_cast<std::size_t>(m.n_states());
    std::vector<std::size_t> offset(n + 1, 0);
    for (state_id s = 0; s < m.n_states(); ++s)
        for (int sym = 0; sym < m.n_symbols(); ++sym) {
            const state_id t = m.next[s][sym];
            if (t != no_state) ++offset[t + 1];
        }
    for (std::size_t i = 1; i <= n; ++i) offset[i] += offset[i - 1];
    std::vector<state_id> sources(offset[n]);
    std::vector<std::size_t> cursor(offset.begin(), offset.end() - 1);
    for (state_id s = 0; s < m.n_states(); ++s)
        for (int sym = 0; sym < m.n_symbols(); ++sym) {
            const state_id t = m.next[s][sym];
            if (t != no_state) sources[cursor[t]++] = s;
        }
    std::vector<char> can(m.n_states(), 0);
    std::deque<state_id> queue;
    for (state_id s = 0; s < m.n_states(); ++s)
        if (goal[s]) {
            can[s] = 1;
            queue.push_back(s);
        }
    while (!queue.empty()) {
        const state_id s = queue.front();
        queue.pop_front();
        for (std::size_t i = offset[s]; i < offset[s + 1]; ++i) {
            const state_id p = sources[i];
            if (!can[p]) {
                can[p] = 1;
                queue.push_back(p);
            }
        }
    }
    return can;
}

// Renumber `keep`-states in BFS order from the initial state.  The initial
// state survives even when dead so that the empty language still has a
// representation.
template <typename CopyState>
dfa rebuild(const dfa& m, const std::vector<char>& keep, CopyState&& copy_state) {
    std::vector<state_id> index(m.n_states(), no_state);
    std::vector<state_id> order;
    std::deque<state_id> queue{m.initial};
    index[m.initial] = 0;
    order.push_back(m.initial);
    while (!queue.empty()) {
        const state_id s = queue.front();
        queue.pop_front();
        for (int sym = 0; sym < m.n_symbols(); ++sym) {
            const state_id t = m.next[s][sym];
            if (t == no_state || !keep[t] || index[t] != no_state) continue;
            index[t] = static_cast<state_id>(order.size());
            order.push_back(t);
            queue.push_back(t);
        }
    }
    dfa out;
    out.arity = m.arity;
    out.initial = 0;
    for (state_id s : order) {
        out.add_state(m.accepting[s] != 0);
        copy_state(s, static_cast<state_id>(out.n_states() - 1));
    }
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int sym = 0; sym < m.n_symbols(); ++sym) {
            const state_id t = m.next[order[i]][sym];
            if (t != no_state && index[t] != no_state && keep[t])
                out.next[i][sym] = index[t];
        }
    return out;
}

// Hopcroft partition refinement over a completed transition table.
// `table` has n+1 rows, the last row being the all-self-loop sink; `label`
// assigns the initial partition (n+1 entries).  Returns a class id per row.
inline std::vector<int> hopcroft(const std::vector<std::vector<state_id>>& table,
                                 int n_symbols, const std::vector<int>& label) {
    const int n = static_cast<int>(table.size());
    // inverse adjacency, per symbol, CSR-style
    std::vector<std::vector<std::vector<state_id>>> inv(
        n_symbols, std::vector<std::vector<state_id>>(n));
    for (state_id s = 0; s < n; ++s)
        for (int sym = 0; sym < n_symbols; ++sym) inv[sym][table[s][sym]].push_back(s);

    std::vector<int> block_of(n);
    std::vector<std::vector<state_id>> members;
    {
        std::map<int, int> by_label;
        for (state_id s = 0; s < n; ++s) {
            auto [it, fresh] = by_label.emplace(label[s], static_cast<int>(members.size()));
            if (fresh) members.emplace_back();
            block_of[s] = it->second;
            members[it->second].push_back(s);
        }
    }

    std::vector<std::vector<char>> in_worklist(members.size(), std::vector<char>(n_symbols, 0));
    std::deque<std::pair<int, int>> worklist;
    auto push_work = [&](int block, int sym) {
        if (static_cast<std::size_t>(block) >= in_worklist.size())
            in_worklist.resize(block + 1, std::vector<char>(n_symbols, 0));
        if (!in_worklist[block][sym]) {
            in_worklist[block][sym] = 1;
            worklist.emplace_back(block, sym);
        }
    };
    for (std::size_t b = 0; b < members.size(); ++b)
        for (int sym = 0; sym < n_symbols; ++sym) push_work(static_cast<int>(b), sym);

    std::vector<state_id> moved_scratch;
    std::vector<int> touched;
    std::vector<std::vector<state_id>> moved(members.size());

    while (!worklist.empty()) {
        const auto [splitter, sym] = worklist.front();
        worklist.pop_front();
        in_worklist[splitter][sym] = 0;

        // preimage of the splitter block under sym
        moved_scratch.clear();
        for (state_id a : members[splitter])
            for (state_id s : inv[sym][a]) moved_scratch.push_back(s);

        touched.clear();
        if (moved.size() < members.size()) moved.resize(members.size());
        for (state_id s : moved_scratch) {
            const int b = block_of[s];
            if (moved[b].empty()) touched.push_back(b);
            moved[b].push_back(s);
        }

        for (const int b : touched) {
            if (moved[b].size() == members[b].size()) {  // nothing left behind
                moved[b].clear();
                continue;
            }
            const int fresh = static_cast<int>(members.size());
            members.emplace_back(std::move(moved[b]));
            moved[b].clear();
            moved.emplace_back();
            in_worklist.emplace_back(n_symbols, 0);
            for (state_id s : members[fresh]) block_of[s] = fresh;
            auto& remain = members[b];
            remain.erase(std::remove_if(remain.begin(), remain.end(),
                                        [&](state_id s) { return block_of[s] == fresh; }),
                         remain.end());
            for (int c = 0; c < n_symbols; ++c) {
                if (in_worklist[b][c]) {
                    push_work(fresh, c);
                } else {
                    // enqueue the smaller half
                    if (members[fresh].size() <= members[b].size())
                        push_work(fresh, c);
                    else
                        push_work(b, c);
                }
            }
        }
    }
    return block_of;
}

// Shared quotient construction for minimize / minimize_dfao.  `label` drives
// the initial partition; `is_live_label` says which labels count as goal
// states when pruning the dead part.
struct quotient_result {
    dfa machine;
    std::vector<state_id> representative;  // original state per new state
};

inline quotient_result minimize_quotient(const dfa& m, const std::vector<int>& state_label,
                                         const std::function<bool(int)>& live_label) {
    // completed table with sink row
    const int n = m.n_states();
    const int sink = n;
    std::vector<std::vector<state_id>> table(n + 1,
                                             std::vector<state_id>(m.n_symbols(), sink));
    for (state_id s = 0; s < n; ++s)
        for (int sym = 0; sym < m.n_symbols(); ++sym)
            if (m.next[s][sym] != no_state) table[s][sym] = m.next[s][sym];

    std::vector<int> label = state_label;
    label.push_back(-1);  // sink
    const std::vector<int> cls = hopcroft(table, m.n_symbols(), label);

    // quotient automaton over classes
    int n_classes = 0;
    for (int c : cls) n_classes = std::max(n_classes, c + 1);
    std::vector<state_id> rep(n_classes, no_state);
    for (state_id s = 0; s < n; ++s)
        if (rep[cls[s]] == no_state) rep[cls[s]] = s;

    dfa quotient;
    quotient.arity = m.arity;
    std::vector<char> live_goal(n_classes, 0);
    for (int c = 0; c < n_classes; ++c) {
        const bool has_member = rep[c] != no_state;
        quotient.add_state(has_member && live_label(state_label[rep[c]]));
        if (quotient.accepting[c]) live_goal[c] = 1;
    }
    for (int c = 0; c < n_classes; ++c) {
        if (rep[c] == no_state) continue;  // pure-sink class, pruned below
        for (int sym = 0; sym < m.n_symbols(); ++sym)
            quotient.next[c][sym] = cls[table[rep[c]][sym]];
    }
    quotient.initial = cls[m.initial];

    const auto reach = accessible_states(quotient);
    auto live = coaccessible_states(quotient, live_goal);
    std::vector<char> keep(n_classes, 0);
    for (int c = 0; c < n_classes; ++c) keep[c] = reach[c] && live[c];
    keep[quotient.initial] = 1;

    quotient_result out;
    std::vector<state_id> reps_new;
    out.machine = rebuild(quotient, keep, [&](state_id old_class, state_id) {
        reps_new.push_back(rep[old_class]);
    });
    out.representative = std::move(reps_new);
    if (!live[quotient.initial])  // empty language keeps a bare initial state
        for (auto& t : out.machine.next[out.machine.initial]) t = no_state;
    return out;
}

}  // namespace detail

// Accessible and co-accessible states only, renumbered canonically.  The
// initial state is kept even when the language is empty.
inline dfa trim(const dfa& m) {
    const auto acc = detail::accessible_states(m);
    std::vector<char> goal(m.accepting.begin(), m.accepting.end());
    auto co = detail::coaccessible_states(m, goal);
    std::vector<char> keep(m.n_states(), 0);
    for (state_id s = 0; s < m.n_states(); ++s) keep[s] = acc[s] && co[s];
    keep[m.initial] = 1;
    dfa out = detail::rebuild(m, keep, [](state_id, state_id) {});
    if (!co[m.initial])  // empty language: drop the initial state's edges too
        for (auto& t : out.next[out.initial]) t = no_state;
    return out;
}

// Number of states that lie on some accepting path.  This is the count the
// dead-state convention reports everywhere.
inline int live_state_count(const dfa& m) {
    const auto acc = detail::accessible_states(m);
    std::vector<char> goal(m.accepting.begin(), m.accepting.end());
    const auto co = detail::coaccessible_states(m, goal);
    int count = 0;
    for (state_id s = 0; s < m.n_states(); ++s)
        if (acc[s] && co[s]) ++count;
    return count;
}

// Hopcroft minimization.  Runs on the trimmed automaton, completes it with a
// temporary sink internally, and prunes the sink class afterwards.
inline dfa minimize(const dfa& m_in) {
    const dfa m = trim(m_in);
    std::vector<int> label(m.n_states());
    for (state_id s = 0; s < m.n_states(); ++s) label[s] = m.accepting[s] ? 1 : 0;
    return detail::minimize_quotient(m, label, [](int l) { return l == 1; }).machine;
}

// DFAO variant: the initial partition groups states by output letter, and a
// state is dead when no state with an output is reachable from it.
inline dfao minimize_dfao(const dfao& m_in) {
    // trim to accessible ∪ output-coaccessible first
    dfa skel = m_in.core;
    std::vector<char> goal(skel.n_states(), 0);
    for (state_id s = 0; s < skel.n_states(); ++s) goal[s] = m_in.output[s] >= 0;
    const auto acc = detail::accessible_states(skel);
    const auto co = detail::coaccessible_states(skel, goal);
    std::vector<char> keep(skel.n_states(), 0);
    for (state_id s = 0; s < skel.n_states(); ++s) keep[s] = acc[s] && co[s];
    keep[skel.initial] = 1;
    std::vector<int> trimmed_output;
    dfa trimmed = detail::rebuild(skel, keep, [&](state_id old_s, state_id) {
        trimmed_output.push_back(m_in.output[old_s]);
    });

    std::vector<int> label = trimmed_output;
    for (auto& l : label) l = l < 0 ? -1 : l;
    auto quotient =
        detail::minimize_quotient(trimmed, label, [](int l) { return l >= 0; });
    dfao out;
    out.core = std::move(quotient.machine);
    out.output.reserve(quotient.representative.size());
    for (state_id r : quotient.representative) out.output.push_back(trimmed_output[r]);
    return out;
}

inline bool operator==(const dfa& a, const dfa& b) {
    return a.arity == b.arity && a.initial == b.initial && a.next == b.next &&
           a.accepting == b.accepting;
}

inline bool operator==(const dfao& a, const dfao& b) {
    return a.core == b.core && a.output == b.output;
}

// Language equality through canonical minimal forms.
inline bool equivalent(const dfa& a, const dfa& b) {
    if (a.arity != b.arity) throw std::invalid_argument("equivalent: arity mismatch");
    return minimize(a) == minimize(b);
}

// Pointwise function equality of the generated outputs.
inline bool equivalent(const dfao& a, const dfao& b) {
    if (a.core.arity != b.core.arity)
        throw std::invalid_argument("equivalent(dfao): arity mismatch");
    return minimize_dfao(a) == minimize_dfao(b);
}

// Product over a shared track space.  `a_tracks[i]` names the result track
// that feeds track i of `a`; the same result track may feed several
// component tracks, and a result track read by neither component is
// unconstrained.  Accepts when both components accept.  Only pairs
// reachable from the initial pair are materialized.
inline dfa product(const dfa& a, const std::vector<int>& a_tracks, const dfa& b,
                   const std::vector<int>& b_tracks, int arity) {
    if (static_cast<int>(a_tracks.size()) != a.arity ||
        static_cast<int>(b_tracks.size()) != b.arity)
        throw std::invalid_argument("product: track map does not match component arity");
    for (int t : a_tracks)
        if (t < 0 || t >= arity) throw std::invalid_argument("product: track index out of range");
    for (int t : b_tracks)
        if (t < 0 || t >= arity) throw std::invalid_argument("product: track index out of range");

    const int nsym = num_symbols(arity);
    std::vector<int> a_sym(nsym), b_sym(nsym);
    for (int sym = 0; sym < nsym; ++sym) {
        int as = 0;
        for (int t : a_tracks) as = (as << 1) | symbol_digit(sym, arity, t);
        int bs = 0;
        for (int t : b_tracks) bs = (bs << 1) | symbol_digit(sym, arity, t);
        a_sym[sym] = as;
        b_sym[sym] = bs;
    }

    dfa out;
    out.arity = arity;
    std::map<std::pair<state_id, state_id>, state_id> index;
    std::deque<std::pair<state_id, state_id>> queue;
    auto intern = [&](state_id sa, state_id sb) {
        const auto key = std::make_pair(sa, sb);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        const state_id id = out.add_state(a.accepting[sa] && b.accepting[sb]);
        index.emplace(key, id);
        queue.push_back(key);
        return id;
    };
    out.initial = intern(a.initial, b.initial);
    while (!queue.empty()) {
        const auto [sa, sb] = queue.front();
        queue.pop_front();
        const state_id src = index[{sa, sb}];
        for (int sym = 0; sym < nsym; ++sym) {
            const state_id ta = a.next[sa][a_sym[sym]];
            if (ta == no_state) continue;
            const state_id tb = b.next[sb][b_sym[sym]];
            if (tb == no_state) continue;
            out.next[src][sym] = intern(ta, tb);
        }
    }
    return out;
}

// Product of a recognizer with a DFAO: acceptance comes from the recognizer,
// the output letter from the DFAO.
inline dfao product_with_output(const dfa& a, const std::vector<int>& a_tracks, const dfao& b,
                                const std::vector<int>& b_tracks, int arity) {
    dfao out;
    std::map<std::pair<state_id, state_id>, state_id> index;
    const int nsym = num_symbols(arity);
    if (static_cast<int>(a_tracks.size()) != a.arity ||
        static_cast<int>(b_tracks.size()) != b.core.arity)
        throw std::invalid_argument("product_with_output: track map mismatch");
    std::vector<int> a_sym(nsym), b_sym(nsym);
    for (int sym = 0; sym < nsym; ++sym) {
        int as = 0;
        for (int t : a_tracks) as = (as << 1) | symbol_digit(sym, arity, t);
        int bs = 0;
        for (int t : b_tracks) bs = (bs << 1) | symbol_digit(sym, arity, t);
        a_sym[sym] = as;
        b_sym[sym] = bs;
    }
    out.core.arity = arity;
    std::deque<std::pair<state_id, state_id>> queue;
    auto intern = [&](state_id sa, state_id sb) {
        const auto key = std::make_pair(sa, sb);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        const state_id id = out.core.add_state(a.accepting[sa] != 0);
        out.output.push_back(b.output[sb]);
        index.emplace(key, id);
        queue.push_back(key);
        return id;
    };
    out.core.initial = intern(a.initial, b.core.initial);
    while (!queue.empty()) {
        const auto [sa, sb] = queue.front();
        queue.pop_front();
        const state_id src = index[{sa, sb}];
        for (int sym = 0; sym < nsym; ++sym) {
            const state_id ta = a.next[sa][a_sym[sym]];
            if (ta == no_state) continue;
            const state_id tb = b.core.next[sb][b_sym[sym]];
            if (tb == no_state) continue;
            out.core.next[src][sym] = intern(ta, tb);
        }
    }
    return out;
}

namespace detail {

// Initial set for a projection: everything reachable from the initial state
// through columns that are zero on all surviving tracks.  This folds the
// "guessed track may carry value before the input does" states into the
// start, which is what keeps projected languages leading-zero invariant.
inline std::vector<state_id> projection_initial_set(const dfa& m, int track) {
    std::vector<char> in_set(m.n_states(), 0);
    std::deque<state_id> queue{m.initial};
    in_set[m.initial] = 1;
    while (!queue.empty()) {
        const state_id s = queue.front();
        queue.pop_front();
        for (int sym = 0; sym < m.n_symbols(); ++sym) {
            bool kept_zero = true;
            for (int t = 0; t < m.arity && kept_zero; ++t)
                if (t != track && symbol_digit(sym, m.arity, t)) kept_zero = false;
            if (!kept_zero) continue;
            const state_id t = m.next[s][sym];
            if (t != no_state && !in_set[t]) {
                in_set[t] = 1;
                queue.push_back(t);
            }
        }
    }
    std::vector<state_id> out;
    for (state_id s = 0; s < m.n_states(); ++s)
        if (in_set[s]) out.push_back(s);
    return out;
}

}  // namespace detail

// Existential projection: drop one track, keeping a nondeterministic guess
// for its digits.
inline nfa project(const dfa& m, int track) {
    if (track < 0 || track >= m.arity) throw std::invalid_argument("project: no such track");
    nfa out;
    out.arity = m.arity - 1;
    for (state_id s = 0; s < m.n_states(); ++s) out.add_state(m.accepting[s] != 0);
    for (state_id s = 0; s < m.n_states(); ++s)
        for (int sym = 0; sym < m.n_symbols(); ++sym) {
            const state_id t = m.next[s][sym];
            if (t == no_state) continue;
            int psym = 0;
            for (int tr = 0; tr < m.arity; ++tr)
                if (tr != track) psym = (psym << 1) | symbol_digit(sym, m.arity, tr);
            out.next[s][psym].push_back(t);
        }
    for (auto& row : out.next)
        for (auto& targets : row) {
            std::sort(targets.begin(), targets.end());
            targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        }
    out.initial = detail::projection_initial_set(m, track);
    return out;
}

inline ufao project_with_output(const dfao& m, int track) {
    ufao out;
    out.core = project(m.core, track);
    out.output.assign(m.output.size(), -1);
    for (state_id s = 0; s < m.core.n_states(); ++s)
        if (m.core.accepting[s]) out.output[s] = m.output[s];
    return out;
}

// Subset construction.  Subsets are kept as sorted id lists and interned, so
// state numbering is reproducible.
inline dfa determinize(const nfa& m) {
    dfa out;
    out.arity = m.arity;
    std::map<std::vector<state_id>, state_id> index;
    std::deque<std::vector<state_id>> queue;
    auto accepts = [&](const std::vector<state_id>& subset) {
        for (state_id s : subset)
            if (m.accepting[s]) return true;
        return false;
    };
    std::vector<state_id> init = m.initial;
    std::sort(init.begin(), init.end());
    init.erase(std::unique(init.begin(), init.end()), init.end());
    index.emplace(init, out.add_state(accepts(init)));
    out.initial = 0;
    queue.push_back(init);
    while (!queue.empty()) {
        const auto subset = queue.front();
        queue.pop_front();
        const state_id src = index[subset];
        for (int sym = 0; sym < m.n_symbols(); ++sym) {
            std::vector<state_id> target;
            for (state_id s : subset)
                for (state_id t : m.next[s][sym]) target.push_back(t);
            if (target.empty()) continue;
            std::sort(target.begin(), target.end());
            target.erase(std::unique(target.begin(), target.end()), target.end());
            auto it = index.find(target);
            if (it == index.end()) {
                it = index.emplace(target, out.add_state(accepts(target))).first;
                queue.push_back(target);
            }
            out.next[src][sym] = it->second;
        }
    }
    return out;
}

// Subset construction on a UFAO.  The subset's output is the output of its
// accepting members, which must agree; `subset_hook`, when given, sees every
// reachable subset as it is created.
inline dfao determinize_ufao(
    const ufao& m,
    const std::function<void(const std::vector<state_id>&)>& subset_hook = {}) {
    dfao out;
    out.core.arity = m.core.arity;
    std::map<std::vector<state_id>, state_id> index;
    std::deque<std::vector<state_id>> queue;
    auto subset_output = [&](const std::vector<state_id>& subset) {
        int letter = -1;
        for (state_id s : subset) {
            if (!m.core.accepting[s]) continue;
            if (letter >= 0 && m.output[s] != letter)
                throw ambiguity_error(
                    "determinize_ufao: accepting members of one subset disagree on output (" +
                    std::to_string(letter) + " vs " + std::to_string(m.output[s]) +
                    "); upstream construction is broken");
            letter = m.output[s];
        }
        return letter;
    };
    auto intern = [&](std::vector<state_id> subset) {
        std::sort(subset.begin(), subset.end());
        subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
        auto it = index.find(subset);
        if (it != index.end()) return it->second;
        if (subset_hook) subset_hook(subset);
        const state_id id = out.core.add_state(false);
        out.output.push_back(subset_output(subset));
        it = index.emplace(std::move(subset), id).first;
        queue.push_back(it->first);
        return id;
    };
    out.core.initial = intern(m.core.initial);
    while (!queue.empty()) {
        const auto subset = queue.front();
        queue.pop_front();
        const state_id src = index[subset];
        for (int sym = 0; sym < m.core.n_symbols(); ++sym) {
            std::vector<state_id> target;
            for (state_id s : subset)
                for (state_id t : m.core.next[s][sym]) target.push_back(t);
            if (target.empty()) continue;
            out.core.next[src][sym] = intern(std::move(target));
        }
    }
    return out;
}

inline dfa swap_tracks(const dfa& m, int t1, int t2) {
    if (t1 < 0 || t1 >= m.arity || t2 < 0 || t2 >= m.arity)
        throw std::invalid_argument("swap_tracks: no such track");
    dfa out = m;
    for (state_id s = 0; s < m.n_states(); ++s)
        for (int sym = 0; sym < m.n_symbols(); ++sym) {
            const int d1 = symbol_digit(sym, m.arity, t1);
            const int d2 = symbol_digit(sym, m.arity, t2);
            int swapped = sym;
            swapped &= ~(1 << (m.arity - 1 - t1));
            swapped &= ~(1 << (m.arity - 1 - t2));
            swapped |= d2 << (m.arity - 1 - t1);
            swapped |= d1 << (m.arity - 1 - t2);
            out.next[s][swapped] = m.next[s][sym];
        }
    return out;
}

inline int nfa_live_count(const nfa& m) {
    std::vector<char> acc(m.n_states(), 0);
    std::deque<state_id> queue;
    for (state_id s : m.initial) {
        acc[s] = 1;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        const state_id s = queue.front();
        queue.pop_front();
        for (const auto& targets : m.next[s])
            for (state_id t : targets)
                if (!acc[t]) {
                    acc[t] = 1;
                    queue.push_back(t);
                }
    }
    std::vector<std::vector<state_id>> rev(m.n_states());
    for (state_id s = 0; s < m.n_states(); ++s)
        for (const auto& targets : m.next[s])
            for (state_id t : targets) rev[t].push_back(s);
    std::vector<char> co(m.n_states(), 0);
    for (state_id s = 0; s < m.n_states(); ++s)
        if (m.accepting[s]) {
            co[s] = 1;
            queue.push_back(s);
        }
    while (!queue.empty()) {
        const state_id s = queue.front();
        queue.pop_front();
        for (state_id p : rev[s])
            if (!co[p]) {
                co[p] = 1;
                queue.push_back(p);
            }
    }
    int count = 0;
    for (state_id s = 0; s < m.n_states(); ++s)
        if (acc[s] && co[s]) ++count;
    return count;
}

}  // namespace fibaut
