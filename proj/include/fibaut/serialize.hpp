#pragma once

// Text and DOT serialization.
//
// The text format is the exchange format of the CLI and is bit-exact:
//   arity k
//   states N
//   initial i
//   outputs             (optional block, one "state <id> <letter>" per line)
//   state <id> <letter>
//   accepting <id list>
//   <src> <d1 d2 ... dk> <dst>      (one line per transition)
// UTF-8, LF newlines, 0-based dense state ids.  Emission order is fixed
// (states ascending, symbols ascending), so isomorphic canonical automata
// serialize to identical bytes.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibaut/automaton.hpp"

namespace fibaut {

namespace detail {

inline void emit_header(std::ostream& os, const dfa& m) {
    os << "arity " << m.arity << "\n";
    os << "states " << m.n_states() << "\n";
    os << "initial " << m.initial << "\n";
}

inline void emit_body(std::ostream& os, const dfa& m) {
    os << "accepting";
    for (state_id s = 0; s < m.n_states(); ++s)
        if (m.accepting[s]) os << ' ' << s;
    os << "\n";
    for (state_id s = 0; s < m.n_states(); ++s)
        for (int sym = 0; sym < m.n_symbols(); ++sym) {
            const state_id t = m.next[s][sym];
            if (t == no_state) continue;
            os << s;
            for (int tr = 0; tr < m.arity; ++tr) os << ' ' << symbol_digit(sym, m.arity, tr);
            os << ' ' << t << "\n";
        }
}

}  // namespace detail

inline std::string to_text(const dfa& m) {
    std::ostringstream os;
    detail::emit_header(os, m);
    detail::emit_body(os, m);
    return os.str();
}

inline std::string to_text(const dfao& m) {
    std::ostringstream os;
    detail::emit_header(os, m.core);
    os << "outputs\n";
    for (state_id s = 0; s < m.n_states(); ++s)
        if (m.output[s] >= 0) os << "state " << s << ' ' << m.output[s] << "\n";
    detail::emit_body(os, m.core);
    return os.str();
}

namespace detail {

struct parsed_automaton {
    dfa machine;
    std::vector<int> output;
    bool has_outputs = false;
};

inline parsed_automaton parse_automaton(const std::string& text) {
    std::istringstream is(text);
    std::string keyword;
    parsed_automaton out;
    int arity = 0, n = 0, initial = 0;

    auto expect = [&](const char* kw) {
        if (!(is >> keyword) || keyword != kw)
            throw std::invalid_argument(std::string("automaton text: expected '") + kw + "'");
    };
    expect("arity");
    if (!(is >> arity) || arity < 1) throw std::invalid_argument("automaton text: bad arity");
    expect("states");
    if (!(is >> n) || n < 1) throw std::invalid_argument("automaton text: bad state count");
    expect("initial");
    if (!(is >> initial) || initial < 0 || initial >= n)
        throw std::invalid_argument("automaton text: bad initial state");

    out.machine.arity = arity;
    out.machine.initial = initial;
    for (int i = 0; i < n; ++i) out.machine.add_state(false);
    out.output.assign(n, -1);

    if (!(is >> keyword)) throw std::invalid_argument("automaton text: truncated");
    if (keyword == "outputs") {
        out.has_outputs = true;
        while (is >> keyword && keyword == "state") {
            int id = 0, letter = 0;
            if (!(is >> id >> letter) || id < 0 || id >= n)
                throw std::invalid_argument("automaton text: bad output line");
            out.output[id] = letter;
        }
    }
    if (keyword != "accepting")
        throw std::invalid_argument("automaton text: expected 'accepting'");
    {
        std::string rest;
        std::getline(is, rest);
        std::istringstream accs(rest);
        int id = 0;
        while (accs >> id) {
            if (id < 0 || id >= n)
                throw std::invalid_argument("automaton text: accepting id out of range");
            out.machine.accepting[id] = 1;
        }
    }
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int src = 0, dst = 0;
        if (!(ls >> src)) throw std::invalid_argument("automaton text: bad transition line");
        int sym = 0;
        for (int tr = 0; tr < arity; ++tr) {
            int digit = 0;
            if (!(ls >> digit) || (digit != 0 && digit != 1))
                throw std::invalid_argument("automaton text: transition digit must be 0 or 1");
            sym = (sym << 1) | digit;
        }
        if (!(ls >> dst) || src < 0 || src >= n || dst < 0 || dst >= n)
            throw std::invalid_argument("automaton text: transition id out of range");
        out.machine.next[src][sym] = dst;
    }
    return out;
}

}  // namespace detail

inline dfa parse_dfa(const std::string& text) {
    auto parsed = detail::parse_automaton(text);
    return std::move(parsed.machine);
}

inline dfao parse_dfao(const std::string& text) {
    auto parsed = detail::parse_automaton(text);
    if (!parsed.has_outputs)
        throw std::invalid_argument("automaton text: DFAO requires an outputs block");
    dfao out;
    out.core = std::move(parsed.machine);
    out.output = std::move(parsed.output);
    return out;
}

// Graphviz view; layout only, not meant to round-trip.
inline std::string to_dot(const dfa& m, const std::vector<int>* output = nullptr) {
    std::ostringstream os;
    os << "digraph automaton {\n  rankdir=LR;\n  start [shape=none,label=\"\"];\n";
    for (state_id s = 0; s < m.n_states(); ++s) {
        os << "  q" << s << " [shape=" << (m.accepting[s] ? "doublecircle" : "circle")
           << ",label=\"" << s;
        if (output && (*output)[s] >= 0) os << "/" << (*output)[s];
        os << "\"];\n";
    }
    os << "  start -> q" << m.initial << ";\n";
    for (state_id s = 0; s < m.n_states(); ++s)
        for (int sym = 0; sym < m.n_symbols(); ++sym) {
            const state_id t = m.next[s][sym];
            if (t == no_state) continue;
            os << "  q" << s << " -> q" << t << " [label=\"";
            for (int tr = 0; tr < m.arity; ++tr) os << symbol_digit(sym, m.arity, tr);
            os << "\"];\n";
        }
    os << "}\n";
    return os.str();
}

inline std::string to_dot(const dfao& m) { return to_dot(m.core, &m.output); }

}  // namespace fibaut
