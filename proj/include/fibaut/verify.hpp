#pragma once

// Brute-force oracles and reproduction tables.  Everything here decides the
// same questions as the constructions, but by direct integer arithmetic, so
// a disagreement always means a broken automaton (or a deliberately
// corrupted one, in the fault-injection tests).

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fibaut/algorithms.hpp"
#include "fibaut/relations.hpp"
#include "fibaut/subsequences.hpp"
#include "fibaut/zeckendorf.hpp"

namespace fibaut::verify {

enum class relation_kind { add_const, sub_const, affine, adder, eq_const };

struct relation_spec {
    relation_kind kind = relation_kind::add_const;
    std::uint64_t n = 1;      // affine slope
    std::uint64_t c = 0;      // constant
    std::uint64_t bound = 0;  // enumerate all component values below this
};

struct oracle_report {
    bool pass = true;
    std::string counterexample;  // empty when pass
    std::uint64_t tuples_checked = 0;
};

namespace detail {

// Does the relation hold for this argument tuple?
inline bool relation_holds(const relation_spec& spec, const std::vector<std::uint64_t>& v) {
    switch (spec.kind) {
        case relation_kind::add_const: return v[1] == v[0] + spec.c;
        case relation_kind::sub_const: return v[0] >= spec.c && v[1] == v[0] - spec.c;
        case relation_kind::affine: return v[1] == spec.n * v[0] + spec.c;
        case relation_kind::adder: return v[2] == v[0] + v[1];
        case relation_kind::eq_const: return v[0] == spec.c;
    }
    return false;
}

inline int relation_arity(relation_kind kind) {
    switch (kind) {
        case relation_kind::adder: return 3;
        case relation_kind::eq_const: return 1;
        default: return 2;
    }
}

// Number of words w of length `len` on the free track that make the
// automaton accept when every other track is pinned to its padded encoding.
inline std::uint64_t count_free_track(const dfa& m, const std::vector<std::uint64_t>& fixed,
                                      int free_track, std::size_t len) {
    std::vector<zeck::word> pinned;
    for (std::uint64_t v : fixed) {
        zeck::word w = zeck::encode(v);
        if (w.size() > len) return 0;  // fixed value does not fit this length
        w.insert(w.begin(), len - w.size(), '0');
        pinned.push_back(std::move(w));
    }
    std::vector<std::uint64_t> count(m.n_states(), 0);
    count[m.initial] = 1;
    std::vector<std::uint64_t> next_count(m.n_states());
    for (std::size_t j = 0; j < len; ++j) {
        std::fill(next_count.begin(), next_count.end(), 0);
        for (state_id s = 0; s < m.n_states(); ++s) {
            if (count[s] == 0) continue;
            for (int digit = 0; digit <= 1; ++digit) {
                int sym = 0;
                std::size_t pin = 0;
                for (int tr = 0; tr < m.arity; ++tr) {
                    const int d = tr == free_track ? digit
                                                   : pinned[pin++][j] - '0';
                    sym = (sym << 1) | d;
                }
                const state_id t = m.next[s][sym];
                if (t != no_state) next_count[t] += count[s];
            }
        }
        count.swap(next_count);
    }
    std::uint64_t total = 0;
    for (state_id s = 0; s < m.n_states(); ++s)
        if (m.accepting[s]) total += count[s];
    return total;
}

inline std::string format_tuple(const std::vector<std::uint64_t>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

// Scan tuples ordered by (max component, lexicographic) and report the first
// disagreement; used only after the fast pass found one, so it terminates
// quickly in practice.
inline std::optional<std::string> minimal_counterexample(const dfa& m,
                                                         const relation_spec& spec) {
    const int arity = relation_arity(spec.kind);
    std::vector<std::uint64_t> v(arity, 0);
    for (std::uint64_t top = 0; top < spec.bound; ++top) {
        // lexicographic enumeration of tuples with max == top
        std::function<std::optional<std::string>(int, bool)> rec =
            [&](int pos, bool has_top) -> std::optional<std::string> {
            if (pos == arity) {
                if (!has_top) return std::nullopt;
                const bool want = relation_holds(spec, v);
                const bool got = run(m, zeck::pair_encode(v));
                if (want != got)
                    return format_tuple(v) + (want ? " wrongly rejected" : " wrongly accepted");
                return std::nullopt;
            }
            for (std::uint64_t x = 0; x <= top; ++x) {
                v[pos] = x;
                if (auto r = rec(pos + 1, has_top || x == top)) return r;
            }
            return std::nullopt;
        };
        if (auto r = rec(0, false)) return r;
    }
    return std::nullopt;
}

}  // namespace detail

// Compare an automaton against direct arithmetic on every argument tuple
// with component values below the bound.  Functional relations are checked
// with a counting pass (the pinned argument must admit exactly the one
// correct completion), which decides the same set of tuples as running each
// pair but in linear time per argument.
inline oracle_report oracle_check(const dfa& m, const relation_spec& spec) {
    oracle_report report;
    if (m.arity != detail::relation_arity(spec.kind))
        throw std::invalid_argument("oracle_check: arity does not match the relation");

    auto fail = [&](const std::string& fallback) {
        report.pass = false;
        if (auto minimal = detail::minimal_counterexample(m, spec))
            report.counterexample = *minimal;
        else
            report.counterexample = fallback;
        return report;
    };

    switch (spec.kind) {
        case relation_kind::eq_const: {
            for (std::uint64_t x = 0; x < spec.bound; ++x) {
                ++report.tuples_checked;
                const bool want = x == spec.c;
                if (run(m, zeck::pair_encode({x})) != want)
                    return fail(detail::format_tuple({x}));
            }
            return report;
        }
        case relation_kind::add_const:
        case relation_kind::sub_const:
        case relation_kind::affine: {
            for (std::uint64_t x = 0; x < spec.bound; ++x) {
                report.tuples_checked += spec.bound;
                std::optional<std::uint64_t> y;
                if (spec.kind == relation_kind::add_const) y = x + spec.c;
                if (spec.kind == relation_kind::affine) y = spec.n * x + spec.c;
                if (spec.kind == relation_kind::sub_const && x >= spec.c) y = x - spec.c;
                std::size_t len = zeck::encode(x).size();
                if (y) len = std::max(len, zeck::encode(*y).size());
                for (std::size_t pad = 0; pad <= 2; ++pad) {
                    const std::uint64_t hits =
                        detail::count_free_track(m, {x}, 1, len + pad);
                    if (hits != (y ? 1u : 0u)) return fail("x=" + std::to_string(x));
                }
                if (y && !run(m, zeck::pair_encode({x, *y})))
                    return fail(detail::format_tuple({x, *y}) + " wrongly rejected");
            }
            return report;
        }
        case relation_kind::adder: {
            for (std::uint64_t x = 0; x < spec.bound; ++x)
                for (std::uint64_t y = 0; y < spec.bound; ++y) {
                    ++report.tuples_checked;
                    const std::uint64_t z = x + y;
                    std::size_t len = zeck::encode(z).size();
                    len = std::max({len, zeck::encode(x).size(), zeck::encode(y).size()});
                    for (std::size_t pad = 0; pad <= 1; ++pad) {
                        const std::uint64_t hits =
                            detail::count_free_track(m, {x, y}, 2, len + pad);
                        if (hits != 1)
                            return fail("x=" + std::to_string(x) + " y=" + std::to_string(y));
                    }
                    if (!run(m, zeck::pair_encode({x, y, z})))
                        return fail(detail::format_tuple({x, y, z}) + " wrongly rejected");
                }
            return report;
        }
    }
    return report;
}

enum class sequence_kind { fib_word, fib_thue_morse, shift, linear };

struct sequence_spec {
    sequence_kind kind = sequence_kind::fib_word;
    sequence_kind base = sequence_kind::fib_word;  // for shift / linear
    std::uint64_t n = 1;
    std::uint64_t c = 0;
    std::uint64_t bound = 0;
};

// Direct digit-arithmetic value of the specified sequence at index i.
inline int sequence_oracle(const sequence_spec& spec, std::uint64_t i) {
    auto base_value = [&](sequence_kind kind, std::uint64_t j) -> int {
        if (kind == sequence_kind::fib_word) return zeck::last_bit(j);
        const zeck::word w = zeck::encode(j);
        return static_cast<int>(std::count(w.begin(), w.end(), '1') % 2);
    };
    switch (spec.kind) {
        case sequence_kind::fib_word:
        case sequence_kind::fib_thue_morse: return base_value(spec.kind, i);
        case sequence_kind::shift: return base_value(spec.base, i + spec.c);
        case sequence_kind::linear: return base_value(spec.base, spec.n * i + spec.c);
    }
    return -1;
}

inline oracle_report oracle_check(const dfao& m, const sequence_spec& spec) {
    oracle_report report;
    for (std::uint64_t i = 0; i < spec.bound; ++i) {
        ++report.tuples_checked;
        const int want = sequence_oracle(spec, i);
        const int got = subsequences::seq_eval(m, i);
        if (want != got) {
            report.pass = false;
            report.counterexample = "i=" + std::to_string(i) + " expected " +
                                    std::to_string(want) + " got " + std::to_string(got);
            return report;
        }
    }
    return report;
}

struct oeis_table {
    std::string id;
    std::array<std::uint64_t, 10> expected{};
    std::array<std::uint64_t, 10> measured{};

    bool matches() const { return expected == measured; }
};

// Minimal DFA sizes for [y] = n[x], n = 1..10, dead state excluded.
inline oeis_table oeis_a372846() {
    oeis_table table;
    table.id = "A372846";
    table.expected = {2, 10, 23, 40, 59, 85, 114, 146, 181, 224};
    for (std::uint64_t n = 1; n <= 10; ++n)
        table.measured[n - 1] =
            static_cast<std::uint64_t>(relations::affine(n, 0).n_states());
    return table;
}

// Minimal DFAO sizes for i -> f(n i), n = 1..10.
inline oeis_table oeis_a385021() {
    oeis_table table;
    table.id = "A385021";
    table.expected = {2, 5, 10, 17, 27, 36, 52, 65, 78, 103};
    const dfao f = subsequences::fib_word();
    for (std::uint64_t n = 1; n <= 10; ++n)
        table.measured[n - 1] = static_cast<std::uint64_t>(
            subsequences::linear_subseq(f, n, 0).n_states());
    return table;
}

enum class growth_model { logarithmic, linear, quadratic, quartic };

struct growth_sample {
    std::uint64_t param = 0;
    std::uint64_t size = 0;
    double ratio = 0.0;
};

struct growth_report {
    growth_model model = growth_model::linear;
    std::vector<growth_sample> samples;
    double max_ratio = 0.0;
};

inline double model_value(growth_model model, std::uint64_t p) {
    switch (model) {
        case growth_model::logarithmic: return std::log2(static_cast<double>(p) + 2.0);
        case growth_model::linear: return static_cast<double>(p);
        case growth_model::quadratic: return static_cast<double>(p) * static_cast<double>(p);
        case growth_model::quartic: {
            const double d = static_cast<double>(p);
            return d * d * d * d;
        }
    }
    return 1.0;
}

// Ratio list size/model(param) over measured sizes; the ceilings asserted in
// the test suite are frozen from the first run of these probes.
inline growth_report growth_probe(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& sizes,
                                  growth_model model) {
    if (sizes.size() < 4)
        throw std::invalid_argument("growth_probe: need at least 4 sample points");
    growth_report report;
    report.model = model;
    for (const auto& [param, size] : sizes) {
        growth_sample s;
        s.param = param;
        s.size = size;
        s.ratio = static_cast<double>(size) / model_value(model, param);
        report.max_ratio = std::max(report.max_ratio, s.ratio);
        report.samples.push_back(s);
    }
    return report;
}

}  // namespace fibaut::verify
