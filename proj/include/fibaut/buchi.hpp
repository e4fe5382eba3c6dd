#pragma once

// Logic-style construction pipeline: the relation recognizers and
// subsequence DFAOs rebuilt purely from the annotated adder plus the
// generic product / project / determinize / minimize operators, with
// per-stage instrumentation.
//
// Recursions:
//   [x] = c      c = 0: one state;  even: ∃y =(c/2)(y) ∧ add(y,y,x);
//                odd: ∃y ∃w =(c-1)(y) ∧ =1(w) ∧ add(y,w,x)
//   [x]+c = [z]  ∃y add'(x,y,z) ∧ =c(y)
//   [z] = n[x]   n = 1: one state;  even: ∃y M_{n/2}(x,y) ∧ add'(y,y,z);
//                odd: ∃y M_{n-1}(x,y) ∧ add'(x,y,z)
//   n[x]+c = [z] ∃y M_n(x,y) ∧ M_c(y,z)
//   h(n i + c)   product of M_{n,c}(x,y) with M_h(y), project y
//
// Every stage minimizes its result; reports record sizes before and after.

#include <chrono>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fibaut/algorithms.hpp"
#include "fibaut/relations.hpp"
#include "fibaut/subsequences.hpp"

namespace fibaut::buchi {

struct build_stage {
    std::string name;
    std::int64_t states_in = 0;
    std::int64_t trans_in = 0;
    std::int64_t states_out = 0;
    std::int64_t trans_out = 0;
    double millis = 0.0;

    double blowup() const {
        return states_in > 0 ? static_cast<double>(states_out) / static_cast<double>(states_in)
                             : 0.0;
    }
};

struct build_report {
    std::vector<build_stage> stages;

    std::string to_text() const {
        std::ostringstream os;
        for (const auto& s : stages)
            os << "stage=" << s.name << " states_in=" << s.states_in
               << " trans_in=" << s.trans_in << " states_out=" << s.states_out
               << " trans_out=" << s.trans_out << " millis=" << s.millis << "\n";
        return os.str();
    }
};

struct pipeline_dfa {
    dfa machine;
    build_report report;
};

struct pipeline_dfao {
    dfao machine;
    build_report report;
};

namespace detail {

using clock = std::chrono::steady_clock;

inline double ms_since(clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
}

inline void record(build_report& report, const std::string& name, std::int64_t states_in,
                   std::int64_t trans_in, const dfa& out, double millis) {
    report.stages.push_back(build_stage{name, states_in, trans_in, out.n_states(),
                                        static_cast<std::int64_t>(out.n_transitions()),
                                        millis});
}

// ∃ project one track, determinize, minimize; records the three stages.
inline dfa project_det_min(const dfa& machine, int track, const std::string& label,
                           build_report& report, int* nfa_live = nullptr,
                           int* det_live = nullptr) {
    auto t0 = clock::now();
    const nfa projected = project(machine, track);
    report.stages.push_back(build_stage{label + ".project", machine.n_states(),
                                        static_cast<std::int64_t>(machine.n_transitions()),
                                        projected.n_states(),
                                        static_cast<std::int64_t>(projected.n_transitions()),
                                        ms_since(t0)});
    if (nfa_live) *nfa_live = nfa_live_count(projected);

    t0 = clock::now();
    const dfa det = determinize(projected);
    report.stages.push_back(build_stage{label + ".determinize", projected.n_states(),
                                        static_cast<std::int64_t>(projected.n_transitions()),
                                        det.n_states(),
                                        static_cast<std::int64_t>(det.n_transitions()),
                                        ms_since(t0)});
    if (det_live) *det_live = live_state_count(det);

    t0 = clock::now();
    dfa minimal = minimize(det);
    record(report, label + ".minimize", det.n_states(),
           static_cast<std::int64_t>(det.n_transitions()), minimal, ms_since(t0));
    return minimal;
}

struct pipeline_context {
    dfa annotated_adder;             // M'_add, minimized per stage use
    dfa plain_adder;                 // M_add
    std::map<std::uint64_t, dfa> eq_memo;
    std::map<std::uint64_t, dfa> add_memo;
    std::map<std::uint64_t, dfa> mult_memo;
    build_report report;
    // live-state pairs (projected NFA, determinized DFA) for instrumentation
    std::vector<std::pair<int, int>> eq_projection_sizes;
    std::vector<std::pair<int, int>> add_projection_sizes;

    pipeline_context() {
        plain_adder = relations::adder();
        annotated_adder = relations::adder_annotated().machine;
    }
};

inline dfa one_state_universal_pair() {
    // accepts (0,0)* (1,1)*-mixed equal columns; digit validity is restored
    // by whatever it is composed with
    dfa base;
    base.arity = 2;
    base.initial = base.add_state(true);
    base.next[0][0b00] = 0;
    base.next[0][0b11] = 0;
    return base;
}

inline dfa eq_const_rec(pipeline_context& ctx, std::uint64_t c) {
    auto it = ctx.eq_memo.find(c);
    if (it != ctx.eq_memo.end()) return it->second;
    dfa result;
    if (c == 0) {
        result.arity = 1;
        result.initial = result.add_state(true);
        result.next[0][0] = 0;
    } else if (c % 2 == 0) {
        const dfa half = eq_const_rec(ctx, c / 2);
        auto t0 = clock::now();
        // tracks: 0 = x, 1 = y;  half reads y, adder reads (y, y, x)
        dfa prod = minimize(product(half, {1}, ctx.plain_adder, {1, 1, 0}, 2));
        record(ctx.report, "eq(" + std::to_string(c) + ").product",
               half.n_states() + ctx.plain_adder.n_states(),
               static_cast<std::int64_t>(half.n_transitions() +
                                         ctx.plain_adder.n_transitions()),
               prod, ms_since(t0));
        int nfa_live = 0, det_live = 0;
        result = project_det_min(prod, 1, "eq(" + std::to_string(c) + ")", ctx.report,
                                 &nfa_live, &det_live);
        ctx.eq_projection_sizes.emplace_back(nfa_live, det_live);
    } else {
        const dfa prev = eq_const_rec(ctx, c - 1);
        const dfa one = relations::eq_const(1);
        auto t0 = clock::now();
        // tracks: 0 = x, 1 = y, 2 = w;  prev reads y, chain reads w,
        // adder reads (y, w, x)
        dfa prod = minimize(product(prev, {1}, one, {2}, 3));
        prod = minimize(product(prod, {0, 1, 2}, ctx.plain_adder, {1, 2, 0}, 3));
        record(ctx.report, "eq(" + std::to_string(c) + ").product",
               prev.n_states() + one.n_states() + ctx.plain_adder.n_states(),
               static_cast<std::int64_t>(prev.n_transitions() + one.n_transitions() +
                                         ctx.plain_adder.n_transitions()),
               prod, ms_since(t0));
        const dfa no_w = project_det_min(prod, 2, "eq(" + std::to_string(c) + ").w",
                                         ctx.report);
        int nfa_live = 0, det_live = 0;
        result = project_det_min(no_w, 1, "eq(" + std::to_string(c) + ")", ctx.report,
                                 &nfa_live, &det_live);
        ctx.eq_projection_sizes.emplace_back(nfa_live, det_live);
    }
    ctx.eq_memo.emplace(c, result);
    return result;
}

inline dfa add_const_rec(pipeline_context& ctx, std::uint64_t c) {
    auto it = ctx.add_memo.find(c);
    if (it != ctx.add_memo.end()) return it->second;
    const dfa eq_c = eq_const_rec(ctx, c);
    auto t0 = clock::now();
    // tracks: 0 = x, 1 = y, 2 = z;  adder' reads (x, y, z), =c reads y
    dfa prod = minimize(product(ctx.annotated_adder, {0, 1, 2}, eq_c, {1}, 3));
    record(ctx.report, "add(" + std::to_string(c) + ").product",
           ctx.annotated_adder.n_states() + eq_c.n_states(),
           static_cast<std::int64_t>(ctx.annotated_adder.n_transitions() +
                                     eq_c.n_transitions()),
           prod, ms_since(t0));
    int nfa_live = 0, det_live = 0;
    dfa result = project_det_min(prod, 1, "add(" + std::to_string(c) + ")", ctx.report,
                                 &nfa_live, &det_live);
    ctx.add_projection_sizes.emplace_back(nfa_live, det_live);
    ctx.add_memo.emplace(c, result);
    return result;
}

inline dfa mult_rec(pipeline_context& ctx, std::uint64_t n) {
    auto it = ctx.mult_memo.find(n);
    if (it != ctx.mult_memo.end()) return it->second;
    dfa result;
    if (n == 1) {
        result = one_state_universal_pair();
    } else if (n % 2 == 0) {
        const dfa half = mult_rec(ctx, n / 2);
        auto t0 = clock::now();
        // tracks: 0 = x, 1 = y, 2 = z;  M_{n/2} reads (x, y), adder' (y, y, z)
        dfa prod = minimize(product(half, {0, 1}, ctx.annotated_adder, {1, 1, 2}, 3));
        record(ctx.report, "mult(" + std::to_string(n) + ").product",
               half.n_states() + ctx.annotated_adder.n_states(),
               static_cast<std::int64_t>(half.n_transitions() +
                                         ctx.annotated_adder.n_transitions()),
               prod, ms_since(t0));
        result = project_det_min(prod, 1, "mult(" + std::to_string(n) + ")", ctx.report);
    } else {
        const dfa prev = mult_rec(ctx, n - 1);
        auto t0 = clock::now();
        // M_{n-1} reads (x, y), adder' reads (x, y, z)
        dfa prod = minimize(product(prev, {0, 1}, ctx.annotated_adder, {0, 1, 2}, 3));
        record(ctx.report, "mult(" + std::to_string(n) + ").product",
               prev.n_states() + ctx.annotated_adder.n_states(),
               static_cast<std::int64_t>(prev.n_transitions() +
                                         ctx.annotated_adder.n_transitions()),
               prod, ms_since(t0));
        result = project_det_min(prod, 1, "mult(" + std::to_string(n) + ")", ctx.report);
    }
    ctx.mult_memo.emplace(n, result);
    return result;
}

inline dfa affine_rec(pipeline_context& ctx, std::uint64_t n, std::uint64_t c) {
    const dfa m_n = mult_rec(ctx, n);
    const dfa m_c = add_const_rec(ctx, c);
    auto t0 = clock::now();
    // tracks: 0 = x, 1 = y, 2 = z;  M_n reads (x, y), M_c reads (y, z)
    dfa prod = minimize(product(m_n, {0, 1}, m_c, {1, 2}, 3));
    record(ctx.report, "affine(" + std::to_string(n) + "," + std::to_string(c) + ").product",
           m_n.n_states() + m_c.n_states(),
           static_cast<std::int64_t>(m_n.n_transitions() + m_c.n_transitions()), prod,
           ms_since(t0));
    return project_det_min(prod, 1,
                           "affine(" + std::to_string(n) + "," + std::to_string(c) + ")",
                           ctx.report);
}

}  // namespace detail

struct projection_sizes {
    std::vector<std::pair<int, int>> eq;   // (NFA live, determinized live)
    std::vector<std::pair<int, int>> add;
};

inline pipeline_dfa eq_const_pipeline(std::uint64_t c, projection_sizes* sizes = nullptr) {
    detail::pipeline_context ctx;
    pipeline_dfa out;
    out.machine = detail::eq_const_rec(ctx, c);
    out.report = std::move(ctx.report);
    if (sizes) {
        sizes->eq = ctx.eq_projection_sizes;
        sizes->add = ctx.add_projection_sizes;
    }
    return out;
}

inline pipeline_dfa add_const_pipeline(std::uint64_t c, projection_sizes* sizes = nullptr) {
    detail::pipeline_context ctx;
    pipeline_dfa out;
    out.machine = detail::add_const_rec(ctx, c);
    out.report = std::move(ctx.report);
    if (sizes) {
        sizes->eq = ctx.eq_projection_sizes;
        sizes->add = ctx.add_projection_sizes;
    }
    return out;
}

inline pipeline_dfa mult_pipeline(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("mult_pipeline: n must be positive");
    detail::pipeline_context ctx;
    pipeline_dfa out;
    out.machine = detail::mult_rec(ctx, n);
    out.report = std::move(ctx.report);
    return out;
}

inline pipeline_dfa affine_pipeline(std::uint64_t n, std::uint64_t c) {
    if (n < 1) throw std::invalid_argument("affine_pipeline: n must be positive");
    if (c >= n) throw std::invalid_argument("affine_pipeline: requires c < n");
    detail::pipeline_context ctx;
    pipeline_dfa out;
    out.machine = detail::affine_rec(ctx, n, c);
    out.report = std::move(ctx.report);
    return out;
}

// DFAO for h(n i + c) via the relation pipeline: product of M_{n,c}(x, y)
// with M_h(y), project y, subset construction on the resulting UFAO,
// minimize.
inline pipeline_dfao subseq_pipeline(const dfao& h, std::uint64_t n, std::uint64_t c) {
    if (n < 1) throw std::invalid_argument("subseq_pipeline: n must be positive");
    if (c >= n) throw std::invalid_argument("subseq_pipeline: requires c < n");
    detail::pipeline_context ctx;
    const dfa relation = detail::affine_rec(ctx, n, c);
    const dfao h_min = minimize_dfao(h);

    auto t0 = detail::clock::now();
    const dfao prod = product_with_output(relation, {0, 1}, h_min, {1}, 2);
    ctx.report.stages.push_back(build_stage{
        "subseq.product", relation.n_states() + h_min.n_states(),
        static_cast<std::int64_t>(relation.n_transitions() + h_min.core.n_transitions()),
        prod.n_states(), static_cast<std::int64_t>(prod.core.n_transitions()),
        detail::ms_since(t0)});

    t0 = detail::clock::now();
    const ufao guessed = project_with_output(prod, 1);
    ctx.report.stages.push_back(build_stage{
        "subseq.project", prod.n_states(),
        static_cast<std::int64_t>(prod.core.n_transitions()), guessed.core.n_states(),
        static_cast<std::int64_t>(guessed.core.n_transitions()), detail::ms_since(t0)});

    t0 = detail::clock::now();
    const dfao det = determinize_ufao(guessed);
    ctx.report.stages.push_back(build_stage{
        "subseq.determinize", guessed.core.n_states(),
        static_cast<std::int64_t>(guessed.core.n_transitions()), det.n_states(),
        static_cast<std::int64_t>(det.core.n_transitions()), detail::ms_since(t0)});

    t0 = detail::clock::now();
    pipeline_dfao out;
    out.machine = minimize_dfao(det);
    ctx.report.stages.push_back(build_stage{
        "subseq.minimize", det.n_states(),
        static_cast<std::int64_t>(det.core.n_transitions()), out.machine.n_states(),
        static_cast<std::int64_t>(out.machine.core.n_transitions()), detail::ms_since(t0)});
    out.report = std::move(ctx.report);
    return out;
}

}  // namespace fibaut::buchi
