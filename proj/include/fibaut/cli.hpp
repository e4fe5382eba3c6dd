#pragma once

// Command-line front end.  Subcommands:
//   encode / decode            Zeckendorf conversions
//   build                      direct relation recognizers
//   subseq / seq               sequence DFAOs, morphisms, evaluation
//   pipeline                   logic-style constructions with reports
//   verify                     oracles, reproduction tables, growth probes
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fibaut/buchi.hpp"
#include "fibaut/relations.hpp"
#include "fibaut/serialize.hpp"
#include "fibaut/subsequences.hpp"
#include "fibaut/verify.hpp"

namespace fibaut::cli {

namespace detail {

struct output_options {
    std::string format = "text";  // text | dot
    std::string out_path;
    bool minimize_result = true;
    bool stats = false;
};

inline void add_output_options(CLI::App* cmd, output_options& opts) {
    cmd->add_option("--format,--export", opts.format, "output format (text|dot)")
        ->check(CLI::IsMember({"text", "dot"}));
    cmd->add_option("--out", opts.out_path, "write the artifact to this path");
    cmd->add_flag("!--no-minimize", opts.minimize_result, "keep the raw construction");
    cmd->add_flag("--stats", opts.stats, "print state/transition counts to stderr");
}

inline void write_artifact(const std::string& text, const output_options& opts,
                           std::ostream& out) {
    if (opts.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output path: " + opts.out_path);
    file << text;
}

inline void emit(const dfa& m, const output_options& opts, std::ostream& out,
                 std::ostream& err) {
    const dfa final_m = opts.minimize_result ? minimize(m) : m;
    if (opts.stats)
        err << "states " << live_state_count(final_m) << " transitions "
            << final_m.n_transitions() << "\n";
    write_artifact(opts.format == "dot" ? to_dot(final_m) : to_text(final_m), opts, out);
}

inline void emit(const dfao& m, const output_options& opts, std::ostream& out,
                 std::ostream& err) {
    const dfao final_m = opts.minimize_result ? minimize_dfao(m) : m;
    if (opts.stats)
        err << "states " << final_m.n_states() << " transitions "
            << final_m.core.n_transitions() << "\n";
    write_artifact(opts.format == "dot" ? to_dot(final_m) : to_text(final_m), opts, out);
}

inline dfao resolve_sequence(const std::string& name) {
    if (name == "fib-word") return subsequences::fib_word();
    if (name == "fib-thue-morse") return subsequences::fib_thue_morse();
    std::ifstream file(name, std::ios::binary);
    if (!file)
        throw CLI::ValidationError("sequence", "unknown builtin and unreadable file: " + name);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_dfao(buffer.str());
}

// affine with c >= n is assembled from affine(n,0) and add_const(c):
// ∃w  [w] = n[x]  ∧  [y] = [w] + c.
inline dfa affine_any(std::uint64_t n, std::uint64_t c) {
    if (c < n || (n == 1 && c == 0)) return relations::affine(n, c);
    const dfa mult = relations::affine(n, 0);
    const dfa add = relations::add_const(c);
    // tracks: 0 = x, 1 = w, 2 = y
    const dfa prod = product(mult, {0, 1}, add, {1, 2}, 3);
    return minimize(determinize(project(prod, 1)));
}

inline void print_report(const buchi::build_report& report, const std::string& path,
                         std::ostream& out) {
    if (path.empty()) {
        out << report.to_text();
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open report path: " + path);
    file << report.to_text();
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"automata over the Zeckendorf numeration system"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- encode / decode ----
    std::uint64_t encode_value = 0;
    auto* cmd_encode = app.add_subcommand("encode", "canonical representation of an integer");
    cmd_encode->add_option("n", encode_value, "value to encode")->required();
    cmd_encode->callback([&] {
        const zeck::word w = zeck::encode(encode_value);
        out << (w.empty() ? "0" : w) << "\n";
    });

    std::string decode_word;
    auto* cmd_decode = app.add_subcommand("decode", "value of an msd-first digit word");
    cmd_decode->add_option("word", decode_word, "digit word over {0,1}")->required();
    cmd_decode->callback([&] { out << zeck::value(decode_word) << "\n"; });

    // ---- build ----
    auto* cmd_build = app.add_subcommand("build", "construct a relation recognizer");
    cmd_build->require_subcommand(1);
    detail::output_options build_opts;

    std::uint64_t build_c = 0, build_n = 1;
    auto* b_add = cmd_build->add_subcommand("add-const", "[y] = [x] + c");
    b_add->add_option("c", build_c)->required();
    detail::add_output_options(b_add, build_opts);
    b_add->callback([&] {
        detail::emit(build_opts.minimize_result ? relations::add_const(build_c)
                                                : relations::add_const_raw(build_c).machine,
                     build_opts, out, err);
    });

    auto* b_sub = cmd_build->add_subcommand("sub-const", "[y] = [x] - c");
    b_sub->add_option("c", build_c)->required();
    detail::add_output_options(b_sub, build_opts);
    b_sub->callback([&] { detail::emit(relations::sub_const(build_c), build_opts, out, err); });

    auto* b_affine = cmd_build->add_subcommand("affine", "[y] = n[x] + c");
    b_affine->add_option("n", build_n)->required();
    b_affine->add_option("c", build_c)->required();
    detail::add_output_options(b_affine, build_opts);
    b_affine->callback([&] {
        if (build_c < build_n && !build_opts.minimize_result)
            detail::emit(relations::affine_raw(build_n, build_c).machine, build_opts, out, err);
        else
            detail::emit(detail::affine_any(build_n, build_c), build_opts, out, err);
    });

    auto* b_eq = cmd_build->add_subcommand("eq-const", "[x] = c");
    b_eq->add_option("c", build_c)->required();
    detail::add_output_options(b_eq, build_opts);
    b_eq->callback([&] { detail::emit(relations::eq_const(build_c), build_opts, out, err); });

    auto* b_adder = cmd_build->add_subcommand("adder", "[x] + [y] = [z]");
    detail::add_output_options(b_adder, build_opts);
    b_adder->callback([&] { detail::emit(relations::adder(), build_opts, out, err); });

    // ---- subseq ----
    auto* cmd_subseq = app.add_subcommand("subseq", "shifted and linear subsequences");
    cmd_subseq->require_subcommand(1);
    detail::output_options subseq_opts;
    std::string seq_name;
    std::uint64_t seq_n = 1, seq_c = 0;

    auto* s_shift = cmd_subseq->add_subcommand("shift", "i -> h(i + c)");
    s_shift->add_option("sequence", seq_name, "builtin name or automaton file")->required();
    s_shift->add_option("c", seq_c)->required();
    detail::add_output_options(s_shift, subseq_opts);
    s_shift->callback([&] {
        detail::emit(subsequences::shift(detail::resolve_sequence(seq_name), seq_c),
                     subseq_opts, out, err);
    });

    auto* s_linear = cmd_subseq->add_subcommand("linear", "i -> h(n i + c)");
    s_linear->add_option("sequence", seq_name)->required();
    s_linear->add_option("n", seq_n)->required();
    s_linear->add_option("c", seq_c)->required();
    detail::add_output_options(s_linear, subseq_opts);
    s_linear->callback([&] {
        detail::emit(
            subsequences::linear_subseq(detail::resolve_sequence(seq_name), seq_n, seq_c),
            subseq_opts, out, err);
    });

    auto* s_morphism =
        cmd_subseq->add_subcommand("morphism", "morphism and coding of a sequence");
    s_morphism->add_option("sequence", seq_name)->required();
    auto* morph_n = s_morphism->add_option("n", seq_n, "take the linear subsequence first");
    s_morphism->add_option("c", seq_c)->needs(morph_n);
    s_morphism->callback([&] {
        dfao m = minimize_dfao(detail::resolve_sequence(seq_name));
        if (morph_n->count() > 0) m = subsequences::linear_subseq(m, seq_n, seq_c);
        out << subsequences::morphism_to_text(subsequences::to_morphism(m));
    });

    // ---- seq eval ----
    auto* cmd_seq = app.add_subcommand("seq", "evaluate sequences");
    cmd_seq->require_subcommand(1);
    std::vector<std::uint64_t> eval_indices;
    auto* q_eval = cmd_seq->add_subcommand("eval", "print h(i) for the given i");
    q_eval->add_option("sequence", seq_name)->required();
    q_eval->add_option("i", eval_indices, "indices")->required()->expected(-1);
    q_eval->callback([&] {
        const dfao m = detail::resolve_sequence(seq_name);
        for (std::size_t k = 0; k < eval_indices.size(); ++k)
            out << (k ? " " : "") << subsequences::seq_eval(m, eval_indices[k]);
        out << "\n";
    });

    // ---- pipeline ----
    auto* cmd_pipeline = app.add_subcommand("pipeline", "logic-style constructions");
    cmd_pipeline->require_subcommand(1);
    detail::output_options pipe_opts;
    std::string report_path;
    std::uint64_t pipe_n = 1, pipe_c = 0;

    auto* p_affine = cmd_pipeline->add_subcommand("affine", "[y] = n[x] + c via the adder");
    p_affine->add_option("n", pipe_n)->required();
    p_affine->add_option("c", pipe_c)->required();
    p_affine->add_option("--report", report_path, "write the stage report to this path");
    detail::add_output_options(p_affine, pipe_opts);
    p_affine->callback([&] {
        auto result = buchi::affine_pipeline(pipe_n, pipe_c);
        detail::emit(result.machine, pipe_opts, out, err);
        detail::print_report(result.report, report_path, err);
    });

    auto* p_subseq = cmd_pipeline->add_subcommand("subseq", "i -> h(n i + c) via the adder");
    p_subseq->add_option("sequence", seq_name)->required();
    p_subseq->add_option("n", pipe_n)->required();
    p_subseq->add_option("c", pipe_c)->required();
    p_subseq->add_option("--report", report_path);
    detail::add_output_options(p_subseq, pipe_opts);
    p_subseq->callback([&] {
        auto result =
            buchi::subseq_pipeline(detail::resolve_sequence(seq_name), pipe_n, pipe_c);
        detail::emit(result.machine, pipe_opts, out, err);
        detail::print_report(result.report, report_path, err);
    });

    // ---- verify ----
    auto* cmd_verify = app.add_subcommand("verify", "oracles and reproduction tables");
    cmd_verify->require_subcommand(1);
    std::uint64_t bound = 500;

    auto* v_oracle = cmd_verify->add_subcommand("oracle", "compare a recognizer to arithmetic");
    v_oracle->require_subcommand(1);
    std::uint64_t v_n = 1, v_c = 0;
    auto add_oracle = [&](const std::string& name, verify::relation_kind kind,
                          bool with_n, bool with_c) {
        auto* sub = v_oracle->add_subcommand(name);
        if (with_n) sub->add_option("n", v_n)->required();
        if (with_c) sub->add_option("c", v_c)->required();
        sub->add_option("--bound", bound, "check all component values below this");
        sub->callback([&, kind] {
            verify::relation_spec spec;
            spec.kind = kind;
            spec.n = v_n;
            spec.c = v_c;
            spec.bound = bound;
            dfa machine;
            switch (kind) {
                case verify::relation_kind::add_const: machine = relations::add_const(v_c); break;
                case verify::relation_kind::sub_const: machine = relations::sub_const(v_c); break;
                case verify::relation_kind::affine: machine = relations::affine(v_n, v_c); break;
                case verify::relation_kind::adder:
                    machine = relations::adder();
                    spec.bound = std::min<std::uint64_t>(bound, 200);
                    break;
                case verify::relation_kind::eq_const: machine = relations::eq_const(v_c); break;
            }
            const auto report = verify::oracle_check(machine, spec);
            if (report.pass) {
                out << "oracle " << name << " pass tuples=" << report.tuples_checked << "\n";
            } else {
                out << "oracle " << name << " FAIL counterexample=" << report.counterexample
                    << "\n";
                exit_code = 1;
            }
        });
    };
    add_oracle("add-const", verify::relation_kind::add_const, false, true);
    add_oracle("sub-const", verify::relation_kind::sub_const, false, true);
    add_oracle("affine", verify::relation_kind::affine, true, true);
    add_oracle("adder", verify::relation_kind::adder, false, false);
    add_oracle("eq-const", verify::relation_kind::eq_const, false, true);

    std::string oeis_id;
    auto* v_oeis = cmd_verify->add_subcommand("oeis", "reproduce a frozen state-count table");
    v_oeis->add_option("id", oeis_id, "A372846 or A385021")
        ->required()
        ->check(CLI::IsMember({"A372846", "A385021"}));
    v_oeis->callback([&] {
        const auto table =
            oeis_id == "A372846" ? verify::oeis_a372846() : verify::oeis_a385021();
        out << table.id << "\n";
        for (int i = 0; i < 10; ++i)
            out << "n=" << (i + 1) << " measured=" << table.measured[i]
                << " expected=" << table.expected[i] << "\n";
        out << (table.matches() ? "match" : "MISMATCH") << "\n";
        if (!table.matches()) exit_code = 1;
    });

    std::string growth_family;
    std::uint64_t growth_max = 10;
    auto* v_growth = cmd_verify->add_subcommand("growth", "size-vs-model ratio probe");
    v_growth->add_option("family", growth_family, "add-const | affine | linear")
        ->required()
        ->check(CLI::IsMember({"add-const", "affine", "linear"}));
    v_growth->add_option("--max", growth_max, "largest parameter to measure");
    v_growth->callback([&] {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> sizes;
        verify::growth_model model = verify::growth_model::linear;
        if (growth_family == "add-const") {
            model = verify::growth_model::logarithmic;
            for (std::uint64_t j = 1; j <= std::min<std::uint64_t>(growth_max, 16); ++j)
                sizes.emplace_back(1ull << j,
                                   relations::add_const(1ull << j).n_states());
        } else if (growth_family == "affine") {
            model = verify::growth_model::quadratic;
            for (std::uint64_t n = 1; n <= growth_max; ++n)
                sizes.emplace_back(n, relations::affine_raw(n, 0).machine.n_states());
        } else {
            model = verify::growth_model::quartic;
            const dfao f = subsequences::fib_word();
            for (std::uint64_t n = 1; n <= growth_max; ++n)
                sizes.emplace_back(n,
                                   subsequences::linear_subseq_raw(f, n, 0).det_states);
        }
        const auto report = verify::growth_probe(sizes, model);
        for (const auto& s : report.samples)
            out << "param=" << s.param << " size=" << s.size << " ratio=" << s.ratio << "\n";
        out << "max_ratio=" << report.max_ratio << "\n";
    });

    // CLI11 wants argv in reverse order for its vector overload
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        err << app.help();
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

inline int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return run(std::move(args), std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace fibaut::cli
