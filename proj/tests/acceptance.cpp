// Acceptance suite: one line per criterion, exit 0 only if all pass.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fibaut/buchi.hpp"
#include "fibaut/constants.hpp"
#include "fibaut/relations.hpp"
#include "fibaut/subsequences.hpp"
#include "fibaut/verify.hpp"

using namespace fibaut;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

int popcount_parity(std::uint64_t i) {
    const zeck::word w = zeck::encode(i);
    int ones = 0;
    for (char ch : w) ones += ch == '1';
    return ones % 2;
}

// 1. minimized affine(n,0) state counts reproduce the frozen table
bool criterion_oeis_a372846(std::string& detail) {
    const auto t0 = clock_type::now();
    const auto table = verify::oeis_a372846();
    std::ostringstream os;
    os << "measured";
    for (auto v : table.measured) os << ' ' << v;
    bool ok = table.matches();
    // n = 1 reconciliation: the validity-tracking recognizer has 2 live
    // states, matching the frozen first entry directly
    ok = ok && table.measured[0] == 2;
    const double elapsed = seconds_since(t0);
    ok = ok && elapsed < 60.0;
    os << " (" << elapsed << "s)";
    detail = os.str();
    return ok;
}

// 2. minimized linear_subseq(fib_word, n, 0) counts reproduce the table
bool criterion_oeis_a385021(std::string& detail) {
    const auto t0 = clock_type::now();
    const auto table = verify::oeis_a385021();
    std::ostringstream os;
    os << "measured";
    for (auto v : table.measured) os << ' ' << v;
    const double elapsed = seconds_since(t0);
    const bool ok = table.matches() && elapsed < 60.0;
    os << " (" << elapsed << "s)";
    detail = os.str();
    return ok;
}

// 3. the f(2i) morphism and its iterated fixed point
bool criterion_morphism(std::string& detail) {
    const dfao m = subsequences::linear_subseq(subsequences::fib_word(), 2, 0);
    const auto mo = subsequences::to_morphism(m);

    subsequences::morphism expected;
    expected.rules = {{0, 1}, {2}, {3, 1}, {0, 4}, {0}};
    expected.coding = {0, 0, 1, 1, 1};
    expected.start = 0;
    const bool iso = subsequences::morphism_isomorphic(mo, expected);

    // Prefixes follow from that morphism; both are cross-checked against
    // the digit oracle, which pins the final characters (the prose source
    // for this example prints 01231040 / 00110000, whose tails contradict
    // the morphism it accompanies and the sequence itself).
    const auto uncoded = subsequences::iterate_letters(mo, 8);
    const auto coded = subsequences::iterate_morphism(mo, 8);
    const bool uncoded_ok = uncoded == std::vector<int>{0, 1, 2, 3, 1, 0, 4, 2};
    bool coded_ok = coded == std::vector<int>{0, 0, 1, 1, 0, 0, 1, 1};
    for (std::size_t i = 0; i < 8; ++i)
        coded_ok = coded_ok && coded[i] == zeck::last_bit(2 * i);

    std::ostringstream os;
    os << "isomorphic=" << (iso ? "yes" : "no") << " uncoded=";
    for (int letter : uncoded) os << letter;
    os << " coded=";
    for (int letter : coded) os << letter;
    detail = os.str();
    return iso && uncoded_ok && coded_ok;
}

// 4. oracle equivalence of the relation recognizers
bool criterion_relation_oracles(std::string& detail) {
    std::uint64_t tuples = 0;
    verify::relation_spec spec;
    spec.kind = verify::relation_kind::add_const;
    spec.bound = 2000;
    std::vector<std::uint64_t> constants;
    for (std::uint64_t c = 0; c <= 64; ++c) constants.push_back(c);
    constants.push_back(1000);
    constants.push_back(4181);
    for (std::uint64_t c : constants) {
        spec.c = c;
        const auto report = verify::oracle_check(relations::add_const(c), spec);
        tuples += report.tuples_checked;
        if (!report.pass) {
            detail = "add_const(" + std::to_string(c) + "): " + report.counterexample;
            return false;
        }
    }
    spec.kind = verify::relation_kind::affine;
    for (std::uint64_t n = 1; n <= 6; ++n)
        for (std::uint64_t c = 0; c < n; ++c) {
            spec.n = n;
            spec.c = c;
            const auto report = verify::oracle_check(relations::affine(n, c), spec);
            tuples += report.tuples_checked;
            if (!report.pass) {
                detail = "affine(" + std::to_string(n) + "," + std::to_string(c) +
                         "): " + report.counterexample;
                return false;
            }
        }
    spec.kind = verify::relation_kind::adder;
    spec.bound = 200;
    const auto report = verify::oracle_check(relations::adder(), spec);
    tuples += report.tuples_checked;
    if (!report.pass) {
        detail = "adder: " + report.counterexample;
        return false;
    }
    detail = "zero counterexamples over " + std::to_string(tuples) + " tuples";
    return true;
}

// Valid words of one length as (value, shifted value, last digit); the
// shifted value weights every digit one Fibonacci index lower, so that
// appending digit a maps (v, p) to (v + p + a, v + a).
struct word_state {
    long long v = 0, p = 0;
    int last = 0;
};

std::vector<word_state> grow_layer(const std::vector<word_state>& layer) {
    std::vector<word_state> next;
    for (const auto& w : layer)
        for (int a = 0; a <= 1; ++a) {
            if (w.last == 1 && a == 1) continue;
            next.push_back(word_state{w.v + w.p + a, w.v + a, a});
        }
    return next;
}

// 5. the numeration lemmas, exhaustively at their stated bounds
bool criterion_lemma_suite(std::string& detail) {
    // interval lemmas over valid pairs to length 14, digits unconstrained
    for (int n = 1; n <= 6; ++n) {
        std::vector<word_state> layer{word_state{}};
        for (int len = 0; len <= 14; ++len) {
            for (const auto& x : layer)
                for (const auto& y : layer) {
                    const long long d = y.v - n * x.v;
                    for (int a = 0; a <= 1; ++a)
                        for (int b = 0; b <= 1; ++b) {
                            const long long ext = (y.v + y.p + b) - n * (x.v + x.p + a);
                            if (d <= -n - 1 && ext > -n - 1) {
                                detail = "low-interval lemma failed";
                                return false;
                            }
                            if (d >= 2 * n && ext < n) {
                                detail = "high-interval lemma failed";
                                return false;
                            }
                            if (d >= n && ext >= n) {
                                const long long xv = x.v + x.p + a, xp = x.v + a;
                                const long long yv = y.v + y.p + b, yp = y.v + b;
                                for (int a2 = 0; a2 <= 1; ++a2) {
                                    if (a == 1 && a2 == 1) continue;
                                    for (int b2 = 0; b2 <= 1; ++b2)
                                        if ((yv + yp + b2) - n * (xv + xp + a2) < n) {
                                            detail = "two-step interval lemma failed";
                                            return false;
                                        }
                                }
                            }
                        }
                }
            if (len < 14) layer = grow_layer(layer);
        }
    }
    // shift identity for all words to length 14
    {
        std::vector<std::string> words{""};
        for (int len = 0; len <= 14; ++len) {
            for (const auto& w : words)
                if (!zeck::lemma1a_check(w)) {
                    detail = "shift identity failed at " + w;
                    return false;
                }
            if (len < 14) {
                std::vector<std::string> next;
                for (const auto& w : words) {
                    next.push_back(w + "0");
                    next.push_back(w + "1");
                }
                words = std::move(next);
            }
        }
    }
    // sandwich bound for canonical words to length 20, exact arithmetic
    for (std::uint64_t v = 1; v < zeck::fib_table()[22]; ++v) {
        const zeck::word x = zeck::encode(v);
        const long long u_val = static_cast<long long>(v);
        const long long v_val = static_cast<long long>(zeck::value(x + "0"));
        const long long left = 2 * v_val - u_val + 3;
        const long long right = 2 * v_val - u_val + 1;
        const long long sq = 5 * (u_val + 1) * (u_val + 1);
        if (!(left > 0 && left * left > sq && (right < 0 || right * right < sq))) {
            detail = "sandwich bound failed at " + x;
            return false;
        }
    }
    // last-digit removal for all valid words to length 20
    {
        std::vector<std::string> words{"0", "1"};
        for (int len = 1; len <= 20; ++len) {
            for (const auto& w : words) {
                const std::uint64_t t = zeck::value(w);
                if (zeck::drop_last(t, w) != zeck::value(w.substr(0, w.size() - 1))) {
                    detail = "last-digit removal failed at " + w;
                    return false;
                }
            }
            if (len < 20) {
                std::vector<std::string> next;
                for (const auto& w : words) {
                    next.push_back(w + "0");
                    if (w.back() == '0') next.push_back(w + "1");
                }
                words = std::move(next);
            }
        }
    }
    // difference recurrence against direct evaluation, pairs to length 8
    {
        std::vector<word_state> layer{word_state{}};
        for (int len = 0; len <= 8; ++len) {
            for (const auto& x : layer)
                for (const auto& y : layer)
                    for (int n = 1; n <= 5; ++n)
                        for (int a1 = 0; a1 <= 1; ++a1) {
                            if (x.last == 1 && a1 == 1) continue;
                            for (int b1 = 0; b1 <= 1; ++b1) {
                                if (y.last == 1 && b1 == 1) continue;
                                for (int a2 = 0; a2 <= 1; ++a2) {
                                    if (a1 == 1 && a2 == 1) continue;
                                    for (int b2 = 0; b2 <= 1; ++b2) {
                                        if (b1 == 1 && b2 == 1) continue;
                                        const long long xv = x.v + x.p + a1;
                                        const long long xp = x.v + a1;
                                        const long long yv = y.v + y.p + b1;
                                        const long long yp = y.v + b1;
                                        const long long want =
                                            (yv + yp + b2) - n * (xv + xp + a2);
                                        const long long d_prev = yv - n * xv;
                                        const long long d_pp = y.v - n * x.v;
                                        if (zeck::difference_update(d_prev, d_pp, n, a1,
                                                                    b1, a2, b2) != want) {
                                            detail = "difference recurrence failed";
                                            return false;
                                        }
                                    }
                                }
                            }
                        }
            if (len < 8) layer = grow_layer(layer);
        }
    }
    // lexicographic order equals value order, equal-length valid words to 14
    {
        std::vector<std::pair<std::string, std::uint64_t>> words{{"", 0}};
        for (int len = 1; len <= 14; ++len) {
            std::vector<std::pair<std::string, std::uint64_t>> next;
            for (const auto& [w, v] : words)
                for (int a = 0; a <= 1; ++a) {
                    if (!w.empty() && w.back() == '1' && a == 1) continue;
                    std::string ext = w + char('0' + a);
                    next.emplace_back(ext, zeck::value(ext));
                }
            words = std::move(next);
            for (std::size_t i = 0; i < words.size(); ++i)
                for (std::size_t j = 0; j < words.size(); ++j)
                    if ((words[i].first < words[j].first) !=
                        (words[i].second < words[j].second)) {
                        detail = "order lemma failed";
                        return false;
                    }
        }
    }
    detail = "all lemma families verified at their stated bounds";
    return true;
}

// 6. pipeline results are equivalent to the direct constructions
bool criterion_pipeline_crosscheck(std::string& detail) {
    const auto t0 = clock_type::now();
    for (std::uint64_t n = 1; n <= 8; ++n)
        for (std::uint64_t c = 0; c < n; ++c)
            if (!equivalent(buchi::affine_pipeline(n, c).machine, relations::affine(n, c))) {
                detail = "affine(" + std::to_string(n) + "," + std::to_string(c) + ")";
                return false;
            }
    for (std::uint64_t c = 0; c <= 256; ++c)
        if (!equivalent(buchi::add_const_pipeline(c).machine, relations::add_const(c))) {
            detail = "add_const(" + std::to_string(c) + ")";
            return false;
        }
    const dfao f = subsequences::fib_word();
    for (std::uint64_t n = 1; n <= 6; ++n)
        for (std::uint64_t c = 0; c < n; ++c)
            if (!equivalent(buchi::subseq_pipeline(f, n, c).machine,
                            subsequences::linear_subseq(f, n, c))) {
                detail = "subseq(" + std::to_string(n) + "," + std::to_string(c) + ")";
                return false;
            }
    const double elapsed = seconds_since(t0);
    detail = "all pipelines equivalent (" + std::to_string(elapsed) + "s)";
    return elapsed < 300.0;
}

// 7. growth stays under the frozen ceilings
bool criterion_growth(std::string& detail) {
    for (int j = 1; j <= 16; ++j) {
        const std::uint64_t c = 1ull << j;
        const int states = relations::add_const(c).n_states();
        if (static_cast<double>(states) / j > frozen::add_const_states_per_log) {
            detail = "add_const(2^" + std::to_string(j) + ") too large";
            return false;
        }
    }
    for (std::uint64_t n = 1; n <= 30; ++n)
        if (relations::affine_raw(n, 0).machine.n_states() >
            static_cast<int>(frozen::affine_premin_quadratic * n * n)) {
            detail = "affine_raw(" + std::to_string(n) + ",0) too large";
            return false;
        }
    const dfao f = subsequences::fib_word();
    const double m2 = 4.0;
    for (std::uint64_t n = 1; n <= 10; ++n) {
        const auto build = subsequences::linear_subseq_raw(f, n, 0);
        const double quartic = static_cast<double>(n) * n * n * n;
        if (static_cast<double>(build.det_states) >
            frozen::linear_subseq_quartic_k * m2 * quartic) {
            detail = "linear_subseq_raw(" + std::to_string(n) + ",0) too large";
            return false;
        }
    }
    detail = "all ceilings hold";
    return true;
}

// 8. pointwise sequence checks and leading-zero robustness
bool criterion_pointwise(std::string& detail) {
    const dfao f = subsequences::fib_word();
    const dfao t = subsequences::fib_thue_morse();
    for (std::uint64_t i = 0; i < 10000; ++i) {
        if (subsequences::seq_eval(f, i) != zeck::last_bit(i)) {
            detail = "fib_word at " + std::to_string(i);
            return false;
        }
        if (subsequences::seq_eval(t, i) != popcount_parity(i)) {
            detail = "fib_thue_morse at " + std::to_string(i);
            return false;
        }
    }
    for (std::uint64_t c = 0; c <= 50; ++c) {
        const dfao sf = subsequences::shift(f, c);
        const dfao st = subsequences::shift(t, c);
        for (std::uint64_t i = 0; i < 10000; ++i) {
            if (subsequences::seq_eval(sf, i) != zeck::last_bit(i + c)) {
                detail = "shift(fib_word," + std::to_string(c) + ") at " + std::to_string(i);
                return false;
            }
            if (subsequences::seq_eval(st, i) != popcount_parity(i + c)) {
                detail = "shift(fib_thue_morse," + std::to_string(c) + ") at " +
                         std::to_string(i);
                return false;
            }
        }
    }
    for (std::uint64_t n = 1; n <= 6; ++n)
        for (std::uint64_t c = 0; c < n; ++c) {
            const dfao lf = subsequences::linear_subseq(f, n, c);
            const dfao lt = subsequences::linear_subseq(t, n, c);
            for (std::uint64_t i = 0; i < 10000; ++i) {
                if (subsequences::seq_eval(lf, i) != zeck::last_bit(n * i + c)) {
                    detail = "linear(fib_word," + std::to_string(n) + "," +
                             std::to_string(c) + ") at " + std::to_string(i);
                    return false;
                }
                if (subsequences::seq_eval(lt, i) != popcount_parity(n * i + c)) {
                    detail = "linear(fib_thue_morse," + std::to_string(n) + "," +
                             std::to_string(c) + ") at " + std::to_string(i);
                    return false;
                }
            }
        }
    // leading-zero robustness with up to 5 padding columns
    const std::vector<dfao> machines = {f, t, subsequences::shift(f, 7),
                                        subsequences::linear_subseq(t, 3, 2)};
    for (const auto& m : machines)
        for (std::uint64_t i = 0; i < 1000; ++i) {
            const int want = subsequences::seq_eval(m, i);
            for (int pad = 1; pad <= 5; ++pad) {
                zeck::word w = zeck::encode(i);
                w.insert(w.begin(), pad, '0');
                const auto got = run(m, track_word{{w}});
                if (!got || *got != want) {
                    detail = "padding changed a value at i=" + std::to_string(i);
                    return false;
                }
            }
        }
    detail = "all sequences match their digit oracles below 10^4";
    return true;
}

// 9. Sturmian cross-check of the factor counts
bool criterion_subwords(std::string& detail) {
    for (std::size_t len = 1; len <= 20; ++len) {
        const auto count = subsequences::subword_count(subsequences::fib_word(), len);
        if (count != len + 1) {
            detail = "len " + std::to_string(len) + " gave " + std::to_string(count);
            return false;
        }
    }
    detail = "factor counts are n+1 for n <= 20";
    return true;
}

}  // namespace

int main() {
    struct criterion {
        const char* name;
        bool (*check)(std::string&);
    };
    const std::vector<criterion> criteria = {
        {"OEIS A372846 state counts", criterion_oeis_a372846},
        {"OEIS A385021 state counts", criterion_oeis_a385021},
        {"f(2i) morphism reproduction", criterion_morphism},
        {"relation oracle equivalence", criterion_relation_oracles},
        {"numeration and interval lemma suite", criterion_lemma_suite},
        {"pipeline/direct cross-check", criterion_pipeline_crosscheck},
        {"growth ceilings", criterion_growth},
        {"pointwise sequence checks", criterion_pointwise},
        {"Sturmian subword counts", criterion_subwords},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::cout << "[" << (i + 1) << "] " << criteria[i].name << ": "
                  << (ok ? "PASS" : "FAIL") << " — " << detail << "\n";
    }
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
