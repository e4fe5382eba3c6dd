#pragma once

// Exact integer arithmetic on Zeckendorf (Fibonacci) representations.
//
// A digit word is an msd-first string over {'0','1'}.  The value of a word
// weights its last digit with F_2 = 1, the one before with F_3 = 2, and so
// on.  A word is valid when it contains no "11" factor, and canonical when
// it is valid and has no leading zero; the canonical representation of 0 is
// the empty word.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fibaut::zeck {

using word = std::string;

// F_0 .. F_93; F_93 is the largest Fibonacci number that fits in 64 bits.
inline const std::vector<std::uint64_t>& fib_table() {
    static const std::vector<std::uint64_t> table = [] {
        std::vector<std::uint64_t> f{0, 1};
        while (f.size() < 94) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
        return f;
    }();
    return table;
}

inline bool valid(const word& w) { return w.find("11") == word::npos; }

inline bool canonical(const word& w) {
    return valid(w) && (w.empty() || w.front() == '1');
}

// Weighted digit sum; defined for any binary word, including invalid ones
// and words with leading zeros.  Words longer than 91 digits could overflow
// the 64-bit sum even when valid, so they are rejected.
inline std::uint64_t value(const word& w) {
    if (w.size() > 91) throw std::length_error("zeck::value: word longer than 91 digits");
    const auto& fib = fib_table();
    std::uint64_t sum = 0;
    const std::size_t t = w.size();
    for (std::size_t i = 0; i < t; ++i) {
        const char ch = w[i];
        if (ch != '0' && ch != '1')
            throw std::invalid_argument("zeck::value: digit must be 0 or 1");
        if (ch == '1') sum += fib[t - i + 1];  // position i carries weight F_{t-i+1}
    }
    return sum;
}

// Canonical (greedy) representation; encode(0) is the empty word.
inline word encode(std::uint64_t n) {
    if (n == 0) return {};
    const auto& fib = fib_table();
    std::size_t k = fib.size() - 1;
    while (fib[k] > n) --k;
    word out;
    for (std::size_t i = k; i >= 2; --i) {
        if (fib[i] <= n) {
            out.push_back('1');
            n -= fib[i];
        } else {
            out.push_back('0');
        }
    }
    return out;
}

// Last digit of encode(i); equals the Fibonacci word f[i].
inline int last_bit(std::uint64_t i) {
    const word w = encode(i);
    return w.empty() ? 0 : w.back() - '0';
}

// A k-track input: k digit rows of equal length, read column by column.
struct track_word {
    std::vector<word> rows;

    int arity() const { return static_cast<int>(rows.size()); }
    std::size_t length() const { return rows.empty() ? 0 : rows.front().size(); }

    // Column j packed as an integer; track 0 occupies the most significant
    // bit so that ascending symbol order is lexicographic digit order.
    int column(std::size_t j) const {
        int sym = 0;
        for (const auto& r : rows) sym = (sym << 1) | (r[j] - '0');
        return sym;
    }
};

// Canonical encodings left-padded with zeros to a common length.
inline track_word pair_encode(const std::vector<std::uint64_t>& values) {
    track_word tw;
    std::size_t width = 0;
    for (auto v : values) {
        tw.rows.push_back(encode(v));
        width = std::max(width, tw.rows.back().size());
    }
    for (auto& r : tw.rows) r.insert(r.begin(), width - r.size(), '0');
    return tw;
}

// Checks [x00] = [x] + [x0]; holds for every binary word.
inline bool lemma1a_check(const word& x) {
    return value(x + "00") == value(x) + value(x + "0");
}

// Largest m with m*alpha <= t, alpha = (1+sqrt5)/2, in exact integer
// arithmetic: m*alpha <= t  <=>  m*sqrt5 <= 2t - m  <=>  2t >= m and
// 5 m^2 <= (2t - m)^2.  No floating point is involved anywhere.
inline std::uint64_t floor_div_alpha(std::uint64_t t) {
    using big = boost::multiprecision::cpp_int;
    const big bt = t;
    auto below = [&](const big& m) {
        const big rhs = 2 * bt - m;
        if (rhs < 0) return false;
        return 5 * m * m <= rhs * rhs;
    };
    big lo = 0, hi = bt;  // t/alpha < t for t >= 1
    while (lo < hi) {
        const big mid = (lo + hi + 1) / 2;
        if (below(mid))
            lo = mid;
        else
            hi = mid - 1;
    }
    return static_cast<std::uint64_t>(lo);
}

// Value of a word with its final digit removed, computed from the value
// alone: floor((t+2)/alpha) - 1.
inline std::uint64_t drop_last_value(std::uint64_t t) {
    return floor_div_alpha(t + 2) - 1;
}

// Same, but validated against an explicit witness word xa with [xa] = t.
inline std::uint64_t drop_last(std::uint64_t t, const word& last_digit_context) {
    if (last_digit_context.empty())
        throw std::invalid_argument("zeck::drop_last: context word must be nonempty");
    if (!valid(last_digit_context))
        throw std::invalid_argument("zeck::drop_last: context word is not a valid representation");
    if (value(last_digit_context) != t)
        throw std::invalid_argument("zeck::drop_last: context word does not have value t");
    return drop_last_value(t);
}

// Difference recurrence for D(x,y) = [y] - n[x]:
//   D(xa'a, yb'b) = D(x,y) + D(xa',yb') + (b - n a) + (b' - n a').
inline long long difference_update(long long d_prev, long long d_prevprev, long long n,
                                   int a_prev, int b_prev, int a, int b) {
    if (a_prev == 1 && a == 1)
        throw std::invalid_argument("difference_update: consecutive ones on first track");
    if (b_prev == 1 && b == 1)
        throw std::invalid_argument("difference_update: consecutive ones on second track");
    return d_prevprev + d_prev + (b - n * a) + (b_prev - n * a_prev);
}

}  // namespace fibaut::zeck
