#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "fibaut/zeckendorf.hpp"

using namespace fibaut;

namespace {

// All words of the given exact length over {0,1}, optionally restricted to
// valid representations.
std::vector<std::string> words_of_length(int len, bool valid_only) {
    std::vector<std::string> out;
    std::string w(len, '0');
    const std::uint32_t limit = 1u << len;
    for (std::uint32_t bits = 0; bits < limit; ++bits) {
        for (int i = 0; i < len; ++i) w[i] = (bits >> (len - 1 - i)) & 1 ? '1' : '0';
        if (!valid_only || zeck::valid(w)) out.push_back(w);
    }
    return out;
}

}  // namespace

TEST_CASE("value of digit words") {
    CHECK(zeck::value("01001") == 6);
    CHECK(zeck::value("") == 0);
    CHECK(zeck::value("1000010100") == 100);  // 89 + 8 + 3
    CHECK(zeck::value("11") == 3);            // invalid words still have a weighted sum
    CHECK(zeck::value("0") == 0);
    CHECK_THROWS_AS(zeck::value("12"), std::invalid_argument);
    CHECK_THROWS_AS(zeck::value(std::string(92, '0')), std::length_error);
}

TEST_CASE("encode is the greedy canonical representation") {
    CHECK(zeck::encode(6) == "1001");
    CHECK(zeck::encode(0) == "");
    CHECK(zeck::encode(100) == "1000010100");
    CHECK(zeck::encode(1) == "1");
    CHECK(zeck::encode(12) == "10101");
}

TEST_CASE("round trip: value(encode(i)) = i and encode(i) is canonical") {
    for (std::uint64_t i = 0; i < 1000000; ++i) {
        const zeck::word w = zeck::encode(i);
        if (zeck::value(w) != i || !zeck::canonical(w)) {
            CAPTURE(i, w);
            REQUIRE(false);
        }
    }
    SUCCEED();
}

TEST_CASE("pair_encode pads to a common width") {
    const auto pair = zeck::pair_encode({4, 11});
    REQUIRE(pair.rows.size() == 2);
    CHECK(pair.rows[0] == "00101");
    CHECK(pair.rows[1] == "10100");
    // columns [0,1][0,0][1,1][0,0][1,0]
    CHECK(pair.column(0) == 0b01);
    CHECK(pair.column(2) == 0b11);
    CHECK(pair.column(4) == 0b10);

    const auto zeros = zeck::pair_encode({0, 0});
    CHECK(zeros.rows[0].empty());
    CHECK(zeros.rows[1].empty());

    const auto mixed = zeck::pair_encode({3, 6});
    CHECK(mixed.rows[0] == "0100");
    CHECK(mixed.rows[1] == "1001");
}

TEST_CASE("validity and canonicity predicates") {
    CHECK(zeck::valid("10100"));
    CHECK_FALSE(zeck::valid("1101"));
    CHECK(zeck::canonical(""));
    CHECK(zeck::canonical("10"));
    CHECK_FALSE(zeck::canonical("010"));
}

TEST_CASE("shift identity [x00] = [x] + [x0] holds for every word") {
    CHECK(zeck::lemma1a_check(""));
    CHECK(zeck::lemma1a_check("1001"));
    CHECK(zeck::lemma1a_check("101"));
    for (int len = 0; len <= 12; ++len)
        for (const auto& w : words_of_length(len, false))
            if (!zeck::lemma1a_check(w)) {
                CAPTURE(w);
                REQUIRE(false);
            }
    SUCCEED();
}

TEST_CASE("equal-length valid words order lexicographically by value") {
    for (int len = 1; len <= 14; ++len) {
        const auto words = words_of_length(len, true);
        for (const auto& x : words)
            for (const auto& y : words) {
                const bool lex = x < y;
                const bool val = zeck::value(x) < zeck::value(y);
                if (lex != val) {
                    CAPTURE(x, y);
                    REQUIRE(false);
                }
            }
    }
    SUCCEED();
}

TEST_CASE("sandwich bound -beta^2 < [x0] - alpha [x] < -beta, exactly") {
    // With U = [x], V = [x0], clearing denominators over X^2 - X - 1:
    //   left:  2V - U + 3 > sqrt5 (U + 1)
    //   right: 2V - U + 1 < sqrt5 (U + 1)
    auto holds = [](long long u, long long v) {
        const long long left = 2 * v - u + 3;
        const long long right = 2 * v - u + 1;
        const long long sq = 5 * (u + 1) * (u + 1);
        const bool lower = left > 0 && left * left > sq;
        const bool upper = right < 0 || right * right < sq;
        return lower && upper;
    };
    for (int len = 1; len <= 20; ++len) {
        // canonical words of this length: valid and starting with 1
        for (std::uint64_t v = zeck::fib_table()[len + 1]; v < zeck::fib_table()[len + 2]; ++v) {
            const zeck::word x = zeck::encode(v);
            REQUIRE(static_cast<int>(x.size()) == len);
            const long long u_val = static_cast<long long>(zeck::value(x));
            const long long v_val = static_cast<long long>(zeck::value(x + "0"));
            if (!holds(u_val, v_val)) {
                CAPTURE(x);
                REQUIRE(false);
            }
        }
    }
    SUCCEED();
}

TEST_CASE("drop_last closed form") {
    CHECK(zeck::drop_last(6, "1001") == 3);
    CHECK(zeck::drop_last(1, "1") == 0);
    // value("100001010"), the literal truncation of encode(100)
    CHECK(zeck::drop_last(100, "1000010100") == zeck::value("100001010"));
    CHECK(zeck::drop_last(100, "1000010100") == 62);

    CHECK_THROWS_AS(zeck::drop_last(3, "11"), std::invalid_argument);
    CHECK_THROWS_AS(zeck::drop_last(5, "1001"), std::invalid_argument);  // wrong value
    CHECK_THROWS_AS(zeck::drop_last(0, ""), std::invalid_argument);
}

TEST_CASE("drop_last matches literal truncation for every valid word") {
    for (int len = 1; len <= 20; ++len)
        for (const auto& w : words_of_length(len, true)) {
            const std::uint64_t t = zeck::value(w);
            const std::uint64_t want = zeck::value(w.substr(0, w.size() - 1));
            if (zeck::drop_last(t, w) != want) {
                CAPTURE(w, t, want);
                REQUIRE(false);
            }
        }
    SUCCEED();
}

TEST_CASE("floor_div_alpha is exact") {
    // floor(t / alpha) via the defining inequality on small values
    CHECK(zeck::floor_div_alpha(0) == 0);
    CHECK(zeck::floor_div_alpha(1) == 0);
    CHECK(zeck::floor_div_alpha(2) == 1);
    CHECK(zeck::floor_div_alpha(8) == 4);
    CHECK(zeck::floor_div_alpha(102) == 63);
    // near a 64-bit Fibonacci number: floor(F_{k+1}/alpha) = F_k for k >= 2
    const auto& fib = zeck::fib_table();
    for (int k = 2; k <= 91; ++k) CHECK(zeck::floor_div_alpha(fib[k + 1]) == fib[k]);
}

TEST_CASE("difference_update examples") {
    CHECK(zeck::difference_update(0, 0, 1, 0, 0, 0, 0) == 0);
    CHECK(zeck::difference_update(1, 0, 2, 0, 1, 1, 0) == 0);
    CHECK(zeck::difference_update(-1, -1, 1, 0, 0, 0, 1) == -1);
    CHECK_THROWS_AS(zeck::difference_update(0, 0, 1, 1, 0, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(zeck::difference_update(0, 0, 1, 0, 1, 0, 1), std::invalid_argument);
}

TEST_CASE("difference_update agrees with direct evaluation") {
    // all equal-length pairs up to length 8, all legal two-digit extensions,
    // n in 1..5
    for (int len = 0; len <= 8; ++len) {
        const auto words = words_of_length(len, true);
        for (const auto& x : words)
            for (const auto& y : words)
                for (int n = 1; n <= 5; ++n)
                    for (int a1 = 0; a1 <= 1; ++a1)
                        for (int a2 = 0; a2 <= 1; ++a2)
                            for (int b1 = 0; b1 <= 1; ++b1)
                                for (int b2 = 0; b2 <= 1; ++b2) {
                                    if (a1 && a2) continue;
                                    if (b1 && b2) continue;
                                    const std::string xa = x + char('0' + a1);
                                    const std::string ya = y + char('0' + b1);
                                    if (!zeck::valid(xa) || !zeck::valid(ya)) continue;
                                    const std::string xaa = xa + char('0' + a2);
                                    const std::string yaa = ya + char('0' + b2);
                                    const long long d_pp =
                                        static_cast<long long>(zeck::value(y)) -
                                        n * static_cast<long long>(zeck::value(x));
                                    const long long d_p =
                                        static_cast<long long>(zeck::value(ya)) -
                                        n * static_cast<long long>(zeck::value(xa));
                                    const long long want =
                                        static_cast<long long>(zeck::value(yaa)) -
                                        n * static_cast<long long>(zeck::value(xaa));
                                    const long long got = zeck::difference_update(
                                        d_p, d_pp, n, a1, b1, a2, b2);
                                    if (got != want) {
                                        CAPTURE(x, y, n, a1, b1, a2, b2);
                                        REQUIRE(false);
                                    }
                                }
    }
    SUCCEED();
}
