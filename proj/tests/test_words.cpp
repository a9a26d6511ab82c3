#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>

#include "abelian/analysis.hpp"
#include "abelian/generators.hpp"

using namespace abelian;

TEST_CASE("parikh vectors") {
    Alphabet bin("01");
    CHECK(parikh("011010", bin) == ParikhVector{3, 3});
    CHECK(parikh("", bin) == ParikhVector{0, 0});
    Alphabet abcd("abcd");
    CHECK(parikh("cabd", abcd) == ParikhVector{1, 1, 1, 1});
    CHECK(parikh("cabd", abcd).to_string(abcd) == "(a:1,b:1,c:1,d:1)");
}

TEST_CASE("abelian equivalence") {
    Alphabet bin("01");
    CHECK(abelian_equiv("01", "10", bin));
    CHECK(!abelian_equiv("01", "11", bin));
    CHECK(abelian_equiv("0011", "0101", bin));
    CHECK(abelian_equiv("", "", bin));
    CHECK(!abelian_equiv("", "0", bin));
}

TEST_CASE("parikh additivity under concatenation") {
    Alphabet a("012");
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> len(0, 12), letter(0, 2);
    for (int k = 0; k < 100; ++k) {
        Word u, v;
        for (int i = len(rng); i-- > 0;) u += a.letter(letter(rng));
        for (int i = len(rng); i-- > 0;) v += a.letter(letter(rng));
        CHECK(parikh(u + v, a) == parikh(u, a) + parikh(v, a));
    }
}

TEST_CASE("factor parikhs over windows") {
    auto tm = thue_morse();
    auto got = factor_parikhs(tm, 2, 64);
    std::vector<ParikhVector> want = {{0, 2}, {1, 1}, {2, 0}};
    CHECK(got == want);

    auto alt = periodic_word("01");
    CHECK(factor_parikhs(alt, 2, 10) == std::vector<ParikhVector>{{1, 1}});

    auto fib = fibonacci_word();
    CHECK(factor_parikhs(fib, 5, 200) == std::vector<ParikhVector>{{3, 2}, {4, 1}});

    CHECK_THROWS_AS(factor_parikhs(fib, 11, 10), std::invalid_argument);
}

TEST_CASE("abelian complexity of the classic fixtures") {
    auto tm = thue_morse();
    CHECK(abelian_complexity(tm, 3, 512) == 2);
    CHECK(abelian_complexity(tm, 4, 512) == 3);
    auto fib = fibonacci_word();
    for (std::size_t n = 1; n <= 50; ++n) CHECK(abelian_complexity(fib, n, 800) == 2);
    CHECK(abelian_complexity(periodic_word("012"), 3, 30) == 1);
}

TEST_CASE("factor complexity") {
    auto fib = fibonacci_word();
    CHECK(factor_complexity(fib, 7, 400) == 8);
    CHECK(factor_complexity(periodic_word("01"), 4, 40) == 2);
    auto profile = factor_complexity_profile(fib.prefix(2000), 60);
    for (std::size_t n = 1; n <= 60; ++n) CHECK(profile[n] == n + 1);
}

TEST_CASE("corridors") {
    auto fib = fibonacci_word();
    Corridor c = corridor(fib, '1', 5, 400);
    CHECK(c.min == 1);
    CHECK(c.max == 2);
    auto tm = thue_morse();
    c = corridor(tm, '1', 4, 512);
    CHECK(c.min == 1);
    CHECK(c.max == 3);
    c = corridor(periodic_word("0"), '0', 7, 100);
    CHECK(c.min == 7);
    CHECK(c.max == 7);
    c = corridor(periodic_word("0"), '1', 5, 100);  // letter absent from the word
    CHECK(c.min == 0);
    CHECK(c.max == 0);
}

TEST_CASE("sliding-window intermediate values fill the corridor") {
    for (auto word : {thue_morse(), fibonacci_word(), periodic_word("00110")}) {
        AbelianIndex idx(word, 50, 3000);
        for (std::size_t n = 1; n <= 50; ++n) {
            Corridor c = idx.corridor(n, 1);
            CHECK(idx.abelian_complexity(n) == c.max - c.min + 1);
        }
    }
    // The same contiguity holds per letter over larger alphabets.
    for (auto word : {tribonacci_word(), periodic_word("0120012")}) {
        AbelianIndex idx(word, 30, 3000);
        for (std::size_t n = 1; n <= 30; ++n) {
            for (std::size_t j = 0; j < word.alphabet().size(); ++j) {
                Corridor c = idx.corridor(n, j);
                std::vector<bool> seen(c.max - c.min + 1, false);
                for (const auto& p : idx.parikhs(n)) seen.at(p[j] - c.min) = true;
                CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
            }
        }
    }
}

TEST_CASE("balance checks") {
    CHECK(is_balanced(fibonacci_word(), 100, 4000).balanced);
    auto report = is_balanced(thue_morse(), 10, 512);
    CHECK(!report.balanced);
    REQUIRE(report.witness.has_value());
    // TM has three abelian classes at every even length, so the shortest
    // witness is already at n = 2 (00 against 11).
    CHECK(report.witness->length == 2);
    Alphabet bin("01");
    auto low = parikh(report.witness->low, bin);
    auto high = parikh(report.witness->high, bin);
    CHECK(high[bin.index(report.witness->letter)] - low[bin.index(report.witness->letter)] >= 2);
    // At n = 4 the ones-counts span 1..3: corridor width 2.
    Corridor c4 = corridor(thue_morse(), '1', 4, 512);
    CHECK(c4.max - c4.min == 2);
}

TEST_CASE("frequency bounds bracket the letter frequency") {
    auto fib = fibonacci_word();
    auto [lo, hi] = freq_bounds(fib, '1', 5, 400);
    CHECK(lo == Rational(1, 5));
    CHECK(hi == Rational(2, 5));
    auto [l2, h2] = freq_bounds(periodic_word("01"), '1', 2, 40);
    CHECK(l2 == Rational(1, 2));
    CHECK(h2 == Rational(1, 2));
    auto [l3, h3] = freq_bounds(thue_morse(), '1', 4, 512);
    CHECK(l3 == Rational(1, 4));
    CHECK(h3 == Rational(3, 4));
}

TEST_CASE("periodicity detection") {
    CHECK(is_periodic_window(periodic_word("00011"), 50) == 5);
    CHECK(!is_periodic_window(fibonacci_word(), 500).has_value());
    CHECK(!is_periodic_window(preperiodic_word("0011", "001101"), 100).has_value());
    CHECK(is_periodic_window(periodic_word("0101"), 40) == 2);  // primitive period found
    CHECK(abelian_periodicity_length(periodic_word("00011").prefix(50), Alphabet("01"), 25) == 5);
}

TEST_CASE("abelian complexity never exceeds factor complexity") {
    for (auto word : {thue_morse(), fibonacci_word(), tribonacci_word()}) {
        Word w = word.prefix(2000);
        auto profile = factor_complexity_profile(w, 30);
        AbelianIndex idx(w, Alphabet(word.alphabet()), 30);
        for (std::size_t n = 1; n <= 30; ++n) CHECK(idx.abelian_complexity(n) <= profile[n]);
    }
}

TEST_CASE("window stabilization") {
    auto fib = fibonacci_word();
    auto stable = stabilized_index(fib, 30, 128, 1 << 16);
    CHECK(stable.stabilized);
    for (std::size_t n = 1; n <= 30; ++n) CHECK(stable.index.abelian_complexity(n) == 2);
}

TEST_CASE("shared words are safe under concurrent prefix requests") {
    auto tm = thue_morse();
    Word reference = tm.prefix(8000);
    std::vector<std::thread> threads;
    std::vector<bool> ok(4, false);
    for (int t = 0; t < 4; ++t)
        threads.emplace_back([&, t] {
            bool good = true;
            for (std::size_t n = 1; n <= 8000; n = 2 * n + t)
                good = good && tm.prefix(n) == reference.substr(0, n);
            ok[t] = good;
        });
    for (auto& th : threads) th.join();
    for (int t = 0; t < 4; ++t) CHECK(ok[t]);
}

TEST_CASE("prefix consistency") {
    for (auto word : {thue_morse(), fibonacci_word(), champernowne(2)}) {
        Word big = word.prefix(10000);
        for (std::size_t m : {1u, 17u, 250u, 9999u}) CHECK(word.prefix(m) == big.substr(0, m));
    }
}
