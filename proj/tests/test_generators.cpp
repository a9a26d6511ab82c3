#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "abelian/analysis.hpp"
#include "abelian/generators.hpp"

using namespace abelian;

namespace {

QuadExt fib_slope() { return QuadExt(Rational(3, 2), Rational(-1, 2), 5); }  // (3-sqrt(5))/2
QuadExt sqrt2_slope() { return QuadExt(Rational(-1), Rational(1), 2); }      // sqrt(2)-1

}  // namespace

TEST_CASE("morphic fixed points match the published prefixes") {
    CHECK(thue_morse().prefix(12) == "011010011001");
    CHECK(tribonacci_word().prefix(13) == "0102010010201");
    CHECK(fibonacci_word().prefix(20) == "01001010010010100101");
}

TEST_CASE("non-prolongable morphisms are rejected") {
    CHECK_THROWS_AS(morphic_fixed_point({{{'0', "10"}, {'1', "0"}}, '0'}), std::invalid_argument);
    CHECK_THROWS_AS(morphic_fixed_point({{{'0', "0"}}, '0'}), std::invalid_argument);
    // Prolongable but collapsing: 0 -> 01, 1 -> empty stalls.
    auto stall = morphic_fixed_point({{{'0', "01"}, {'1', ""}}, '0'});
    CHECK_THROWS_AS(stall.prefix(10), std::invalid_argument);
}

TEST_CASE("binary rotation words") {
    BinaryRotationSpec fib_spec{fib_slope(), TorusPoint{fib_slope()}, EndpointConvention::Underline};
    auto rot = binary_rotation_word(fib_spec);
    CHECK(rot.prefix(1000) == fibonacci_word().prefix(1000));

    BinaryRotationSpec half{QuadExt(Rational(1, 2)), TorusPoint{QuadExt(0)},
                            EndpointConvention::Underline};
    CHECK(binary_rotation_word(half).prefix(10) == "0101010101");

    // 00 occurs iff alpha < 1/2.
    auto small = binary_rotation_word(fib_spec).prefix(300);
    CHECK(small.find("00") != Word::npos);
    CHECK(small.find("11") == Word::npos);
    QuadExt big_slope = QuadExt(1) - fib_slope();  // (sqrt(5)-1)/2 > 1/2
    auto big = binary_rotation_word({big_slope, TorusPoint{big_slope}, EndpointConvention::Underline})
                   .prefix(300);
    CHECK(big.find("11") != Word::npos);
    CHECK(big.find("00") == Word::npos);

    CHECK_THROWS_AS(binary_rotation_word({QuadExt(2), TorusPoint{QuadExt(0)},
                                          EndpointConvention::Underline}),
                    std::invalid_argument);
}

TEST_CASE("rational slope gives a periodic rotation word") {
    auto w = binary_rotation_word({QuadExt(Rational(2, 5)), TorusPoint{QuadExt(Rational(1, 3))},
                                   EndpointConvention::Bar});
    auto p = is_periodic_window(w, 200);
    REQUIRE(p.has_value());
    CHECK(5 % *p == 0);
    // Irrational slope: aperiodic at window scale.
    auto s = binary_rotation_word({sqrt2_slope(), TorusPoint{QuadExt(0)},
                                   EndpointConvention::Underline});
    CHECK(!is_periodic_window(s, 10000).has_value());
}

TEST_CASE("ternary rotation words: structure at zeta = alpha") {
    QuadExt alpha = sqrt2_slope();
    TernaryRotationSpec spec{alpha, TorusPoint{alpha}, TorusPoint{alpha}, false, false};
    Word u = ternary_rotation_word(spec).prefix(2000);
    // Image of 0 -> 0, 1 -> 12: every 1 followed by 2, every 2 preceded by 1.
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == '1') CHECK((i + 1 == u.size() || u[i + 1] == '2'));
        if (u[i] == '2') {
            REQUIRE(i > 0);
            CHECK(u[i - 1] == '1');
        }
    }
    // Factor complexity n + 2.
    auto profile = factor_complexity_profile(ternary_rotation_word(spec).prefix(4000), 40);
    for (std::size_t n = 1; n <= 40; ++n) CHECK(profile[n] == n + 2);
}

TEST_CASE("ternary rotation words: binary projections are Sturmian") {
    QuadExt alpha = sqrt2_slope();
    TernaryRotationSpec spec{alpha, TorusPoint{QuadExt(Rational(9, 20))}, TorusPoint{QuadExt(0)},
                             false, false};
    Word u = ternary_rotation_word(spec).prefix(4000);
    Word proj1 = u, proj2 = u;
    for (auto& c : proj1)
        if (c == '2') c = '0';
    for (auto& c : proj2) c = (c == '2') ? '1' : '0';
    for (Word w : {proj1, proj2}) {
        auto profile = factor_complexity_profile(w, 30);
        for (std::size_t n = 1; n <= 30; ++n) CHECK(profile[n] == n + 1);
    }
}

TEST_CASE("ternary rotation words: general offset grows the language") {
    QuadExt alpha = sqrt2_slope();
    TernaryRotationSpec spec{alpha, TorusPoint{QuadExt(Rational(9, 20))}, TorusPoint{QuadExt(0)},
                             false, false};
    auto w = ternary_rotation_word(spec);
    CHECK(factor_parikhs(w, 1, 2000).size() == 3);  // all three letters occur
    auto profile = factor_complexity_profile(w.prefix(4000), 30);
    bool some_length_exceeds = false;
    for (std::size_t n = 1; n <= 30; ++n) some_length_exceeds |= profile[n] != n + 2;
    CHECK(some_length_exceeds);
}

TEST_CASE("ternary rotation endpoint rules") {
    QuadExt alpha = sqrt2_slope();
    // zeta = alpha with 1 in J1 and zeta not in J2 is undefined.
    CHECK_THROWS_AS(ternary_intervals({alpha, TorusPoint{alpha}, TorusPoint{QuadExt(0)}, true, false}),
                    std::invalid_argument);
    // zeta = 1 - alpha with 1 not in J1 and zeta in J2 is undefined.
    CHECK_THROWS_AS(
        ternary_intervals({alpha, TorusPoint{QuadExt(1) - alpha}, TorusPoint{QuadExt(0)}, false, true}),
        std::invalid_argument);
    // zeta outside [alpha, 1-alpha] is rejected.
    CHECK_THROWS_AS(
        ternary_intervals({alpha, TorusPoint{QuadExt(Rational(1, 5))}, TorusPoint{QuadExt(0)}, false, false}),
        std::invalid_argument);
    // alpha >= 1/2 is rejected.
    CHECK_THROWS_AS(ternary_intervals({QuadExt(Rational(3, 5)), TorusPoint{QuadExt(Rational(1, 2))},
                                       TorusPoint{QuadExt(0)}, false, false}),
                    std::invalid_argument);
}

TEST_CASE("ternary coding partitions the circle") {
    QuadExt alpha = sqrt2_slope();
    for (bool j1 : {false, true}) {
        for (bool j2 : {false, true}) {
            TernaryRotationSpec spec{alpha, TorusPoint{QuadExt(Rational(9, 20))},
                                     TorusPoint{QuadExt(Rational(1, 7))}, j1, j2};
            auto iv = ternary_intervals(spec);
            TorusPoint p = spec.rho;
            for (int i = 0; i < 400; ++i) {
                CHECK(!(iv.j1.contains(p) && iv.j2.contains(p)));
                p = p.rotated(alpha);
            }
        }
    }
}

TEST_CASE("interleaving") {
    InterleaveSpec spec{fibonacci_word(), periodic_word("0102"), periodic_word("ab")};
    auto u = interleave(spec);
    CHECK(u.prefix(20) == "0a10b2a01b02a0b10a2b");

    auto simple = interleave({periodic_word("01"), periodic_word("a"), periodic_word("b")});
    CHECK(simple.prefix(8) == "abababab");

    CHECK_THROWS_AS(interleave({periodic_word("012"), periodic_word("a"), periodic_word("b")}),
                    std::invalid_argument);

    // Erasing the z1 letters from the interleaving recovers a prefix of z0.
    Word w = u.prefix(500), kept;
    for (char c : w)
        if (c == '0' || c == '1' || c == '2') kept += c;
    CHECK(periodic_word("0102").prefix(kept.size()) == kept);
}

TEST_CASE("constant gap recognition") {
    CHECK(is_constant_gap(periodic_word("abac"), 400));
    CHECK(!is_constant_gap(periodic_word("aab"), 400));
    CHECK(is_constant_gap(periodic_word("0102"), 400));
    CHECK(is_constant_gap(periodic_word("a"), 50));
}

TEST_CASE("palindromic closure") {
    CHECK(palindromic_closure("001") == "00100");
    CHECK(palindromic_closure("0") == "0");
    CHECK(palindromic_closure("01") == "010");
    CHECK(palindromic_closure("") == "");
    CHECK(palindromic_closure("0100") == "010010");
}

TEST_CASE("iterated palindromic closure builds Arnoux-Rauzy words") {
    // psi((01)^k...) is the characteristic Fibonacci word.
    auto ar_fib = arnoux_rauzy(periodic_word("01"));
    CHECK(ar_fib.prefix(500) == fibonacci_word().prefix(500));

    // psi((012)^k...) is the Tribonacci word.
    auto ar_trib = arnoux_rauzy(periodic_word("012"));
    CHECK(ar_trib.prefix(1000) == tribonacci_word().prefix(1000));

    // Every psi(pref_k) is a palindrome.
    Word d = periodic_word("012").prefix(9);
    for (std::size_t k = 1; k <= d.size(); ++k) {
        Word p = iterated_palindromic_closure(d.substr(0, k));
        CHECK(p == Word(p.rbegin(), p.rend()));
    }
}

TEST_CASE("degenerate directive errors") {
    struct Zeros : InfiniteWord::Producer {
        void extend(std::string& buf, std::size_t target) override {
            buf.append(target - buf.size(), '0');
        }
    };
    InfiniteWord zeros("zeros", Alphabet("01"), std::make_shared<Zeros>());
    auto ar = arnoux_rauzy(zeros);
    CHECK_THROWS_WITH_AS(ar.prefix(10), doctest::Contains("infinitely often"),
                         std::invalid_argument);
}

TEST_CASE("champernowne words") {
    CHECK(champernowne(2).prefix(13) == "0100011011000");
    CHECK(champernowne(3).prefix(9) == "012000102");
    CHECK_THROWS_AS(champernowne(1), std::invalid_argument);
    // Every short binary word occurs as a factor of a long enough prefix.
    Word big = champernowne(2).prefix(500);
    for (int bits = 0; bits < 32; ++bits) {
        Word w;
        for (int i = 4; i >= 0; --i) w += ((bits >> i) & 1) ? '1' : '0';
        CHECK(big.find(w) != Word::npos);
    }
}

TEST_CASE("reversal prefixes") {
    CHECK(reversal_prefix(periodic_word("012"), 6) == "210210");
    // Thue-Morse is closed under reversal: factor sets agree.
    Word rev = reversal_prefix(thue_morse(), 2000);
    for (std::size_t n = 1; n <= 12; ++n) CHECK(factor_set(rev, n) == factor_set(thue_morse(), n, 2000));
    // Fibonacci reversal factors are exactly the reversals of factors.
    Word frev = reversal_prefix(fibonacci_word(), 2000);
    for (std::size_t n = 1; n <= 20; ++n) {
        auto got = factor_set(frev, n);
        std::unordered_set<Word> want;
        for (const Word& f : factor_set(fibonacci_word(), n, 2000)) want.insert(Word(f.rbegin(), f.rend()));
        CHECK(got == want);
    }
}

TEST_CASE("the every-second-letter-two image has complexity n + 2") {
    auto u2 = substituted(fibonacci_word(), {{'0', "02"}, {'1', "12"}});
    CHECK(factor_complexity(u2, 5, 2000) == 7);
    auto profile = factor_complexity_profile(u2.prefix(4000), 30);
    for (std::size_t n = 1; n <= 30; ++n) CHECK(profile[n] == n + 2);
}

TEST_CASE("fm minimal-complexity words") {
    FmSpec two{{"2"}, {"0"}, {"1"}, fibonacci_word()};
    auto [b0, b1] = fm_blocks(two);
    CHECK(b0 == "20");
    CHECK(b1 == "21");
    auto w = fm_min_complexity_word(two);
    auto profile = factor_complexity_profile(w.prefix(5000), 40);
    for (std::size_t n = 8; n <= 40; ++n) CHECK(profile[n] == n + 2);

    FmSpec four{{"3"}, {"012"}, {}, fibonacci_word()};
    auto w4 = fm_min_complexity_word(four);
    auto profile4 = factor_complexity_profile(w4.prefix(5000), 40);
    for (std::size_t n = 8; n <= 40; ++n) CHECK(profile4[n] == n + 3);

    CHECK_THROWS_AS(fm_blocks(FmSpec{{""}, {"0"}, {"1"}, fibonacci_word()}), std::invalid_argument);
    CHECK_THROWS_AS(fm_blocks(FmSpec{{"2"}, {}, {}, fibonacci_word()}), std::invalid_argument);
    CHECK_THROWS_AS(fm_blocks(FmSpec{{"2"}, {"2"}, {}, fibonacci_word()}), std::invalid_argument);
}

TEST_CASE("prefix consistency across generator families") {
    QuadExt alpha = sqrt2_slope();
    std::vector<InfiniteWord> words = {
        binary_rotation_word({alpha, TorusPoint{QuadExt(0)}, EndpointConvention::Bar}),
        ternary_rotation_word({alpha, TorusPoint{QuadExt(Rational(1, 2))}, TorusPoint{QuadExt(0)},
                               true, false}),
        interleave({fibonacci_word(), periodic_word("0102"), periodic_word("ab")}),
        arnoux_rauzy(periodic_word("012")),
        fm_min_complexity_word({{"23"}, {"0"}, {"1"}, fibonacci_word()}),
        prepend("20", tribonacci_word()),
        shifted(thue_morse(), 3),
    };
    for (const auto& w : words) {
        Word big = w.prefix(600);
        CHECK(w.prefix(17) == big.substr(0, 17));
        CHECK(w.prefix(600) == big);
    }
}
