#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "abelian/quadext.hpp"

using namespace abelian;

namespace {
QuadExt sqrt2_minus_1() { return QuadExt(Rational(-1), Rational(1), 2); }
}  // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-1/2") == Rational(-1, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-4, -8).to_string() == "1/2");
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK(Rational(-7, 2).floor() == -4);
}

TEST_CASE("exact comparison") {
    CHECK(QuadExt::compare(QuadExt(Rational(1, 2)), QuadExt(Rational(1, 2))) ==
          std::strong_ordering::equal);
    // sqrt(5) - 2 > 0
    CHECK(QuadExt(Rational(-2), Rational(1), 5).sign() == 1);
    // 2 - sqrt(2) < 3/5 since (7/5)^2 - 2 < 0
    QuadExt two_minus_sqrt2(Rational(2), Rational(-1), 2);
    CHECK(QuadExt::compare(two_minus_sqrt2, QuadExt(Rational(3, 5))) == std::strong_ordering::less);
    CHECK_THROWS_AS(QuadExt::compare(QuadExt(Rational(0), Rational(1), 2),
                                     QuadExt(Rational(0), Rational(1), 5)),
                    IncompatibleFieldError);
    // Rationals embed into any field.
    CHECK(QuadExt(Rational(0), Rational(1), 5) > QuadExt(Rational(2)));
}

TEST_CASE("square-free validation and folding") {
    CHECK_THROWS_AS(QuadExt(Rational(0), Rational(1), 8), std::invalid_argument);
    CHECK_THROWS_AS(QuadExt(Rational(0), Rational(1), -2), std::invalid_argument);
    CHECK(QuadExt(Rational(1), Rational(2), 1) == QuadExt(Rational(3)));  // sqrt(1) folds
    CHECK(QuadExt(Rational(1), Rational(0), 5).is_rational());
}

TEST_CASE("floor") {
    CHECK(QuadExt(Rational(7, 3)).floor() == 2);
    CHECK(QuadExt(Rational(-7, 3)).floor() == -3);
    // 1 - sqrt(2) is about -0.414
    QuadExt v(Rational(1), Rational(-1), 2);
    CHECK(v.floor() == -1);
    // sqrt(5) is about 2.236
    CHECK(QuadExt::square_root(5).floor() == 2);
    CHECK((QuadExt(Rational(1, 2)) * QuadExt::square_root(5)).floor() == 1);
}

TEST_CASE("reduce_mod1") {
    CHECK(reduce_mod1(QuadExt(Rational(7, 3))).value() == QuadExt(Rational(1, 3)));
    CHECK(reduce_mod1(QuadExt(0)).value() == QuadExt(0));
    // {-(sqrt(2)-1)} = {1 - sqrt(2)} = 2 - sqrt(2)
    TorusPoint p = reduce_mod1(-sqrt2_minus_1());
    CHECK(p.value() == QuadExt(Rational(2), Rational(-1), 2));
}

TEST_CASE("rotate") {
    TorusPoint zero{QuadExt(0)};
    CHECK(rotate(zero, QuadExt(0)) == zero);
    CHECK(rotate(TorusPoint{QuadExt(Rational(3, 4))}, QuadExt(Rational(1, 2))).value() ==
          QuadExt(Rational(1, 4)));
    QuadExt alpha = sqrt2_minus_1();
    TorusPoint p = rotate(rotate(zero, alpha), alpha);
    CHECK(p.value() == QuadExt(Rational(-2), Rational(2), 2));  // 2*sqrt(2) - 2
}

TEST_CASE("circle distance") {
    CHECK(circle_distance(TorusPoint{QuadExt(Rational(1, 4))}) == QuadExt(Rational(1, 4)));
    CHECK(circle_distance(TorusPoint{QuadExt(Rational(2, 3))}) == QuadExt(Rational(1, 3)));
    TorusPoint p{QuadExt(Rational(2), Rational(-1), 2)};  // 2 - sqrt(2) > 1/2
    CHECK(circle_distance(p) == sqrt2_minus_1());
    CHECK(circle_distance(TorusPoint{QuadExt(0)}) == QuadExt(0));
}

TEST_CASE("interval membership") {
    TorusPoint zero{QuadExt(0)}, half{QuadExt(Rational(1, 2))};
    auto i = CircleInterval::underline(zero, half);
    CHECK(interval_contains(i, zero));
    CHECK(!interval_contains(i, half));
    CHECK(interval_contains(i, TorusPoint{QuadExt(Rational(1, 4))}));

    auto wrap = CircleInterval::bar(TorusPoint{QuadExt(Rational(3, 4))},
                                    TorusPoint{QuadExt(Rational(1, 4))});
    CHECK(interval_contains(wrap, zero));
    CHECK(interval_contains(wrap, TorusPoint{QuadExt(Rational(1, 4))}));
    CHECK(!interval_contains(wrap, TorusPoint{QuadExt(Rational(3, 4))}));
    CHECK(!interval_contains(wrap, half));

    QuadExt alpha = sqrt2_minus_1();
    auto i1 = CircleInterval::underline(TorusPoint{QuadExt(1) - alpha}, zero);
    TorusPoint two_alpha = rotate(rotate(zero, alpha), alpha);
    CHECK(interval_contains(i1, two_alpha));
}

TEST_CASE("trichotomy and order laws on random samples") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 12);
    auto sample = [&] {
        return QuadExt(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), 5);
    };
    for (int k = 0; k < 300; ++k) {
        QuadExt a = sample(), b = sample(), c = sample();
        int states = 0;
        states += a < b;
        states += a == b;
        states += a > b;
        CHECK(states == 1);
        CHECK((a < b) == (b > a));
        if (a < b && b < c) CHECK(a < c);
        // Double-precision shadow agrees whenever it is far from ties.
        double fa = a.to_double(), fb = b.to_double();
        if (std::abs(fa - fb) > 1e-9) CHECK((fa < fb) == (a < b));
    }
}

TEST_CASE("rotation is invertible on sampled points") {
    QuadExt alpha = sqrt2_minus_1();
    QuadExt back = reduce_mod1(-alpha).value();
    TorusPoint p{QuadExt(Rational(1, 3))};
    for (int i = 0; i < 1000; ++i) {
        TorusPoint q = rotate(p, alpha);
        CHECK(rotate(q, back) == p);
        p = q;
    }
}

TEST_CASE("irrational orbit has no exact collision") {
    QuadExt alpha = sqrt2_minus_1();
    TorusPoint p{QuadExt(0)};
    std::set<std::string> seen;
    for (int i = 0; i <= 10000; ++i) {
        CHECK(seen.insert(p.value().to_string()).second);
        p = rotate(p, alpha);
    }
}

TEST_CASE("partition of the circle by complementary intervals") {
    TorusPoint zero{QuadExt(0)}, half{QuadExt(Rational(1, 2))};
    auto left = CircleInterval::underline(zero, half);
    auto right = CircleInterval::underline(half, zero);
    QuadExt alpha = sqrt2_minus_1();
    TorusPoint p{QuadExt(Rational(1, 7))};
    for (int i = 0; i < 500; ++i) {
        CHECK((left.contains(p) ^ right.contains(p)) == 1);
        p = rotate(p, alpha);
    }
}
