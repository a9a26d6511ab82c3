#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

#include "abelian/rational.hpp"

namespace abelian {

/// Two values live in incompatible fields Q(sqrt(D)), Q(sqrt(D')).
struct IncompatibleFieldError : std::domain_error {
    IncompatibleFieldError() : std::domain_error("incompatible field") {}
};

/// Exact element of the quadratic extension Q(sqrt(D)): a + b*sqrt(d)
/// with a, b rational and d a square-free non-negative integer.
///
/// A value with b == 0 is an exact rational and is compatible with any
/// field; two genuinely irrational values must share the same d. All
/// comparisons are exact sign analyses; no floating point is involved
/// in any decision.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(Rational a) : a_(std::move(a)), b_(0), d_(0) {}  // NOLINT
    QuadExt(long n) : a_(n), b_(0), d_(0) {}                 // NOLINT
    QuadExt(Rational a, Rational b, long d);

    /// sqrt(d) itself.
    static QuadExt square_root(long d) { return QuadExt(Rational(0), Rational(1), d); }

    const Rational& rational_part() const { return a_; }
    const Rational& irrational_part() const { return b_; }
    long field() const { return d_; }
    bool is_rational() const { return b_.is_zero(); }

    /// -1, 0, +1 by exact sign analysis of a + b*sqrt(d).
    int sign() const;

    /// Exact floor; the only place the integer square root is needed.
    Int floor() const;

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
    friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return compare(x, y) == std::strong_ordering::equal;
    }
    friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
        return compare(x, y);
    }

    /// Exact order of the two real numbers; throws IncompatibleFieldError
    /// when both are irrational over different square roots.
    static std::strong_ordering compare(const QuadExt& x, const QuadExt& y);

    std::string to_string() const;
    double to_double() const;

private:
    static long common_field(const QuadExt& x, const QuadExt& y);

    Rational a_, b_;
    long d_;  // invariant: square-free, >= 0; d_ == 0 iff b_ == 0
};

/// Point of the torus T = [0,1); construction reduces mod 1 exactly.
class TorusPoint {
public:
    TorusPoint() : v_(0) {}
    explicit TorusPoint(const QuadExt& x) : v_(reduce(x)) {}

    const QuadExt& value() const { return v_; }

    /// {p + alpha}, the rotation by alpha.
    TorusPoint rotated(const QuadExt& alpha) const { return TorusPoint(v_ + alpha); }

    /// ||x|| = min{x, 1-x}, the circle distance to 0.
    QuadExt distance_to_zero() const;

    friend bool operator==(const TorusPoint& x, const TorusPoint& y) { return x.v_ == y.v_; }
    friend std::strong_ordering operator<=>(const TorusPoint& x, const TorusPoint& y) {
        return QuadExt::compare(x.v_, y.v_);
    }

    std::string to_string() const { return v_.to_string(); }

private:
    static QuadExt reduce(const QuadExt& x);
    QuadExt v_;  // invariant: 0 <= v_ < 1
};

inline TorusPoint reduce_mod1(const QuadExt& x) { return TorusPoint(x); }
inline TorusPoint rotate(const TorusPoint& p, const QuadExt& alpha) { return p.rotated(alpha); }
inline QuadExt circle_distance(const TorusPoint& p) { return p.distance_to_zero(); }

/// Counter-clockwise arc of the circle from `start` to `end`, with explicit
/// endpoint-inclusion flags. Wrap-around (start > end, passing through 0)
/// is legal. An arc with start == end denotes the empty set, or the
/// singleton {start} when an inclusion flag is set.
struct CircleInterval {
    TorusPoint start, end;
    bool include_start = true;
    bool include_end = false;

    /// Half-open arc containing its start point.
    static CircleInterval underline(TorusPoint s, TorusPoint e) {
        return CircleInterval{std::move(s), std::move(e), true, false};
    }
    /// Half-open arc containing its end point.
    static CircleInterval bar(TorusPoint s, TorusPoint e) {
        return CircleInterval{std::move(s), std::move(e), false, true};
    }

    bool contains(const TorusPoint& p) const;
};

inline bool interval_contains(const CircleInterval& i, const TorusPoint& p) {
    return i.contains(p);
}

}  // namespace abelian
