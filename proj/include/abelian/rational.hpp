#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace abelian {

using Int = mpz_class;

/// Arbitrary-precision rational, always canonical (reduced, positive
/// denominator, zero stored as 0/1). Thin wrapper over GMP's mpq_class
/// that guarantees canonical form on every construction path.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design
    Rational(const Int& n) : q_(n) {}
    Rational(const Int& num, const Int& den) : q_(num, den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    /// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
    static Rational parse(std::string_view text);

    const Int& num() const { return q_.get_num(); }
    const Int& den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return den() == 1; }

    /// Exact floor as an integer.
    Int floor() const {
        Int r;
        mpz_fdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
        return r;
    }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "p/q", or just "p" for integers.
    std::string to_string() const;

    double to_double() const { return q_.get_d(); }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;  // invariant: canonical
};

}  // namespace abelian
