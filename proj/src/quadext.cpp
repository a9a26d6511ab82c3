#include "abelian/quadext.hpp"

#include <cmath>
#include <utility>

namespace abelian {

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) {
        if (!s.empty() && s[0] == '+') s.remove_prefix(1);
        if (s.empty()) bad();
        std::size_t i = s[0] == '-' ? 1 : 0;
        if (i == s.size()) bad();
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') bad();
        return Int(std::string(s), 10);
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) bad();
    return Rational(num, den);
}

std::string Rational::to_string() const {
    std::string s = num().get_str();
    if (!is_integer()) s += "/" + den().get_str();
    return s;
}

namespace {

bool is_square_free(long d) {
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

/// floor(b * sqrt(d)) for integer b, square-free d >= 2.
Int floor_sqrt_multiple(const Int& b, long d) {
    Int t = b * b * d;
    Int s;
    mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
    if (b >= 0) return s;
    // b*sqrt(d) = -sqrt(t); exact when s*s == t.
    if (s * s == t) return -s;
    return -s - 1;
}

}  // namespace

QuadExt::QuadExt(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ < 0) throw std::invalid_argument("negative radicand");
    if (d_ == 1) {  // sqrt(1) = 1 folds into the rational part
        a_ += b_;
        b_ = Rational(0);
        d_ = 0;
    }
    if (b_.is_zero()) {
        d_ = 0;
    } else if (d_ == 0) {
        b_ = Rational(0);
    } else if (!is_square_free(d_)) {
        throw std::invalid_argument("radicand must be square-free");
    }
}

long QuadExt::common_field(const QuadExt& x, const QuadExt& y) {
    if (x.d_ == y.d_) return x.d_;
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0) return x.d_;
    throw IncompatibleFieldError();
}

int QuadExt::sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with b^2*d; the larger magnitude wins.
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(d_);
    auto c = lhs <=> rhs;
    if (c == std::strong_ordering::equal) return 0;  // unreachable: sqrt(d) is irrational
    return c == std::strong_ordering::greater ? sa : sb;
}

std::strong_ordering QuadExt::compare(const QuadExt& x, const QuadExt& y) {
    int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    long d = QuadExt::common_field(x, y);
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    long d = QuadExt::common_field(x, y);
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d);
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    long d = QuadExt::common_field(x, y);
    Rational a = x.a_ * y.a_ + x.b_ * y.b_ * Rational(d);
    Rational b = x.a_ * y.b_ + x.b_ * y.a_;
    return QuadExt(a, b, d);
}

Int QuadExt::floor() const {
    if (is_rational()) return a_.floor();
    // Write the value as (p + q*sqrt(d)) / r with integers p, q and r > 0.
    Int r = a_.den() * b_.den() / gcd(a_.den(), b_.den());
    Int p = a_.num() * (r / a_.den());
    Int q = b_.num() * (r / b_.den());
    // p + q*sqrt(d) lies in [m, m+1) for m = p + floor(q*sqrt(d)), so the
    // floor of the quotient is floor(m / r).
    Int m = p + floor_sqrt_multiple(q, d_);
    Int result;
    mpz_fdiv_q(result.get_mpz_t(), m.get_mpz_t(), r.get_mpz_t());
    return result;
}

std::string QuadExt::to_string() const {
    if (is_rational()) return a_.to_string();
    std::string s;
    if (!a_.is_zero()) s = a_.to_string();
    if (b_.sign() > 0 && !s.empty()) s += "+";
    if (b_ == Rational(-1)) {
        s += "-";
    } else if (!(b_ == Rational(1))) {
        s += b_.to_string() + "*";
    }
    s += "sqrt(" + std::to_string(d_) + ")";
    return s;
}

double QuadExt::to_double() const {
    double root = d_ == 0 ? 0.0 : std::sqrt(static_cast<double>(d_));
    return a_.to_double() + b_.to_double() * root;
}

QuadExt TorusPoint::reduce(const QuadExt& x) {
    Int f = x.floor();
    return x - QuadExt(Rational(f));
}

QuadExt TorusPoint::distance_to_zero() const {
    QuadExt complement = QuadExt(1) - v_;
    return v_ <= complement ? v_ : complement;
}

bool CircleInterval::contains(const TorusPoint& p) const {
    if (start == end) return (p == start) && (include_start || include_end);
    if (p == start) return include_start;
    if (p == end) return include_end;
    auto c = start <=> end;
    if (c == std::strong_ordering::less) return start < p && p < end;
    // Wraps through 0.
    return p > start || p < end;
}

}  // namespace abelian
