#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "heun/errors.hpp"

namespace heun {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator. Zero is represented as 0/1.
///
/// Division by zero throws division_by_zero_error instead of aborting the
/// process the way raw GMP does.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT(google-explicit-constructor)
    Rational(int n) : v_(static_cast<long>(n)) {} // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    Rational(mpz_class num, mpz_class den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p/q", integer, or decimal literals ("-3", "1/2", "0.25",
    /// "2.5e-3"). Decimals are converted to the exact fraction they denote.
    static Rational from_string(std::string_view text);

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_nonpositive_integer() const { return is_integer() && sgn(v_) <= 0; }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    double to_double() const { return v_.get_d(); }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    const mpq_class& raw() const { return v_; }

    friend Rational abs(const Rational& r) { return Rational(mpq_class(::abs(r.v_))); }

private:
    mpq_class v_;
};

} // namespace heun
