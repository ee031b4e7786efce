#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <string>

#include "heun/errors.hpp"
#include "heun/rational.hpp"

namespace heun {

// The library runs every computation in exactly one of two arithmetic modes:
// exact big rationals or machine-precision complex numbers. The mode is fixed
// by the scalar type; there is no cross-mode coercion.

template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;
    static constexpr const char* mode_name = "exact";
    static bool is_zero(const Rational& v) { return v.is_zero(); }
    static double abs(const Rational& v) { return std::fabs(v.to_double()); }
    static bool is_real(const Rational&) { return true; }
    static std::complex<double> to_complex(const Rational& v) { return {v.to_double(), 0.0}; }
    static std::string str(const Rational& v) { return v.str(); }
};

template <>
struct scalar_traits<std::complex<double>> {
    static constexpr bool is_exact = false;
    static constexpr const char* mode_name = "float";
    static bool is_zero(const std::complex<double>& v) { return v.real() == 0.0 && v.imag() == 0.0; }
    static double abs(const std::complex<double>& v) { return std::abs(v); }
    static bool is_real(const std::complex<double>& v) { return v.imag() == 0.0; }
    static std::complex<double> to_complex(const std::complex<double>& v) { return v; }
};

template <typename S>
concept Scalar = requires(const S& a, const S& b) {
    S(1L);
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
    { scalar_traits<S>::is_zero(a) } -> std::convertible_to<bool>;
    { scalar_traits<S>::abs(a) } -> std::convertible_to<double>;
};

/// Division that surfaces exact-zero denominators as errors in both modes.
/// Zero denominators in the coefficient formulas always mean a violated
/// precondition, never a value to be approximated.
template <Scalar S>
S checked_div(const S& num, const S& den, const char* what = "denominator") {
    if (scalar_traits<S>::is_zero(den))
        throw division_by_zero_error(std::string("division by exact zero: ") + what);
    return num / den;
}

/// Integer power, supporting negative exponents for nonzero bases.
template <Scalar S>
S ipow(const S& base, long exponent) {
    if (exponent < 0)
        return checked_div(S(1L), ipow(base, -exponent), "negative power of zero");
    S result(1L);
    S acc = base;
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if (e & 1UL) result = result * acc;
        e >>= 1UL;
        if (e != 0) acc = acc * acc;
    }
    return result;
}

/// Pochhammer symbol (x)_n = x (x+1) ... (x+n-1); 1 for n = 0.
/// Computed by a forward product, never via gamma-function quotients.
template <Scalar S>
S pochhammer(const S& x, int n) {
    S result(1L);
    S term = x;
    for (int i = 0; i < n; ++i) {
        result = result * term;
        term = term + S(1L);
    }
    return result;
}

/// n-th harmonic number 1 + 1/2 + ... + 1/n; 0 for n = 0.
template <Scalar S>
S harmonic(int n) {
    S sum(0L);
    for (int j = 1; j <= n; ++j) sum = sum + S(1L) / S(static_cast<long>(j));
    return sum;
}

template <Scalar S>
S factorial(int n) {
    S result(1L);
    for (int i = 2; i <= n; ++i) result = result * S(static_cast<long>(i));
    return result;
}

} // namespace heun
