#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "heun/scalar.hpp"

namespace heun {

/// The letter w names two different accessory-parameter shifts, depending on
/// which coefficient family is being computed. The convention is carried
/// explicitly to keep the two from being mixed up silently:
///   general:        q = -w/k^2 + alpha*beta
///   beta_plus_one:  q = -(w - beta*gamma)/k^2, valid only when delta = beta+1
enum class WConvention { general, beta_plus_one };

const char* wconvention_name(WConvention c);
std::optional<WConvention> wconvention_from_name(std::string_view name);

/// Canonical parameters (alpha, beta, gamma, delta, epsilon; a, q) of the
/// second-order equation with regular singular points {0, 1, a, infinity}.
/// Valid instances satisfy gamma + delta + epsilon = alpha + beta + 1,
/// gamma not in {0, -1, -2, ...}, and |a| > 1.
template <Scalar S>
struct CanonicalParams {
    S alpha{0L}, beta{0L}, gamma{1L}, delta{0L}, epsilon{0L};
    S a{4L};
    S q{0L};
};

/// The (k, w)-parametrization: a = 1/k^2 with 0 < k < 1, and the accessory
/// parameter replaced by w according to the stated convention.
template <Scalar S>
struct ValentParams {
    S k{1L};
    S alpha{0L}, beta{0L}, gamma{1L}, delta{0L};
    S w{0L};
    WConvention w_convention = WConvention::general;
};

/// epsilon forced by gamma + delta + epsilon = alpha + beta + 1.
template <Scalar S>
S epsilon_of(const S& alpha, const S& beta, const S& gamma, const S& delta) {
    return alpha + beta + S(1L) - gamma - delta;
}

namespace detail {

/// Distance from gamma to the nearest non-positive integer (float mode).
inline double nonpositive_integer_distance(std::complex<double> g) {
    double nearest = std::min(0.0, std::round(g.real()));
    return std::abs(g - std::complex<double>(nearest, 0.0));
}

template <Scalar S>
void check_gamma_regular(const S& gamma, double tau) {
    if constexpr (scalar_traits<S>::is_exact) {
        if (gamma.is_nonpositive_integer())
            throw invalid_parameter_error("gamma must avoid {0, -1, -2, ...}; got " + gamma.str());
    } else {
        if (nonpositive_integer_distance(gamma) <= tau)
            throw invalid_parameter_error(
                "gamma lies within the guard distance of a non-positive integer; "
                "(gamma)_n is unusable there");
    }
}

template <Scalar S>
bool is_real_in_open_unit_interval(const S& k) {
    if constexpr (scalar_traits<S>::is_exact) {
        return k > Rational(0L) && k < Rational(1L);
    } else {
        return k.imag() == 0.0 && k.real() > 0.0 && k.real() < 1.0;
    }
}

template <Scalar S>
bool nearly_equal(const S& x, const S& y) {
    if constexpr (scalar_traits<S>::is_exact) {
        return x == y;
    } else {
        return std::abs(x - y) <= 1e-12 * (1.0 + std::abs(y));
    }
}

// Exact square root of a rational that is a perfect square; nullopt otherwise.
std::optional<Rational> rational_sqrt(const Rational& value);

} // namespace detail

/// Float-mode guard distance: gamma closer than this to {0,-1,-2,...} is
/// rejected up front since (gamma)_n denominators degrade long before the
/// pole is hit exactly. Pass a different tau to validate() to tighten or
/// loosen the guard.
inline constexpr double gamma_pole_tolerance = 1e-9;

template <Scalar S>
void validate(const ValentParams<S>& v, double gamma_tau = gamma_pole_tolerance) {
    if (!detail::is_real_in_open_unit_interval(v.k))
        throw invalid_parameter_error("k must be real with 0 < k < 1");
    detail::check_gamma_regular(v.gamma, gamma_tau);
    if (v.w_convention == WConvention::beta_plus_one &&
        !detail::nearly_equal(v.delta, v.beta + S(1L)))
        throw invalid_parameter_error(
            "the beta-plus-one w convention requires delta = beta + 1");
}

inline bool abs_exceeds_one(const Rational& a) { return abs(a) > Rational(1L); }
inline bool abs_exceeds_one(const std::complex<double>& a) { return std::abs(a) > 1.0; }

template <Scalar S>
void validate(const CanonicalParams<S>& c, double gamma_tau = gamma_pole_tolerance) {
    detail::check_gamma_regular(c.gamma, gamma_tau);
    if (!abs_exceeds_one(c.a))
        throw invalid_parameter_error("the singularity location a must satisfy |a| > 1");
    const S lhs = c.gamma + c.delta + c.epsilon;
    const S rhs = c.alpha + c.beta + S(1L);
    if (!detail::nearly_equal(lhs, rhs))
        throw invalid_parameter_error(
            "Fuchs condition gamma + delta + epsilon = alpha + beta + 1 violated");
}

/// a = 1/k^2, q per the convention, epsilon from the Fuchs condition.
template <Scalar S>
CanonicalParams<S> to_canonical(const ValentParams<S>& v) {
    validate(v);
    CanonicalParams<S> c;
    c.alpha = v.alpha;
    c.beta = v.beta;
    c.gamma = v.gamma;
    c.delta = v.delta;
    c.epsilon = epsilon_of(v.alpha, v.beta, v.gamma, v.delta);
    const S k2 = v.k * v.k;
    c.a = checked_div(S(1L), k2, "k^2");
    if (v.w_convention == WConvention::general)
        c.q = -checked_div(v.w, k2, "k^2") + v.alpha * v.beta;
    else
        c.q = -checked_div(v.w - v.beta * v.gamma, k2, "k^2");
    validate(c);
    return c;
}

/// Inverts to_canonical. Requires a real with a > 1; in exact mode a must in
/// addition be the square of a rational so that k = 1/sqrt(a) stays rational.
template <Scalar S>
ValentParams<S> from_canonical(const CanonicalParams<S>& c, WConvention convention) {
    validate(c);
    ValentParams<S> v;
    v.alpha = c.alpha;
    v.beta = c.beta;
    v.gamma = c.gamma;
    v.delta = c.delta;
    v.w_convention = convention;
    if constexpr (scalar_traits<S>::is_exact) {
        if (!(c.a > Rational(1L)))
            throw unsupported_parameter_error("conversion requires a real with a > 1");
        auto root = detail::rational_sqrt(c.a);
        if (!root)
            throw unsupported_parameter_error(
                "exact mode requires a to be the square of a rational; got a = " + c.a.str());
        v.k = Rational(1L) / *root;
    } else {
        if (c.a.imag() != 0.0 || !(c.a.real() > 1.0))
            throw unsupported_parameter_error("conversion requires a real with a > 1");
        v.k = S(1.0 / std::sqrt(c.a.real()));
    }
    const S k2 = v.k * v.k;
    if (convention == WConvention::general)
        v.w = k2 * (c.alpha * c.beta - c.q);
    else
        v.w = c.beta * c.gamma - c.q * k2;
    validate(v);
    return v;
}

/// Rounds an exact parameter set to the float mode.
inline ValentParams<std::complex<double>> to_float(const ValentParams<Rational>& v) {
    ValentParams<std::complex<double>> f;
    f.k = scalar_traits<Rational>::to_complex(v.k);
    f.alpha = scalar_traits<Rational>::to_complex(v.alpha);
    f.beta = scalar_traits<Rational>::to_complex(v.beta);
    f.gamma = scalar_traits<Rational>::to_complex(v.gamma);
    f.delta = scalar_traits<Rational>::to_complex(v.delta);
    f.w = scalar_traits<Rational>::to_complex(v.w);
    f.w_convention = v.w_convention;
    return f;
}

} // namespace heun
