#pragma once

#include <string>

#include "heun/bounds.hpp"
#include "heun/closed_form.hpp"
#include "heun/jacobi.hpp"
#include "heun/recurrence.hpp"

namespace heun {

/// Result of summing F(z) = sum c_n z^n on the open unit disk.
struct EvalResult {
    std::complex<double> value{0.0, 0.0};
    int terms_used = 0;
    double tail_estimate = 0.0;
    Method method = Method::recurrence;
};

struct EvalOptions {
    double tol = 1e-10;
    int term_cap = 4096;
    Method method = Method::recurrence;
};

/// Whether `method` can run for this parameter set and arithmetic mode.
/// On failure, `reason` (if given) receives a one-line explanation.
template <Scalar S>
bool method_applicable(Method method, const ValentParams<S>& v, std::string* reason = nullptr) {
    auto fail = [&](const char* r) {
        if (reason) *reason = r;
        return false;
    };
    switch (method) {
        case Method::recurrence:
            return true;
        case Method::closed_form:
            if (v.w_convention != WConvention::general)
                return fail("closed-form requires the general w convention");
            return true;
        case Method::closed_form_delta0:
            if (v.w_convention != WConvention::general)
                return fail("delta0 closed form requires the general w convention");
            if (!scalar_traits<S>::is_zero(v.delta))
                return fail("delta0 closed form requires delta = 0");
            return true;
        case Method::closed_form_beta_plus_one:
            if (v.w_convention != WConvention::beta_plus_one)
                return fail("requires the beta-plus-one w convention (delta = beta + 1)");
            return true;
        case Method::green_path:
            if constexpr (scalar_traits<S>::is_exact) {
                return fail("green path runs in float mode only");
            } else {
                if (!scalar_traits<S>::is_real(v.alpha) || !scalar_traits<S>::is_real(v.beta) ||
                    !scalar_traits<S>::is_real(v.gamma) || !scalar_traits<S>::is_real(v.delta) ||
                    !scalar_traits<S>::is_real(v.w))
                    return fail("green path requires real parameters");
                if (!(v.alpha.real() > 0.0 && v.beta.real() > 0.0 && v.gamma.real() > 0.0))
                    return fail("green path requires alpha, beta, gamma > 0");
                if (!(v.k.imag() == 0.0 && v.k.real() > 0.0 && v.k.real() < 1.0))
                    return fail("green path requires real k in (0,1)");
                return true;
            }
    }
    return fail("unknown method");
}

/// Dispatcher over the coefficient algorithms. Throws
/// method_not_applicable_error with the reason when the method cannot run.
template <Scalar S>
CoefficientTable<S> coefficients(const ValentParams<S>& v, int order, Method method,
                                 int exact_order_cap = default_exact_order_cap) {
    std::string reason;
    if (!method_applicable(method, v, &reason)) throw method_not_applicable_error(reason);
    switch (method) {
        case Method::recurrence:
            return recurrence_coefficients_valent(v, order);
        case Method::closed_form:
            return closed_form_coefficients(v, order, exact_order_cap);
        case Method::closed_form_delta0:
            return delta0_coefficients(v, order, exact_order_cap);
        case Method::closed_form_beta_plus_one:
            return beta_plus_one_coefficients(v, order, exact_order_cap);
        case Method::green_path:
            if constexpr (!scalar_traits<S>::is_exact) {
                return heun_coefficients_via_green(v, order);
            }
            break;
    }
    throw method_not_applicable_error(reason.empty() ? "unknown method" : reason);
}

/// Adaptive partial sum of F(z) for |z| < 1. The stopping rule requires
/// |c_n z^n| < tol * max(1, |S_n|) for 8 consecutive terms and then
/// cross-checks the analytic tail sum_{n>N} bound(n) |z|^n; term smallness
/// alone can be fooled since the coefficients may grow polynomially.
EvalResult evaluate(const ValentParams<std::complex<double>>& v, std::complex<double> z,
                    const EvalOptions& options = {});

} // namespace heun
