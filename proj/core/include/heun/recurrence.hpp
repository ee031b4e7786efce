#pragma once

#include <variant>

#include "heun/coefficients.hpp"

namespace heun {

/// The three-term recurrence
///
///     -q c_0 + a gamma c_1 = 0,
///     A_n c_{n-1} - (B_n + q) c_n + C_n c_{n+1} = 0   for n >= 1,
///
/// in both of its stated forms: the (a, q) form
///
///     A_n = (n-1+alpha)(n-1+beta)
///     B_n = n ((n-1+gamma)(1+a) + a delta + epsilon)
///     C_n = (n+1)(n+gamma) a
///
/// and the (k, w) form obtained by substituting a = 1/k^2,
///
///     B_n = n ((n-1+gamma)(1+1/k^2) + delta/k^2 + alpha+beta-gamma-delta+1)
///     C_n = (n+1)(n+gamma)/k^2,
///
/// with q = -w/k^2 + alpha beta (general w) or q = -(w - beta gamma)/k^2
/// (beta-plus-one w). Both code paths are kept and cross-checked against each
/// other: a transcription slip between the two forms is the most likely bug.
template <Scalar S>
class RecurrenceTerms {
public:
    static RecurrenceTerms canonical(const CanonicalParams<S>& c) {
        validate(c);
        return RecurrenceTerms(c);
    }

    static RecurrenceTerms valent(const ValentParams<S>& v) {
        validate(v);
        return RecurrenceTerms(v);
    }

    const S& q() const { return q_; }
    const S& a_times_gamma() const { return a_gamma_; }

    S A(int n) const {
        const S m(static_cast<long>(n - 1));
        return (m + alpha_) * (m + beta_);
    }

    S B(int n) const {
        const S nn(static_cast<long>(n));
        const S m(static_cast<long>(n - 1));
        if (form_ == Form::canonical)
            return nn * ((m + gamma_) * (S(1L) + a_) + a_ * delta_ + epsilon_);
        // (k, w) form: a = 1/k^2 and epsilon eliminated via the Fuchs condition.
        return nn * ((m + gamma_) * (S(1L) + a_) + delta_ * a_ +
                     alpha_ + beta_ - gamma_ - delta_ + S(1L));
    }

    S C(int n) const {
        const S np1(static_cast<long>(n + 1));
        const S ng = S(static_cast<long>(n)) + gamma_;
        return np1 * ng * a_;
    }

private:
    enum class Form { canonical, valent };

    explicit RecurrenceTerms(const CanonicalParams<S>& c)
        : form_(Form::canonical),
          alpha_(c.alpha), beta_(c.beta), gamma_(c.gamma), delta_(c.delta),
          epsilon_(c.epsilon), a_(c.a), q_(c.q), a_gamma_(c.a * c.gamma) {}

    explicit RecurrenceTerms(const ValentParams<S>& v)
        : form_(Form::valent),
          alpha_(v.alpha), beta_(v.beta), gamma_(v.gamma), delta_(v.delta),
          epsilon_(epsilon_of(v.alpha, v.beta, v.gamma, v.delta)),
          a_(checked_div(S(1L), v.k * v.k, "k^2")),
          q_(v.w_convention == WConvention::general
                 ? -checked_div(v.w, v.k * v.k, "k^2") + v.alpha * v.beta
                 : -checked_div(v.w - v.beta * v.gamma, v.k * v.k, "k^2")),
          a_gamma_(a_ * v.gamma) {}

    Form form_;
    S alpha_, beta_, gamma_, delta_, epsilon_;
    S a_; // singularity location; 1/k^2 in the (k, w) form
    S q_;
    S a_gamma_;
};

namespace detail {

template <Scalar S>
std::vector<S> run_recurrence(const RecurrenceTerms<S>& t, int order) {
    if (order < 0) throw invalid_parameter_error("order must be non-negative");
    std::vector<S> c;
    c.reserve(static_cast<std::size_t>(order) + 1);
    c.push_back(S(1L));
    if (order >= 1) c.push_back(checked_div(t.q(), t.a_times_gamma(), "a*gamma"));
    for (int n = 1; n < order; ++n) {
        const S next = checked_div((t.B(n) + t.q()) * c[n] - t.A(n) * c[n - 1], t.C(n), "C_n");
        c.push_back(next);
    }
    return c;
}

} // namespace detail

/// Coefficients from the (a, q)-form recurrence.
template <Scalar S>
CoefficientTable<S> recurrence_coefficients(const CanonicalParams<S>& c, int order) {
    CoefficientTable<S> table;
    table.params = c;
    table.order = order;
    table.values = detail::run_recurrence(RecurrenceTerms<S>::canonical(c), order);
    table.method = Method::recurrence;
    return table;
}

/// Coefficients from the (k, w)-form recurrence. Output is identical (exactly,
/// in exact mode) to recurrence_coefficients(to_canonical(v), order).
template <Scalar S>
CoefficientTable<S> recurrence_coefficients_valent(const ValentParams<S>& v, int order) {
    CoefficientTable<S> table;
    table.params = v;
    table.order = order;
    table.values = detail::run_recurrence(RecurrenceTerms<S>::valent(v), order);
    table.method = Method::recurrence;
    return table;
}

/// Residuals A_n c_{n-1} - (B_n + q) c_n + C_n c_{n+1} for 1 <= n <= N-1,
/// which vanish for a correct table. Uses the terms matching how the table's
/// parameters are stored.
template <Scalar S>
std::vector<S> recurrence_residuals(const CoefficientTable<S>& table) {
    const RecurrenceTerms<S> t = std::holds_alternative<ValentParams<S>>(table.params)
        ? RecurrenceTerms<S>::valent(std::get<ValentParams<S>>(table.params))
        : RecurrenceTerms<S>::canonical(std::get<CanonicalParams<S>>(table.params));
    std::vector<S> res;
    for (int n = 1; n + 1 <= table.order; ++n) {
        res.push_back(t.A(n) * table.values[n - 1] - (t.B(n) + t.q()) * table.values[n] +
                      t.C(n) * table.values[n + 1]);
    }
    return res;
}

} // namespace heun
