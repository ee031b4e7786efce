#pragma once

#include <complex>
#include <vector>

#include "heun/coefficients.hpp"

namespace heun {

/// Ingredients of the explicit coefficient envelopes:
///   d = max{1, |alpha|, |beta|, |gamma|},  t = |w| + (1-k^2)|delta|.
struct BoundParams {
    double d = 1.0;
    double t = 0.0;
    double k = 0.5;
};

template <Scalar S>
BoundParams bound_params(const ValentParams<S>& v) {
    validate(v);
    BoundParams bp;
    bp.k = scalar_traits<S>::abs(v.k);
    bp.d = std::max({1.0, scalar_traits<S>::abs(v.alpha), scalar_traits<S>::abs(v.beta),
                     scalar_traits<S>::abs(v.gamma)});
    bp.t = scalar_traits<S>::abs(v.w) + (1.0 - bp.k * bp.k) * scalar_traits<S>::abs(v.delta);
    return bp;
}

/// Incremental evaluator of the envelopes. Every factor is accumulated as a
/// per-index ratio, so the value never overflows through intermediate
/// factorials; the sequence itself grows only polynomially in n.
class BoundSequence {
public:
    enum class Kind { general, beta_plus_one };

    /// abs_w is only used by the beta-plus-one prefactor.
    BoundSequence(const BoundParams& bp, std::complex<double> alpha,
                  std::complex<double> gamma, double abs_w, Kind kind);

    int index() const { return n_; }
    double value() const { return value_; }
    void advance();

private:
    Kind kind_;
    double d_;
    double tau_; // t / (1-k^2)
    std::complex<double> alpha_, gamma_;
    int n_ = 0;
    double value_ = 1.0;
};

/// |c_n| <= |(alpha)_n| (d)_n^2 / (n! |(gamma)_n|^2) * exp( t/(1-k^2) * H_n )
/// for the general-w coefficient family. Valid for complex alpha, beta,
/// gamma, delta, w.
template <Scalar S>
double bound_general(const ValentParams<S>& v, int n);

/// |c_n| <= exp( pi^2 |w| / (6 (1-k^2)) ) * (d)_n^2 / (n! |(gamma)_n|)
/// for the delta = beta + 1 family.
template <Scalar S>
double bound_beta_plus_one(const ValentParams<S>& v, int n);

/// Builds the envelope sequence matching the convention of the parameter set.
template <Scalar S>
BoundSequence bound_sequence(const ValentParams<S>& v);

/// Per-coefficient envelope check with an upward slack of 1e-12: the bounds
/// are envelopes, not identities, so they are evaluated in float mode.
struct EnvelopeReport {
    std::vector<double> abs_values;
    std::vector<double> bounds;
    std::vector<double> ratios;
    std::vector<bool> pass;
    double worst_ratio = 0.0;
    bool all_pass = true;
};

inline constexpr double envelope_slack = 1e-12;

template <Scalar S>
EnvelopeReport check_envelope(const CoefficientTable<S>& table);

// --- implementation ---

template <Scalar S>
BoundSequence bound_sequence(const ValentParams<S>& v) {
    const BoundParams bp = bound_params(v);
    const auto kind = v.w_convention == WConvention::general ? BoundSequence::Kind::general
                                                             : BoundSequence::Kind::beta_plus_one;
    return BoundSequence(bp, scalar_traits<S>::to_complex(v.alpha),
                         scalar_traits<S>::to_complex(v.gamma), scalar_traits<S>::abs(v.w), kind);
}

template <Scalar S>
double bound_general(const ValentParams<S>& v, int n) {
    if (n < 0) throw invalid_parameter_error("bound index must be non-negative");
    if (v.w_convention != WConvention::general)
        throw invalid_parameter_error("bound_general applies to the general w convention");
    BoundSequence seq = bound_sequence(v);
    for (int i = 0; i < n; ++i) seq.advance();
    return seq.value();
}

template <Scalar S>
double bound_beta_plus_one(const ValentParams<S>& v, int n) {
    if (n < 0) throw invalid_parameter_error("bound index must be non-negative");
    if (v.w_convention != WConvention::beta_plus_one)
        throw invalid_parameter_error(
            "bound_beta_plus_one applies to the beta-plus-one w convention");
    BoundSequence seq = bound_sequence(v);
    for (int i = 0; i < n; ++i) seq.advance();
    return seq.value();
}

template <Scalar S>
EnvelopeReport check_envelope(const CoefficientTable<S>& table) {
    const ValentParams<S> v = std::holds_alternative<ValentParams<S>>(table.params)
        ? std::get<ValentParams<S>>(table.params)
        : from_canonical(std::get<CanonicalParams<S>>(table.params), WConvention::general);
    BoundSequence seq = bound_sequence(v);
    EnvelopeReport report;
    for (int n = 0; n <= table.order; ++n) {
        const double value = scalar_traits<S>::abs(table.values[static_cast<std::size_t>(n)]);
        const double bound = seq.value();
        const double ratio = value / bound;
        report.abs_values.push_back(value);
        report.bounds.push_back(bound);
        report.ratios.push_back(ratio);
        const bool ok = value <= bound * (1.0 + envelope_slack);
        report.pass.push_back(ok);
        report.all_pass = report.all_pass && ok;
        report.worst_ratio = std::max(report.worst_ratio, ratio);
        seq.advance();
    }
    return report;
}

} // namespace heun
