#include "heun/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace heun {

namespace {

constexpr int small_term_run = 8;

// sum_{n > from} bound(n) |z|^n, accumulated until the terms drop below
// tol/100. Returns infinity when the envelope overflows or fails to decay
// within the term budget, in which case it is treated as unavailable.
double analytic_tail(const ValentParams<std::complex<double>>& v, int from, double r,
                     double tol) {
    BoundSequence seq = bound_sequence(v);
    for (int i = 0; i < from + 1; ++i) seq.advance();
    double rp = std::pow(r, from + 1);
    double tail = 0.0;
    const double cutoff = tol / 100.0;
    for (int steps = 0; steps < 200000; ++steps) {
        const double term = seq.value() * rp;
        if (!std::isfinite(term)) return std::numeric_limits<double>::infinity();
        tail += term;
        if (term < cutoff) return tail;
        seq.advance();
        rp *= r;
    }
    return std::numeric_limits<double>::infinity();
}

} // namespace

EvalResult evaluate(const ValentParams<std::complex<double>>& v, std::complex<double> z,
                    const EvalOptions& options) {
    validate(v);
    if (options.tol <= 0.0) throw invalid_parameter_error("tolerance must be positive");
    const double r = std::abs(z);
    if (r >= 1.0) throw domain_error("series evaluation requires |z| < 1");

    EvalResult result;
    result.method = options.method;
    if (r == 0.0) {
        result.value = {1.0, 0.0};
        result.terms_used = 1;
        result.tail_estimate = 0.0;
        return result;
    }

    int order = std::min(64, options.term_cap);
    CoefficientTable<std::complex<double>> table = coefficients(v, order, options.method);

    std::complex<double> sum{0.0, 0.0};
    std::complex<double> zp{1.0, 0.0};
    int run = 0;
    double last_term = 0.0;
    for (int n = 0; n <= options.term_cap; ++n) {
        if (n > table.order) {
            order = std::min(options.term_cap, 2 * table.order);
            table = coefficients(v, order, options.method);
        }
        const std::complex<double> term = table.values[static_cast<std::size_t>(n)] * zp;
        sum += term;
        zp *= z;
        last_term = std::abs(term);
        const double target = options.tol * std::max(1.0, std::abs(sum));
        run = last_term < target ? run + 1 : 0;
        if (run >= small_term_run) {
            const double tail = analytic_tail(v, n, r, options.tol);
            if (std::isfinite(tail)) {
                if (tail <= 10.0 * target) {
                    result.value = sum;
                    result.terms_used = n + 1;
                    result.tail_estimate = tail;
                    return result;
                }
                run = 0; // envelope still large: demand another run of small terms
            } else {
                result.value = sum;
                result.terms_used = n + 1;
                result.tail_estimate = last_term * r / (1.0 - r);
                return result;
            }
        }
    }
    throw non_convergence_error("series did not converge within the term cap of " +
                                std::to_string(options.term_cap));
}

} // namespace heun
