#include "heun/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace heun {

namespace {

double real_or_throw(const std::complex<double>& value, const char* name) {
    if (value.imag() != 0.0)
        throw invalid_parameter_error(std::string(name) + " must be real for the Jacobi/Green path");
    return value.real();
}

// term <- -(G * rowscale(shift) * term); returns true while any entry is nonzero.
bool apply_neg_gd(const TriangularKernel& green, const std::vector<double>& shift,
                  std::vector<std::vector<double>>& term) {
    const int t = green.total();
    std::vector<std::vector<double>> next(static_cast<std::size_t>(t),
                                          std::vector<double>(static_cast<std::size_t>(t), 0.0));
    bool any = false;
    for (int i = 0; i < t; ++i) {
        for (int j = 0; j < t; ++j) {
            double acc = 0.0;
            for (int u = j; u < i; ++u)
                acc += green.at(i, u) * shift[static_cast<std::size_t>(u)] *
                       term[static_cast<std::size_t>(u)][static_cast<std::size_t>(j)];
            if (acc != 0.0) any = true;
            next[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -acc;
        }
    }
    term = std::move(next);
    return any;
}

} // namespace

BirthDeathRates rates_from_params(const ValentParams<std::complex<double>>& v) {
    validate(v);
    BirthDeathRates r;
    r.k = real_or_throw(v.k, "k");
    r.alpha = real_or_throw(v.alpha, "alpha");
    r.beta = real_or_throw(v.beta, "beta");
    r.gamma = real_or_throw(v.gamma, "gamma");
    r.delta = real_or_throw(v.delta, "delta");
    if (!(r.alpha > 0.0 && r.beta > 0.0 && r.gamma > 0.0))
        throw invalid_parameter_error("birth-death rates require alpha, beta, gamma > 0");
    return r;
}

double JacobiMatrix::max_abs_entry() const {
    double m = 0.0;
    for (double b : diag) m = std::max(m, std::fabs(b));
    for (double a : sub) m = std::max(m, std::fabs(a));
    return m;
}

JacobiMatrix jacobi_matrix(const BirthDeathRates& rates, int size) {
    if (size <= 0) throw invalid_parameter_error("Jacobi matrix size must be positive");
    JacobiMatrix j;
    j.diag.reserve(static_cast<std::size_t>(size));
    j.sub.reserve(static_cast<std::size_t>(size) - 1);
    for (int n = 0; n < size; ++n)
        j.diag.push_back(rates.lambda(n) + rates.mu(n) + rates.gamma_term(n));
    for (int n = 0; n + 1 < size; ++n)
        j.sub.push_back(std::sqrt(rates.lambda(n) * rates.mu(n + 1)));
    return j;
}

TriangularKernel::TriangularKernel(int order, int margin) : order_(order), margin_(margin) {
    if (order <= 0 || margin < 0)
        throw invalid_parameter_error("kernel needs a positive order and non-negative margin");
    e_.assign(static_cast<std::size_t>(total()) * static_cast<std::size_t>(total()), 0.0);
}

void TriangularKernel::set(int m, int n, double value) {
    if (m <= n) throw invalid_parameter_error("kernel entries exist only strictly below the diagonal");
    e_[static_cast<std::size_t>(m) * static_cast<std::size_t>(total()) +
       static_cast<std::size_t>(n)] = value;
}

double TriangularKernel::max_abs_entry() const {
    double m = 0.0;
    for (double x : e_) m = std::max(m, std::fabs(x));
    return m;
}

std::vector<double> kernel_vector_p0(const BirthDeathRates& rates, int count) {
    if (rates.gamma_term(1) != 0.0)
        throw invalid_parameter_error(
            "kernel vector formula requires gamma_n = 0, i.e. the delta = 0 rates");
    std::vector<double> p0;
    p0.reserve(static_cast<std::size_t>(count));
    p0.push_back(1.0);
    for (int n = 0; n + 1 < count; ++n)
        p0.push_back(-p0.back() * std::sqrt(rates.lambda(n) / rates.mu(n + 1)));
    return p0;
}

TriangularKernel green_function(const JacobiMatrix& jacobi, const std::vector<double>& p0,
                                int order, int margin) {
    TriangularKernel g(order, margin);
    const int t = g.total();
    if (jacobi.size() < t || static_cast<int>(p0.size()) < t)
        throw invalid_parameter_error("Jacobi matrix and kernel vector too short for the kernel");
    for (int j = 0; j < t; ++j) {
        if (p0[static_cast<std::size_t>(j)] == 0.0)
            throw invalid_parameter_error("P_" + std::to_string(j) +
                                          "(0) = 0; the kernel formula needs nonzero entries");
    }
    for (int m = 1; m < t; ++m) {
        for (int n = 0; n < m; ++n) {
            double s = 0.0;
            for (int j = n; j < m; ++j)
                s += 1.0 / (jacobi.sub[static_cast<std::size_t>(j)] *
                            p0[static_cast<std::size_t>(j)] * p0[static_cast<std::size_t>(j + 1)]);
            g.set(m, n, s * p0[static_cast<std::size_t>(m)] * p0[static_cast<std::size_t>(n)]);
        }
    }
    return g;
}

TriangularKernel green_direct_solve(const JacobiMatrix& jacobi, int order, int margin) {
    TriangularKernel g(order, margin);
    const int t = g.total();
    if (jacobi.size() < t)
        throw invalid_parameter_error("Jacobi matrix too short for the kernel");
    // Column by column: row i of J G = I reads
    //   a_{i-1} G_{i-1,j} + b_i G_{i,j} + a_i G_{i+1,j} = delta_{ij}.
    for (int j = 0; j < t - 1; ++j) {
        for (int i = j; i + 1 < t; ++i) {
            double rhs = (i == j) ? 1.0 : 0.0;
            if (i >= 1) rhs -= jacobi.sub[static_cast<std::size_t>(i - 1)] * g.at(i - 1, j);
            rhs -= jacobi.diag[static_cast<std::size_t>(i)] * g.at(i, j);
            g.set(i + 1, j, rhs / jacobi.sub[static_cast<std::size_t>(i)]);
        }
    }
    return g;
}

double green_delta0_closed_form(const ValentParams<std::complex<double>>& v, int m, int n) {
    BirthDeathRates r = rates_from_params(v);
    if (m <= n || n < 0) return 0.0;
    // Pochhammer tables for alpha, beta, gamma and factorials up to m.
    std::vector<double> fact{1.0}, pa{1.0}, pb{1.0}, pg{1.0};
    for (int i = 0; i < m; ++i) {
        fact.push_back(fact.back() * (i + 1));
        pa.push_back(pa.back() * (r.alpha + i));
        pb.push_back(pb.back() * (r.beta + i));
        pg.push_back(pg.back() * (r.gamma + i));
    }
    double sum = 0.0;
    for (int j = n; j < m; ++j)
        sum += std::pow(r.k, -2 * j) * fact[static_cast<std::size_t>(j)] *
               pg[static_cast<std::size_t>(j)] /
               (pa[static_cast<std::size_t>(j + 1)] * pb[static_cast<std::size_t>(j + 1)]);
    const double root = std::sqrt(pa[static_cast<std::size_t>(m)] * pa[static_cast<std::size_t>(n)] *
                                  pb[static_cast<std::size_t>(m)] * pb[static_cast<std::size_t>(n)] /
                                  (fact[static_cast<std::size_t>(m)] *
                                   fact[static_cast<std::size_t>(n)] *
                                   pg[static_cast<std::size_t>(m)] *
                                   pg[static_cast<std::size_t>(n)]));
    const double sign = ((m + n + 1) % 2 == 0) ? 1.0 : -1.0;
    return sign * std::pow(r.k, m + n - 2) * root * sum;
}

std::vector<double> diagonal_shift(const BirthDeathRates& rates, int count) {
    std::vector<double> d;
    d.reserve(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) d.push_back(rates.gamma_term(n));
    return d;
}

TriangularKernel perturbed_green(const TriangularKernel& green, const std::vector<double>& shift) {
    const int t = green.total();
    if (static_cast<int>(shift.size()) < t)
        throw invalid_parameter_error("diagonal shift too short for the kernel");
    std::vector<std::vector<double>> term(static_cast<std::size_t>(t),
                                          std::vector<double>(static_cast<std::size_t>(t), 0.0));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < i; ++j)
            term[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = green.at(i, j);
    TriangularKernel result(green.order(), green.margin());
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < i; ++j)
            result.set(i, j, term[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    // Geometric series; at most t terms by nilpotency.
    for (int step = 0; step < t; ++step) {
        if (!apply_neg_gd(green, shift, term)) break;
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < i; ++j)
                result.set(i, j, result.at(i, j) +
                                     term[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
    return result;
}

std::vector<double> perturbed_kernel(const TriangularKernel& green,
                                     const std::vector<double>& shift,
                                     const std::vector<double>& p0) {
    const int t = green.total();
    if (static_cast<int>(shift.size()) < t || static_cast<int>(p0.size()) < t)
        throw invalid_parameter_error("diagonal shift or kernel vector too short");
    std::vector<double> result(p0.begin(), p0.begin() + t);
    std::vector<double> term = result;
    for (int step = 0; step < t; ++step) {
        std::vector<double> next(static_cast<std::size_t>(t), 0.0);
        bool any = false;
        for (int i = 0; i < t; ++i) {
            double acc = 0.0;
            for (int u = 0; u < i; ++u)
                acc += green.at(i, u) * shift[static_cast<std::size_t>(u)] *
                       term[static_cast<std::size_t>(u)];
            if (acc != 0.0) any = true;
            next[static_cast<std::size_t>(i)] = -acc;
        }
        term = std::move(next);
        if (!any) break;
        for (int i = 0; i < t; ++i) result[static_cast<std::size_t>(i)] += term[static_cast<std::size_t>(i)];
    }
    return result;
}

std::vector<double> eval_polynomials(const TriangularKernel& green,
                                     const std::vector<double>& shift,
                                     const std::vector<double>& p0, double x) {
    const int t = green.total();
    if (static_cast<int>(shift.size()) < t || static_cast<int>(p0.size()) < t)
        throw invalid_parameter_error("diagonal shift or kernel vector too short");
    std::vector<double> result(p0.begin(), p0.begin() + t);
    std::vector<double> term = result;
    for (int step = 0; step < t; ++step) {
        std::vector<double> next(static_cast<std::size_t>(t), 0.0);
        bool any = false;
        for (int i = 0; i < t; ++i) {
            double acc = 0.0;
            for (int u = 0; u < i; ++u)
                acc += green.at(i, u) * (x - shift[static_cast<std::size_t>(u)]) *
                       term[static_cast<std::size_t>(u)];
            if (acc != 0.0) any = true;
            next[static_cast<std::size_t>(i)] = acc;
        }
        term = std::move(next);
        if (!any) break;
        for (int i = 0; i < t; ++i) result[static_cast<std::size_t>(i)] += term[static_cast<std::size_t>(i)];
    }
    return result;
}

CoefficientTable<std::complex<double>> heun_coefficients_via_green(
    const ValentParams<std::complex<double>>& v, int order, int margin) {
    if (order < 0) throw invalid_parameter_error("order must be non-negative");
    BirthDeathRates rates = rates_from_params(v);
    const double w = real_or_throw(v.w, "w");
    BirthDeathRates base = rates;
    base.delta = 0.0;

    const int t = order + 1 + margin;
    const JacobiMatrix jacobi = jacobi_matrix(base, t);
    const std::vector<double> p0 = kernel_vector_p0(base, t);
    const TriangularKernel green = green_function(jacobi, p0, order + 1, margin);
    const std::vector<double> shift = diagonal_shift(rates, t);
    const std::vector<double> poly = eval_polynomials(green, shift, p0, w);

    CoefficientTable<std::complex<double>> table;
    table.params = v;
    table.order = order;
    table.method = Method::green_path;
    table.values.reserve(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n)
        table.values.emplace_back(p0[static_cast<std::size_t>(n)] * poly[static_cast<std::size_t>(n)],
                                  0.0);
    return table;
}

std::vector<double> recurrence_polynomials(const JacobiMatrix& jacobi, double x, int count) {
    if (count <= 0) return {};
    if (jacobi.size() < count)
        throw invalid_parameter_error("Jacobi matrix too short for polynomial recurrence");
    std::vector<double> p;
    p.reserve(static_cast<std::size_t>(count));
    p.push_back(1.0);
    if (count >= 2)
        p.push_back((x - jacobi.diag[0]) / jacobi.sub[0]);
    for (int n = 1; n + 1 < count; ++n)
        p.push_back(((x - jacobi.diag[static_cast<std::size_t>(n)]) * p[static_cast<std::size_t>(n)] -
                     jacobi.sub[static_cast<std::size_t>(n - 1)] * p[static_cast<std::size_t>(n - 1)]) /
                    jacobi.sub[static_cast<std::size_t>(n)]);
    return p;
}

double right_inverse_residual(const JacobiMatrix& jacobi, const TriangularKernel& green,
                              int block) {
    const int t = green.total();
    if (block + 1 > t || jacobi.size() < block + 1)
        throw invalid_parameter_error("residual block exceeds the computed kernel");
    const double scale = 1.0 + jacobi.max_abs_entry() * green.max_abs_entry();
    double worst = 0.0;
    for (int i = 0; i < block; ++i) {
        for (int j = 0; j < block; ++j) {
            double value = jacobi.diag[static_cast<std::size_t>(i)] * green.at(i, j);
            if (i >= 1) value += jacobi.sub[static_cast<std::size_t>(i - 1)] * green.at(i - 1, j);
            value += jacobi.sub[static_cast<std::size_t>(i)] * green.at(i + 1, j);
            if (i == j) value -= 1.0;
            worst = std::max(worst, std::fabs(value));
        }
    }
    return worst / scale;
}

double kernel_residual(const JacobiMatrix& jacobi, const std::vector<double>& v, int block) {
    if (static_cast<int>(v.size()) < block + 1 || jacobi.size() < block + 1)
        throw invalid_parameter_error("residual block exceeds the computed vector");
    double worst = 0.0;
    for (int i = 0; i < block; ++i) {
        double value = jacobi.diag[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
        double scale = std::fabs(value);
        if (i >= 1) {
            const double lower = jacobi.sub[static_cast<std::size_t>(i - 1)] * v[static_cast<std::size_t>(i - 1)];
            value += lower;
            scale += std::fabs(lower);
        }
        const double upper = jacobi.sub[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i + 1)];
        value += upper;
        scale += std::fabs(upper);
        worst = std::max(worst, std::fabs(value) / std::max(1.0, scale));
    }
    return worst;
}

} // namespace heun
