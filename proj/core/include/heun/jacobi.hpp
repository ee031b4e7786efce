#pragma once

#include <vector>

#include "heun/coefficients.hpp"

namespace heun {

// Everything in this module runs in float mode: the Jacobi parameters involve
// square roots of the rates, which leave the rationals. Exact cross-validation
// of coefficients is the job of the closed-form/recurrence pair instead.

/// Birth-death-type rates generating the Jacobi matrix:
///   lambda_n = k^2 (n+alpha)(n+beta),  mu_n = n (n+gamma-1),
///   gamma_n  = (1-k^2) delta n.
/// Requires alpha, beta, gamma > 0 and 0 < k < 1 so that lambda_n > 0 and
/// mu_{n+1} > 0 (and mu_0 = 0).
struct BirthDeathRates {
    double k = 0.5;
    double alpha = 1.0, beta = 1.0, gamma = 1.0, delta = 0.0;

    double lambda(int n) const { return k * k * (n + alpha) * (n + beta); }
    double mu(int n) const { return n * (n + gamma - 1.0); }
    double gamma_term(int n) const { return (1.0 - k * k) * delta * n; }
};

/// Extracts rates from a float-mode parameter set. All parameters must be
/// real, with alpha, beta, gamma > 0.
BirthDeathRates rates_from_params(const ValentParams<std::complex<double>>& v);

/// Leading block of the semi-infinite symmetric tridiagonal matrix with
///   b_n = lambda_n + mu_n + gamma_n,  a_n = sqrt(lambda_n mu_{n+1}) > 0.
struct JacobiMatrix {
    std::vector<double> diag; // b_0 .. b_{size-1}
    std::vector<double> sub;  // a_0 .. a_{size-2}

    int size() const { return static_cast<int>(diag.size()); }
    double max_abs_entry() const;
};

JacobiMatrix jacobi_matrix(const BirthDeathRates& rates, int size);

/// Truncated strictly lower triangular kernel (a right inverse of the Jacobi
/// matrix, or its diagonal perturbation). `order` rows are reported; `margin`
/// extra rows are carried so that residual checks against the tridiagonal J
/// can be asserted on the leading order x order block without boundary-row
/// artifacts.
class TriangularKernel {
public:
    TriangularKernel(int order, int margin);

    int order() const { return order_; }
    int margin() const { return margin_; }
    int total() const { return order_ + margin_; }

    double at(int m, int n) const {
        if (m <= n) return 0.0;
        return e_[static_cast<std::size_t>(m) * static_cast<std::size_t>(total()) +
                  static_cast<std::size_t>(n)];
    }

    void set(int m, int n, double value);

    double max_abs_entry() const;

private:
    int order_;
    int margin_;
    std::vector<double> e_;
};

/// Kernel vector P_n(0) = (-1)^n sqrt(lambda_0...lambda_{n-1} / mu_1...mu_n)
/// for rates with gamma_n identically zero (delta = 0).
std::vector<double> kernel_vector_p0(const BirthDeathRates& rates, int count);

/// Green function from the kernel values:
///   G_{m,n} = ( sum_{j=n}^{m-1} 1 / (a_j P_j(0) P_{j+1}(0)) ) P_m(0) P_n(0)
/// for m > n, zero otherwise. All P_j(0) must be nonzero.
TriangularKernel green_function(const JacobiMatrix& jacobi, const std::vector<double>& p0,
                                int order, int margin = 2);

/// Independent construction of the same kernel: drop the first column of J,
/// which leaves a lower triangular matrix with positive diagonal, and solve
/// J G = I column by column by forward substitution.
TriangularKernel green_direct_solve(const JacobiMatrix& jacobi, int order, int margin = 2);

/// Closed-form entry of the delta = 0 Green function,
///   G_{m,n} = (-1)^{m+n+1} k^{m+n-2}
///             sqrt( (a)_m (a)_n (b)_m (b)_n / (m! n! (g)_m (g)_n) )
///             sum_{j=n}^{m-1} k^{-2j} j! (g)_j / ((a)_{j+1} (b)_{j+1})
/// for m > n and 0 for m <= n. Evaluates the delta = 0 kernel regardless of
/// the delta stored in the parameter set.
double green_delta0_closed_form(const ValentParams<std::complex<double>>& v, int m, int n);

/// Diagonal shift D_n = (1-k^2) delta n separating the general Jacobi matrix
/// from its delta = 0 part.
std::vector<double> diagonal_shift(const BirthDeathRates& rates, int count);

/// Green function of J + D from the Green function of J:
///   G' = (I + G D)^{-1} G = sum_{k>=0} (-G D)^k G.
/// The series is finite on any truncation: G D is strictly lower triangular,
/// hence nilpotent, and the loop exits as soon as a term vanishes.
TriangularKernel perturbed_green(const TriangularKernel& green, const std::vector<double>& shift);

/// Kernel vector of J + D: P'(0) = (I + G D)^{-1} P(0). First entry stays 1.
std::vector<double> perturbed_kernel(const TriangularKernel& green,
                                     const std::vector<double>& shift,
                                     const std::vector<double>& p0);

/// Orthonormal-polynomial values of J + D at x via the finite expansion
///   P'(x) = (I - G (xI - D))^{-1} P(0).
/// With an all-zero shift this is P(x) = (I - xG)^{-1} P(0).
std::vector<double> eval_polynomials(const TriangularKernel& green,
                                     const std::vector<double>& shift,
                                     const std::vector<double>& p0, double x);

/// The generating-function route to the series coefficients:
///   c_n = P_n^{delta=0}(0) * P'_n(w)
/// with P' the polynomial sequence of the shifted matrix. Matches the
/// recurrence within float tolerance.
CoefficientTable<std::complex<double>> heun_coefficients_via_green(
    const ValentParams<std::complex<double>>& v, int order, int margin = 2);

/// Oracle: polynomial values P_0(x)..P_{count-1}(x) straight from the
/// three-term recurrence a_{n-1} P_{n-1} + (b_n - x) P_n + a_n P_{n+1} = 0.
std::vector<double> recurrence_polynomials(const JacobiMatrix& jacobi, double x, int count);

/// max_{i,j < block} |(J G - I)_{i,j}| / (1 + max|J| max|G|). Requires
/// block < kernel total so that the row products are complete.
double right_inverse_residual(const JacobiMatrix& jacobi, const TriangularKernel& green,
                              int block);

/// Row-wise residual of J v = 0 on the leading block, each row normalized by
/// the magnitude of its three terms. Returns the maximum over rows.
double kernel_residual(const JacobiMatrix& jacobi, const std::vector<double>& v, int block);

} // namespace heun
