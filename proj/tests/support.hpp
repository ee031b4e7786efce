#pragma once

// Shared helpers for the test and acceptance suites: deterministic parameter
// generators and comparison utilities. All randomness is seeded, so every run
// sees the same parameter sets.

#include <complex>
#include <random>
#include <vector>

#include "heun/coefficients.hpp"
#include "heun/params.hpp"

namespace heun_test {

class ParamGen {
public:
    explicit ParamGen(unsigned seed) : rng_(seed) {}

    /// Uniform small rational p/q with value in [lo, hi] (integer endpoints
    /// scaled by the denominator), denominators up to den_max.
    heun::Rational rational_in(long lo, long hi, long den_max = 6) {
        std::uniform_int_distribution<long> den_dist(1, den_max);
        const long q = den_dist(rng_);
        std::uniform_int_distribution<long> num_dist(lo * q, hi * q);
        return heun::Rational(num_dist(rng_), q);
    }

    /// Rational in (0, hi]: numerator at least 1.
    heun::Rational positive_rational(long hi, long den_max = 6) {
        std::uniform_int_distribution<long> den_dist(1, den_max);
        const long q = den_dist(rng_);
        std::uniform_int_distribution<long> num_dist(1, hi * q);
        return heun::Rational(num_dist(rng_), q);
    }

    heun::Rational unit_k() {
        static const heun::Rational choices[] = {
            heun::Rational(1, 4), heun::Rational(1, 3), heun::Rational(1, 2),
            heun::Rational(2, 3)};
        std::uniform_int_distribution<int> dist(0, 3);
        return choices[dist(rng_)];
    }

    double real_in(double lo, double hi) {
        std::uniform_real_distribution<double> dist(lo, hi);
        return dist(rng_);
    }

    /// k in {1/4,1/3,1/2,2/3}; alpha, beta, gamma in (0,5]; delta in [-2,2];
    /// w in [-3,3]; general w convention.
    heun::ValentParams<heun::Rational> general_set() {
        heun::ValentParams<heun::Rational> v;
        v.k = unit_k();
        v.alpha = positive_rational(5);
        v.beta = positive_rational(5);
        v.gamma = positive_rational(5);
        v.delta = rational_in(-2, 2);
        v.w = rational_in(-3, 3);
        v.w_convention = heun::WConvention::general;
        return v;
    }

    /// Same ranges with delta forced to 0.
    heun::ValentParams<heun::Rational> delta0_set() {
        auto v = general_set();
        v.delta = heun::Rational(0);
        return v;
    }

    /// delta = beta + 1 family.
    heun::ValentParams<heun::Rational> beta_plus_one_set() {
        heun::ValentParams<heun::Rational> v;
        v.k = unit_k();
        v.alpha = positive_rational(5);
        v.beta = positive_rational(5);
        v.gamma = positive_rational(5);
        v.delta = v.beta + heun::Rational(1);
        v.w = rational_in(-3, 3);
        v.w_convention = heun::WConvention::beta_plus_one;
        return v;
    }

    /// Positive real parameters for the Jacobi/Green path.
    heun::ValentParams<std::complex<double>> green_set(double delta_lo, double delta_hi) {
        heun::ValentParams<std::complex<double>> v;
        v.k = heun::scalar_traits<heun::Rational>::to_complex(unit_k());
        v.alpha = real_in(0.2, 4.0);
        v.beta = real_in(0.2, 4.0);
        v.gamma = real_in(0.2, 4.0);
        v.delta = real_in(delta_lo, delta_hi);
        v.w = real_in(-3.0, 3.0);
        v.w_convention = heun::WConvention::general;
        return v;
    }

    std::mt19937& rng() { return rng_; }

private:
    std::mt19937 rng_;
};

inline double rel_diff(const std::complex<double>& a, const std::complex<double>& b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return 0.0;
    return std::abs(a - b) / scale;
}

/// Largest relative entry difference between two coefficient tables.
inline double max_rel_diff(const std::vector<std::complex<double>>& a,
                           const std::vector<std::complex<double>>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        worst = std::max(worst, rel_diff(a[i], b[i]));
    return worst;
}

} // namespace heun_test
