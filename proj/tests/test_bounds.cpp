#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "heun/bounds.hpp"
#include "heun/recurrence.hpp"
#include "support.hpp"

using heun::Rational;
using heun::ValentParams;
using heun::WConvention;
using Complex = std::complex<double>;

namespace {

ValentParams<Rational> reference_params() {
    return {Rational(1, 2), Rational(1), Rational(2), Rational(3),
            Rational(0),    Rational(1), WConvention::general};
}

} // namespace

TEST_CASE("bound ingredients d and t") {
    const auto bp = heun::bound_params(reference_params());
    CHECK(bp.d == 3.0);
    CHECK(bp.t == 1.0);
    CHECK(bp.k == 0.5);
}

TEST_CASE("general envelope values") {
    const auto v = reference_params();
    CHECK(heun::bound_general(v, 0) == 1.0);
    // |(1)_2| (3)_2^2 / (2! |(3)_2|^2) * exp((4/3) H_2) = e^2.
    CHECK(heun::bound_general(v, 2) ==
          doctest::Approx(7.3890560989306504).epsilon(1e-13));
}

TEST_CASE("beta-plus-one envelope values") {
    ValentParams<Rational> v{Rational(1, 2), Rational(1), Rational(1, 2), Rational(1),
                             Rational(3, 2), Rational(0), WConvention::beta_plus_one};
    CHECK(heun::bound_beta_plus_one(v, 0) == 1.0);
    // With w = 0, alpha = gamma = 1, beta = 1/2: d = 1 and the bound is
    // identically 1, enclosing c_n = (1/2)_n / n! with ratio <= 1.
    const auto table = heun::recurrence_coefficients_valent(v, 20);
    const auto report = heun::check_envelope(table);
    CHECK(report.all_pass);
    CHECK(report.worst_ratio <= 1.0 + heun::envelope_slack);
    for (double b : report.bounds) CHECK(b == doctest::Approx(1.0).epsilon(1e-12));

    // Nonzero w switches on the exp(pi^2 |w| / (6 (1-k^2))) prefactor.
    v.w = Rational(1);
    CHECK(heun::bound_beta_plus_one(v, 0) ==
          doctest::Approx(8.9642587632704505).epsilon(1e-13));
}

TEST_CASE("convention mismatch is rejected") {
    CHECK_THROWS_AS(heun::bound_beta_plus_one(reference_params(), 3),
                    heun::invalid_parameter_error);
    heun_test::ParamGen gen(307);
    CHECK_THROWS_AS(heun::bound_general(gen.beta_plus_one_set(), 3),
                    heun::invalid_parameter_error);
}

TEST_CASE("envelopes hold along recurrence tables") {
    heun_test::ParamGen gen(311);
    for (int i = 0; i < 12; ++i) {
        const auto v = gen.general_set();
        const auto report = heun::check_envelope(heun::recurrence_coefficients_valent(v, 40));
        CHECK(report.all_pass);
    }
    for (int i = 0; i < 12; ++i) {
        const auto v = gen.beta_plus_one_set();
        const auto report = heun::check_envelope(heun::recurrence_coefficients_valent(v, 40));
        CHECK(report.all_pass);
    }
}

TEST_CASE("envelope holds for complex w and delta in float mode") {
    heun_test::ParamGen gen(313);
    for (int i = 0; i < 8; ++i) {
        auto v = heun::to_float(gen.general_set());
        v.w += Complex(0.0, gen.real_in(-2.0, 2.0));
        v.delta += Complex(0.0, gen.real_in(-1.0, 1.0));
        const auto report = heun::check_envelope(heun::recurrence_coefficients_valent(v, 40));
        CHECK(report.all_pass);
    }
}

TEST_CASE("per-step growth of the general envelope") {
    const auto v = reference_params();
    const auto bp = heun::bound_params(v);
    double previous = heun::bound_general(v, 0);
    for (int n = 0; n < 25; ++n) {
        const double next = heun::bound_general(v, n + 1);
        const double poch_ratio =
            std::abs(Complex(v.alpha.to_double()) + Complex(n)) * (bp.d + n) * (bp.d + n) /
            ((n + 1.0) * std::norm(Complex(v.gamma.to_double()) + Complex(n)));
        CHECK(next / previous >= poch_ratio * (1.0 - 1e-12));
        previous = next;
    }
}

TEST_CASE("the envelope grows at most polynomially") {
    const auto v = reference_params();
    const auto bp = heun::bound_params(v);
    // log(bound(n)) / log(n) approaches the power
    //   p = alpha + 2d - 2 gamma - 1 + t/(1-k^2)
    // read off the per-step ratio; it stays below that computable constant
    // plus a transient margin on the whole sampled range.
    const double p = v.alpha.to_double() + 2.0 * bp.d - 2.0 * v.gamma.to_double() - 1.0 +
                     bp.t / (1.0 - bp.k * bp.k);
    heun::BoundSequence seq = heun::bound_sequence(v);
    double cap = 0.0;
    for (int n = 0; n <= 10000; ++n) {
        if (n >= 100) {
            const double r = std::log(seq.value()) / std::log(static_cast<double>(n));
            if (n == 100) cap = std::max(r, p) + 0.05;
            CHECK(r <= cap);
        }
        seq.advance();
    }
}
