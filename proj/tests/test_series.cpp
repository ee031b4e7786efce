#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heun/series.hpp"
#include "support.hpp"

using heun::EvalOptions;
using heun::Method;
using heun::Rational;
using heun::ValentParams;
using heun::WConvention;
using Complex = std::complex<double>;

namespace {

ValentParams<Complex> reference_params() {
    ValentParams<Complex> v;
    v.k = Complex(0.5);
    v.alpha = Complex(1.0);
    v.beta = Complex(2.0);
    v.gamma = Complex(3.0);
    v.delta = Complex(0.0);
    v.w = Complex(1.0);
    return v;
}

} // namespace

TEST_CASE("F(0) = 1 exactly for every applicable method") {
    const auto v = reference_params();
    for (Method m : {Method::recurrence, Method::closed_form, Method::closed_form_delta0,
                     Method::green_path}) {
        EvalOptions opt;
        opt.method = m;
        const auto r = heun::evaluate(v, Complex(0.0), opt);
        CHECK(r.value == Complex(1.0));
        CHECK(r.terms_used == 1);
        CHECK(r.tail_estimate == 0.0);
    }
}

TEST_CASE("the w = 0, delta = beta + 1 series sums a simple binomial value") {
    // Coefficients are (beta)_n / n! with beta = 1, so F(1/2) = 2.
    ValentParams<Complex> v;
    v.k = Complex(0.5);
    v.alpha = Complex(1.0);
    v.beta = Complex(1.0);
    v.gamma = Complex(1.0);
    v.delta = Complex(2.0);
    v.w = Complex(0.0);
    v.w_convention = WConvention::beta_plus_one;
    const auto r = heun::evaluate(v, Complex(0.5));
    CHECK(std::abs(r.value - Complex(2.0)) <= 1e-10);
    CHECK(r.terms_used >= 1);
    CHECK(r.tail_estimate >= 0.0);
}

TEST_CASE("evaluation matches a long exact-rational partial sum") {
    ValentParams<Rational> exact{Rational(1, 2), Rational(1), Rational(2), Rational(3),
                                 Rational(0),    Rational(1), WConvention::general};
    const auto table = heun::recurrence_coefficients_valent(exact, 200);
    Rational sum(0);
    Rational zp(1);
    const Rational z(1, 4);
    for (int n = 0; n <= 200; ++n) {
        sum += table.values[static_cast<std::size_t>(n)] * zp;
        zp *= z;
    }
    EvalOptions opt;
    opt.tol = 1e-12;
    const auto r = heun::evaluate(reference_params(), Complex(0.25), opt);
    CHECK(std::abs(r.value - Complex(sum.to_double())) <= 1e-12 * std::abs(r.value));
}

TEST_CASE("doubling the truncation moves the value by less than 10 tol") {
    heun_test::ParamGen gen(401);
    for (int i = 0; i < 6; ++i) {
        const auto v = heun::to_float(gen.general_set());
        const Complex z(0.9 * std::cos(0.7 * i), 0.9 * std::sin(0.7 * i));
        EvalOptions opt;
        const auto r = heun::evaluate(v, z, opt);
        const int doubled = 2 * r.terms_used;
        const auto table = heun::coefficients(v, doubled, Method::recurrence);
        Complex sum{0.0, 0.0};
        Complex zp{1.0, 0.0};
        for (int n = 0; n <= doubled; ++n) {
            sum += table.values[static_cast<std::size_t>(n)] * zp;
            zp *= z;
        }
        CHECK(std::abs(sum - r.value) < 10.0 * opt.tol);
    }
}

TEST_CASE("applicable methods agree at the evaluation level") {
    const auto v = reference_params();
    const Complex z(0.5, 0.2);
    EvalOptions opt;
    const auto base = heun::evaluate(v, z, opt);
    for (Method m : {Method::closed_form, Method::closed_form_delta0, Method::green_path}) {
        EvalOptions o;
        o.method = m;
        const auto r = heun::evaluate(v, z, o);
        CHECK(std::abs(r.value - base.value) <= 100.0 * opt.tol);
    }
}

TEST_CASE("domain and option validation") {
    const auto v = reference_params();
    CHECK_THROWS_AS(heun::evaluate(v, Complex(1.0)), heun::domain_error);
    CHECK_THROWS_AS(heun::evaluate(v, Complex(0.8, 0.8)), heun::domain_error);
    EvalOptions opt;
    opt.tol = 0.0;
    CHECK_THROWS_AS(heun::evaluate(v, Complex(0.5), opt), heun::invalid_parameter_error);
    opt.tol = 1e-10;
    opt.term_cap = 16;
    CHECK_THROWS_AS(heun::evaluate(v, Complex(0.99, 0.0), opt), heun::non_convergence_error);
}

TEST_CASE("the summed series satisfies the defining differential equation") {
    // Independent end-to-end check: every coefficient algorithm traces back to
    // the recurrence, but the equation residual does not. Sum F, F', F'' from
    // a long table and plug them into
    //   F'' + (gamma/z + delta/(z-1) + epsilon/(z-a)) F'
    //       + (alpha beta z - q) / (z (z-1)(z-a)) F = 0.
    auto check = [](const ValentParams<Complex>& v) {
        const auto c = heun::to_canonical(v);
        const int order = 400;
        const auto table = heun::recurrence_coefficients_valent(v, order);
        const Complex z(0.3, 0.1);
        Complex f{0.0, 0.0}, f1{0.0, 0.0}, f2{0.0, 0.0}, zp{1.0, 0.0};
        for (int n = 0; n <= order; ++n) {
            const Complex cn = table.values[static_cast<std::size_t>(n)];
            if (n >= 2) f2 += Complex(n) * Complex(n - 1) * cn * zp / (z * z);
            if (n >= 1) f1 += Complex(n) * cn * zp / z;
            f += cn * zp;
            zp *= z;
        }
        const Complex p = c.gamma / z + c.delta / (z - Complex(1.0)) + c.epsilon / (z - c.a);
        const Complex q = (c.alpha * c.beta * z - c.q) / (z * (z - Complex(1.0)) * (z - c.a));
        const Complex residual = f2 + p * f1 + q * f;
        const double scale = std::abs(f2) + std::abs(p * f1) + std::abs(q * f);
        CHECK(std::abs(residual) <= 1e-13 * scale);
    };

    check(reference_params());

    ValentParams<Complex> general;
    general.k = Complex(0.25);
    general.alpha = Complex(0.7);
    general.beta = Complex(1.9);
    general.gamma = Complex(2.2);
    general.delta = Complex(1.5);
    general.w = Complex(-2.0);
    check(general);

    ValentParams<Complex> family;
    family.k = Complex(2.0 / 3.0);
    family.alpha = Complex(1.1);
    family.beta = Complex(0.8);
    family.gamma = Complex(1.7);
    family.delta = Complex(1.8);
    family.w = Complex(3.0);
    family.w_convention = WConvention::beta_plus_one;
    check(family);
}

TEST_CASE("method dispatcher honors applicability") {
    const auto v = reference_params();
    const auto direct = heun::recurrence_coefficients_valent(v, 8);
    const auto dispatched = heun::coefficients(v, 8, Method::recurrence);
    CHECK(direct.values == dispatched.values);

    // On delta = 0, the general and specialized closed forms agree.
    const auto general = heun::coefficients(v, 8, Method::closed_form);
    const auto special = heun::coefficients(v, 8, Method::closed_form_delta0);
    CHECK(heun_test::max_rel_diff(general.values, special.values) <= 1e-14);

    auto shifted = v;
    shifted.delta = Complex(1.0);
    CHECK_THROWS_AS(heun::coefficients(shifted, 8, Method::closed_form_delta0),
                    heun::method_not_applicable_error);

    auto pole = v;
    pole.gamma = Complex(-1.0);
    CHECK_THROWS_AS(heun::coefficients(pole, 8, Method::green_path),
                    heun::method_not_applicable_error);

    ValentParams<Rational> exact{Rational(1, 2), Rational(1), Rational(2), Rational(3),
                                 Rational(0),    Rational(1), WConvention::general};
    CHECK_THROWS_AS(heun::coefficients(exact, 8, Method::green_path),
                    heun::method_not_applicable_error);

    std::string reason;
    CHECK(!heun::method_applicable(Method::closed_form_beta_plus_one, v, &reason));
    CHECK(!reason.empty());
}
