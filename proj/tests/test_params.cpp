#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "heun/io.hpp"
#include "heun/params.hpp"
#include "support.hpp"

using heun::CanonicalParams;
using heun::Rational;
using heun::ValentParams;
using heun::WConvention;
using Complex = std::complex<double>;

TEST_CASE("epsilon forced by the Fuchs condition") {
    CHECK(heun::epsilon_of(Rational(1), Rational(2), Rational(3), Rational(0)) == Rational(1));
    const Rational alpha(5, 3), beta(-1, 2);
    CHECK(heun::epsilon_of(alpha, beta, alpha + beta + Rational(1), Rational(0)) == Rational(0));
    CHECK(heun::epsilon_of(Rational(1, 2), Rational(1, 2), Rational(1), Rational(1)) ==
          Rational(0));
}

TEST_CASE("to_canonical substitutes a = 1/k^2 and the convention's q") {
    ValentParams<Rational> v{Rational(1, 2), Rational(1), Rational(2), Rational(3),
                             Rational(0),    Rational(1), WConvention::general};
    const auto c = heun::to_canonical(v);
    CHECK(c.a == Rational(4));
    CHECK(c.q == Rational(-2));
    CHECK(c.epsilon == Rational(1));

    ValentParams<Rational> b{Rational(1, 2), Rational(1), Rational(2), Rational(3),
                             Rational(3),    Rational(0), WConvention::beta_plus_one};
    const auto cb = heun::to_canonical(b);
    CHECK(cb.a == Rational(4));
    CHECK(cb.q == Rational(24));
    CHECK(cb.epsilon == Rational(-2));

    // w = k^2 alpha beta makes the accessory parameter vanish.
    ValentParams<Rational> z = v;
    z.w = z.k * z.k * z.alpha * z.beta;
    CHECK(heun::to_canonical(z).q == Rational(0));
}

TEST_CASE("from_canonical inverts the substitutions") {
    CanonicalParams<Rational> c;
    c.alpha = Rational(1);
    c.beta = Rational(2);
    c.gamma = Rational(3);
    c.delta = Rational(0);
    c.epsilon = heun::epsilon_of(c.alpha, c.beta, c.gamma, c.delta);
    c.a = Rational(4);
    c.q = Rational(-2);
    const auto v = heun::from_canonical(c, WConvention::general);
    CHECK(v.k == Rational(1, 2));
    CHECK(v.w == Rational(1));

    CanonicalParams<Rational> c2 = c;
    c2.alpha = Rational(0);
    c2.q = Rational(0);
    c2.epsilon = heun::epsilon_of(c2.alpha, c2.beta, c2.gamma, c2.delta);
    CHECK(heun::from_canonical(c2, WConvention::general).w == Rational(0));

    CanonicalParams<Rational> c3;
    c3.alpha = Rational(1);
    c3.beta = Rational(1);
    c3.gamma = Rational(3, 2);
    c3.delta = Rational(1, 2);
    c3.epsilon = heun::epsilon_of(c3.alpha, c3.beta, c3.gamma, c3.delta);
    c3.a = Rational(9);
    c3.q = Rational(-8); // q = -w/k^2 + alpha beta with w = 1
    const auto v3 = heun::from_canonical(c3, WConvention::general);
    CHECK(v3.k == Rational(1, 3));
    CHECK(v3.w == Rational(1));
}

TEST_CASE("round trips are exact in both directions") {
    heun_test::ParamGen gen(17);
    for (int i = 0; i < 50; ++i) {
        const auto v = gen.general_set();
        const auto back = heun::from_canonical(heun::to_canonical(v), v.w_convention);
        CHECK(back.k == v.k);
        CHECK(back.w == v.w);
        CHECK(back.alpha == v.alpha);
        CHECK(back.delta == v.delta);
    }
    for (int i = 0; i < 50; ++i) {
        const auto v = gen.beta_plus_one_set();
        const auto back = heun::from_canonical(heun::to_canonical(v), v.w_convention);
        CHECK(back.k == v.k);
        CHECK(back.w == v.w);
    }
    // Starting from the canonical side: to_canonical(from_canonical(c)) = c.
    for (int i = 0; i < 50; ++i) {
        const auto c = heun::to_canonical(gen.general_set());
        const auto again = heun::to_canonical(heun::from_canonical(c, WConvention::general));
        CHECK(again.a == c.a);
        CHECK(again.q == c.q);
        CHECK(again.epsilon == c.epsilon);
    }
}

TEST_CASE("general-w identity q k^2 + w - k^2 alpha beta = 0") {
    heun_test::ParamGen gen(19);
    for (int i = 0; i < 50; ++i) {
        const auto v = gen.general_set();
        const auto c = heun::to_canonical(v);
        CHECK(c.q * v.k * v.k + v.w - v.k * v.k * v.alpha * v.beta == Rational(0));
    }
}

TEST_CASE("constructed canonical parameters always satisfy the Fuchs condition") {
    heun_test::ParamGen gen(23);
    for (int i = 0; i < 50; ++i) {
        const auto c = heun::to_canonical(gen.general_set());
        CHECK(c.gamma + c.delta + c.epsilon == c.alpha + c.beta + Rational(1));
    }
}

TEST_CASE("gamma at a non-positive integer is rejected") {
    ValentParams<Rational> v;
    v.k = Rational(1, 2);
    v.alpha = Rational(1);
    v.beta = Rational(1);
    v.gamma = Rational(-2);
    CHECK_THROWS_AS(heun::validate(v), heun::invalid_parameter_error);
    v.gamma = Rational(-7, 3); // non-integer is fine
    CHECK_NOTHROW(heun::validate(v));

    ValentParams<Complex> f;
    f.k = Complex(0.5);
    f.gamma = Complex(-3.0 + 2e-10);
    CHECK_THROWS_AS(heun::validate(f), heun::invalid_parameter_error);
    f.gamma = Complex(-3.0001);
    CHECK_NOTHROW(heun::validate(f));
    f.gamma = Complex(-3.0, 0.5); // off the real axis
    CHECK_NOTHROW(heun::validate(f));
}

TEST_CASE("k range and convention invariants") {
    ValentParams<Rational> v;
    v.k = Rational(3, 2);
    CHECK_THROWS_AS(heun::validate(v), heun::invalid_parameter_error);
    v.k = Rational(1, 2);
    v.w_convention = WConvention::beta_plus_one;
    v.beta = Rational(2);
    v.delta = Rational(5, 2); // should be beta + 1 = 3
    CHECK_THROWS_AS(heun::validate(v), heun::invalid_parameter_error);
    v.delta = Rational(3);
    CHECK_NOTHROW(heun::validate(v));
}

TEST_CASE("exact mode requires a to be a rational square") {
    CanonicalParams<Rational> c;
    c.alpha = Rational(1);
    c.beta = Rational(1);
    c.gamma = Rational(1);
    c.delta = Rational(1);
    c.epsilon = heun::epsilon_of(c.alpha, c.beta, c.gamma, c.delta);
    c.a = Rational(3);
    CHECK_THROWS_AS(heun::from_canonical(c, WConvention::general),
                    heun::unsupported_parameter_error);
    c.a = Rational(9, 4);
    CHECK(heun::from_canonical(c, WConvention::general).k == Rational(2, 3));
}

TEST_CASE("float mode from_canonical requires real a > 1") {
    CanonicalParams<Complex> c;
    c.alpha = Complex(1.0);
    c.beta = Complex(1.0);
    c.gamma = Complex(1.0);
    c.delta = Complex(1.0);
    c.epsilon = heun::epsilon_of(c.alpha, c.beta, c.gamma, c.delta);
    c.a = Complex(2.0, 1.0);
    CHECK_THROWS_AS(heun::from_canonical(c, WConvention::general),
                    heun::unsupported_parameter_error);
    c.a = Complex(3.0);
    const auto v = heun::from_canonical(c, WConvention::general);
    CHECK(v.k.real() == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
}

TEST_CASE("JSON round trip keeps exact values exact") {
    heun_test::ParamGen gen(29);
    const auto v = gen.general_set();
    const auto back = heun::exact_params_from_json(heun::params_to_json(v));
    CHECK(back.k == v.k);
    CHECK(back.alpha == v.alpha);
    CHECK(back.beta == v.beta);
    CHECK(back.gamma == v.gamma);
    CHECK(back.delta == v.delta);
    CHECK(back.w == v.w);
    CHECK(back.w_convention == v.w_convention);

    ValentParams<Complex> f;
    f.k = Complex(0.5);
    f.alpha = Complex(1.25, -0.5);
    f.beta = Complex(2.0);
    f.gamma = Complex(0.75);
    f.delta = Complex(0.0, 1.0);
    f.w = Complex(-3.0);
    const auto fb = heun::float_params_from_json(heun::params_to_json(f));
    CHECK(fb.alpha == f.alpha);
    CHECK(fb.delta == f.delta);
    CHECK(fb.w == f.w);
}

TEST_CASE("complex literal parsing") {
    CHECK(heun::parse_complex("1.5") == Complex(1.5));
    CHECK(heun::parse_complex("-2e-3") == Complex(-0.002));
    CHECK(heun::parse_complex("2i") == Complex(0.0, 2.0));
    CHECK(heun::parse_complex("1+2i") == Complex(1.0, 2.0));
    CHECK(heun::parse_complex("-1.5-0.5i") == Complex(-1.5, -0.5));
    CHECK(heun::parse_complex("1e-2+3.5i") == Complex(0.01, 3.5));
    CHECK(heun::parse_complex("i") == Complex(0.0, 1.0));
    CHECK(heun::parse_complex("-i") == Complex(0.0, -1.0));
    CHECK(heun::parse_complex("1/2") == Complex(0.5));
    CHECK_THROWS_AS(heun::parse_complex("garbage"), heun::invalid_parameter_error);
    CHECK_THROWS_AS(heun::parse_complex("+"), heun::invalid_parameter_error);
    CHECK_THROWS_AS(heun::parse_complex("1+"), heun::invalid_parameter_error);
}
