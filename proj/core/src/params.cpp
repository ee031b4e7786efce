#include "heun/params.hpp"

namespace heun {

const char* wconvention_name(WConvention c) {
    return c == WConvention::general ? "general" : "beta-plus-one";
}

std::optional<WConvention> wconvention_from_name(std::string_view name) {
    if (name == "general") return WConvention::general;
    if (name == "beta-plus-one" || name == "beta_plus_one") return WConvention::beta_plus_one;
    return std::nullopt;
}

namespace detail {

std::optional<Rational> rational_sqrt(const Rational& value) {
    if (value.sign() < 0) return std::nullopt;
    mpz_class num = value.numerator();
    mpz_class den = value.denominator();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class num_root, den_root;
    mpz_sqrt(num_root.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), den.get_mpz_t());
    return Rational(std::move(num_root), std::move(den_root));
}

} // namespace detail

} // namespace heun
