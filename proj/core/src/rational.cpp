#include "heun/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace heun {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

[[noreturn]] void parse_failure(std::string_view text) {
    throw invalid_parameter_error("cannot parse rational literal '" + std::string(text) + "'");
}

// Integer literal with optional sign.
mpz_class parse_integer(std::string_view s, std::string_view full) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) parse_failure(full);
    mpz_class v(std::string(s), 10);
    return negative ? mpz_class(-v) : v;
}

// Decimal literal: [sign] digits [. digits] [ (e|E) [sign] digits ].
Rational parse_decimal(std::string_view s, std::string_view full) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_part = s.substr(e + 1);
        bool exp_neg = false;
        if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
            exp_neg = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        if (!all_digits(exp_part) || exp_part.size() > 6) parse_failure(full);
        exponent = std::strtol(std::string(exp_part).c_str(), nullptr, 10);
        if (exp_neg) exponent = -exponent;
        s = s.substr(0, e);
    }

    std::string digits;
    long frac_len = 0;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac_part = s.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) parse_failure(full);
        if (!int_part.empty() && !all_digits(int_part)) parse_failure(full);
        if (!frac_part.empty() && !all_digits(frac_part)) parse_failure(full);
        digits = std::string(int_part) + std::string(frac_part);
        frac_len = static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(s)) parse_failure(full);
        digits = std::string(s);
    }
    if (digits.empty()) parse_failure(full);

    mpz_class num(digits, 10);
    mpz_class den(1);
    long den_pow = frac_len - exponent;
    mpz_class ten(10);
    if (den_pow > 0) {
        mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(den_pow));
    } else if (den_pow < 0) {
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-den_pow));
        num *= scale;
    }
    if (negative) num = -num;
    return Rational(num, den);
}

} // namespace

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(mpz_class num, mpz_class den) {
    if (sgn(den) == 0)
        throw division_by_zero_error("rational constructed with zero denominator");
    v_ = mpq_class(std::move(num), std::move(den));
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw division_by_zero_error("division by exact zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::from_string(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) parse_failure(text);

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(s.substr(0, slash), text);
        mpz_class den = parse_integer(s.substr(slash + 1), text);
        if (sgn(den) == 0)
            throw division_by_zero_error("rational literal with zero denominator: '" +
                                          std::string(text) + "'");
        return Rational(std::move(num), std::move(den));
    }
    if (s.find('.') != std::string_view::npos || s.find_first_of("eE") != std::string_view::npos)
        return parse_decimal(s, text);
    return Rational(parse_integer(s, text), mpz_class(1));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

} // namespace heun
