#include "heun/io.hpp"

#include <cstdio>
#include <cstdlib>

#include <json.hpp>

namespace heun {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void complex_failure(std::string_view text) {
    throw invalid_parameter_error("cannot parse complex literal '" + std::string(text) + "'");
}

double parse_real_part(std::string_view s, std::string_view full, bool allow_bare_sign) {
    if (allow_bare_sign) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
    }
    if (s.empty()) complex_failure(full);
    char* end = nullptr;
    const std::string buf(s);
    const double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size()) complex_failure(full);
    return v;
}

} // namespace

std::complex<double> parse_complex(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.empty()) complex_failure(text);

    // "p/q" literals are accepted in float mode too.
    if (s.find('/') != std::string_view::npos) {
        if (s.back() == 'i' || s.back() == 'I') complex_failure(text);
        return {Rational::from_string(s).to_double(), 0.0};
    }

    if (s.back() != 'i' && s.back() != 'I')
        return {parse_real_part(s, text, /*allow_bare_sign=*/false), 0.0};

    s.remove_suffix(1);
    // Split at the last top-level +/-; signs directly after e/E belong to an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t p = s.size(); p-- > 1;) {
        if ((s[p] == '+' || s[p] == '-') && s[p - 1] != 'e' && s[p - 1] != 'E') {
            split = p;
            break;
        }
    }
    if (split == std::string_view::npos)
        return {0.0, parse_real_part(s, text, /*allow_bare_sign=*/true)};
    return {parse_real_part(s.substr(0, split), text, /*allow_bare_sign=*/false),
            parse_real_part(s.substr(split), text, /*allow_bare_sign=*/true)};
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string format_complex(const std::complex<double>& value) {
    if (value.imag() == 0.0) return format_double(value.real());
    std::string s = format_double(value.real());
    if (value.imag() >= 0.0) s += "+";
    s += format_double(value.imag());
    s += "i";
    return s;
}

namespace {

ordered_json complex_to_json(const std::complex<double>& v) {
    if (v.imag() == 0.0) return ordered_json(v.real());
    return ordered_json{{"re", v.real()}, {"im", v.imag()}};
}

std::complex<double> complex_from_json(const ordered_json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_string()) return parse_complex(j.get<std::string>());
    if (j.is_object() && j.contains("re"))
        return {j["re"].get<double>(), j.value("im", 0.0)};
    throw invalid_parameter_error("cannot read complex value from JSON: " + j.dump());
}

Rational rational_from_json(const ordered_json& j) {
    if (j.is_string()) return Rational::from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number()) {
        // Accept the decimal text as an exact fraction.
        return Rational::from_string(j.dump());
    }
    throw invalid_parameter_error("cannot read rational value from JSON: " + j.dump());
}

WConvention convention_from_json(const ordered_json& j) {
    const auto name = j.get<std::string>();
    const auto c = wconvention_from_name(name);
    if (!c) throw invalid_parameter_error("unknown w_convention '" + name + "'");
    return *c;
}

} // namespace

std::string params_to_json(const ValentParams<Rational>& v) {
    ordered_json j{{"k", v.k.str()},       {"alpha", v.alpha.str()}, {"beta", v.beta.str()},
                   {"gamma", v.gamma.str()}, {"delta", v.delta.str()}, {"w", v.w.str()},
                   {"w_convention", wconvention_name(v.w_convention)}};
    return j.dump();
}

std::string params_to_json(const ValentParams<std::complex<double>>& v) {
    ordered_json j{{"k", complex_to_json(v.k)},         {"alpha", complex_to_json(v.alpha)},
                   {"beta", complex_to_json(v.beta)},   {"gamma", complex_to_json(v.gamma)},
                   {"delta", complex_to_json(v.delta)}, {"w", complex_to_json(v.w)},
                   {"w_convention", wconvention_name(v.w_convention)}};
    return j.dump();
}

ValentParams<Rational> exact_params_from_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    ValentParams<Rational> v;
    v.k = rational_from_json(j.at("k"));
    v.alpha = rational_from_json(j.at("alpha"));
    v.beta = rational_from_json(j.at("beta"));
    v.gamma = rational_from_json(j.at("gamma"));
    v.delta = rational_from_json(j.at("delta"));
    v.w = rational_from_json(j.at("w"));
    v.w_convention = convention_from_json(j.at("w_convention"));
    return v;
}

ValentParams<std::complex<double>> float_params_from_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    ValentParams<std::complex<double>> v;
    v.k = complex_from_json(j.at("k"));
    v.alpha = complex_from_json(j.at("alpha"));
    v.beta = complex_from_json(j.at("beta"));
    v.gamma = complex_from_json(j.at("gamma"));
    v.delta = complex_from_json(j.at("delta"));
    v.w = complex_from_json(j.at("w"));
    v.w_convention = convention_from_json(j.at("w_convention"));
    return v;
}

} // namespace heun
