#pragma once

#include <complex>
#include <string>
#include <string_view>

#include "heun/params.hpp"

namespace heun {

/// Parses "a", "bi", "a+bi", "a-bi" with decimal or scientific parts.
std::complex<double> parse_complex(std::string_view text);

/// Fixed 17-significant-digit decimal; round-trips exactly through a double.
std::string format_double(double value);

/// "a" for real values, "a+bi" / "a-bi" otherwise.
std::string format_complex(const std::complex<double>& value);

// Parameter sets serialize to a JSON object with keys
//   {"k","alpha","beta","gamma","delta","w","w_convention"}.
// Exact mode writes the values as strings ("p/q") to preserve precision;
// float mode writes numbers, or {"re":..,"im":..} objects when complex.
std::string params_to_json(const ValentParams<Rational>& v);
std::string params_to_json(const ValentParams<std::complex<double>>& v);

ValentParams<Rational> exact_params_from_json(const std::string& text);
ValentParams<std::complex<double>> float_params_from_json(const std::string& text);

} // namespace heun
