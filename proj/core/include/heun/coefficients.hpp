#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "heun/params.hpp"

namespace heun {

/// Which algorithm produced a coefficient table.
enum class Method {
    recurrence,
    closed_form,
    closed_form_delta0,
    closed_form_beta_plus_one,
    green_path,
};

const char* method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

/// Power-series coefficients c_0..c_N of the solution normalized by c_0 = 1,
/// together with the parameters and the algorithm that produced them.
template <Scalar S>
struct CoefficientTable {
    std::variant<ValentParams<S>, CanonicalParams<S>> params;
    int order = 0;
    std::vector<S> values; // size order + 1, values[0] == 1
    Method method = Method::recurrence;
};

} // namespace heun
