#include "heun/coefficients.hpp"

namespace heun {

const char* method_name(Method m) {
    switch (m) {
        case Method::recurrence: return "recurrence";
        case Method::closed_form: return "closed-form";
        case Method::closed_form_delta0: return "closed-form-delta0";
        case Method::closed_form_beta_plus_one: return "closed-form-beta-plus-one";
        case Method::green_path: return "green-path";
    }
    return "unknown";
}

std::optional<Method> method_from_name(std::string_view name) {
    if (name == "recurrence") return Method::recurrence;
    if (name == "closed-form" || name == "closed_form") return Method::closed_form;
    if (name == "closed-form-delta0" || name == "closed_form_delta0")
        return Method::closed_form_delta0;
    if (name == "closed-form-beta-plus-one" || name == "closed_form_beta_plus_one")
        return Method::closed_form_beta_plus_one;
    if (name == "green-path" || name == "green_path") return Method::green_path;
    return std::nullopt;
}

} // namespace heun
