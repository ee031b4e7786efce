// Command-line interface: coefficient dumps, series evaluation, method
// comparison, Green-function inspection, and envelope checks, with
// machine-readable JSON/CSV output.
//
// Exit codes: 0 ok, 1 comparison/envelope failure, 2 parameter validation,
// 3 method not applicable, 4 numerical failure (cap exceeded).

#include <algorithm>
#include <complex>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heun/bounds.hpp"
#include "heun/io.hpp"
#include "heun/jacobi.hpp"
#include "heun/series.hpp"

using heun::Method;
using heun::Rational;
using heun::ValentParams;
using heun::WConvention;
using Complex = std::complex<double>;
using ordered_json = nlohmann::ordered_json;

namespace {

struct CommonOptions {
    std::string k = "1/2";
    std::string alpha = "1";
    std::string beta = "1";
    std::string gamma = "1";
    std::string delta; // empty: 0 under general, beta+1 under beta-plus-one
    std::string w = "0";
    std::string convention = "general";
    std::string mode = "exact";
    std::string method = "recurrence";
    std::vector<std::string> methods; // compare
    std::vector<std::string> zs;      // eval
    int order = 16;
    int margin = 2;
    int exact_order_cap = heun::default_exact_order_cap;
    double tol = 1e-10;
    double threshold = -1.0; // compare; negative = default for the mode
    std::string format = "json";
    std::string out;
    std::string params_file;
    bool perturbed = false;
    bool timestamp = false;
};

void add_parameter_options(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--k", o.k, "Modulus k in (0,1); \"p/q\" or decimal")->capture_default_str();
    cmd->add_option("--alpha", o.alpha, "Parameter alpha")->capture_default_str();
    cmd->add_option("--beta", o.beta, "Parameter beta")->capture_default_str();
    cmd->add_option("--gamma", o.gamma, "Parameter gamma (not a non-positive integer)")
        ->capture_default_str();
    cmd->add_option("--delta", o.delta,
                    "Parameter delta; defaults to 0 (general) or beta+1 (beta-plus-one)");
    cmd->add_option("--w", o.w, "Accessory parameter w")->capture_default_str();
    cmd->add_option("--w-convention,--delta-convention", o.convention,
                    "Meaning of w: general or beta-plus-one")
        ->check(CLI::IsMember({"general", "beta-plus-one"}))
        ->capture_default_str();
    cmd->add_option("--mode", o.mode, "Arithmetic mode; exact rejects complex inputs")
        ->check(CLI::IsMember({"exact", "float"}))
        ->capture_default_str();
    cmd->add_option("--params", o.params_file,
                    "Read the parameter set from a JSON file instead of flags");
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", o.out, "Write output to this path instead of stdout");
    cmd->add_flag("--timestamp", o.timestamp, "Add a timestamp to the metadata");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw heun::error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

template <heun::Scalar S>
S parse_scalar(const std::string& text);

template <>
Rational parse_scalar<Rational>(const std::string& text) {
    return Rational::from_string(text);
}

template <>
Complex parse_scalar<Complex>(const std::string& text) {
    return heun::parse_complex(text);
}

template <heun::Scalar S>
ValentParams<S> build_params(const CommonOptions& o) {
    if (!o.params_file.empty()) {
        const std::string text = read_file(o.params_file);
        if constexpr (heun::scalar_traits<S>::is_exact)
            return heun::exact_params_from_json(text);
        else
            return heun::float_params_from_json(text);
    }
    ValentParams<S> v;
    const auto convention = heun::wconvention_from_name(o.convention);
    v.w_convention = convention.value_or(WConvention::general);
    v.k = parse_scalar<S>(o.k);
    v.alpha = parse_scalar<S>(o.alpha);
    v.beta = parse_scalar<S>(o.beta);
    v.gamma = parse_scalar<S>(o.gamma);
    v.w = parse_scalar<S>(o.w);
    if (!o.delta.empty())
        v.delta = parse_scalar<S>(o.delta);
    else
        v.delta = v.w_convention == WConvention::beta_plus_one ? v.beta + S(1L) : S(0L);
    return v;
}

ordered_json scalar_json(const Complex& c) {
    if (c.imag() == 0.0) return ordered_json(c.real());
    return ordered_json{{"re", c.real()}, {"im", c.imag()}};
}

struct Output {
    ordered_json params;
    ordered_json method;
    ordered_json data = ordered_json::array();
    ordered_json meta = ordered_json::object();
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
};

void emit(const CommonOptions& o, Output&& output) {
    if (o.timestamp) {
        char buf[32];
        const std::time_t now = std::time(nullptr);
        std::tm tm_utc{};
        gmtime_r(&now, &tm_utc);
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
        output.meta["timestamp"] = buf;
    }
    std::string text;
    if (o.format == "json") {
        ordered_json doc{{"params", output.params},
                         {"method", output.method},
                         {"data", output.data},
                         {"meta", output.meta}};
        text = doc.dump(2);
        text += "\n";
    } else {
        std::ostringstream csv;
        for (std::size_t i = 0; i < output.csv_header.size(); ++i)
            csv << (i ? "," : "") << output.csv_header[i];
        csv << "\n";
        for (const auto& row : output.csv_rows) {
            for (std::size_t i = 0; i < row.size(); ++i) csv << (i ? "," : "") << row[i];
            csv << "\n";
        }
        text = csv.str();
    }
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(o.out);
        if (!file) throw heun::error("cannot write '" + o.out + "'");
        file << text;
    }
}

Method parse_method(const std::string& name) {
    const auto m = heun::method_from_name(name);
    if (!m) throw heun::invalid_parameter_error("unknown method '" + name + "'");
    return *m;
}

ordered_json params_json(const ValentParams<Rational>& v) {
    return ordered_json::parse(heun::params_to_json(v));
}
ordered_json params_json(const ValentParams<Complex>& v) {
    return ordered_json::parse(heun::params_to_json(v));
}

// --- coeffs ---

template <heun::Scalar S>
int run_coeffs(const CommonOptions& o) {
    const auto v = build_params<S>(o);
    const Method method = parse_method(o.method);
    const auto table = heun::coefficients(v, o.order, method, o.exact_order_cap);

    Output out;
    out.params = params_json(v);
    out.method = heun::method_name(table.method);
    out.meta["residuals"] = nullptr;
    out.meta["mode"] = heun::scalar_traits<S>::mode_name;
    if constexpr (heun::scalar_traits<S>::is_exact) {
        out.csv_header = {"n", "c"};
        for (int n = 0; n <= table.order; ++n) {
            const auto& c = table.values[static_cast<std::size_t>(n)];
            out.data.push_back(ordered_json{{"n", n}, {"c", c.str()}});
            out.csv_rows.push_back({std::to_string(n), c.str()});
        }
    } else {
        out.csv_header = {"n", "c_re", "c_im"};
        for (int n = 0; n <= table.order; ++n) {
            const auto& c = table.values[static_cast<std::size_t>(n)];
            out.data.push_back(ordered_json{{"n", n}, {"c", scalar_json(c)}});
            out.csv_rows.push_back({std::to_string(n), heun::format_double(c.real()),
                                    heun::format_double(c.imag())});
        }
    }
    emit(o, std::move(out));
    return 0;
}

// --- eval ---

int run_eval(const CommonOptions& o) {
    if (o.zs.empty())
        throw heun::invalid_parameter_error("eval requires at least one --z point");
    // Evaluation always sums in float arithmetic; exact mode only affects how
    // the parameters are parsed and validated.
    ValentParams<Complex> v;
    if (o.mode == "exact")
        v = heun::to_float(build_params<Rational>(o));
    else
        v = build_params<Complex>(o);
    const Method method = parse_method(o.method);

    Output out;
    out.params = params_json(v);
    out.method = heun::method_name(method);
    out.meta["residuals"] = nullptr;
    out.meta["mode"] = "float";
    out.meta["tol"] = o.tol;
    out.csv_header = {"z_re", "z_im", "value_re", "value_im", "terms_used", "tail_estimate"};
    for (const auto& ztext : o.zs) {
        const Complex z = heun::parse_complex(ztext);
        heun::EvalOptions opt;
        opt.tol = o.tol;
        opt.method = method;
        const auto r = heun::evaluate(v, z, opt);
        out.data.push_back(ordered_json{{"z", scalar_json(z)},
                                        {"value", scalar_json(r.value)},
                                        {"terms_used", r.terms_used},
                                        {"tail_estimate", r.tail_estimate}});
        out.csv_rows.push_back({heun::format_double(z.real()), heun::format_double(z.imag()),
                                heun::format_double(r.value.real()),
                                heun::format_double(r.value.imag()),
                                std::to_string(r.terms_used),
                                heun::format_double(r.tail_estimate)});
    }
    emit(o, std::move(out));
    return 0;
}

// --- compare ---

template <heun::Scalar S>
int run_compare(const CommonOptions& o) {
    const auto v = build_params<S>(o);

    std::vector<Method> requested;
    if (o.methods.empty()) {
        for (Method m : {Method::recurrence, Method::closed_form, Method::closed_form_delta0,
                         Method::closed_form_beta_plus_one, Method::green_path})
            if (heun::method_applicable(m, v)) requested.push_back(m);
    } else {
        for (const auto& name : o.methods) {
            const Method m = parse_method(name);
            if (std::find(requested.begin(), requested.end(), m) == requested.end() &&
                heun::method_applicable(m, v))
                requested.push_back(m);
        }
    }
    if (requested.size() < 2)
        throw heun::method_not_applicable_error(
            "compare needs at least two distinct applicable methods");

    std::vector<heun::CoefficientTable<S>> tables;
    tables.reserve(requested.size());
    for (Method m : requested)
        tables.push_back(heun::coefficients(v, o.order, m, o.exact_order_cap));

    const double threshold = o.threshold >= 0.0
        ? o.threshold
        : (heun::scalar_traits<S>::is_exact ? 0.0 : 1e-8);

    Output out;
    out.params = params_json(v);
    ordered_json names = ordered_json::array();
    for (Method m : requested) names.push_back(heun::method_name(m));
    out.method = names;

    out.csv_header = {"n"};
    for (Method m : requested) {
        if constexpr (heun::scalar_traits<S>::is_exact) {
            out.csv_header.push_back(heun::method_name(m));
        } else {
            out.csv_header.push_back(std::string(heun::method_name(m)) + "_re");
            out.csv_header.push_back(std::string(heun::method_name(m)) + "_im");
        }
    }
    out.csv_header.push_back("abs_discrepancy");
    out.csv_header.push_back("rel_discrepancy");

    double max_abs = 0.0, max_rel = 0.0;
    bool exact_zero = true;
    for (int n = 0; n <= o.order; ++n) {
        ordered_json row{{"n", n}};
        std::vector<std::string> csv_row{std::to_string(n)};
        double abs_d = 0.0, rel_d = 0.0;
        if constexpr (heun::scalar_traits<S>::is_exact) {
            Rational largest(0), spread(0);
            for (std::size_t i = 0; i < tables.size(); ++i) {
                const auto& value = tables[i].values[static_cast<std::size_t>(n)];
                row[heun::method_name(requested[i])] = value.str();
                csv_row.push_back(value.str());
                largest = std::max(largest, abs(value));
                for (std::size_t j = 0; j < i; ++j)
                    spread = std::max(
                        spread, abs(value - tables[j].values[static_cast<std::size_t>(n)]));
            }
            if (!spread.is_zero()) exact_zero = false;
            abs_d = spread.to_double();
            rel_d = spread.is_zero() ? 0.0 : (spread / largest).to_double();
        } else {
            double largest = 0.0, spread = 0.0;
            for (std::size_t i = 0; i < tables.size(); ++i) {
                const auto& value = tables[i].values[static_cast<std::size_t>(n)];
                row[heun::method_name(requested[i])] = scalar_json(value);
                csv_row.push_back(heun::format_double(value.real()));
                csv_row.push_back(heun::format_double(value.imag()));
                largest = std::max(largest, std::abs(value));
                for (std::size_t j = 0; j < i; ++j)
                    spread = std::max(
                        spread, std::abs(value - tables[j].values[static_cast<std::size_t>(n)]));
            }
            abs_d = spread;
            rel_d = largest > 0.0 ? spread / largest : 0.0;
        }
        max_abs = std::max(max_abs, abs_d);
        max_rel = std::max(max_rel, rel_d);
        row["abs_discrepancy"] = abs_d;
        row["rel_discrepancy"] = rel_d;
        csv_row.push_back(heun::format_double(abs_d));
        csv_row.push_back(heun::format_double(rel_d));
        out.data.push_back(std::move(row));
        out.csv_rows.push_back(std::move(csv_row));
    }

    bool pass;
    if constexpr (heun::scalar_traits<S>::is_exact)
        pass = threshold == 0.0 ? exact_zero : max_abs <= threshold;
    else
        pass = max_rel <= threshold;

    out.meta["residuals"] =
        ordered_json{{"max_abs_discrepancy", max_abs}, {"max_rel_discrepancy", max_rel}};
    out.meta["mode"] = heun::scalar_traits<S>::mode_name;
    out.meta["threshold"] = threshold;
    out.meta["pass"] = pass;
    emit(o, std::move(out));
    return pass ? 0 : 1;
}

// --- bound ---

template <heun::Scalar S>
int run_bound(const CommonOptions& o) {
    const auto v = build_params<S>(o);
    const auto table = heun::coefficients(v, o.order, parse_method(o.method), o.exact_order_cap);
    const auto report = heun::check_envelope(table);

    Output out;
    out.params = params_json(v);
    out.method = heun::method_name(table.method);
    out.csv_header = {"n", "abs_c", "bound", "ratio"};
    for (int n = 0; n <= table.order; ++n) {
        const auto i = static_cast<std::size_t>(n);
        out.data.push_back(ordered_json{{"n", n},
                                        {"abs_c", report.abs_values[i]},
                                        {"bound", report.bounds[i]},
                                        {"ratio", report.ratios[i]},
                                        {"pass", static_cast<bool>(report.pass[i])}});
        out.csv_rows.push_back({std::to_string(n), heun::format_double(report.abs_values[i]),
                                heun::format_double(report.bounds[i]),
                                heun::format_double(report.ratios[i])});
    }
    out.meta["residuals"] = ordered_json{{"worst_ratio", report.worst_ratio}};
    out.meta["mode"] = heun::scalar_traits<S>::mode_name;
    out.meta["pass"] = report.all_pass;
    emit(o, std::move(out));
    return report.all_pass ? 0 : 1;
}

// --- green ---

int run_green(const CommonOptions& o) {
    ValentParams<Complex> v;
    if (o.mode == "exact")
        v = heun::to_float(build_params<Rational>(o));
    else
        v = build_params<Complex>(o);
    std::string reason;
    if (!heun::method_applicable(Method::green_path, v, &reason))
        throw heun::method_not_applicable_error(reason);
    if (o.margin < 1)
        throw heun::invalid_parameter_error("margin must be at least 1 for the residual check");

    const int order = o.order;
    const int total = order + o.margin;
    auto rates = heun::rates_from_params(v);
    auto base = rates;
    base.delta = 0.0;
    const auto jacobi0 = heun::jacobi_matrix(base, total);
    const auto p0 = heun::kernel_vector_p0(base, total);
    const auto green = heun::green_function(jacobi0, p0, order, o.margin);

    Output out;
    out.params = params_json(v);
    out.method = "green-path";
    out.csv_header = {"kernel", "m", "n", "value"};
    auto push_entries = [&](const char* kernel, const heun::TriangularKernel& g) {
        for (int m = 1; m < order; ++m) {
            for (int n = 0; n < m; ++n) {
                out.data.push_back(ordered_json{
                    {"kernel", kernel}, {"m", m}, {"n", n}, {"value", g.at(m, n)}});
                out.csv_rows.push_back({kernel, std::to_string(m), std::to_string(n),
                                        heun::format_double(g.at(m, n))});
            }
        }
    };
    push_entries("G", green);
    ordered_json residuals{
        {"right_inverse", heun::right_inverse_residual(jacobi0, green, order)}};

    if (o.perturbed) {
        const auto shift = heun::diagonal_shift(rates, total);
        const auto perturbed = heun::perturbed_green(green, shift);
        push_entries("G_perturbed", perturbed);
        const auto jacobi1 = heun::jacobi_matrix(rates, total);
        residuals["perturbed_right_inverse"] =
            heun::right_inverse_residual(jacobi1, perturbed, order);
    }
    out.meta["residuals"] = residuals;
    out.meta["mode"] = "float";
    out.meta["margin"] = o.margin;
    emit(o, std::move(out));
    return 0;
}

int dispatch(const CommonOptions& o, const std::string& subcommand) {
    const bool exact = o.mode == "exact";
    if (subcommand == "coeffs") return exact ? run_coeffs<Rational>(o) : run_coeffs<Complex>(o);
    if (subcommand == "eval") return run_eval(o);
    if (subcommand == "compare")
        return exact ? run_compare<Rational>(o) : run_compare<Complex>(o);
    if (subcommand == "bound") return exact ? run_bound<Rational>(o) : run_bound<Complex>(o);
    if (subcommand == "green") return run_green(o);
    throw heun::error("unknown subcommand");
}

int fail(const char* code, const std::exception& e) {
    std::cerr << "error: " << code << ": " << e.what() << "\n";
    return code == std::string("method-not-applicable") ? 3
         : code == std::string("non-convergence")       ? 4
                                                        : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local series solutions of the four-singularity second-order equation:\n"
                 "coefficients by three independent algorithms, exact cross-validation,\n"
                 "coefficient envelopes, and unit-disk evaluation."};
    app.require_subcommand(1);

    CommonOptions o;
    std::string active;

    auto* coeffs = app.add_subcommand("coeffs", "Series coefficients c_0..c_N");
    add_parameter_options(coeffs, o);
    coeffs->add_option("-N,--order", o.order, "Highest coefficient index")->capture_default_str();
    coeffs->add_option("--method", o.method,
                       "recurrence | closed-form | closed-form-delta0 | "
                       "closed-form-beta-plus-one | green-path")
        ->capture_default_str();
    coeffs->add_option("--exact-order-cap", o.exact_order_cap,
                      "Exact-mode order cap for the closed-form tables")
        ->capture_default_str();
    coeffs->callback([&] { active = "coeffs"; });

    auto* eval = app.add_subcommand("eval", "Evaluate F(z) on the open unit disk");
    add_parameter_options(eval, o);
    eval->add_option("--z", o.zs, "Evaluation point (repeatable), |z| < 1")->required(false);
    eval->add_option("--tol", o.tol, "Adaptive truncation tolerance")->capture_default_str();
    eval->add_option("--method", o.method, "Coefficient source")->capture_default_str();
    eval->callback([&] { active = "eval"; });

    auto* compare = app.add_subcommand("compare", "Cross-check coefficient methods");
    add_parameter_options(compare, o);
    compare->add_option("-N,--order", o.order, "Highest coefficient index")
        ->capture_default_str();
    compare->add_option("--method", o.methods,
                        "Method to include (repeatable); default: all applicable");
    compare->add_option("--threshold", o.threshold,
                        "Max allowed discrepancy (default 0 exact, 1e-8 float)");
    compare->add_option("--exact-order-cap", o.exact_order_cap,
                      "Exact-mode order cap for the closed-form tables")
        ->capture_default_str();
    compare->callback([&] { active = "compare"; });

    auto* bound = app.add_subcommand("bound", "Check coefficients against their envelope");
    add_parameter_options(bound, o);
    bound->add_option("-N,--order", o.order, "Highest coefficient index")->capture_default_str();
    bound->add_option("--method", o.method, "Coefficient source")->capture_default_str();
    bound->add_option("--exact-order-cap", o.exact_order_cap,
                      "Exact-mode order cap for the closed-form tables")
        ->capture_default_str();
    bound->callback([&] { active = "bound"; });

    auto* green = app.add_subcommand("green", "Inspect the triangular right-inverse kernel");
    add_parameter_options(green, o);
    green->add_option("-N,--order", o.order, "Reported block size")->capture_default_str();
    green->add_option("--margin", o.margin, "Extra rows beyond the reported block")
        ->capture_default_str();
    green->add_flag("--perturbed", o.perturbed, "Also emit the diagonally perturbed kernel");
    green->callback([&] { active = "green"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return dispatch(o, active);
    } catch (const heun::method_not_applicable_error& e) {
        return fail("method-not-applicable", e);
    } catch (const heun::non_convergence_error& e) {
        return fail("non-convergence", e);
    } catch (const heun::division_by_zero_error& e) {
        return fail("division-by-zero", e);
    } catch (const heun::domain_error& e) {
        return fail("domain", e);
    } catch (const heun::unsupported_parameter_error& e) {
        return fail("unsupported-parameter", e);
    } catch (const heun::invalid_parameter_error& e) {
        return fail("invalid-parameter", e);
    } catch (const heun::error& e) {
        return fail("io", e);
    } catch (const std::exception& e) {
        return fail("internal", e);
    }
}
