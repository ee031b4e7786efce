#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "heun/coefficients.hpp"

namespace heun {

/// The nested-sum coefficient families. Entries are indexed by (m, n) with
/// 0 <= m <= n; each f_{m,n} is a sum over index chains
///
///     0 <= l_1 <= j_1 < l_2 <= j_2 < ... < l_m <= j_m < n
///
/// of a per-variant product over the pairs (l_s, j_s).
enum class SumVariant {
    general_f,       // full family; chain weight carries (w - (1-k^2) delta l_s)
    delta0_g,        // delta = 0 specialization; chain weight is w-free
    beta_plus_one_f, // delta = beta + 1 family
};

enum class SumEvaluation { naive_enumeration, dynamic_program };

/// One term of the nested sum: m index pairs below the horizon n.
struct IndexChain {
    std::vector<std::pair<int, int>> pairs; // (l_s, j_s) in order s = 1..m
    int horizon = 0;

    bool valid() const {
        int prev_j = -1;
        for (auto [l, j] : pairs) {
            if (l <= prev_j || l > j || j >= horizon) return false;
            prev_j = j;
        }
        return true;
    }
};

/// Visits every valid chain for (m, n) exactly once, in lexicographic order
/// of the flattened tuple (l_1, j_1, ..., l_m, j_m). Iterative odometer, no
/// recursion. visit receives const std::vector<std::pair<int,int>>&.
template <typename Visitor>
void for_each_chain(int m, int n, Visitor&& visit) {
    if (m == 0) {
        static const std::vector<std::pair<int, int>> empty;
        visit(empty);
        return;
    }
    if (m > n) return;
    std::vector<std::pair<int, int>> p(static_cast<std::size_t>(m));
    for (int s = 0; s < m; ++s) p[s] = {s, s};
    for (;;) {
        visit(p);
        int pos = 2 * m - 1;
        for (; pos >= 0; --pos) {
            const int s = pos / 2;
            const bool is_l = (pos % 2) == 0;
            const int v = (is_l ? p[s].first : p[s].second) + 1;
            // Minimal completion of pairs s+1..m-1 puts j_{m-1} at v + (m-1-s).
            if (v > n - m + s) continue;
            if (is_l) p[s] = {v, v};
            else p[s].second = v;
            for (int t = s + 1; t < m; ++t) {
                p[t].first = p[t - 1].second + 1;
                p[t].second = p[t].first;
            }
            break;
        }
        if (pos < 0) return;
    }
}

std::int64_t count_chains(int m, int n);

/// The naive enumerator exists as an independent oracle; chain counts grow
/// combinatorially, so it refuses to run past this horizon unless the caller
/// raises the cap explicitly.
inline constexpr int default_enumeration_cap = 12;

/// Exact-mode tables are capped by default: big-rational bit growth along the
/// dynamic program is unbounded in the order. Callers can raise the cap.
inline constexpr int default_exact_order_cap = 64;

namespace detail {

template <Scalar S>
struct PochTables {
    std::vector<S> fact;  // t!
    std::vector<S> alpha; // (alpha)_t
    std::vector<S> beta;  // (beta)_t
    std::vector<S> gamma; // (gamma)_t
};

template <Scalar S>
PochTables<S> make_poch_tables(const ValentParams<S>& v, int size) {
    PochTables<S> t;
    t.fact.reserve(size + 1);
    t.alpha.reserve(size + 1);
    t.beta.reserve(size + 1);
    t.gamma.reserve(size + 1);
    t.fact.push_back(S(1L));
    t.alpha.push_back(S(1L));
    t.beta.push_back(S(1L));
    t.gamma.push_back(S(1L));
    for (int i = 0; i < size; ++i) {
        const S step(static_cast<long>(i));
        t.fact.push_back(t.fact.back() * S(static_cast<long>(i + 1)));
        t.alpha.push_back(t.alpha.back() * (v.alpha + step));
        t.beta.push_back(t.beta.back() * (v.beta + step));
        t.gamma.push_back(t.gamma.back() * (v.gamma + step));
    }
    return t;
}

template <Scalar S>
void require_nonzero(const std::vector<S>& poch, int last, const char* symbol) {
    for (int t = 0; t <= last && t < static_cast<int>(poch.size()); ++t) {
        if (scalar_traits<S>::is_zero(poch[static_cast<std::size_t>(t)]))
            throw division_by_zero_error(
                std::string("(") + symbol + ")_" + std::to_string(t) +
                " vanishes: " + symbol + " is a non-positive integer in range");
    }
}

template <Scalar S, typename Factor>
S chain_sum(int m, int n, Factor&& factor) {
    S total(0L);
    for_each_chain(m, n, [&](const std::vector<std::pair<int, int>>& pairs) {
        S prod(1L);
        for (auto [l, j] : pairs) prod = prod * factor(l, j);
        total = total + prod;
    });
    return total;
}

template <Scalar S>
void require_convention(const ValentParams<S>& v, WConvention expected, const char* op) {
    if (v.w_convention != expected)
        throw invalid_parameter_error(std::string(op) + " requires the " +
                                      wconvention_name(expected) + " w convention");
}

inline void check_enumeration_cap(int n, int cap) {
    if (n > cap)
        throw invalid_parameter_error(
            "naive enumeration capped at n <= " + std::to_string(cap) +
            "; raise the cap explicitly to enumerate further");
}

template <Scalar S>
void check_exact_order_cap(int order, int cap) {
    if constexpr (scalar_traits<S>::is_exact) {
        if (order > cap)
            throw invalid_parameter_error(
                "exact-mode order " + std::to_string(order) + " exceeds the cap of " +
                std::to_string(cap) + "; raise the cap explicitly to go further");
    }
}

} // namespace detail

/// f_{m,n} of the general family by direct enumeration of all index chains:
///
///   f_{0,n} = k^{2n},
///   f_{m,n} = (-1)^m k^{2n-2m} sum over chains of
///             prod_s [ j_s! (g)_{j_s} (a)_{l_s} (b)_{l_s} ]
///                  / [ l_s! (g)_{l_s} (a)_{j_s+1} (b)_{j_s+1} ]
///                  * k^{-2(j_s-l_s)} (w - (1-k^2) delta l_s),
///
/// writing (a), (b), (g) for the Pochhammer symbols of alpha, beta, gamma.
template <Scalar S>
S f_general_naive(const ValentParams<S>& v, int m, int n,
                  int enumeration_cap = default_enumeration_cap) {
    validate(v);
    detail::require_convention(v, WConvention::general, "f_general_naive");
    if (m < 0 || m > n) throw invalid_parameter_error("f_general_naive requires 0 <= m <= n");
    detail::check_enumeration_cap(n, enumeration_cap);
    if (m == 0) return ipow(v.k, 2L * n);

    const auto t = detail::make_poch_tables(v, n);
    detail::require_nonzero(t.alpha, n, "alpha");
    detail::require_nonzero(t.beta, n, "beta");
    detail::require_nonzero(t.gamma, n - 1, "gamma");
    const S kinv2 = checked_div(S(1L), v.k * v.k, "k^2");
    const S dshift = (S(1L) - v.k * v.k) * v.delta;
    auto factor = [&](int l, int j) {
        const S num = t.fact[j] * t.gamma[j] * t.alpha[l] * t.beta[l];
        const S den = t.fact[l] * t.gamma[l] * t.alpha[j + 1] * t.beta[j + 1];
        return num / den * ipow(kinv2, j - l) * (v.w - dshift * S(static_cast<long>(l)));
    };
    const S sign = (m % 2 == 0) ? S(1L) : S(-1L);
    return sign * ipow(v.k, 2L * (n - m)) * detail::chain_sum<S>(m, n, factor);
}

/// g_{m,n}: the w-free chain sum of the delta = 0 specialization. Depends on
/// k, alpha, beta, gamma only; f_{m,n}|_{delta=0} = g_{m,n} w^m.
template <Scalar S>
S g_delta0_naive(const ValentParams<S>& v, int m, int n,
                 int enumeration_cap = default_enumeration_cap) {
    validate(v);
    detail::require_convention(v, WConvention::general, "g_delta0_naive");
    if (m < 0 || m > n) throw invalid_parameter_error("g_delta0_naive requires 0 <= m <= n");
    detail::check_enumeration_cap(n, enumeration_cap);
    if (m == 0) return ipow(v.k, 2L * n);

    const auto t = detail::make_poch_tables(v, n);
    detail::require_nonzero(t.alpha, n, "alpha");
    detail::require_nonzero(t.beta, n, "beta");
    detail::require_nonzero(t.gamma, n - 1, "gamma");
    const S kinv2 = checked_div(S(1L), v.k * v.k, "k^2");
    auto factor = [&](int l, int j) {
        const S num = t.fact[j] * t.gamma[j] * t.alpha[l] * t.beta[l];
        const S den = t.fact[l] * t.gamma[l] * t.alpha[j + 1] * t.beta[j + 1];
        return num / den * ipow(kinv2, j - l);
    };
    const S sign = (m % 2 == 0) ? S(1L) : S(-1L);
    return sign * ipow(v.k, 2L * (n - m)) * detail::chain_sum<S>(m, n, factor);
}

/// f~_{m,n} of the delta = beta + 1 family:
///
///   f~_{0,n} = 1,
///   f~_{m,n} = (-1)^m sum over chains of
///              prod_s [ j_s! (a)_{j_s} (b)_{l_s} (g)_{l_s} ]
///                   / [ l_s! (a)_{l_s} (b)_{j_s+1} (g)_{j_s+1} ]
///                   * k^{2(j_s-l_s)}.
template <Scalar S>
S f_beta_plus_one_naive(const ValentParams<S>& v, int m, int n,
                        int enumeration_cap = default_enumeration_cap) {
    validate(v);
    detail::require_convention(v, WConvention::beta_plus_one, "f_beta_plus_one_naive");
    if (m < 0 || m > n)
        throw invalid_parameter_error("f_beta_plus_one_naive requires 0 <= m <= n");
    detail::check_enumeration_cap(n, enumeration_cap);
    if (m == 0) return S(1L);

    const auto t = detail::make_poch_tables(v, n);
    detail::require_nonzero(t.alpha, n - 1, "alpha");
    detail::require_nonzero(t.beta, n, "beta");
    detail::require_nonzero(t.gamma, n, "gamma");
    const S k2 = v.k * v.k;
    auto factor = [&](int l, int j) {
        const S num = t.fact[j] * t.alpha[j] * t.beta[l] * t.gamma[l];
        const S den = t.fact[l] * t.alpha[l] * t.beta[j + 1] * t.gamma[j + 1];
        return num / den * ipow(k2, j - l);
    };
    const S sign = (m % 2 == 0) ? S(1L) : S(-1L);
    return sign * detail::chain_sum<S>(m, n, factor);
}

/// Triangular table of nested-sum values f[m][n], 0 <= m <= n <= order.
template <Scalar S>
class NestedSumTable {
public:
    NestedSumTable(ValentParams<S> params, int order, SumVariant variant,
                   SumEvaluation evaluation)
        : params_(std::move(params)), order_(order), variant_(variant), evaluation_(evaluation),
          rows_(static_cast<std::size_t>(order) + 1) {
        for (int m = 0; m <= order; ++m)
            rows_[static_cast<std::size_t>(m)].resize(static_cast<std::size_t>(order - m + 1),
                                                      S(0L));
    }

    const ValentParams<S>& params() const { return params_; }
    int order() const { return order_; }
    SumVariant variant() const { return variant_; }
    SumEvaluation evaluation() const { return evaluation_; }

    /// Strict accessor; (m, n) must satisfy 0 <= m <= n <= order.
    const S& at(int m, int n) const {
        if (m < 0 || n < m || n > order_)
            throw invalid_parameter_error("nested-sum table index out of range");
        return rows_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n - m)];
    }

    /// Accessor extended by the conventions f_{-1,n} = 0 and f_{m,n} = 0 for m > n.
    S value_or_zero(int m, int n) const {
        if (m == -1 || (m >= 0 && n >= 0 && m > n)) return S(0L);
        return at(m, n);
    }

    void set(int m, int n, S value) {
        rows_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n - m)] = std::move(value);
    }

private:
    ValentParams<S> params_;
    int order_;
    SumVariant variant_;
    SumEvaluation evaluation_;
    std::vector<std::vector<S>> rows_; // rows_[m][n - m]
};

namespace detail {

// Shared skeleton of the three dynamic programs. Each entry follows from the
// previous column plus a single sum over the row below:
//
//   f_{m,n} = carry * f_{m,n-1} + pref(n) * sum_{l=m-1}^{n-1} lterm(n, l) f_{m-1,l}
//
// which is the j_m = n-1 splitting of the chain sum.
template <Scalar S, typename Base, typename Pref, typename LTerm>
NestedSumTable<S> dp_table(const ValentParams<S>& v, int order, SumVariant variant,
                           const S& carry, Base&& base, Pref&& pref, LTerm&& lterm) {
    NestedSumTable<S> table(v, order, variant, SumEvaluation::dynamic_program);
    for (int n = 0; n <= order; ++n) table.set(0, n, base(n));
    for (int m = 1; m <= order; ++m) {
        for (int n = m; n <= order; ++n) {
            S sum(0L);
            for (int l = m - 1; l <= n - 1; ++l)
                sum = sum + lterm(n, l) * table.at(m - 1, l);
            S value = pref(n) * sum;
            if (n - 1 >= m) value = value + carry * table.at(m, n - 1);
            table.set(m, n, std::move(value));
        }
    }
    return table;
}

} // namespace detail

/// Dynamic-programming evaluation of the general family; entry-by-entry equal
/// to f_general_naive (exactly, in exact mode) at O(order^3) scalar cost.
template <Scalar S>
NestedSumTable<S> f_general_dp(const ValentParams<S>& v, int order,
                               int order_cap = default_exact_order_cap) {
    validate(v);
    detail::check_exact_order_cap<S>(order, order_cap);
    detail::require_convention(v, WConvention::general, "f_general_dp");
    if (order < 0) throw invalid_parameter_error("order must be non-negative");
    const auto t = detail::make_poch_tables(v, order);
    detail::require_nonzero(t.alpha, order, "alpha");
    detail::require_nonzero(t.beta, order, "beta");
    detail::require_nonzero(t.gamma, order, "gamma");

    const S k2 = v.k * v.k;
    const S dshift = (S(1L) - k2) * v.delta;
    std::vector<S> k2pow{S(1L)};
    for (int n = 1; n <= order; ++n) k2pow.push_back(k2pow.back() * k2);
    std::vector<S> rho; // (alpha)_l (beta)_l / (l! (gamma)_l) * (w - (1-k^2) delta l)
    for (int l = 0; l <= order; ++l)
        rho.push_back(t.alpha[l] * t.beta[l] / (t.fact[l] * t.gamma[l]) *
                      (v.w - dshift * S(static_cast<long>(l))));

    auto base = [&](int n) { return k2pow[n]; };
    auto pref = [&](int n) { return -(t.fact[n - 1] * t.gamma[n - 1]) / (t.alpha[n] * t.beta[n]); };
    auto lterm = [&](int, int l) { return rho[l]; };
    return detail::dp_table(v, order, SumVariant::general_f, k2, base, pref, lterm);
}

/// Dynamic program for the w-free delta = 0 sums g_{m,n}.
template <Scalar S>
NestedSumTable<S> g_delta0_dp(const ValentParams<S>& v, int order,
                              int order_cap = default_exact_order_cap) {
    validate(v);
    detail::check_exact_order_cap<S>(order, order_cap);
    detail::require_convention(v, WConvention::general, "g_delta0_dp");
    if (order < 0) throw invalid_parameter_error("order must be non-negative");
    const auto t = detail::make_poch_tables(v, order);
    detail::require_nonzero(t.alpha, order, "alpha");
    detail::require_nonzero(t.beta, order, "beta");
    detail::require_nonzero(t.gamma, order, "gamma");

    const S k2 = v.k * v.k;
    std::vector<S> k2pow{S(1L)};
    for (int n = 1; n <= order; ++n) k2pow.push_back(k2pow.back() * k2);
    std::vector<S> rho;
    for (int l = 0; l <= order; ++l)
        rho.push_back(t.alpha[l] * t.beta[l] / (t.fact[l] * t.gamma[l]));

    auto base = [&](int n) { return k2pow[n]; };
    auto pref = [&](int n) { return -(t.fact[n - 1] * t.gamma[n - 1]) / (t.alpha[n] * t.beta[n]); };
    auto lterm = [&](int, int l) { return rho[l]; };
    return detail::dp_table(v, order, SumVariant::delta0_g, k2, base, pref, lterm);
}

/// Dynamic program for the delta = beta + 1 family.
template <Scalar S>
NestedSumTable<S> f_beta_plus_one_dp(const ValentParams<S>& v, int order,
                                     int order_cap = default_exact_order_cap) {
    validate(v);
    detail::check_exact_order_cap<S>(order, order_cap);
    detail::require_convention(v, WConvention::beta_plus_one, "f_beta_plus_one_dp");
    if (order < 0) throw invalid_parameter_error("order must be non-negative");
    const auto t = detail::make_poch_tables(v, order);
    detail::require_nonzero(t.alpha, order > 0 ? order - 1 : 0, "alpha");
    detail::require_nonzero(t.beta, order, "beta");
    detail::require_nonzero(t.gamma, order, "gamma");

    const S k2 = v.k * v.k;
    std::vector<S> k2pow{S(1L)};
    for (int n = 1; n <= order; ++n) k2pow.push_back(k2pow.back() * k2);
    std::vector<S> rho; // (beta)_l (gamma)_l / (l! (alpha)_l)
    for (int l = 0; l + 1 <= order; ++l)
        rho.push_back(t.beta[l] * t.gamma[l] / (t.fact[l] * t.alpha[l]));

    auto base = [&](int) { return S(1L); };
    auto pref = [&](int n) { return -(t.fact[n - 1] * t.alpha[n - 1]) / (t.beta[n] * t.gamma[n]); };
    auto lterm = [&](int n, int l) { return rho[l] * k2pow[n - 1 - l]; };
    return detail::dp_table(v, order, SumVariant::beta_plus_one_f, S(1L), base, pref, lterm);
}

/// Table filled by the naive enumerator (the oracle side of the DP/enumeration
/// cross-check). Subject to the enumeration cap.
template <Scalar S>
NestedSumTable<S> naive_table(const ValentParams<S>& v, int order, SumVariant variant,
                              int enumeration_cap = default_enumeration_cap) {
    NestedSumTable<S> table(v, order, variant, SumEvaluation::naive_enumeration);
    for (int n = 0; n <= order; ++n) {
        for (int m = 0; m <= n; ++m) {
            switch (variant) {
                case SumVariant::general_f:
                    table.set(m, n, f_general_naive(v, m, n, enumeration_cap));
                    break;
                case SumVariant::delta0_g:
                    table.set(m, n, g_delta0_naive(v, m, n, enumeration_cap));
                    break;
                case SumVariant::beta_plus_one_f:
                    table.set(m, n, f_beta_plus_one_naive(v, m, n, enumeration_cap));
                    break;
            }
        }
    }
    return table;
}

/// c_n = (alpha)_n (beta)_n / (n! (gamma)_n) * sum_m f_{m,n} via the general
/// dynamic program. Equals the recurrence output; their agreement is the
/// central cross-check of the library.
template <Scalar S>
CoefficientTable<S> closed_form_coefficients(const ValentParams<S>& v, int order,
                                             int order_cap = default_exact_order_cap) {
    const NestedSumTable<S> f = f_general_dp(v, order, order_cap);
    const auto t = detail::make_poch_tables(v, order);
    CoefficientTable<S> table;
    table.params = v;
    table.order = order;
    table.method = Method::closed_form;
    table.values.reserve(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        S sum(0L);
        for (int m = 0; m <= n; ++m) sum = sum + f.at(m, n);
        table.values.push_back(t.alpha[n] * t.beta[n] / (t.fact[n] * t.gamma[n]) * sum);
    }
    return table;
}

/// delta = 0 specialization: c_n = (alpha)_n (beta)_n / (n! (gamma)_n)
/// * (k^{2n} + sum_{m>=1} g_{m,n} w^m), with the w-free g table.
template <Scalar S>
CoefficientTable<S> delta0_coefficients(const ValentParams<S>& v, int order,
                                        int order_cap = default_exact_order_cap) {
    validate(v);
    if (!scalar_traits<S>::is_zero(v.delta))
        throw invalid_parameter_error("delta0_coefficients requires delta = 0");
    const NestedSumTable<S> g = g_delta0_dp(v, order, order_cap);
    const auto t = detail::make_poch_tables(v, order);
    CoefficientTable<S> table;
    table.params = v;
    table.order = order;
    table.method = Method::closed_form_delta0;
    table.values.reserve(static_cast<std::size_t>(order) + 1);
    std::vector<S> wpow{S(1L)};
    for (int m = 1; m <= order; ++m) wpow.push_back(wpow.back() * v.w);
    for (int n = 0; n <= order; ++n) {
        S sum(0L);
        for (int m = 0; m <= n; ++m) sum = sum + g.at(m, n) * wpow[m];
        table.values.push_back(t.alpha[n] * t.beta[n] / (t.fact[n] * t.gamma[n]) * sum);
    }
    return table;
}

/// delta = beta + 1 family: c_n = (beta)_n / n! * sum_m f~_{m,n} w^m.
template <Scalar S>
CoefficientTable<S> beta_plus_one_coefficients(const ValentParams<S>& v, int order,
                                               int order_cap = default_exact_order_cap) {
    const NestedSumTable<S> f = f_beta_plus_one_dp(v, order, order_cap);
    const auto t = detail::make_poch_tables(v, order);
    CoefficientTable<S> table;
    table.params = v;
    table.order = order;
    table.method = Method::closed_form_beta_plus_one;
    table.values.reserve(static_cast<std::size_t>(order) + 1);
    std::vector<S> wpow{S(1L)};
    for (int m = 1; m <= order; ++m) wpow.push_back(wpow.back() * v.w);
    for (int n = 0; n <= order; ++n) {
        S sum(0L);
        for (int m = 0; m <= n; ++m) sum = sum + f.at(m, n) * wpow[m];
        table.values.push_back(t.beta[n] / t.fact[n] * sum);
    }
    return table;
}

} // namespace heun
