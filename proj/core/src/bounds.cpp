#include "heun/bounds.hpp"

#include <cmath>
#include <numbers>

namespace heun {

BoundSequence::BoundSequence(const BoundParams& bp, std::complex<double> alpha,
                             std::complex<double> gamma, double abs_w, Kind kind)
    : kind_(kind), d_(bp.d), tau_(bp.t / (1.0 - bp.k * bp.k)), alpha_(alpha), gamma_(gamma) {
    if (kind_ == Kind::beta_plus_one)
        value_ = std::exp(std::numbers::pi * std::numbers::pi * abs_w /
                          (6.0 * (1.0 - bp.k * bp.k)));
}

void BoundSequence::advance() {
    const double n = static_cast<double>(n_);
    const double dn = d_ + n;
    const double abs_gamma_n = std::abs(gamma_ + n);
    if (kind_ == Kind::general) {
        const double abs_alpha_n = std::abs(alpha_ + n);
        value_ *= abs_alpha_n * dn * dn / ((n + 1.0) * abs_gamma_n * abs_gamma_n);
        value_ *= std::exp(tau_ / (n + 1.0));
    } else {
        value_ *= dn * dn / ((n + 1.0) * abs_gamma_n);
    }
    ++n_;
}

} // namespace heun
