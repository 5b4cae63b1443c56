#include "scot/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace scot::bounds {

double p_bar(int n) {
    if (n < 1) throw std::invalid_argument("p_bar requires n >= 1");
    const double base = 0.5 + 0.5 / std::numbers::sqrt2;
    return std::pow(base, n);
}

double binary_entropy(double gamma) {
    if (gamma < 0.0 || gamma > 1.0) throw std::invalid_argument("binary_entropy: gamma in [0,1]");
    if (gamma == 0.0 || gamma == 1.0) return 0.0;
    return -gamma * std::log2(gamma) - (1.0 - gamma) * std::log2(1.0 - gamma);
}

double noisy_bound(double gamma, int n) {
    if (gamma < 0.0 || gamma > 0.5) throw std::invalid_argument("noisy_bound: gamma in [0,1/2]");
    if (n < 1) throw std::invalid_argument("noisy_bound requires n >= 1");
    const double base = std::exp2(2.0 * binary_entropy(gamma)) * p_bar(1);
    return std::pow(base, n);
}

double max_tolerable_gamma(double tolerance) {
    if (tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
    // 2^{2h(gamma)} p_bar(1) is increasing on (0, 1/2): h is increasing there.
    double lo = 1e-12, hi = 0.5 - 1e-12;
    while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (noisy_bound(mid, 1) < 1.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

bool security_predicate(double p_n_observed, int n, double slack) {
    return p_n_observed <= p_bar(n) + slack;
}

}  // namespace scot::bounds
