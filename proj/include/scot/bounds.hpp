#ifndef SCOT_BOUNDS_HPP
#define SCOT_BOUNDS_HPP

// Closed-form security quantities for the protocol: the cheating bound
// p_bar(n) = (1/2 + 1/(2*sqrt(2)))^n, binary entropy, and the
// error-tolerance factor 2^{2h(gamma)} * p_bar(1).

namespace scot::bounds {

// (1/2 + 1/(2*sqrt(2)))^n, n >= 1
double p_bar(int n);

// -g*log2(g) - (1-g)*log2(1-g); endpoints 0 by continuity
double binary_entropy(double gamma);

// (2^{2h(gamma)} * p_bar(1))^n
double noisy_bound(double gamma, int n);

// The root gamma* of 2^{2h(gamma)} * p_bar(1) = 1 on (0, 1/2), by bisection.
double max_tolerable_gamma(double tolerance);

// p_n_observed <= p_bar(n) + slack
bool security_predicate(double p_n_observed, int n, double slack = 0.0);

}  // namespace scot::bounds

#endif
