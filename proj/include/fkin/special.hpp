// Gamma, k-Gamma, Pochhammer and k-Pochhammer primitives.
//
// Gamma_k is evaluated through the scaling identity
//     Gamma_k(x) = k^(x/k - 1) Gamma(x/k)
// rather than its integral definition; the integral form survives only as a
// quadrature oracle in the test suite. All functions are pure and
// re-entrant.
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace fkin {

inline bool is_nonpositive_integer(double x) {
    return x <= 0.0 && std::rint(x) == x;
}

inline double gamma(double x) {
    if (is_nonpositive_integer(x))
        throw std::domain_error("gamma: pole at non-positive integer x=" + std::to_string(x));
    return std::tgamma(x);  // reflection for x < 0 handled by libm
}

inline double ln_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("ln_gamma: requires x > 0, got x=" + std::to_string(x));
#if defined(__GLIBC__)
    int sign;
    return ::lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

inline double ln_gamma_k(double x, double k) {
    if (!(x > 0.0) || !(k > 0.0))
        throw std::domain_error("ln_gamma_k: requires x > 0 and k > 0");
    return (x / k - 1.0) * std::log(k) + ln_gamma(x / k);
}

inline double gamma_k(double x, double k) {
    if (!(x > 0.0) || !(k > 0.0))
        throw std::domain_error("gamma_k: requires x > 0 and k > 0");
    double xk = x / k;
    if (xk > 170.0) return std::exp(ln_gamma_k(x, k));  // direct form would hit 0*inf
    return std::pow(k, xk - 1.0) * gamma(xk);
}

// signed log-domain value: x = sign * exp(log_abs); sign == 0 means x == 0
struct SignedLog {
    double log_abs = 0.0;
    int sign = 1;

    double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

inline SignedLog ln_pochhammer_k(double g, int n, double k) {
    if (n < 0) throw std::domain_error("ln_pochhammer_k: requires n >= 0");
    if (!(k > 0.0)) throw std::domain_error("ln_pochhammer_k: requires k > 0");
    SignedLog r;
    for (int i = 0; i < n; ++i) {
        double f = g + i * k;
        if (f == 0.0) return {0.0, 0};
        r.log_abs += std::log(std::fabs(f));
        if (f < 0.0) r.sign = -r.sign;
    }
    return r;
}

inline double pochhammer_k(double g, int n, double k) {
    if (n < 0) throw std::domain_error("pochhammer_k: requires n >= 0");
    if (!(k > 0.0)) throw std::domain_error("pochhammer_k: requires k > 0");
    if (n > 170) {
        // products of this length overflow long before they stop mattering
        // in coefficient ratios; accumulate in log domain with sign tracking
        return ln_pochhammer_k(g, n, k).value();
    }
    double p = 1.0;
    for (int i = 0; i < n; ++i) p *= g + i * k;
    return p;
}

inline double pochhammer(double lam, int n) {
    return pochhammer_k(lam, n, 1.0);
}

}  // namespace fkin
