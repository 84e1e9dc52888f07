// Double-double arithmetic: an unevaluated sum of two doubles giving ~31
// significant digits. Algorithms follow the usual error-free transformation
// toolkit (Dekker two_sum / fma-based two_prod, QD-style add/mul/div and
// exp/log). Used by the Mittag-Leffler series, where alternating sums cancel
// far below double precision, and by test oracles.
#pragma once

#include <cmath>
#include <limits>

namespace fkin {

static_assert(std::numeric_limits<double>::is_iec559, "IEEE-754 doubles required");

struct dd {
    double hi = 0.0;
    double lo = 0.0;

    dd() = default;
    constexpr dd(double h) : hi(h), lo(0.0) {}
    constexpr dd(double h, double l) : hi(h), lo(l) {}

    double to_double() const { return hi + lo; }
};

namespace detail {

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

// requires |a| >= |b| or a == 0
inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

}  // namespace detail

inline dd operator+(const dd& a, const dd& b) {
    dd s = detail::two_sum(a.hi, b.hi);
    dd t = detail::two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = detail::quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return detail::quick_two_sum(s.hi, s.lo);
}

inline dd operator-(const dd& a) { return {-a.hi, -a.lo}; }
inline dd operator-(const dd& a, const dd& b) { return a + (-b); }

inline dd operator*(const dd& a, const dd& b) {
    dd p = detail::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return detail::quick_two_sum(p.hi, p.lo);
}

inline dd operator/(const dd& a, const dd& b) {
    double q1 = a.hi / b.hi;
    dd r = a - b * dd(q1);
    double q2 = r.hi / b.hi;
    r = r - b * dd(q2);
    double q3 = r.hi / b.hi;
    dd q = detail::quick_two_sum(q1, q2);
    return q + dd(q3);
}

inline dd& operator+=(dd& a, const dd& b) { a = a + b; return a; }
inline dd& operator-=(dd& a, const dd& b) { a = a - b; return a; }
inline dd& operator*=(dd& a, const dd& b) { a = a * b; return a; }

inline bool dd_isfinite(const dd& a) { return std::isfinite(a.hi); }

inline dd dd_abs(const dd& a) { return a.hi < 0.0 ? -a : a; }

inline dd dd_ldexp(const dd& a, int n) { return {std::ldexp(a.hi, n), std::ldexp(a.lo, n)}; }

namespace ddc {
// ln 2, ln(2*pi)/2, hi/lo split (see tests/oracle/gen_golden.py)
inline constexpr dd ln2{0.6931471805599453, 2.3190468138462996e-17};
inline constexpr dd half_ln_2pi{0.9189385332046728, -3.8782941580672414e-17};
}  // namespace ddc

// exp(a) by argument reduction a = m ln2 + r, |r| <= ln2/2, then r' = r/2^9
// and a 13-term Taylor series, squared back up.
inline dd dd_exp(const dd& a) {
    if (a.hi > 709.0) return {std::numeric_limits<double>::infinity(), 0.0};
    if (a.hi < -745.0) return {0.0, 0.0};
    double m = std::nearbyint(a.hi / ddc::ln2.hi);
    dd r = a - ddc::ln2 * dd(m);
    constexpr int k = 9;
    r = dd_ldexp(r, -k);
    // sum_{i>=2} r^i / i!
    dd s = dd(0.0);
    double fact = 1.0;
    dd term = r;
    for (int i = 2; i <= 14; ++i) {
        term = term * r;
        fact *= i;
        dd add = term / dd(fact);
        s += add;
        if (std::fabs(add.hi) < 1e-35 * std::fabs(r.hi) + 1e-320) break;
    }
    s += r;  // now s = exp(r) - 1
    for (int i = 0; i < k; ++i) s = dd_ldexp(s, 1) + s * s;  // (1+s)^2 - 1
    s += dd(1.0);
    return dd_ldexp(s, static_cast<int>(m));
}

// log by Newton refinement of the double-precision seed:
// y <- y + a*exp(-y) - 1 doubles the correct digits per step.
inline dd dd_log(const dd& a) {
    double seed = std::log(a.hi);
    dd y(seed);
    for (int i = 0; i < 2; ++i) y = y + a * dd_exp(-y) - dd(1.0);
    return y;
}

namespace detail {

// Bernoulli(2k) / (2k (2k-1)), exact integer ratios
inline const dd* stirling_coeffs() {
    static const dd c[15] = {
        dd(1.0) / dd(12.0),
        dd(-1.0) / dd(360.0),
        dd(1.0) / dd(1260.0),
        dd(-1.0) / dd(1680.0),
        dd(1.0) / dd(1188.0),
        dd(-691.0) / dd(360360.0),
        dd(1.0) / dd(156.0),
        dd(-3617.0) / dd(122400.0),
        dd(43867.0) / dd(244188.0),
        dd(-174611.0) / dd(125400.0),
        dd(77683.0) / dd(5796.0),
        dd(-236364091.0) / dd(1506960.0),
        dd(8553103.0) / dd(3900.0),
        dd(-23749461029.0) / dd(657720.0),
        dd(8615841276005.0) / dd(14322.0),
    };
    return c;
}

}  // namespace detail

// ln Gamma(x) for x > 0. Arguments below 30 are lifted with
// Gamma(x) = Gamma(x+m)/(x (x+1) ... (x+m-1)), then Stirling's series with
// Bernoulli corrections (15 terms, good to ~1e-33 at x >= 30).
inline dd dd_lgamma(const dd& x) {
    dd shift(1.0);
    dd y = x;
    while (y.hi < 30.0) {
        shift = shift * y;
        y += dd(1.0);
    }
    dd logy = dd_log(y);
    dd s = (y - dd(0.5)) * logy - y + ddc::half_ln_2pi;
    dd w = dd(1.0) / (y * y);
    const dd* c = detail::stirling_coeffs();
    dd corr = c[14];
    for (int i = 13; i >= 0; --i) corr = corr * w + c[i];
    s += corr / y;
    if (shift.hi != 1.0 || shift.lo != 0.0) s -= dd_log(shift);
    return s;
}

}  // namespace fkin
