// Two-parameter Mittag-Leffler function E_{alpha,beta}(z) on the real line.
//
// Two evaluation branches:
//   * power series  sum_n z^n / Gamma(alpha n + beta), summed in
//     double-double arithmetic when ctrl.compensated is set, because the
//     alternating sum for z << 0 cancels far below working precision;
//   * algebraic asymptotic expansion -sum_{k>=1} z^{-k} / Gamma(beta - alpha k)
//     for large negative z and 0 < alpha < 2, truncated at the smallest term.
//
// ml() dispatches on z against ctrl.z_switch and falls back to the other
// branch if the preferred one fails to converge. Each result carries a
// tail_estimate that bounds both truncation and round-off; a result is only
// marked Converged when that bound meets the requested tolerance.
#pragma once

#include <cmath>
#include <limits>

#include "dd.hpp"
#include "series.hpp"
#include "special.hpp"

namespace fkin {

struct MLParams {
    double alpha = 1.0;
    double beta = 1.0;

    bool valid() const {
        return std::isfinite(alpha) && std::isfinite(beta) && alpha > 0.0 && beta > 0.0;
    }
};

namespace detail {

// alpha values with an exact rational term ratio
inline bool small_integer_alpha(double a) {
    return a == std::rint(a) && a >= 1.0 && a <= 4.0;
}

struct MLSeriesState {
    dd sum{0.0};
    double abs_sum = 0.0;
    double noise = 0.0;  // accumulated round-off bound
    double prev = std::numeric_limits<double>::infinity();
    double last = std::numeric_limits<double>::infinity();
    int small_run = 0;

    void accept(const dd& term, double err_mag) {
        double t = std::fabs(term.to_double());
        sum += term;
        abs_sum += t;
        noise += t * (err_mag + 8.0) * 2.4e-32;
        prev = last;
        last = t;
    }
};

}  // namespace detail

inline EvalResult ml_series(MLParams p, double z, SeriesControl ctrl) {
    if (!p.valid() || !std::isfinite(z) || !ctrl.valid()) return domain_error();

    EvalResult r;
    if (z == 0.0) {
        r.value = std::exp(-ln_gamma(p.beta));
        r.terms_used = 1;
        r.tail_estimate = std::fabs(r.value) * 4e-16;
        return r;
    }

    if (!ctrl.compensated) {
        // plain double summation; adequate for mild z, kept as the cheap path
        NeumaierSum s;
        double abs_sum = 0.0, last = HUGE_VAL, prev = HUGE_VAL;
        int small_run = 0, n = 0;
        for (; n < ctrl.max_terms; ++n) {
            double lg = ln_gamma(p.alpha * n + p.beta);
            double t = std::exp(n * std::log(std::fabs(z)) - lg);
            if (z < 0.0 && (n & 1)) t = -t;
            if (!std::isfinite(t)) {
                r.value = s.value();
                r.terms_used = n;
                r.tail_estimate = std::numeric_limits<double>::infinity();
                r.status = Status::MaxTermsReached;
                return r;
            }
            s.add(t);
            abs_sum += std::fabs(t);
            prev = last;
            last = std::fabs(t);
            small_run = (last <= ctrl.threshold(std::fabs(s.value()))) ? small_run + 1 : 0;
            if (small_run >= 2 && n >= 1) { ++n; break; }
        }
        r.value = s.value();
        r.terms_used = n;
        r.tail_estimate = last + prev + abs_sum * 2.2e-16 * 4.0;
        r.status = (small_run >= 2 && r.tail_estimate <= ctrl.threshold(std::fabs(r.value)))
                       ? Status::Converged
                       : Status::MaxTermsReached;
        return r;
    }

    detail::MLSeriesState st;
    int n = 0;
    bool stopped = false;
    if (detail::small_integer_alpha(p.alpha)) {
        // exact rational recurrence t_{n+1} = t_n z / prod_j (alpha n + beta + j)
        int ia = static_cast<int>(p.alpha);
        dd term = dd_exp(-dd_lgamma(dd(p.beta)));
        dd zz(z);
        for (; n < ctrl.max_terms; ++n) {
            if (!dd_isfinite(term)) break;
            st.accept(term, 4.0 * n + 8.0);
            st.small_run = (st.last <= ctrl.threshold(std::fabs(st.sum.to_double())))
                               ? st.small_run + 1 : 0;
            if (st.small_run >= 2 && n >= 1) { stopped = true; ++n; break; }
            dd denom(1.0);
            for (int j = 0; j < ia; ++j)
                denom = denom * (dd(p.alpha) * dd(double(n)) + dd(p.beta) + dd(double(j)));
            term = term * zz / denom;
        }
    } else {
        dd ln_abs_z = dd_log(dd(std::fabs(z)));
        for (; n < ctrl.max_terms; ++n) {
            dd lg = dd_lgamma(dd(p.alpha) * dd(double(n)) + dd(p.beta));
            dd ln_t = dd(double(n)) * ln_abs_z - lg;
            dd term = dd_exp(ln_t);
            if (!dd_isfinite(term)) break;
            if (z < 0.0 && (n & 1)) term = -term;
            double err_mag = std::fabs(n * ln_abs_z.hi) + std::fabs(lg.hi);
            st.accept(term, err_mag);
            st.small_run = (st.last <= ctrl.threshold(std::fabs(st.sum.to_double())))
                               ? st.small_run + 1 : 0;
            if (st.small_run >= 2 && n >= 1) { stopped = true; ++n; break; }
        }
    }
    r.value = st.sum.to_double();
    r.terms_used = n;
    r.tail_estimate = (stopped ? st.last + st.prev : std::numeric_limits<double>::infinity())
                      + st.noise;
    r.status = (stopped && r.tail_estimate <= ctrl.threshold(std::fabs(r.value)))
                   ? Status::Converged
                   : Status::MaxTermsReached;
    return r;
}

inline EvalResult ml_asymptotic(MLParams p, double z, SeriesControl ctrl) {
    if (!p.valid() || !std::isfinite(z) || !ctrl.valid()) return domain_error();
    if (p.alpha >= 2.0) return domain_error();  // expansion valid for 0 < alpha < 2 only
    if (!(z < 0.0)) return domain_error();

    EvalResult r;
    NeumaierSum s;
    double zpow = 1.0;  // z^{-k}
    double last_nonzero = std::numeric_limits<double>::infinity();
    double last = std::numeric_limits<double>::infinity();
    double prev = std::numeric_limits<double>::infinity();
    double omitted = 0.0;
    int small_run = 0;
    int k = 1;
    int kmax = std::min(ctrl.max_terms, 400);
    for (; k <= kmax; ++k) {
        zpow /= z;
        double x = p.beta - p.alpha * k;
        double u = 0.0;
        if (!is_nonpositive_integer(x)) {
            double recip_gamma = 1.0 / std::tgamma(x);
            if (std::isfinite(recip_gamma)) u = -zpow * recip_gamma;
        }
        double au = std::fabs(u);
        if (au != 0.0 && au >= last_nonzero) {
            omitted = au;  // terms started growing; truncate at the smallest
            break;
        }
        s.add(u);
        if (au != 0.0) last_nonzero = au;
        prev = last;
        last = au;
        small_run = (au <= ctrl.threshold(std::fabs(s.value()))) ? small_run + 1 : 0;
        if (small_run >= 2 && k >= 2) break;
    }
    // exponentially small contribution invisible to the algebraic expansion
    double exp_floor = 0.0;
    if (p.alpha >= 1.0)
        exp_floor = std::exp(std::pow(-z, 1.0 / p.alpha) * std::cos(M_PI / p.alpha));

    r.value = s.value();
    r.terms_used = k;
    double head = (last == std::numeric_limits<double>::infinity()) ? 0.0 : last + prev;
    if (!std::isfinite(head)) head = last;
    r.tail_estimate = head + omitted + exp_floor + std::fabs(r.value) * 1e-15;
    r.status = (r.tail_estimate <= ctrl.threshold(std::fabs(r.value)))
                   ? Status::Converged
                   : Status::MaxTermsReached;
    return r;
}

inline EvalResult ml(MLParams p, double z, SeriesControl ctrl) {
    if (!p.valid() || !std::isfinite(z) || !ctrl.valid()) return domain_error();
    bool prefer_asym = (z < -ctrl.z_switch) && (p.alpha < 2.0);
    EvalResult first = prefer_asym ? ml_asymptotic(p, z, ctrl) : ml_series(p, z, ctrl);
    if (first.converged()) return first;
    bool other_ok = prefer_asym ? true : (z < 0.0 && p.alpha < 2.0);
    if (!other_ok) return first;
    EvalResult second = prefer_asym ? ml_series(p, z, ctrl) : ml_asymptotic(p, z, ctrl);
    if (second.converged()) return second;
    return (second.tail_estimate < first.tail_estimate) ? second : first;
}

inline EvalResult ml_one(double alpha, double z, SeriesControl ctrl) {
    return ml(MLParams{alpha, 1.0}, z, ctrl);
}

}  // namespace fkin
