// Truncation policy and convergence diagnostics shared by every series
// evaluator in the library.
#pragma once

#include <cmath>
#include <cstdint>

namespace fkin {

enum class Status : std::uint8_t {
    Converged,
    MaxTermsReached,
    DomainError,
};

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Converged: return "converged";
        case Status::MaxTermsReached: return "max_terms";
        case Status::DomainError: return "domain_error";
    }
    return "unknown";
}

struct SeriesControl {
    int max_terms = 2000;
    double abs_tol = 1e-15;
    double rel_tol = 1e-12;
    bool compensated = true;   // error-free-transformation summation
    double z_switch = 30.0;    // Mittag-Leffler series/asymptotic crossover

    bool valid() const {
        return max_terms >= 1 && abs_tol > 0.0 && rel_tol > 0.0 && z_switch > 0.0;
    }
    double threshold(double sum_abs) const {
        return std::fmax(abs_tol, rel_tol * sum_abs);
    }
};

// diagnostic notes; informational, never an error by themselves
namespace note {
inline constexpr unsigned mu_outside_paper_domain = 1u << 0;  // series accepted mu <= 0
inline constexpr unsigned diverges_at_zero = 1u << 1;         // -1 < mu < 0, N(t) unbounded as t->0+
}  // namespace note

struct EvalResult {
    double value = 0.0;
    int terms_used = 0;
    double tail_estimate = 0.0;
    Status status = Status::Converged;
    unsigned notes = 0;

    bool converged() const { return status == Status::Converged; }
};

inline EvalResult domain_error() {
    EvalResult r;
    r.value = std::nan("");
    r.status = Status::DomainError;
    return r;
}

// Neumaier compensated accumulator for plain-double series.
struct NeumaierSum {
    double s = 0.0;
    double c = 0.0;
    void add(double x) {
        double t = s + x;
        if (std::fabs(s) >= std::fabs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

}  // namespace fkin
