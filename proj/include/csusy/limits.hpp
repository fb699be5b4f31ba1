#pragma once

#include <cmath>
#include <functional>
#include <limits>

#include "csusy/errors.hpp"

namespace csusy {

enum class LimitStatus { converged, diverged, unresolved };

struct EndpointLimit {
    LimitStatus status = LimitStatus::unresolved;
    double value = std::numeric_limits<double>::quiet_NaN();

    bool converged() const { return status == LimitStatus::converged; }
    bool diverged() const { return status == LimitStatus::diverged; }
};

struct LimitControl {
    double cauchy_tol = 1e-9;
    int max_steps = 40;
    double delta0 = 0.05;        // initial offset for finite endpoints
    double scale0 = 1.0;         // initial |x| for infinite endpoints
    double divergence_cap = 1e12;
};

namespace detail {

/// Shared driver: feeds a shrinking/growing sample sequence through the
/// Cauchy test. Accepts after one sub-tolerance difference confirmed by a
/// second, or by the sequence becoming unevaluable after the first hit
/// (the next sample may sit outside the function's safe range).
template <class Sampler>
EndpointLimit limit_drive(const std::function<double(double)>& f, Sampler&& sample,
                          const LimitControl& lc) {
    double prev = std::numeric_limits<double>::quiet_NaN();
    double ref = 0.0;
    bool have_prev = false;
    int hits = 0;
    for (int k = 0; k < lc.max_steps; ++k) {
        double x, v;
        if (!sample(k, x)) break;
        try {
            v = f(x);
        } catch (const Error&) {
            if (hits >= 1 && have_prev) return {LimitStatus::converged, prev};
            return {LimitStatus::unresolved, prev};
        }
        if (!std::isfinite(v) || std::abs(v) > lc.divergence_cap * (1.0 + ref))
            return {LimitStatus::diverged, v};
        if (have_prev) {
            if (std::abs(v - prev) < lc.cauchy_tol) {
                if (++hits >= 2) return {LimitStatus::converged, v};
            } else {
                hits = 0;
            }
        } else {
            ref = std::abs(v);
        }
        prev = v;
        have_prev = true;
    }
    if (hits >= 1) return {LimitStatus::converged, prev};
    return {LimitStatus::unresolved, prev};
}

} // namespace detail

/// Limit of f(x) as x approaches the finite endpoint c from inside the
/// domain; `inward` is +1 when the domain lies to the right of c.
inline EndpointLimit limit_at_finite(const std::function<double(double)>& f, double c,
                                     int inward, const LimitControl& lc = {}) {
    const double floor_delta = 1e-12 * (1.0 + std::abs(c));
    auto sampler = [&](int k, double& x) {
        const double delta = lc.delta0 * std::pow(4.0, -k);
        if (delta < floor_delta) return false;
        x = c + inward * delta;
        return true;
    };
    return detail::limit_drive(f, sampler, lc);
}

/// Limit of f(x) as x -> ±∞ (direction = +1 or -1), sampled at x = ±scale0·2^k.
inline EndpointLimit limit_at_infinity(const std::function<double(double)>& f, int direction,
                                       const LimitControl& lc = {}) {
    auto sampler = [&](int k, double& x) {
        x = direction * lc.scale0 * std::pow(2.0, k);
        return std::isfinite(x);
    };
    return detail::limit_drive(f, sampler, lc);
}

/// Limit of f toward `endpoint`, which may be ±∞; `inward` as above
/// (ignored for infinite endpoints).
inline EndpointLimit limit_toward(const std::function<double(double)>& f, double endpoint,
                                  int inward, const LimitControl& lc = {}) {
    if (std::isinf(endpoint)) return limit_at_infinity(f, endpoint > 0 ? +1 : -1, lc);
    return limit_at_finite(f, endpoint, inward, lc);
}

} // namespace csusy
