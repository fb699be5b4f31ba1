#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "csusy/errors.hpp"

namespace csusy {

/// Tolerances and budget for adaptive Simpson integration.
struct QuadControl {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_depth = 40;
    long max_intervals = 1L << 20;
};

namespace detail {

struct SimpsonState {
    const std::function<double(double)>& f;
    long intervals_left;
    int max_depth;
};

inline double simpson_rec(SimpsonState& st, double a, double m, double b,
                          double fa, double fm, double fb, double whole,
                          double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = st.f(lm);
    const double frm = st.f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || !(std::isfinite(delta)))
        return left + right + delta / 15.0;
    if (depth >= st.max_depth || (st.intervals_left -= 2) <= 0)
        throw QuadFailure("adaptive Simpson: subdivision budget exhausted");
    return simpson_rec(st, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth + 1)
         + simpson_rec(st, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

} // namespace detail

/// Adaptive Simpson integral of f over [a, b]. Handles a > b by sign flip.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        const QuadControl& qc = {}) {
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) { std::swap(a, b); sign = -1.0; }
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double tol = std::max(qc.abs_tol, qc.rel_tol * std::abs(whole));
    detail::SimpsonState st{f, qc.max_intervals, qc.max_depth};
    return sign * detail::simpson_rec(st, a, m, b, fa, fm, fb, whole, tol, 0);
}

/// Antiderivative F(t) = ∫_{anchor}^{t} f ds tabulated on n uniform segments
/// over [lo, hi]; queries combine the prefix table with a short adaptive
/// integral over the remaining partial segment.
class CumulativeAntiderivative {
public:
    CumulativeAntiderivative(std::function<double(double)> f, double anchor,
                             double lo, double hi, int n_segments = 256,
                             QuadControl qc = {})
        : f_(std::move(f)), lo_(lo), hi_(hi), qc_(qc) {
        if (!(lo < hi)) throw Error("CumulativeAntiderivative: empty interval");
        n_ = std::max(2, n_segments);
        step_ = (hi_ - lo_) / n_;
        prefix_.resize(static_cast<std::size_t>(n_) + 1, 0.0);
        QuadControl seg = qc_;
        seg.abs_tol = qc_.abs_tol / n_;
        for (int i = 0; i < n_; ++i) {
            const double a = lo_ + step_ * i;
            const double b = (i + 1 == n_) ? hi_ : lo_ + step_ * (i + 1);
            prefix_[static_cast<std::size_t>(i) + 1] =
                prefix_[static_cast<std::size_t>(i)] + integrate(f_, a, b, seg);
        }
        offset_ = raw(anchor);
    }

    /// F(t) with F(anchor) = 0.
    double operator()(double t) const { return raw(t) - offset_; }

    double lo() const { return lo_; }
    double hi() const { return hi_; }

private:
    double raw(double t) const {
        if (t <= lo_) return integrate(f_, lo_, t, qc_);
        if (t >= hi_) return prefix_.back() + integrate(f_, hi_, t, qc_);
        int k = static_cast<int>((t - lo_) / step_);
        k = std::clamp(k, 0, n_ - 1);
        const double node = lo_ + step_ * k;
        return prefix_[static_cast<std::size_t>(k)] + integrate(f_, node, t, qc_);
    }

    std::function<double(double)> f_;
    double lo_, hi_, step_ = 0, offset_ = 0;
    int n_ = 0;
    QuadControl qc_;
    std::vector<double> prefix_;
};

/// ∫_a^∞ f dt by doubling the truncation radius until the tail increment is
/// Cauchy-stable. Throws LimitNotResolved if the partial sums keep moving.
inline double integrate_to_infinity(const std::function<double(double)>& f, double a,
                                    const QuadControl& qc = {}, double cauchy_tol = 1e-9,
                                    int max_doublings = 40) {
    double span = std::max(1.0, std::abs(a));
    double upper = a + span;
    double total = integrate(f, a, upper, qc);
    int hits = 0;
    for (int k = 0; k < max_doublings; ++k) {
        const double next = a + span * std::pow(2.0, k + 1);
        const double inc = integrate(f, upper, next, qc);
        total += inc;
        upper = next;
        if (!std::isfinite(total)) throw LimitNotResolved("improper integral diverged");
        if (std::abs(inc) < cauchy_tol) {
            if (++hits >= 2) return total;
        } else {
            hits = 0;
        }
    }
    throw LimitNotResolved("improper integral: tail not Cauchy-stable");
}

/// ∫_{-∞}^b f dt, by reflection.
inline double integrate_from_minus_infinity(const std::function<double(double)>& f, double b,
                                            const QuadControl& qc = {}, double cauchy_tol = 1e-9,
                                            int max_doublings = 40) {
    return integrate_to_infinity([&f](double t) { return f(-t); }, -b, qc, cauchy_tol,
                                 max_doublings);
}

} // namespace csusy
