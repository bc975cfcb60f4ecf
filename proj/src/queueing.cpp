#include "ntn/queueing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ntn {

namespace {

constexpr int kMaxNewtonIterations = 50;
constexpr int kMaxBisectionIterations = 400;

void require_solvable(const QueueParams& q)
{
    if (!(q.service_rate > 0.0)) throw std::domain_error("service rate must be > 0");
    if (!(q.arrival_rate > 0.0)) throw std::domain_error("arrival rate must be > 0 to solve for delta");
    if (!(q.arrival_rate < q.service_rate)) throw std::domain_error("queue is unstable (rho >= 1)");
}

// f(d) = d - exp(-a (1 - d)), a = mu / lambda > 1. f is concave on [0, 1]
// with f(0) < 0, a maximum at 1 - ln(a)/a where f > 0, and the trivial root
// at 1. The wanted root lies left of the maximum.
double residual(double a, double d)
{
    return d - std::exp(-a * (1.0 - d));
}

double upper_bracket(double a)
{
    return 1.0 - std::log(a) / a;
}

// Bisects down to adjacent doubles; `tol` only allows an earlier exit.
double bisect(double a, double tol)
{
    double lo = 0.0;
    double hi = upper_bracket(a);
    if (residual(a, lo) >= 0.0) return 0.0;
    for (int i = 0; i < kMaxBisectionIterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double f = residual(a, mid);
        if (f == 0.0) return mid;
        (f < 0.0 ? lo : hi) = mid;
        if (hi - lo <= 1e-17 && std::abs(f) <= tol) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double load_factor(const QueueParams& q)
{
    return q.arrival_rate / q.service_rate;
}

double solve_delta(const QueueParams& q, double tol)
{
    require_solvable(q);
    const double a = q.service_rate / q.arrival_rate;
    if (std::exp(-a) == 0.0) return 0.0;

    double d = load_factor(q);
    for (int i = 0; i < kMaxNewtonIterations; ++i) {
        const double e = std::exp(-a * (1.0 - d));
        const double slope = 1.0 - a * e;
        if (!(slope > 0.0)) break;
        const double step = (d - e) / slope;
        const double next = d - step;
        if (!(next >= 0.0 && next < 1.0)) break;
        d = next;
        if (std::abs(step) <= 1e-15 * std::max(d, 1e-3) && std::abs(residual(a, d)) <= tol) return d;
    }
    return bisect(a, tol);
}

double bisect_delta(const QueueParams& q, double tol)
{
    require_solvable(q);
    const double a = q.service_rate / q.arrival_rate;
    if (std::exp(-a) == 0.0) return 0.0;
    return bisect(a, tol);
}

double delta_approximation(const QueueParams& q)
{
    const double cap = 1.0 - std::numeric_limits<double>::epsilon();
    return std::min(4.2 * std::exp(-1.5 * q.service_rate / q.arrival_rate), cap);
}

QueueResult sojourn_time(const QueueParams& q)
{
    if (!(q.service_rate > 0.0)) throw std::domain_error("service rate must be > 0");
    QueueResult r;
    r.load_factor = load_factor(q);
    if (q.arrival_rate == 0.0) {
        r.state = QueueState::Idle;
        r.sojourn_time = 1.0 / q.service_rate;
        return r;
    }
    if (r.load_factor >= 1.0) {
        r.state = QueueState::Unstable;
        r.sojourn_time = std::numeric_limits<double>::infinity();
        return r;
    }
    r.state = QueueState::Stable;
    r.delta = solve_delta(q);
    r.sojourn_time = 1.0 / (q.service_rate * (1.0 - r.delta));
    return r;
}

}  // namespace ntn
