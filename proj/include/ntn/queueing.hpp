#pragma once

#include <optional>

namespace ntn {

/// D/M/1 queue: deterministic interarrival 1/arrival_rate, exponential
/// service at service_rate, one server, infinite buffer.
struct QueueParams {
    double arrival_rate = 0.0;  // jobs/s
    double service_rate = 0.0;  // jobs/s
};

enum class QueueState { Stable, Idle, Unstable };

struct QueueResult {
    double load_factor = 0.0;
    QueueState state = QueueState::Idle;
    double delta = 0.0;          // meaningful when Stable
    double sojourn_time = 0.0;   // meaningful unless Unstable

    bool unstable() const noexcept { return state == QueueState::Unstable; }

    /// Sojourn time, or nullopt for an unstable queue.
    std::optional<double> delay() const
    {
        if (unstable()) return std::nullopt;
        return sojourn_time;
    }
};

inline constexpr double kDefaultRootTolerance = 1e-12;

double load_factor(const QueueParams& q);

/// Root in [0, 1) of delta = exp(-(mu/lambda)(1 - delta)).
///
/// Newton from delta = rho; falls back to bisection if an iterate leaves
/// [0, 1) or Newton has not converged after 50 steps. Requires 0 < rho < 1;
/// throws std::domain_error otherwise. When exp(-mu/lambda) underflows the
/// root is exactly 0.
double solve_delta(const QueueParams& q, double tol = kDefaultRootTolerance);

/// Same root by bisection alone; used as the cross-check for Newton.
double bisect_delta(const QueueParams& q, double tol = kDefaultRootTolerance);

/// Closed-form fit 4.2 exp(-1.5 mu/lambda), clipped below 1.
double delta_approximation(const QueueParams& q);

/// Idle (lambda = 0) reports pure service time 1/mu. Unstable for rho >= 1.
QueueResult sojourn_time(const QueueParams& q);

}  // namespace ntn
