#pragma once

#include <cstdint>

#include "ntn/queueing.hpp"

namespace ntn {

struct DesResult {
    double mean_sojourn = 0.0;           // s
    std::uint64_t sample_count = 0;
    double confidence_halfwidth = 0.0;   // s, 95%, batch means
};

/// Discrete-event D/M/1 run: arrivals every 1/lambda, exponential service
/// drawn from a seeded mt19937_64 via inverse transform, FIFO, infinite
/// buffer. The first `warmup` jobs are discarded. Same seed, same result.
///
/// Requires rho < 1, lambda > 0 and arrivals > warmup; throws
/// std::domain_error otherwise.
DesResult simulate_dm1(const QueueParams& q, std::uint64_t arrivals, std::uint64_t warmup,
                       std::uint64_t seed);

/// Overload with the default 10% warmup.
DesResult simulate_dm1(const QueueParams& q, std::uint64_t arrivals, std::uint64_t seed = 1);

/// Plain contraction iteration delta <- exp(-(mu/lambda)(1 - delta)) from 0.5.
double fixed_point_iterate(const QueueParams& q, int iterations);

}  // namespace ntn
