#include "ntn/validation.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace ntn {

namespace {

constexpr std::uint64_t kBatches = 50;
// Student t, 0.975 quantile, 49 degrees of freedom.
constexpr double kT975 = 2.0096;

// Uniform in (0, 1] from the top 53 bits; independent of the standard
// library's distribution implementations.
double unit_open_closed(std::mt19937_64& rng)
{
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

}  // namespace

DesResult simulate_dm1(const QueueParams& q, std::uint64_t arrivals, std::uint64_t warmup, std::uint64_t seed)
{
    if (!(q.arrival_rate > 0.0 && q.service_rate > 0.0))
        throw std::domain_error("simulate_dm1 needs positive rates");
    if (!(q.arrival_rate < q.service_rate)) throw std::domain_error("simulate_dm1 needs rho < 1");
    if (arrivals <= warmup) throw std::domain_error("arrivals must exceed warmup");

    std::mt19937_64 rng(seed);
    const double interarrival = 1.0 / q.arrival_rate;
    const std::uint64_t samples = arrivals - warmup;
    const std::uint64_t batches = std::min(kBatches, samples);
    const std::uint64_t per_batch = samples / batches;

    std::vector<double> batch_sums(batches, 0.0);
    double total = 0.0;
    double wait = 0.0;  // waiting time of the current job (Lindley recursion)
    for (std::uint64_t k = 0; k < arrivals; ++k) {
        const double service = -std::log(unit_open_closed(rng)) / q.service_rate;
        const double sojourn = wait + service;
        if (k >= warmup) {
            const std::uint64_t j = k - warmup;
            total += sojourn;
            const std::uint64_t b = std::min(j / per_batch, batches - 1);
            batch_sums[b] += sojourn;
        }
        wait = std::max(0.0, sojourn - interarrival);
    }

    DesResult r;
    r.sample_count = samples;
    r.mean_sojourn = total / static_cast<double>(samples);
    if (batches > 1) {
        double sum = 0.0;
        double sum_sq = 0.0;
        for (std::uint64_t b = 0; b < batches; ++b) {
            const std::uint64_t count = b + 1 < batches ? per_batch : samples - per_batch * (batches - 1);
            const double m = batch_sums[b] / static_cast<double>(count);
            sum += m;
            sum_sq += m * m;
        }
        const double nb = static_cast<double>(batches);
        const double var = std::max(0.0, (sum_sq - sum * sum / nb) / (nb - 1.0));
        r.confidence_halfwidth = kT975 * std::sqrt(var / nb);
    }
    return r;
}

DesResult simulate_dm1(const QueueParams& q, std::uint64_t arrivals, std::uint64_t seed)
{
    return simulate_dm1(q, arrivals, arrivals / 10, seed);
}

double fixed_point_iterate(const QueueParams& q, int iterations)
{
    const double a = q.service_rate / q.arrival_rate;
    double d = 0.5;
    for (int i = 0; i < iterations; ++i) d = std::exp(-a * (1.0 - d));
    return d;
}

}  // namespace ntn
