#ifndef FAIRDIV_SIMULATE_HPP
#define FAIRDIV_SIMULATE_HPP

#include <cstdint>
#include <vector>

#include "fairdiv/gametree.hpp"
#include "fairdiv/instance.hpp"
#include "fairdiv/mechanism.hpp"
#include "fairdiv/rng.hpp"

namespace fairdiv {

struct SimulationConfig {
    MechanismKind kind = MechanismKind::Like;
    BidMatrix bids;
    std::uint64_t seed = 0;
    std::uint64_t runs = 1;
    int threads = 0; // 0 = all available; never affects the results
};

// Empirical counterparts of the exact quantities, kept as exact
// rationals (integer tallies over `runs`) so merged partial results are
// independent of worker count and merge order.
struct SimulationStats {
    std::uint64_t runs = 0;
    std::vector<std::vector<std::uint64_t>> receipt_counts; // [round][agent]
    std::vector<std::uint64_t> discard_counts;              // [round]
    std::vector<Rational> own_utility_sum;                  // [agent], sum over runs of u_j(A_j)
    std::vector<Rational> own_utility_sq_sum;               // [agent], sum of squares

    bool operator==(const SimulationStats&) const = default;

    Rational receipt_frequency(int round, AgentId agent) const;
    Rational discard_frequency(int round) const;
    Rational mean_own_utility(AgentId agent) const;
    // sample standard deviation of the per-run own-bundle utility
    double stddev_own_utility(AgentId agent) const;
};

// One seeded episode: processes the items in order, sampling each
// round's recipient from the exact round distribution. Consumes exactly
// one 64-bit draw per round (whether or not anybody bids).
std::vector<int> run_episode(const Instance& instance, MechanismKind kind, const BidMatrix& bids,
                             SplitMix64& rng);

// Exact sampling: recipient j is selected when draw/2^64 falls inside
// j's cumulative probability slot, compared by cross-multiplication.
int sample_round(const RoundDistribution& dist, std::uint64_t draw);

SimulationStats simulate(const Instance& instance, const SimulationConfig& config);
// reference loop, bit-identical to the OpenMP version
SimulationStats simulate_serial(const Instance& instance, const SimulationConfig& config);

// Per-(agent, round) deviation of empirical frequencies from the exact
// engine, flagged beyond sigma standard errors; and the same for mean
// own-bundle utilities using the sample standard deviation. Flags are
// suppressed below min_runs.
struct FrequencyCell {
    int round = 0;
    AgentId agent = 0;
    Rational exact;
    Rational empirical;
    double abs_error = 0;
    double std_error = 0;
    bool flagged = false;
};

struct UtilityCell {
    AgentId agent = 0;
    Rational exact;
    Rational empirical;
    double abs_error = 0;
    double std_error = 0;
    bool flagged = false;
};

struct ComparisonReport {
    SimulationStats stats;
    double sigma = 4.0;
    std::uint64_t min_runs = 100;
    std::vector<FrequencyCell> frequencies;
    std::vector<UtilityCell> utilities;
    bool any_flagged = false;
};

ComparisonReport compare_exact_empirical(const Instance& instance, const SimulationConfig& config,
                                         double sigma = 4.0, std::uint64_t min_runs = 100);

} // namespace fairdiv

#endif
