#include "fairdiv/simulate.hpp"

#include <cmath>

#include <omp.h>

#include "fairdiv/errors.hpp"

namespace fairdiv {

Rational SimulationStats::receipt_frequency(int round, AgentId agent) const {
    return Rational(BigInt(receipt_counts[round][agent]), BigInt(runs));
}

Rational SimulationStats::discard_frequency(int round) const {
    return Rational(BigInt(discard_counts[round]), BigInt(runs));
}

Rational SimulationStats::mean_own_utility(AgentId agent) const {
    return own_utility_sum[agent] / BigInt(runs);
}

double SimulationStats::stddev_own_utility(AgentId agent) const {
    if (runs < 2)
        return 0.0;
    // sample variance: (sum of squares - sum^2/N) / (N - 1), exact until
    // the final conversion
    Rational var = (own_utility_sq_sum[agent] -
                    own_utility_sum[agent] * own_utility_sum[agent] / BigInt(runs)) /
                   BigInt(runs - 1);
    double v = approx(var);
    return v > 0 ? std::sqrt(v) : 0.0;
}

int sample_round(const RoundDistribution& dist, std::uint64_t draw) {
    if (dist.discard_probability != 0)
        return kDiscarded; // discard mass is 0 or 1, never fractional
    // draw/2^64 < cum  <=>  draw * den(cum) < num(cum) << 64
    Rational cumulative(0);
    const int n = static_cast<int>(dist.probabilities.size());
    for (AgentId j = 0; j < n; ++j) {
        if (dist.probabilities[j] == 0)
            continue;
        cumulative += dist.probabilities[j];
        BigInt lhs = BigInt(draw) * denominator(cumulative);
        BigInt rhs = numerator(cumulative) << 64;
        if (lhs < rhs)
            return j;
    }
    // cumulative == 1 and draw/2^64 < 1 always holds, so we never get here
    return n - 1;
}

std::vector<int> run_episode(const Instance& instance, MechanismKind kind, const BidMatrix& bids,
                             SplitMix64& rng) {
    const auto weights = instance.weights();
    std::vector<int> counts(instance.n(), 0);
    std::vector<int> recipients(instance.m(), kDiscarded);
    for (ItemId k = 0; k < instance.m(); ++k) {
        RoundDistribution dist = round_distribution(kind, counts, bids.bidders(k), weights);
        const std::uint64_t draw = rng.next(); // one draw per round, always
        const int recipient = sample_round(dist, draw);
        recipients[k] = recipient;
        if (recipient != kDiscarded)
            ++counts[recipient];
    }
    return recipients;
}

namespace {

SimulationStats empty_stats(const Instance& instance) {
    SimulationStats s;
    s.receipt_counts.assign(instance.m(), std::vector<std::uint64_t>(instance.n(), 0));
    s.discard_counts.assign(instance.m(), 0);
    s.own_utility_sum.assign(instance.n(), Rational(0));
    s.own_utility_sq_sum.assign(instance.n(), Rational(0));
    return s;
}

void accumulate_run(const Instance& instance, const SimulationConfig& config, std::uint64_t run,
                    SimulationStats& stats) {
    SplitMix64 rng = run_stream(config.seed, run);
    const std::vector<int> recipients = run_episode(instance, config.kind, config.bids, rng);
    std::vector<Rational> own(instance.n(), Rational(0));
    for (ItemId k = 0; k < instance.m(); ++k) {
        const int r = recipients[k];
        if (r == kDiscarded) {
            ++stats.discard_counts[k];
        } else {
            ++stats.receipt_counts[k][r];
            own[r] += instance.utility(r, k);
        }
    }
    for (AgentId j = 0; j < instance.n(); ++j) {
        if (own[j] != 0) {
            stats.own_utility_sum[j] += own[j];
            stats.own_utility_sq_sum[j] += own[j] * own[j];
        }
    }
    ++stats.runs;
}

void merge_stats(SimulationStats& into, const SimulationStats& from) {
    into.runs += from.runs;
    for (std::size_t k = 0; k < into.receipt_counts.size(); ++k) {
        into.discard_counts[k] += from.discard_counts[k];
        for (std::size_t j = 0; j < into.receipt_counts[k].size(); ++j)
            into.receipt_counts[k][j] += from.receipt_counts[k][j];
    }
    for (std::size_t j = 0; j < into.own_utility_sum.size(); ++j) {
        into.own_utility_sum[j] += from.own_utility_sum[j];
        into.own_utility_sq_sum[j] += from.own_utility_sq_sum[j];
    }
}

void check_config(const Instance& instance, const SimulationConfig& config) {
    validate_bids(instance, config.bids);
    if (config.runs < 1)
        throw ValidationError("runs must be >= 1");
}

} // namespace

SimulationStats simulate_serial(const Instance& instance, const SimulationConfig& config) {
    check_config(instance, config);
    SimulationStats stats = empty_stats(instance);
    for (std::uint64_t run = 0; run < config.runs; ++run)
        accumulate_run(instance, config, run, stats);
    return stats;
}

SimulationStats simulate(const Instance& instance, const SimulationConfig& config) {
    check_config(instance, config);
    const int team = config.threads > 0 ? config.threads : omp_get_max_threads();
    std::vector<SimulationStats> partial(team, empty_stats(instance));

#pragma omp parallel num_threads(team)
    {
        SimulationStats& local = partial[omp_get_thread_num()];
#pragma omp for schedule(static)
        for (long long run = 0; run < static_cast<long long>(config.runs); ++run)
            accumulate_run(instance, config, static_cast<std::uint64_t>(run), local);
    }

    SimulationStats stats = empty_stats(instance);
    for (const SimulationStats& p : partial)
        merge_stats(stats, p); // exact rational sums: merge order is irrelevant
    return stats;
}

ComparisonReport compare_exact_empirical(const Instance& instance, const SimulationConfig& config,
                                         double sigma, std::uint64_t min_runs) {
    ComparisonReport report;
    report.sigma = sigma;
    report.min_runs = min_runs;
    report.stats = simulate(instance, config);

    const ReceiptProbabilities exact = receipt_probabilities(instance, config.kind, config.bids);
    const ExpectedUtilityMatrix expected = expected_utilities(instance, config.kind, config.bids);
    const bool enough_runs = report.stats.runs >= min_runs;

    for (ItemId k = 0; k < instance.m(); ++k) {
        for (AgentId j = 0; j < instance.n(); ++j) {
            FrequencyCell cell;
            cell.round = k;
            cell.agent = j;
            cell.exact = exact.by_round[k][j];
            cell.empirical = report.stats.receipt_frequency(k, j);
            cell.abs_error = std::fabs(approx(cell.empirical - cell.exact));
            const double p = approx(cell.exact);
            cell.std_error = std::sqrt(std::max(p * (1.0 - p), 0.0) /
                                       static_cast<double>(report.stats.runs));
            if (enough_runs) {
                cell.flagged = cell.std_error == 0.0 ? cell.empirical != cell.exact
                                                     : cell.abs_error > sigma * cell.std_error;
            }
            report.any_flagged |= cell.flagged;
            report.frequencies.push_back(std::move(cell));
        }
    }

    for (AgentId j = 0; j < instance.n(); ++j) {
        UtilityCell cell;
        cell.agent = j;
        cell.exact = expected.values[j][j];
        cell.empirical = report.stats.mean_own_utility(j);
        cell.abs_error = std::fabs(approx(cell.empirical - cell.exact));
        cell.std_error = report.stats.stddev_own_utility(j) /
                         std::sqrt(static_cast<double>(report.stats.runs));
        if (enough_runs) {
            cell.flagged = cell.std_error == 0.0 ? cell.empirical != cell.exact
                                                 : cell.abs_error > sigma * cell.std_error;
        }
        report.any_flagged |= cell.flagged;
        report.utilities.push_back(std::move(cell));
    }
    return report;
}

} // namespace fairdiv
