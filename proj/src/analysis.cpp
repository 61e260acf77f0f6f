#include "fairdiv/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <utility>

#include <omp.h>

#include "fairdiv/errors.hpp"

namespace fairdiv {

EnvyReportExAnte check_ef_ex_ante(const Instance& instance, MechanismKind kind) {
    const BidMatrix bids = truthful_bids(instance);
    const ExpectedUtilityMatrix expected = expected_utilities(instance, kind, bids);
    const int n = instance.n();

    EnvyReportExAnte out;
    out.envy.assign(n, std::vector<Rational>(n, Rational(0)));
    out.worst_value = 0;
    bool have_worst = false;
    for (AgentId i = 0; i < n; ++i) {
        const Rational own = expected.values[i][i] / instance.agents[i].weight;
        for (AgentId j = 0; j < n; ++j) {
            if (i == j)
                continue;
            Rational e = expected.values[i][j] / instance.agents[j].weight - own;
            if (!have_worst || e > out.worst_value) {
                have_worst = true;
                out.worst_i = i;
                out.worst_j = j;
                out.worst_value = e;
            }
            out.envy[i][j] = std::move(e);
        }
    }
    out.holds = out.worst_value <= 0;
    return out;
}

EnvyReportExPost check_bounded_ef_ex_post(const Instance& instance, MechanismKind kind,
                                          const Rational& bound, std::size_t support_cap) {
    const BidMatrix bids = truthful_bids(instance);
    const auto weights = instance.weights();
    const int n = instance.n();

    EnvyReportExPost out;
    out.bound = bound;
    out.worst.envy = 0;
    bool have_witness = false;

    for_each_outcome(instance, kind, bids, support_cap, [&](const Outcome& outcome) {
        ++out.support_size;
        // weighted envy of i toward j in this realization
        std::vector<Rational> held(n);
        for (AgentId i = 0; i < n; ++i)
            held[i] = outcome.bundle_utility(instance, i, i) / weights[i];
        Rational outcome_worst(0);
        AgentId worst_i = 0, worst_j = 0;
        for (AgentId i = 0; i < n; ++i) {
            for (AgentId j = 0; j < n; ++j) {
                if (i == j)
                    continue;
                Rational envy = outcome.bundle_utility(instance, i, j) / weights[j] - held[i];
                if (envy > outcome_worst) {
                    outcome_worst = std::move(envy);
                    worst_i = i;
                    worst_j = j;
                }
            }
        }
        if (outcome_worst > bound)
            ++out.violations;
        if (!have_witness || outcome_worst > out.worst.envy) {
            have_witness = true;
            out.worst = EnvyWitness{outcome, worst_i, worst_j, outcome_worst};
        }
    });
    out.bound_holds = out.violations == 0;
    return out;
}

namespace {

// Bid vectors are ordered lexicographically with item 0 most
// significant and false < true, so increasing mask index enumerates
// them in lexicographic order and "smallest index wins ties" is exactly
// the documented tie-break.
void apply_mask(std::vector<bool>& row, std::uint64_t mask, int m) {
    for (int k = 0; k < m; ++k)
        row[k] = (mask >> (m - 1 - k)) & 1u;
}

std::uint64_t misreport_count(const Instance& instance, std::size_t misreport_cap) {
    const int m = instance.m();
    if (m >= 63 || (std::uint64_t(1) << m) > misreport_cap)
        throw GuardError("misreport search space 2^" + std::to_string(m) + " exceeds cap of " +
                         std::to_string(misreport_cap) + " bid vectors");
    return std::uint64_t(1) << m;
}

ManipulationReport finish_report(const Instance& instance, AgentId agent, Rational sincere,
                                 Rational best_value, std::uint64_t best_mask) {
    ManipulationReport out;
    out.agent = agent;
    out.sincere_value = std::move(sincere);
    out.best_value = std::move(best_value);
    out.gain = out.best_value - out.sincere_value;
    out.strategyproof_for_agent = out.gain <= 0;
    out.best_misreport.assign(instance.m(), false);
    std::vector<bool> row(instance.m(), false);
    apply_mask(row, best_mask, instance.m());
    out.best_misreport = row;
    return out;
}

} // namespace

ManipulationReport check_strategyproof_serial(const Instance& instance, MechanismKind kind,
                                              AgentId agent, std::size_t misreport_cap) {
    if (agent < 0 || agent >= instance.n())
        throw ValidationError("agent index out of range");
    const std::uint64_t total = misreport_count(instance, misreport_cap);
    const BidMatrix truthful = truthful_bids(instance);
    Rational sincere = agent_value(instance, kind, truthful, agent);

    BidMatrix work = truthful;
    Rational best_value(-1);
    std::uint64_t best_mask = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        apply_mask(work.bids[agent], mask, instance.m());
        Rational value = agent_value(instance, kind, work, agent);
        if (value > best_value) {
            best_value = std::move(value);
            best_mask = mask;
        }
    }
    return finish_report(instance, agent, std::move(sincere), std::move(best_value), best_mask);
}

ManipulationReport check_strategyproof(const Instance& instance, MechanismKind kind, AgentId agent,
                                       std::size_t misreport_cap, int threads) {
    if (agent < 0 || agent >= instance.n())
        throw ValidationError("agent index out of range");
    const std::uint64_t total = misreport_count(instance, misreport_cap);
    const BidMatrix truthful = truthful_bids(instance);
    Rational sincere = agent_value(instance, kind, truthful, agent);

    const int team = threads > 0 ? threads : omp_get_max_threads();
    std::vector<Rational> best_value(team, Rational(-1));
    std::vector<std::uint64_t> best_mask(team, 0);

#pragma omp parallel num_threads(team)
    {
        const int t = omp_get_thread_num();
        BidMatrix work = truthful;
        Rational local_best(-1);
        std::uint64_t local_mask = 0;
#pragma omp for schedule(static)
        for (long long mask = 0; mask < static_cast<long long>(total); ++mask) {
            apply_mask(work.bids[agent], static_cast<std::uint64_t>(mask), instance.m());
            Rational value = agent_value(instance, kind, work, agent);
            if (value > local_best) {
                local_best = std::move(value);
                local_mask = static_cast<std::uint64_t>(mask);
            }
        }
        best_value[t] = std::move(local_best);
        best_mask[t] = local_mask;
    }

    // merge by (value desc, mask asc): independent of the partitioning
    int winner = 0;
    for (int t = 1; t < team; ++t) {
        if (best_value[t] > best_value[winner] ||
            (best_value[t] == best_value[winner] && best_mask[t] < best_mask[winner]))
            winner = t;
    }
    return finish_report(instance, agent, std::move(sincere), std::move(best_value[winner]),
                         best_mask[winner]);
}

namespace {

struct AdaptiveSolver {
    const Instance& instance;
    MechanismKind kind;
    AgentId agent;
    std::size_t state_cap;

    std::vector<Rational> weights;
    std::vector<std::vector<AgentId>> others_by_round;  // truthful bidders without the agent
    std::vector<std::map<std::vector<int>, std::pair<Rational, bool>>> memo; // per round
    std::size_t states = 0;

    Rational value_of_bid(int round, const std::vector<int>& counts, bool bid) {
        std::vector<AgentId> bidders = others_by_round[round];
        if (bid) {
            bidders.insert(std::upper_bound(bidders.begin(), bidders.end(), agent), agent);
        }
        RoundDistribution dist = round_distribution(kind, counts, bidders, weights);
        Rational value(0);
        if (dist.discard_probability != 0)
            value += dist.discard_probability * solve(round + 1, counts);
        std::vector<int> child = counts;
        for (AgentId j = 0; j < instance.n(); ++j) {
            if (dist.probabilities[j] == 0)
                continue;
            ++child[j];
            Rational future = solve(round + 1, child);
            --child[j];
            if (j == agent)
                future += instance.utility(agent, round);
            value += dist.probabilities[j] * future;
        }
        return value;
    }

    Rational solve(int round, const std::vector<int>& counts) {
        if (round == instance.m())
            return Rational(0);
        auto& table = memo[round];
        if (auto it = table.find(counts); it != table.end())
            return it->second.first;
        if (++states > state_cap)
            throw GuardError("adaptive search exceeded state cap of " + std::to_string(state_cap));

        const bool truthful = instance.utility(agent, round) > 0;
        Rational best = value_of_bid(round, counts, truthful);
        bool best_bid = truthful;
        Rational other = value_of_bid(round, counts, !truthful);
        if (other > best) { // ties keep the truthful declaration
            best = std::move(other);
            best_bid = !truthful;
        }
        return table.emplace(counts, std::make_pair(std::move(best), best_bid))
            .first->second.first;
    }
};

} // namespace

AdaptiveReport best_adaptive_response(const Instance& instance, MechanismKind kind, AgentId agent,
                                      std::size_t state_cap) {
    if (agent < 0 || agent >= instance.n())
        throw ValidationError("agent index out of range");
    const BidMatrix truthful = truthful_bids(instance);

    AdaptiveSolver solver{instance, kind, agent, state_cap, instance.weights(), {}, {}, 0};
    solver.others_by_round.resize(instance.m());
    for (ItemId k = 0; k < instance.m(); ++k)
        for (AgentId j = 0; j < instance.n(); ++j)
            if (j != agent && truthful.at(j, k))
                solver.others_by_round[k].push_back(j);
    solver.memo.resize(instance.m());

    AdaptiveReport out;
    out.agent = agent;
    out.sincere_value = agent_value(instance, kind, truthful, agent);
    out.value = solver.solve(0, std::vector<int>(instance.n(), 0));
    out.gain = out.value - out.sincere_value;

    // walk the states reachable under optimal play, in (round, counts) order
    std::set<std::pair<int, std::vector<int>>> seen;
    std::vector<std::pair<int, std::vector<int>>> frontier = {{0, std::vector<int>(instance.n(), 0)}};
    while (!frontier.empty()) {
        auto [round, counts] = frontier.back();
        frontier.pop_back();
        if (round == instance.m() || !seen.emplace(round, counts).second)
            continue;
        const auto& entry = solver.memo[round].at(counts);
        out.decisions.push_back(AdaptiveDecision{round, counts, entry.second});

        std::vector<AgentId> bidders = solver.others_by_round[round];
        if (entry.second)
            bidders.insert(std::upper_bound(bidders.begin(), bidders.end(), agent), agent);
        RoundDistribution dist = round_distribution(kind, counts, bidders, solver.weights);
        if (dist.discard_probability != 0)
            frontier.emplace_back(round + 1, counts);
        for (AgentId j = 0; j < instance.n(); ++j) {
            if (dist.probabilities[j] == 0)
                continue;
            std::vector<int> child = counts;
            ++child[j];
            frontier.emplace_back(round + 1, std::move(child));
        }
    }
    std::sort(out.decisions.begin(), out.decisions.end(), [](const auto& a, const auto& b) {
        return std::tie(a.round, a.counts) < std::tie(b.round, b.counts);
    });
    return out;
}

} // namespace fairdiv
