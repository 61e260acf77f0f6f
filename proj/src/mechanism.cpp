#include "fairdiv/mechanism.hpp"

namespace fairdiv {

std::optional<MechanismKind> mechanism_from_name(std::string_view name) {
    if (name == "like")
        return MechanismKind::Like;
    if (name == "balanced-like")
        return MechanismKind::BalancedLike;
    if (name == "weighted-like")
        return MechanismKind::WeightedLike;
    if (name == "weighted-balanced-like")
        return MechanismKind::WeightedBalancedLike;
    return std::nullopt;
}

std::string_view mechanism_name(MechanismKind kind) {
    switch (kind) {
    case MechanismKind::Like: return "like";
    case MechanismKind::BalancedLike: return "balanced-like";
    case MechanismKind::WeightedLike: return "weighted-like";
    case MechanismKind::WeightedBalancedLike: return "weighted-balanced-like";
    }
    return "?";
}

const std::vector<MechanismKind>& all_mechanisms() {
    static const std::vector<MechanismKind> kinds = {
        MechanismKind::Like,
        MechanismKind::BalancedLike,
        MechanismKind::WeightedLike,
        MechanismKind::WeightedBalancedLike,
    };
    return kinds;
}

int compare_load(int count_a, const Rational& weight_a, int count_b, const Rational& weight_b) {
    // c_a / (p_a/q_a) vs c_b / (p_b/q_b)  <=>  c_a q_a p_b vs c_b q_b p_a,
    // valid because the weight numerators are positive
    BigInt lhs = BigInt(count_a) * denominator(weight_a) * numerator(weight_b);
    BigInt rhs = BigInt(count_b) * denominator(weight_b) * numerator(weight_a);
    if (lhs < rhs)
        return -1;
    if (lhs > rhs)
        return 1;
    return 0;
}

std::vector<AgentId> feasible_agents(MechanismKind kind, std::span<const int> counts,
                                     std::span<const AgentId> bidders,
                                     std::span<const Rational> weights) {
    if (bidders.empty())
        return {};
    switch (kind) {
    case MechanismKind::Like:
    case MechanismKind::WeightedLike:
        return {bidders.begin(), bidders.end()};
    case MechanismKind::BalancedLike: {
        int best = counts[bidders.front()];
        for (AgentId j : bidders)
            if (counts[j] < best)
                best = counts[j];
        std::vector<AgentId> out;
        for (AgentId j : bidders)
            if (counts[j] == best)
                out.push_back(j);
        return out;
    }
    case MechanismKind::WeightedBalancedLike: {
        AgentId best = bidders.front();
        for (AgentId j : bidders)
            if (compare_load(counts[j], weights[j], counts[best], weights[best]) < 0)
                best = j;
        std::vector<AgentId> out;
        for (AgentId j : bidders)
            if (compare_load(counts[j], weights[j], counts[best], weights[best]) == 0)
                out.push_back(j);
        return out;
    }
    }
    return {};
}

RoundDistribution round_distribution(MechanismKind kind, std::span<const int> counts,
                                     std::span<const AgentId> bidders,
                                     std::span<const Rational> weights) {
    RoundDistribution out;
    out.probabilities.assign(counts.size(), Rational(0));
    if (bidders.empty()) {
        out.discard_probability = 1;
        return out;
    }
    out.discard_probability = 0;

    if (kind == MechanismKind::WeightedLike) {
        Rational total(0);
        for (AgentId j : bidders)
            total += weights[j];
        for (AgentId j : bidders)
            out.probabilities[j] = weights[j] / total;
        return out;
    }

    std::vector<AgentId> feasible = feasible_agents(kind, counts, bidders, weights);
    Rational share = Rational(1) / Rational(static_cast<int>(feasible.size()));
    for (AgentId j : feasible)
        out.probabilities[j] = share;
    return out;
}

std::vector<AgentId> feasible_agents(MechanismKind kind, const AllocationState& state,
                                     std::span<const AgentId> bidders,
                                     std::span<const Rational> weights) {
    return feasible_agents(kind, std::span<const int>(state.counts), bidders, weights);
}

RoundDistribution round_distribution(MechanismKind kind, const AllocationState& state,
                                     std::span<const AgentId> bidders,
                                     std::span<const Rational> weights) {
    return round_distribution(kind, std::span<const int>(state.counts), bidders, weights);
}

} // namespace fairdiv
