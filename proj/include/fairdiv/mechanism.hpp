#ifndef FAIRDIV_MECHANISM_HPP
#define FAIRDIV_MECHANISM_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/rational.hpp"

namespace fairdiv {

enum class MechanismKind {
    Like,                 // uniform over bidders
    BalancedLike,         // uniform over bidders holding the fewest items
    WeightedLike,         // bidder i wins with probability w_i / sum of bidder weights
    WeightedBalancedLike, // uniform over bidders minimizing items-held / weight
};

// canonical CLI / config spellings: "like", "balanced-like",
// "weighted-like", "weighted-balanced-like"
std::optional<MechanismKind> mechanism_from_name(std::string_view name);
std::string_view mechanism_name(MechanismKind kind);
const std::vector<MechanismKind>& all_mechanisms();

// Exact probability of each agent receiving the arriving item.
// Probabilities sum to 1 with the discard mass; discard is 1 exactly
// when nobody bids and 0 otherwise.
struct RoundDistribution {
    std::vector<Rational> probabilities; // one per agent, 0 for non-receivers
    Rational discard_probability;
};

// three-way comparison of the load scores counts[a]/w_a vs counts[b]/w_b
// by integer cross-multiplication; weights are positive
int compare_load(int count_a, const Rational& weight_a, int count_b, const Rational& weight_b);

// The agents who may receive the item this round: all bidders for the
// LIKE family, the count-argmin (resp. count/weight-argmin) among
// bidders for the balanced variants. Empty bidders give an empty set.
std::vector<AgentId> feasible_agents(MechanismKind kind, std::span<const int> counts,
                                     std::span<const AgentId> bidders,
                                     std::span<const Rational> weights);

RoundDistribution round_distribution(MechanismKind kind, std::span<const int> counts,
                                     std::span<const AgentId> bidders,
                                     std::span<const Rational> weights);

// AllocationState overloads for callers that carry full states around
std::vector<AgentId> feasible_agents(MechanismKind kind, const AllocationState& state,
                                     std::span<const AgentId> bidders,
                                     std::span<const Rational> weights);
RoundDistribution round_distribution(MechanismKind kind, const AllocationState& state,
                                     std::span<const AgentId> bidders,
                                     std::span<const Rational> weights);

} // namespace fairdiv

#endif
