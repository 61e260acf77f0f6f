#ifndef FAIRDIV_INSTANCE_HPP
#define FAIRDIV_INSTANCE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairdiv/rational.hpp"

namespace fairdiv {

// 0-based indexes into an instance's agent/item lists
using AgentId = int;
using ItemId = int;

struct Agent {
    std::string name;
    Rational weight; // entitlement, > 0
};

// One allocation problem: agents with entitlements, items in arrival
// order (round k presents items[k]), and a full utility matrix.
// Instances are immutable after validation and safe to share between
// threads.
struct Instance {
    std::vector<Agent> agents;
    std::vector<std::string> items;
    std::vector<std::vector<Rational>> utilities; // [agent][item], >= 0
    bool binary = false;                          // every utility in {0, 1}

    int n() const { return static_cast<int>(agents.size()); }
    int m() const { return static_cast<int>(items.size()); }
    const Rational& utility(AgentId j, ItemId k) const { return utilities[j][k]; }
    std::vector<Rational> weights() const;
    std::optional<AgentId> agent_index(std::string_view name) const;
};

// Checks every structural invariant (positive weights, nonnegative
// utilities, matching dimensions, unique names) and fills in the
// `binary` flag. The only way to obtain a usable Instance.
Instance validate_instance(std::vector<Agent> agents, std::vector<std::string> items,
                           std::vector<std::vector<Rational>> utilities);

// Per-agent, per-round like/dislike declarations, possibly untruthful.
struct BidMatrix {
    std::vector<std::vector<bool>> bids; // [agent][item]

    bool at(AgentId j, ItemId k) const { return bids[j][k]; }
    // agents bidding positively for item k, ascending by id
    std::vector<AgentId> bidders(ItemId k) const;
};

// bids[j][k] = (u_j(F_k) > 0)
BidMatrix truthful_bids(const Instance& instance);

// dimension check against the instance
void validate_bids(const Instance& instance, const BidMatrix& bids);

// Counts (and optionally bundles) after `round` items have been
// processed. The probability engine only ever needs the counts.
struct AllocationState {
    int round = 0;
    std::vector<int> counts;
    std::optional<std::vector<std::vector<ItemId>>> bundles;

    static AllocationState initial(int num_agents) {
        return AllocationState{0, std::vector<int>(num_agents, 0), std::nullopt};
    }
};

} // namespace fairdiv

#endif
