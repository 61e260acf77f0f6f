#include "fairdiv/instance.hpp"

#include <unordered_set>
#include <utility>

#include "fairdiv/errors.hpp"

namespace fairdiv {

std::vector<Rational> Instance::weights() const {
    std::vector<Rational> out;
    out.reserve(agents.size());
    for (const Agent& a : agents)
        out.push_back(a.weight);
    return out;
}

std::optional<AgentId> Instance::agent_index(std::string_view name) const {
    for (std::size_t j = 0; j < agents.size(); ++j)
        if (agents[j].name == name)
            return static_cast<AgentId>(j);
    return std::nullopt;
}

Instance validate_instance(std::vector<Agent> agents, std::vector<std::string> items,
                           std::vector<std::vector<Rational>> utilities) {
    if (agents.empty())
        throw ValidationError("instance has zero agents");
    if (items.empty())
        throw ValidationError("instance has zero items");

    std::unordered_set<std::string> seen;
    for (const Agent& a : agents) {
        if (a.weight <= 0)
            throw ValidationError("non-positive weight for agent '" + a.name + "'");
        if (!seen.insert(a.name).second)
            throw ValidationError("duplicate agent name '" + a.name + "'");
    }
    seen.clear();
    for (const std::string& item : items)
        if (!seen.insert(item).second)
            throw ValidationError("duplicate item name '" + item + "'");

    if (utilities.size() != agents.size())
        throw ValidationError("dimension mismatch: " + std::to_string(utilities.size()) +
                              " utility rows for " + std::to_string(agents.size()) + " agents");

    bool binary = true;
    for (std::size_t j = 0; j < utilities.size(); ++j) {
        if (utilities[j].size() != items.size())
            throw ValidationError("dimension mismatch: utility row for agent '" + agents[j].name +
                                  "' has " + std::to_string(utilities[j].size()) + " entries for " +
                                  std::to_string(items.size()) + " items");
        for (const Rational& u : utilities[j]) {
            if (u < 0)
                throw ValidationError("negative utility for agent '" + agents[j].name + "'");
            if (u != 0 && u != 1)
                binary = false;
        }
    }

    Instance out;
    out.agents = std::move(agents);
    out.items = std::move(items);
    out.utilities = std::move(utilities);
    out.binary = binary;
    return out;
}

std::vector<AgentId> BidMatrix::bidders(ItemId k) const {
    std::vector<AgentId> out;
    for (std::size_t j = 0; j < bids.size(); ++j)
        if (bids[j][k])
            out.push_back(static_cast<AgentId>(j));
    return out;
}

BidMatrix truthful_bids(const Instance& instance) {
    BidMatrix out;
    out.bids.resize(instance.n());
    for (AgentId j = 0; j < instance.n(); ++j) {
        out.bids[j].resize(instance.m());
        for (ItemId k = 0; k < instance.m(); ++k)
            out.bids[j][k] = instance.utility(j, k) > 0;
    }
    return out;
}

void validate_bids(const Instance& instance, const BidMatrix& bids) {
    if (bids.bids.size() != static_cast<std::size_t>(instance.n()))
        throw ValidationError("bid matrix has " + std::to_string(bids.bids.size()) +
                              " rows for " + std::to_string(instance.n()) + " agents");
    for (std::size_t j = 0; j < bids.bids.size(); ++j)
        if (bids.bids[j].size() != static_cast<std::size_t>(instance.m()))
            throw ValidationError("bid row " + std::to_string(j) + " has " +
                                  std::to_string(bids.bids[j].size()) + " entries for " +
                                  std::to_string(instance.m()) + " items");
}

} // namespace fairdiv
