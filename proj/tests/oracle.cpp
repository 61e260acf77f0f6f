#include "oracle.hpp"

namespace oracle {

using fairdiv::AgentId;
using fairdiv::BidMatrix;
using fairdiv::Instance;
using fairdiv::ItemId;
using fairdiv::MechanismKind;
using fairdiv::Rational;

namespace {

struct Walker {
    const Instance& instance;
    MechanismKind kind;
    const BidMatrix& bids;
    NaiveResult result;
    std::vector<std::vector<ItemId>> bundles; // one set per agent, full history
    std::vector<int> recipients;

    // (feasible set, per-agent probability) recomputed from scratch at
    // every node, scores as plain rational divisions
    std::vector<Rational> node_probabilities(ItemId k) {
        const int n = instance.n();
        std::vector<AgentId> bidders;
        for (AgentId j = 0; j < n; ++j)
            if (bids.at(j, k))
                bidders.push_back(j);
        std::vector<Rational> probs(n, Rational(0));
        if (bidders.empty())
            return probs;

        if (kind == MechanismKind::WeightedLike) {
            Rational total(0);
            for (AgentId j : bidders)
                total += instance.agents[j].weight;
            for (AgentId j : bidders)
                probs[j] = instance.agents[j].weight / total;
            return probs;
        }

        std::vector<AgentId> feasible;
        if (kind == MechanismKind::Like) {
            feasible = bidders;
        } else {
            auto score = [&](AgentId j) {
                Rational s(static_cast<int>(bundles[j].size()));
                if (kind == MechanismKind::WeightedBalancedLike)
                    s /= instance.agents[j].weight;
                return s;
            };
            Rational best = score(bidders.front());
            for (AgentId j : bidders)
                if (score(j) < best)
                    best = score(j);
            for (AgentId j : bidders)
                if (score(j) == best)
                    feasible.push_back(j);
        }
        Rational share = Rational(1) / Rational(static_cast<int>(feasible.size()));
        for (AgentId j : feasible)
            probs[j] = share;
        return probs;
    }

    void walk(int round, const Rational& mass) {
        if (round == instance.m()) {
            ++result.leaves;
            result.outcomes[recipients] += mass;
            for (AgentId i = 0; i < instance.n(); ++i)
                for (AgentId j = 0; j < instance.n(); ++j)
                    for (ItemId item : bundles[j])
                        result.expected[i][j] += mass * instance.utility(i, item);
            return;
        }
        std::vector<Rational> probs = node_probabilities(round);
        Rational allocated(0);
        for (AgentId j = 0; j < instance.n(); ++j) {
            if (probs[j] == 0)
                continue;
            allocated += probs[j];
            Rational edge = mass * probs[j];
            result.receipt[round][j] += edge;
            recipients[round] = j;
            bundles[j].push_back(round);
            walk(round + 1, edge);
            bundles[j].pop_back();
            recipients[round] = -1;
        }
        Rational leftover = Rational(1) - allocated;
        if (leftover != 0) {
            result.discard[round] += mass * leftover;
            walk(round + 1, mass * leftover);
        }
    }
};

} // namespace

NaiveResult naive_full_tree(const Instance& instance, MechanismKind kind, const BidMatrix& bids) {
    Walker walker{instance, kind, bids, {}, {}, {}};
    walker.result.receipt.assign(instance.m(), std::vector<Rational>(instance.n(), Rational(0)));
    walker.result.discard.assign(instance.m(), Rational(0));
    walker.result.expected.assign(instance.n(), std::vector<Rational>(instance.n(), Rational(0)));
    walker.bundles.assign(instance.n(), {});
    walker.recipients.assign(instance.m(), -1);
    walker.walk(0, Rational(1));
    return walker.result;
}

} // namespace oracle
