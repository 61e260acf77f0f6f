#include "fairdiv/gametree.hpp"

#include <map>
#include <sstream>

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

// closed form for mechanisms whose round rule ignores the counts
bool history_free(MechanismKind kind) {
    return kind == MechanismKind::Like || kind == MechanismKind::WeightedLike;
}

ReceiptProbabilities history_free_receipts(const Instance& instance, MechanismKind kind,
                                           const BidMatrix& bids) {
    const auto weights = instance.weights();
    const std::vector<int> zero_counts(instance.n(), 0);
    ReceiptProbabilities out;
    out.by_round.resize(instance.m());
    out.discard.resize(instance.m());
    for (ItemId k = 0; k < instance.m(); ++k) {
        const auto bidders = bids.bidders(k);
        RoundDistribution dist = round_distribution(kind, zero_counts, bidders, weights);
        out.by_round[k] = std::move(dist.probabilities);
        out.discard[k] = std::move(dist.discard_probability);
    }
    return out;
}

} // namespace

ReceiptProbabilities receipt_probabilities(const Instance& instance, MechanismKind kind,
                                           const BidMatrix& bids) {
    validate_bids(instance, bids);
    if (history_free(kind))
        return history_free_receipts(instance, kind, bids);

    const auto weights = instance.weights();
    const int n = instance.n();
    const int m = instance.m();

    ReceiptProbabilities out;
    out.by_round.assign(m, std::vector<Rational>(n, Rational(0)));
    out.discard.assign(m, Rational(0));

    // probability mass per counts vector; ordered map keeps every pass
    // deterministic
    std::map<std::vector<int>, Rational> states;
    states[std::vector<int>(n, 0)] = 1;

    for (ItemId k = 0; k < m; ++k) {
        const auto bidders = bids.bidders(k);
        std::map<std::vector<int>, Rational> next;
        for (const auto& [counts, mass] : states) {
            RoundDistribution dist = round_distribution(kind, counts, bidders, weights);
            if (dist.discard_probability != 0) {
                out.discard[k] += mass * dist.discard_probability;
                next[counts] += mass * dist.discard_probability;
            }
            for (AgentId j = 0; j < n; ++j) {
                if (dist.probabilities[j] == 0)
                    continue;
                Rational edge = mass * dist.probabilities[j];
                out.by_round[k][j] += edge;
                std::vector<int> child = counts;
                ++child[j];
                next[std::move(child)] += edge;
            }
        }
        states = std::move(next);
    }
    return out;
}

Rational receipt_probability(const Instance& instance, MechanismKind kind, const BidMatrix& bids,
                             AgentId agent, int round) {
    if (agent < 0 || agent >= instance.n())
        throw ValidationError("agent index out of range");
    if (round < 0 || round >= instance.m())
        throw ValidationError("round index out of range");
    return receipt_probabilities(instance, kind, bids).by_round[round][agent];
}

ExpectedUtilityMatrix expected_utilities(const Instance& instance, MechanismKind kind,
                                         const BidMatrix& bids) {
    const ReceiptProbabilities receipts = receipt_probabilities(instance, kind, bids);
    const int n = instance.n();
    ExpectedUtilityMatrix out;
    out.values.assign(n, std::vector<Rational>(n, Rational(0)));
    for (AgentId i = 0; i < n; ++i)
        for (AgentId j = 0; j < n; ++j)
            for (ItemId k = 0; k < instance.m(); ++k)
                if (instance.utility(i, k) != 0 && receipts.by_round[k][j] != 0)
                    out.values[i][j] += receipts.by_round[k][j] * instance.utility(i, k);
    return out;
}

Rational agent_value(const Instance& instance, MechanismKind kind, const BidMatrix& bids,
                     AgentId agent) {
    const ReceiptProbabilities receipts = receipt_probabilities(instance, kind, bids);
    Rational value(0);
    for (ItemId k = 0; k < instance.m(); ++k)
        if (instance.utility(agent, k) != 0 && receipts.by_round[k][agent] != 0)
            value += receipts.by_round[k][agent] * instance.utility(agent, k);
    return value;
}

std::vector<std::vector<ItemId>> Outcome::bundles(int num_agents) const {
    std::vector<std::vector<ItemId>> out(num_agents);
    for (std::size_t k = 0; k < recipients.size(); ++k)
        if (recipients[k] != kDiscarded)
            out[recipients[k]].push_back(static_cast<ItemId>(k));
    return out;
}

Rational Outcome::bundle_utility(const Instance& instance, AgentId viewer, AgentId owner) const {
    Rational total(0);
    for (std::size_t k = 0; k < recipients.size(); ++k)
        if (recipients[k] == owner)
            total += instance.utility(viewer, static_cast<ItemId>(k));
    return total;
}

namespace {

struct OutcomeWalker {
    const Instance& instance;
    MechanismKind kind;
    const BidMatrix& bids;
    std::size_t support_cap;
    const std::function<void(const Outcome&)>& visit;

    std::vector<Rational> weights;
    std::vector<std::vector<AgentId>> bidders_by_round;
    std::vector<int> counts;
    std::vector<int> recipients;
    std::size_t emitted = 0;

    void walk(int round, const Rational& mass) {
        if (round == instance.m()) {
            if (++emitted > support_cap)
                throw GuardError("support cap of " + std::to_string(support_cap) +
                                 " outcomes exceeded");
            visit(Outcome{recipients, mass});
            return;
        }
        RoundDistribution dist =
            round_distribution(kind, counts, bidders_by_round[round], weights);
        if (dist.discard_probability != 0) {
            // nobody bid: the item is discarded with certainty
            recipients[round] = kDiscarded;
            walk(round + 1, mass);
            return;
        }
        for (AgentId j = 0; j < instance.n(); ++j) {
            if (dist.probabilities[j] == 0)
                continue;
            recipients[round] = j;
            ++counts[j];
            walk(round + 1, mass * dist.probabilities[j]);
            --counts[j];
        }
        recipients[round] = kDiscarded;
    }
};

} // namespace

void for_each_outcome(const Instance& instance, MechanismKind kind, const BidMatrix& bids,
                      std::size_t support_cap, const std::function<void(const Outcome&)>& visit) {
    validate_bids(instance, bids);
    OutcomeWalker walker{instance, kind, bids, support_cap, visit,
                         instance.weights(),
                         {},
                         std::vector<int>(instance.n(), 0),
                         std::vector<int>(instance.m(), kDiscarded)};
    walker.bidders_by_round.reserve(instance.m());
    for (ItemId k = 0; k < instance.m(); ++k)
        walker.bidders_by_round.push_back(bids.bidders(k));
    walker.walk(0, Rational(1));
}

OutcomeDistribution outcome_distribution(const Instance& instance, MechanismKind kind,
                                         const BidMatrix& bids, std::size_t support_cap) {
    OutcomeDistribution out;
    for_each_outcome(instance, kind, bids, support_cap,
                     [&](const Outcome& o) { out.support.push_back(o); });
    return out;
}

namespace {

std::string weight_label(const Rational& w) {
    std::string s = format_rational(w);
    if (s.find('/') != std::string::npos)
        return "(" + s + ")";
    return s;
}

std::string node_label(int round, const std::vector<int>& counts,
                       const std::vector<Rational>& weights) {
    std::string label = "(" + std::to_string(round);
    for (std::size_t j = 0; j < counts.size(); ++j)
        label += ", " + std::to_string(counts[j]) + "/" + weight_label(weights[j]);
    label += ")";
    return label;
}

struct DotWriter {
    const Instance& instance;
    MechanismKind kind;
    std::vector<Rational> weights;
    std::vector<std::vector<AgentId>> bidders_by_round;
    std::ostringstream os;
    int next_id = 0;

    // full (n+1)-ary expansion: one child per agent plus the "nobody
    // received it" child, zero-probability edges shown like the figures
    int emit(int round, std::vector<int>& counts) {
        int id = next_id++;
        os << "  n" << id << " [label=\"" << node_label(round, counts, weights) << "\"];\n";
        if (round == instance.m())
            return id;
        RoundDistribution dist =
            round_distribution(kind, counts, bidders_by_round[round], weights);
        for (AgentId j = 0; j < instance.n(); ++j) {
            ++counts[j];
            int child = emit(round + 1, counts);
            --counts[j];
            os << "  n" << id << " -> n" << child << " [label=\""
               << format_rational(dist.probabilities[j]) << "\"];\n";
        }
        int child = emit(round + 1, counts);
        os << "  n" << id << " -> n" << child << " [label=\""
           << format_rational(dist.discard_probability) << "\"];\n";
        return id;
    }
};

} // namespace

std::string game_tree_dot(const Instance& instance, MechanismKind kind, const BidMatrix& bids,
                          std::size_t max_leaves) {
    validate_bids(instance, bids);
    BigInt leaves = 1;
    for (int k = 0; k < instance.m(); ++k)
        leaves *= instance.n() + 1;
    if (leaves > max_leaves)
        throw GuardError("tree dump refused: (n+1)^m = " + leaves.str() + " leaves exceeds " +
                         std::to_string(max_leaves));

    DotWriter writer{instance, kind, instance.weights(), {}};
    for (ItemId k = 0; k < instance.m(); ++k)
        writer.bidders_by_round.push_back(bids.bidders(k));
    writer.os << "digraph gametree {\n  node [shape=ellipse];\n";
    std::vector<int> counts(instance.n(), 0);
    writer.emit(0, counts);
    writer.os << "}\n";
    return writer.os.str();
}

} // namespace fairdiv
