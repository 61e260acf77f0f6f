#ifndef FAIRDIV_GAMETREE_HPP
#define FAIRDIV_GAMETREE_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/mechanism.hpp"
#include "fairdiv/rational.hpp"

namespace fairdiv {

inline constexpr std::size_t kDefaultSupportCap = 1'000'000;
inline constexpr std::size_t kDefaultTreeDumpCap = 10'000;

// Exact per-round receipt probabilities: by_round[k][j] is the total
// probability mass of histories in which agent j receives item k.
// by_round[k] plus discard[k] sums to exactly 1.
struct ReceiptProbabilities {
    std::vector<std::vector<Rational>> by_round;
    std::vector<Rational> discard;
};

// Computed by a forward pass over (round, counts) states. Two histories
// with equal counts at the same round induce identical futures for all
// four mechanisms, so aggregating mass per counts vector is lossless;
// the LIKE family does not even depend on the counts and takes a
// closed-form per-round path.
ReceiptProbabilities receipt_probabilities(const Instance& instance, MechanismKind kind,
                                           const BidMatrix& bids);

Rational receipt_probability(const Instance& instance, MechanismKind kind, const BidMatrix& bids,
                             AgentId agent, int round);

// values[i][j] = E[u_i(A_j)] = sum over rounds of P(F_k, j) * u_i(F_k)
struct ExpectedUtilityMatrix {
    std::vector<std::vector<Rational>> values;
};

ExpectedUtilityMatrix expected_utilities(const Instance& instance, MechanismKind kind,
                                         const BidMatrix& bids);

// The manipulator's yardstick: the agent's true expected utility for
// her own allocation under the given (possibly untruthful) bids.
Rational agent_value(const Instance& instance, MechanismKind kind, const BidMatrix& bids,
                     AgentId agent);

// One final allocation: recipients[k] is the agent holding item k, or
// kDiscarded when nobody bid for it.
inline constexpr int kDiscarded = -1;

struct Outcome {
    std::vector<int> recipients;
    Rational probability;

    std::vector<std::vector<ItemId>> bundles(int num_agents) const;
    // true utility of `viewer` for the bundle assigned to `owner`
    Rational bundle_utility(const Instance& instance, AgentId viewer, AgentId owner) const;
};

// Visits every final allocation of nonzero probability exactly once
// (root-to-leaf paths are in bijection with final allocations; a
// discarded round never branches). Throws GuardError past support_cap.
void for_each_outcome(const Instance& instance, MechanismKind kind, const BidMatrix& bids,
                      std::size_t support_cap, const std::function<void(const Outcome&)>& visit);

struct OutcomeDistribution {
    std::vector<Outcome> support; // probabilities sum to exactly 1
};

OutcomeDistribution outcome_distribution(const Instance& instance, MechanismKind kind,
                                         const BidMatrix& bids,
                                         std::size_t support_cap = kDefaultSupportCap);

// DOT rendering of the explicit (n+1)-ary game tree, zero-probability
// edges included, nodes labeled "(k, c1/w1, ..., cn/wn)" and edges
// labeled with exact probabilities. Refuses instances whose leaf count
// (n+1)^m exceeds max_leaves.
std::string game_tree_dot(const Instance& instance, MechanismKind kind, const BidMatrix& bids,
                          std::size_t max_leaves = kDefaultTreeDumpCap);

} // namespace fairdiv

#endif
