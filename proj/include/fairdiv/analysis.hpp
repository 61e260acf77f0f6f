#ifndef FAIRDIV_ANALYSIS_HPP
#define FAIRDIV_ANALYSIS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fairdiv/gametree.hpp"
#include "fairdiv/instance.hpp"
#include "fairdiv/mechanism.hpp"
#include "fairdiv/rational.hpp"

namespace fairdiv {

inline constexpr std::size_t kDefaultMisreportCap = std::size_t(1) << 20;
inline constexpr std::size_t kDefaultStateCap = 1'000'000;

// Weighted envy before randomness resolves, under sincere bidding:
// envy[i][j] = E[u_i(A_j)]/w_j - E[u_i(A_i)]/w_i. The mechanism is
// envy-free ex-ante on the instance iff every entry is <= 0.
struct EnvyReportExAnte {
    std::vector<std::vector<Rational>> envy;
    AgentId worst_i = 0;
    AgentId worst_j = 0;
    Rational worst_value;
    bool holds = true;
};

EnvyReportExAnte check_ef_ex_ante(const Instance& instance, MechanismKind kind);

// Worst realized weighted envy over the whole support, under sincere
// bidding, checked against a caller-supplied bound:
// u_i(A_j)/w_j <= u_i(A_i)/w_i + bound for every support outcome.
struct EnvyWitness {
    Outcome outcome;
    AgentId envious = 0;
    AgentId envied = 0;
    Rational envy;
};

struct EnvyReportExPost {
    Rational bound;
    bool bound_holds = true;
    EnvyWitness worst; // attained by the listed witness outcome
    std::size_t support_size = 0;
    std::size_t violations = 0; // outcomes whose worst envy exceeds the bound
};

EnvyReportExPost check_bounded_ef_ex_post(const Instance& instance, MechanismKind kind,
                                          const Rational& bound,
                                          std::size_t support_cap = kDefaultSupportCap);

// Exhaustive non-adaptive manipulation search: all 2^m bid vectors for
// one agent, everyone else truthful, value measured with the agent's
// true utilities. Ties between equally good misreports break toward the
// lexicographically smallest bid vector regardless of worker count.
struct ManipulationReport {
    AgentId agent = 0;
    Rational sincere_value;
    std::vector<bool> best_misreport;
    Rational best_value;
    Rational gain; // best_value - sincere_value, >= 0 by construction
    bool strategyproof_for_agent = true;
};

ManipulationReport check_strategyproof(const Instance& instance, MechanismKind kind, AgentId agent,
                                       std::size_t misreport_cap = kDefaultMisreportCap,
                                       int threads = 0);

// plain single-threaded loop kept as the reference for the OpenMP kernel
ManipulationReport check_strategyproof_serial(const Instance& instance, MechanismKind kind,
                                              AgentId agent,
                                              std::size_t misreport_cap = kDefaultMisreportCap);

// History-dependent manipulation by backward induction over
// (round, counts) states; dominates every non-adaptive misreport.
struct AdaptiveDecision {
    int round = 0;
    std::vector<int> counts;
    bool bid = false;
};

struct AdaptiveReport {
    AgentId agent = 0;
    Rational sincere_value;
    Rational value; // optimal adaptive expected utility
    Rational gain;
    // optimal bid at every state reachable under optimal play; ties
    // prefer the truthful bid
    std::vector<AdaptiveDecision> decisions;
};

AdaptiveReport best_adaptive_response(const Instance& instance, MechanismKind kind, AgentId agent,
                                      std::size_t state_cap = kDefaultStateCap);

} // namespace fairdiv

#endif
