#ifndef FAIRDIV_REPORT_IO_HPP
#define FAIRDIV_REPORT_IO_HPP

#include <string>

#include <json.hpp>

#include "fairdiv/analysis.hpp"
#include "fairdiv/gametree.hpp"
#include "fairdiv/instance.hpp"
#include "fairdiv/simulate.hpp"

namespace fairdiv {

// Report payloads in the two shapes every command emits: JSON with all
// rationals as "p/q" strings, and a plain-text rendering. Decimal
// columns are clearly marked approximations.

nlohmann::json expect_json(const Instance& instance, const ExpectedUtilityMatrix& expected,
                           const ReceiptProbabilities& receipts);
std::string expect_text(const Instance& instance, const ExpectedUtilityMatrix& expected,
                        const ReceiptProbabilities& receipts);

nlohmann::json distribution_json(const Instance& instance, const OutcomeDistribution& dist);
std::string distribution_text(const Instance& instance, const OutcomeDistribution& dist);

nlohmann::json ef_ante_json(const Instance& instance, const EnvyReportExAnte& report);
std::string ef_ante_text(const Instance& instance, const EnvyReportExAnte& report);

nlohmann::json ef_post_json(const Instance& instance, const EnvyReportExPost& report);
std::string ef_post_text(const Instance& instance, const EnvyReportExPost& report);

nlohmann::json manipulation_json(const Instance& instance, const ManipulationReport& report);
std::string manipulation_text(const Instance& instance, const ManipulationReport& report);

nlohmann::json adaptive_json(const Instance& instance, const AdaptiveReport& report);
std::string adaptive_text(const Instance& instance, const AdaptiveReport& report);

nlohmann::json stats_json(const Instance& instance, const SimulationStats& stats);
std::string stats_text(const Instance& instance, const SimulationStats& stats);
// one row per (agent, round): exact "p/q" frequency plus a decimal column
std::string stats_csv(const Instance& instance, const SimulationStats& stats);

nlohmann::json comparison_json(const Instance& instance, const ComparisonReport& report);
std::string comparison_text(const Instance& instance, const ComparisonReport& report);

// realized allocation of one episode
nlohmann::json episode_json(const Instance& instance, const std::vector<int>& recipients);
std::string episode_text(const Instance& instance, const std::vector<int>& recipients);

} // namespace fairdiv

#endif
