#include "fairdiv/report_io.hpp"

#include <iomanip>
#include <sstream>

namespace fairdiv {

namespace {

using nlohmann::json;

std::string agent_name(const Instance& instance, AgentId j) {
    return instance.agents[j].name;
}

std::string recipient_name(const Instance& instance, int recipient) {
    return recipient == kDiscarded ? std::string("-") : agent_name(instance, recipient);
}

json rational_matrix_json(const std::vector<std::vector<Rational>>& matrix) {
    json rows = json::array();
    for (const auto& row : matrix) {
        json r = json::array();
        for (const Rational& v : row)
            r.push_back(format_rational(v));
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string outcome_brief(const Instance& instance, const Outcome& outcome) {
    std::ostringstream os;
    auto bundles = outcome.bundles(instance.n());
    for (AgentId j = 0; j < instance.n(); ++j) {
        if (j)
            os << "  ";
        os << agent_name(instance, j) << ":{";
        for (std::size_t t = 0; t < bundles[j].size(); ++t) {
            if (t)
                os << ",";
            os << instance.items[bundles[j][t]];
        }
        os << "}";
    }
    return os.str();
}

json outcome_json(const Instance& instance, const Outcome& outcome) {
    json recipients = json::array();
    for (int r : outcome.recipients)
        recipients.push_back(recipient_name(instance, r));
    return json{{"recipients", std::move(recipients)},
                {"probability", format_rational(outcome.probability)},
                {"probability_approx", approx(outcome.probability)}};
}

} // namespace

json expect_json(const Instance& instance, const ExpectedUtilityMatrix& expected,
                 const ReceiptProbabilities& receipts) {
    json receipt_rows = json::array();
    for (std::size_t k = 0; k < receipts.by_round.size(); ++k) {
        json row = json::array();
        for (const Rational& p : receipts.by_round[k])
            row.push_back(format_rational(p));
        receipt_rows.push_back(json{{"item", instance.items[k]},
                                    {"probabilities", std::move(row)},
                                    {"discard", format_rational(receipts.discard[k])}});
    }
    return json{{"agents", [&] {
                     json names = json::array();
                     for (const Agent& a : instance.agents)
                         names.push_back(a.name);
                     return names;
                 }()},
                {"expected_utilities", rational_matrix_json(expected.values)},
                {"receipt_probabilities", std::move(receipt_rows)}};
}

std::string expect_text(const Instance& instance, const ExpectedUtilityMatrix& expected,
                        const ReceiptProbabilities& receipts) {
    std::ostringstream os;
    os << "expected utilities E[u_i(A_j)], rows i = valuer, cols j = holder\n";
    os << std::left << std::setw(10) << "";
    for (const Agent& a : instance.agents)
        os << std::setw(12) << a.name;
    os << "\n";
    for (AgentId i = 0; i < instance.n(); ++i) {
        os << std::setw(10) << agent_name(instance, i);
        for (AgentId j = 0; j < instance.n(); ++j)
            os << std::setw(12) << format_rational(expected.values[i][j]);
        os << "\n";
    }
    os << "\nreceipt probabilities P(item, agent)\n";
    os << std::setw(10) << "item";
    for (const Agent& a : instance.agents)
        os << std::setw(12) << a.name;
    os << std::setw(12) << "discard" << "\n";
    for (std::size_t k = 0; k < receipts.by_round.size(); ++k) {
        os << std::setw(10) << instance.items[k];
        for (const Rational& p : receipts.by_round[k])
            os << std::setw(12) << format_rational(p);
        os << std::setw(12) << format_rational(receipts.discard[k]) << "\n";
    }
    return os.str();
}

json distribution_json(const Instance& instance, const OutcomeDistribution& dist) {
    json outcomes = json::array();
    for (const Outcome& o : dist.support)
        outcomes.push_back(outcome_json(instance, o));
    return json{{"support_size", dist.support.size()}, {"outcomes", std::move(outcomes)}};
}

std::string distribution_text(const Instance& instance, const OutcomeDistribution& dist) {
    std::ostringstream os;
    os << dist.support.size() << " outcomes\n";
    for (const Outcome& o : dist.support)
        os << std::left << std::setw(12) << format_rational(o.probability)
           << outcome_brief(instance, o) << "\n";
    return os.str();
}

json ef_ante_json(const Instance& instance, const EnvyReportExAnte& report) {
    return json{{"envy", rational_matrix_json(report.envy)},
                {"holds", report.holds},
                {"worst", json{{"envious", agent_name(instance, report.worst_i)},
                               {"envied", agent_name(instance, report.worst_j)},
                               {"value", format_rational(report.worst_value)}}}};
}

std::string ef_ante_text(const Instance& instance, const EnvyReportExAnte& report) {
    std::ostringstream os;
    os << "weighted envy ex-ante e(i,j) = E[u_i(A_j)]/w_j - E[u_i(A_i)]/w_i\n";
    os << std::left << std::setw(10) << "";
    for (const Agent& a : instance.agents)
        os << std::setw(12) << a.name;
    os << "\n";
    for (AgentId i = 0; i < instance.n(); ++i) {
        os << std::setw(10) << agent_name(instance, i);
        for (AgentId j = 0; j < instance.n(); ++j)
            os << std::setw(12) << format_rational(report.envy[i][j]);
        os << "\n";
    }
    os << "\nenvy-free ex-ante: " << (report.holds ? "holds" : "VIOLATED") << "\n";
    if (!report.holds)
        os << "worst pair: " << agent_name(instance, report.worst_i) << " envies "
           << agent_name(instance, report.worst_j) << " by "
           << format_rational(report.worst_value) << "\n";
    return os.str();
}

json ef_post_json(const Instance& instance, const EnvyReportExPost& report) {
    return json{{"bound", format_rational(report.bound)},
                {"holds", report.bound_holds},
                {"support_size", report.support_size},
                {"violations", report.violations},
                {"worst", json{{"envious", agent_name(instance, report.worst.envious)},
                               {"envied", agent_name(instance, report.worst.envied)},
                               {"envy", format_rational(report.worst.envy)},
                               {"outcome", outcome_json(instance, report.worst.outcome)}}}};
}

std::string ef_post_text(const Instance& instance, const EnvyReportExPost& report) {
    std::ostringstream os;
    os << "bounded envy ex-post, bound " << format_rational(report.bound) << ": "
       << (report.bound_holds ? "holds" : "VIOLATED") << "\n";
    os << "support size " << report.support_size << ", violating outcomes " << report.violations
       << "\n";
    os << "worst envy " << format_rational(report.worst.envy) << " ("
       << agent_name(instance, report.worst.envious) << " toward "
       << agent_name(instance, report.worst.envied) << ") in outcome\n  "
       << outcome_brief(instance, report.worst.outcome) << "  [p = "
       << format_rational(report.worst.outcome.probability) << "]\n";
    return os.str();
}

namespace {

json bid_row_json(const Instance& instance, const std::vector<bool>& row) {
    json liked = json::array();
    for (std::size_t k = 0; k < row.size(); ++k)
        if (row[k])
            liked.push_back(instance.items[k]);
    return json{{"vector", row}, {"items", std::move(liked)}};
}

std::string bid_row_text(const Instance& instance, const std::vector<bool>& row) {
    std::string out = "{";
    bool first = true;
    for (std::size_t k = 0; k < row.size(); ++k) {
        if (!row[k])
            continue;
        if (!first)
            out += ",";
        out += instance.items[k];
        first = false;
    }
    return out + "}";
}

} // namespace

json manipulation_json(const Instance& instance, const ManipulationReport& report) {
    return json{{"agent", agent_name(instance, report.agent)},
                {"sincere_value", format_rational(report.sincere_value)},
                {"best_value", format_rational(report.best_value)},
                {"gain", format_rational(report.gain)},
                {"strategyproof", report.strategyproof_for_agent},
                {"best_misreport", bid_row_json(instance, report.best_misreport)}};
}

std::string manipulation_text(const Instance& instance, const ManipulationReport& report) {
    std::ostringstream os;
    os << "agent " << agent_name(instance, report.agent) << ": sincere value "
       << format_rational(report.sincere_value) << ", best misreport "
       << bid_row_text(instance, report.best_misreport) << " worth "
       << format_rational(report.best_value) << ", gain " << format_rational(report.gain)
       << (report.strategyproof_for_agent ? " (no profitable misreport)"
                                          : " (MANIPULABLE)")
       << "\n";
    return os.str();
}

json adaptive_json(const Instance& instance, const AdaptiveReport& report) {
    json decisions = json::array();
    for (const AdaptiveDecision& d : report.decisions)
        decisions.push_back(json{{"round", d.round}, {"counts", d.counts}, {"bid", d.bid}});
    return json{{"agent", agent_name(instance, report.agent)},
                {"sincere_value", format_rational(report.sincere_value)},
                {"adaptive_value", format_rational(report.value)},
                {"gain", format_rational(report.gain)},
                {"decisions", std::move(decisions)}};
}

std::string adaptive_text(const Instance& instance, const AdaptiveReport& report) {
    std::ostringstream os;
    os << "agent " << agent_name(instance, report.agent) << ": sincere value "
       << format_rational(report.sincere_value) << ", best adaptive value "
       << format_rational(report.value) << ", gain " << format_rational(report.gain) << "\n";
    os << "optimal bids along reachable states (round: counts -> bid)\n";
    for (const AdaptiveDecision& d : report.decisions) {
        os << "  " << d.round << ": (";
        for (std::size_t j = 0; j < d.counts.size(); ++j)
            os << (j ? "," : "") << d.counts[j];
        os << ") -> " << (d.bid ? "bid" : "pass") << "\n";
    }
    return os.str();
}

json stats_json(const Instance& instance, const SimulationStats& stats) {
    json rounds = json::array();
    for (int k = 0; k < instance.m(); ++k) {
        json freq = json::array();
        for (AgentId j = 0; j < instance.n(); ++j)
            freq.push_back(format_rational(stats.receipt_frequency(k, j)));
        rounds.push_back(json{{"item", instance.items[k]},
                              {"frequencies", std::move(freq)},
                              {"discard", format_rational(stats.discard_frequency(k))}});
    }
    json means = json::array();
    for (AgentId j = 0; j < instance.n(); ++j)
        means.push_back(json{{"agent", agent_name(instance, j)},
                             {"mean_own_utility", format_rational(stats.mean_own_utility(j))},
                             {"mean_own_utility_approx", approx(stats.mean_own_utility(j))}});
    return json{{"runs", stats.runs},
                {"receipt_frequencies", std::move(rounds)},
                {"own_utilities", std::move(means)}};
}

std::string stats_text(const Instance& instance, const SimulationStats& stats) {
    std::ostringstream os;
    os << stats.runs << " runs\n\nreceipt frequencies\n";
    os << std::left << std::setw(10) << "item";
    for (const Agent& a : instance.agents)
        os << std::setw(14) << a.name;
    os << std::setw(14) << "discard" << "\n";
    for (int k = 0; k < instance.m(); ++k) {
        os << std::setw(10) << instance.items[k];
        for (AgentId j = 0; j < instance.n(); ++j)
            os << std::setw(14) << format_rational(stats.receipt_frequency(k, j));
        os << std::setw(14) << format_rational(stats.discard_frequency(k)) << "\n";
    }
    os << "\nmean own-bundle utility (approx in parentheses)\n";
    for (AgentId j = 0; j < instance.n(); ++j)
        os << "  " << agent_name(instance, j) << ": "
           << format_rational(stats.mean_own_utility(j)) << " ("
           << approx(stats.mean_own_utility(j)) << ")\n";
    return os.str();
}

std::string stats_csv(const Instance& instance, const SimulationStats& stats) {
    std::ostringstream os;
    os << "agent,round,item,frequency,frequency_approx\n";
    for (int k = 0; k < instance.m(); ++k) {
        for (AgentId j = 0; j < instance.n(); ++j) {
            Rational f = stats.receipt_frequency(k, j);
            os << agent_name(instance, j) << "," << k << "," << instance.items[k] << ","
               << format_rational(f) << "," << approx(f) << "\n";
        }
        Rational d = stats.discard_frequency(k);
        os << "-," << k << "," << instance.items[k] << "," << format_rational(d) << ","
           << approx(d) << "\n";
    }
    return os.str();
}

json comparison_json(const Instance& instance, const ComparisonReport& report) {
    json freq = json::array();
    for (const FrequencyCell& c : report.frequencies)
        freq.push_back(json{{"agent", agent_name(instance, c.agent)},
                            {"round", c.round},
                            {"exact", format_rational(c.exact)},
                            {"empirical", format_rational(c.empirical)},
                            {"abs_error_approx", c.abs_error},
                            {"std_error_approx", c.std_error},
                            {"flagged", c.flagged}});
    json util = json::array();
    for (const UtilityCell& c : report.utilities)
        util.push_back(json{{"agent", agent_name(instance, c.agent)},
                            {"exact", format_rational(c.exact)},
                            {"empirical", format_rational(c.empirical)},
                            {"abs_error_approx", c.abs_error},
                            {"std_error_approx", c.std_error},
                            {"flagged", c.flagged}});
    return json{{"stats", stats_json(instance, report.stats)},
                {"sigma", report.sigma},
                {"min_runs", report.min_runs},
                {"receipt_deviations", std::move(freq)},
                {"utility_deviations", std::move(util)},
                {"any_flagged", report.any_flagged}};
}

std::string comparison_text(const Instance& instance, const ComparisonReport& report) {
    std::ostringstream os;
    os << "exact vs empirical over " << report.stats.runs << " runs, flag threshold "
       << report.sigma << " standard errors\n\n";
    os << std::left << std::setw(10) << "agent" << std::setw(8) << "round" << std::setw(14)
       << "exact" << std::setw(14) << "empirical" << std::setw(14) << "|diff|" << std::setw(14)
       << "stderr" << "flag\n";
    for (const FrequencyCell& c : report.frequencies)
        os << std::setw(10) << agent_name(instance, c.agent) << std::setw(8) << c.round
           << std::setw(14) << format_rational(c.exact) << std::setw(14)
           << format_rational(c.empirical) << std::setw(14) << c.abs_error << std::setw(14)
           << c.std_error << (c.flagged ? "FLAGGED" : "") << "\n";
    os << "\nmean own-bundle utilities\n";
    for (const UtilityCell& c : report.utilities)
        os << std::setw(10) << agent_name(instance, c.agent) << std::setw(8) << ""
           << std::setw(14) << format_rational(c.exact) << std::setw(14)
           << format_rational(c.empirical) << std::setw(14) << c.abs_error << std::setw(14)
           << c.std_error << (c.flagged ? "FLAGGED" : "") << "\n";
    os << "\n" << (report.any_flagged ? "DEVIATIONS FLAGGED" : "all within tolerance") << "\n";
    return os.str();
}

json episode_json(const Instance& instance, const std::vector<int>& recipients) {
    json out = json::array();
    for (std::size_t k = 0; k < recipients.size(); ++k)
        out.push_back(json{{"item", instance.items[k]},
                           {"recipient", recipient_name(instance, recipients[k])}});
    return out;
}

std::string episode_text(const Instance& instance, const std::vector<int>& recipients) {
    std::ostringstream os;
    for (std::size_t k = 0; k < recipients.size(); ++k)
        os << instance.items[k] << " -> " << recipient_name(instance, recipients[k]) << "\n";
    return os.str();
}

} // namespace fairdiv
