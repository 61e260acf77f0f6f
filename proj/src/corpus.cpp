#include "fairdiv/corpus.hpp"

#include "fairdiv/errors.hpp"
#include "fairdiv/instance_io.hpp"

namespace fairdiv {

namespace {

using nlohmann::json;

Instance make(std::vector<Agent> agents, std::vector<std::string> items,
              std::vector<std::vector<Rational>> utilities) {
    return validate_instance(std::move(agents), std::move(items), std::move(utilities));
}

json check(const char* type, std::string_view mechanism) {
    return json{{"type", type}, {"mechanism", std::string(mechanism)}};
}

} // namespace

CorpusEntry corpus_fig1() {
    CorpusEntry e;
    e.id = "fig1";
    e.instance = make({{"1", 1}, {"2", 1}}, {"F1", "F2"},
                      {{1, 1},
                       {1, 1}});
    // round 1 is a coin flip, round 2 deterministically evens out:
    // exactly two final allocations, each with probability 1/2
    json checks = json::array();
    for (const char* mech : {"balanced-like", "weighted-balanced-like"}) {
        json c = check("receipt", mech);
        c["agent"] = "1";
        c["round"] = 1;
        c["value"] = "1/2";
        checks.push_back(c);
        c = check("support_size", mech);
        c["value"] = 2;
        checks.push_back(c);
        c = check("outcome", mech);
        c["recipients"] = {"1", "2"};
        c["probability"] = "1/2";
        checks.push_back(c);
        c = check("own_utility", mech);
        c["agent"] = "1";
        c["value"] = "1";
        checks.push_back(c);
    }
    e.expected = {{"checks", std::move(checks)}};
    return e;
}

CorpusEntry corpus_fig2() {
    CorpusEntry e;
    e.id = "fig2";
    e.instance = make({{"1", 60}, {"2", 40}}, {"F1", "F2"},
                      {{1, 1},
                       {1, 1}});
    // identical load scores at the root (0/60 = 0/40), so a fair coin
    // decides round 1 and round 2 goes to the loser with certainty
    json checks = json::array();
    json c = check("receipt", "weighted-balanced-like");
    c["agent"] = "1";
    c["round"] = 1;
    c["value"] = "1/2";
    checks.push_back(c);
    for (const char* agent : {"1", "2"}) {
        c = check("own_utility", "weighted-balanced-like");
        c["agent"] = agent;
        c["value"] = "1";
        checks.push_back(c);
        c = check("sp_gain", "weighted-balanced-like");
        c["agent"] = agent;
        c["gain"] = "0";
        checks.push_back(c);
        c = check("adaptive_gain", "weighted-balanced-like");
        c["agent"] = agent;
        c["gain"] = "0";
        checks.push_back(c);
    }
    e.expected = {{"checks", std::move(checks)}};
    return e;
}

CorpusEntry corpus_thm3() {
    CorpusEntry e;
    e.id = "thm3";
    e.instance = make({{"A", 1}, {"B", 1}, {"C", 1}}, {"I1", "I2", "I3"},
                      {{1, 1, 1},
                       {1, 0, 1},
                       {0, 1, 0}});
    // hand trace under balanced-like, sincere bids:
    //   P(I1,A) = 1/2, P(I2,A) = 1/4, P(I3,A) = 3/8 -> E = 9/8;
    // hiding I1 gives P(I2,A) = 1/2, P(I3,A) = 3/4 -> E = 5/4
    json checks = json::array();
    json c = check("own_utility", "balanced-like");
    c["agent"] = "A";
    c["value"] = "9/8";
    checks.push_back(c);
    c = check("receipt", "balanced-like");
    c["agent"] = "A";
    c["round"] = 0;
    c["value"] = "1/2";
    checks.push_back(c);
    c = check("sp_gain", "balanced-like");
    c["agent"] = "A";
    c["gain"] = "1/8";
    c["best_misreport"] = {false, true, true};
    checks.push_back(c);
    c = check("adaptive_gain", "balanced-like");
    c["agent"] = "A";
    c["gain"] = "1/8";
    checks.push_back(c);
    e.expected = {{"checks", std::move(checks)}};
    return e;
}

CorpusEntry corpus_thm4() {
    CorpusEntry e;
    e.id = "thm4";
    e.instance = make({{"A", 1}, {"B", 1}}, {"I1", "I2"},
                      {{Rational(1, 2), Rational(1, 2)},
                       {Rational(1, 4), Rational(3, 4)}});
    // sincere play swaps the two items with probability 1/2 each, so B
    // expects (1/4 + 3/4)/2 = 1/2; bidding only for I2 secures 3/4
    json checks = json::array();
    json c = check("own_utility", "balanced-like");
    c["agent"] = "B";
    c["value"] = "1/2";
    checks.push_back(c);
    c = check("sp_gain", "balanced-like");
    c["agent"] = "B";
    c["gain"] = "1/4";
    c["best_misreport"] = {false, true};
    checks.push_back(c);
    e.expected = {{"checks", std::move(checks)}};
    return e;
}

CorpusEntry corpus_like_envy(int items) {
    if (items < 1)
        throw ValidationError("like-envy instance needs at least one item");
    CorpusEntry e;
    e.id = "like-envy-m" + std::to_string(items);
    std::vector<Rational> row(items, Rational(1));
    e.instance = make({{"A", 1}, {"B", 1}}, [&] {
        std::vector<std::string> names;
        for (int k = 1; k <= items; ++k)
            names.push_back("F" + std::to_string(k));
        return names;
    }(), {row, row});
    // every round is an independent fair coin: 2^m equiprobable
    // outcomes, and the all-to-A outcome leaves B with envy m
    Rational all_to_a = Rational(1, BigInt(1) << items);
    json checks = json::array();
    json c = check("support_size", "like");
    c["value"] = 1 << items;
    checks.push_back(c);
    c = check("outcome", "like");
    c["recipients"] = std::vector<std::string>(items, "A");
    c["probability"] = format_rational(all_to_a);
    checks.push_back(c);
    c = check("ef_post", "like");
    c["bound"] = std::to_string(items - 1);
    c["holds"] = false;
    c["worst_envy"] = std::to_string(items);
    checks.push_back(c);
    c = check("ef_ante", "like");
    c["holds"] = true;
    checks.push_back(c);
    e.expected = {{"checks", std::move(checks)}};
    return e;
}

CorpusEntry corpus_thm10(const Rational& p) {
    if (p <= 2)
        throw ValidationError("thm10 instance requires p > 2, got " + format_rational(p));
    CorpusEntry e;
    e.id = "thm10-p" + format_rational(p);
    e.instance = make({{"1", 1}, {"2", 1}}, {"a", "b"},
                      {{Rational(0), p},
                       {Rational(1), p - 1}});
    // sincere balanced-like play is deterministic: agent 2 takes a
    // unopposed, then agent 1 holds fewer items and takes b. Agent 2
    // values agent 1's bundle at p-1 against its own 1.
    const Rational envy = p - 2;
    json checks = json::array();
    json c = check("outcome", "balanced-like");
    c["recipients"] = {"2", "1"};
    c["probability"] = "1";
    checks.push_back(c);
    c = check("own_utility", "balanced-like");
    c["agent"] = "2";
    c["value"] = "1";
    checks.push_back(c);
    c = check("ef_ante", "balanced-like");
    c["holds"] = false;
    c["worst_envy"] = format_rational(envy);
    checks.push_back(c);
    c = check("ef_post", "balanced-like");
    c["bound"] = format_rational(envy);
    c["holds"] = true;
    c["worst_envy"] = format_rational(envy);
    checks.push_back(c);
    c = check("ef_post", "balanced-like");
    c["bound"] = format_rational(envy / 2);
    c["holds"] = false;
    c["worst_envy"] = format_rational(envy);
    checks.push_back(c);
    e.expected = {{"checks", std::move(checks)}};
    return e;
}

std::vector<CorpusEntry> default_corpus() {
    std::vector<CorpusEntry> out;
    out.push_back(corpus_fig1());
    out.push_back(corpus_fig2());
    out.push_back(corpus_thm3());
    out.push_back(corpus_thm4());
    out.push_back(corpus_like_envy(5));
    out.push_back(corpus_thm10(Rational(3)));
    return out;
}

nlohmann::json corpus_entry_to_json(const CorpusEntry& entry) {
    nlohmann::json j = instance_to_json(entry.instance);
    j["expected"] = entry.expected;
    return j;
}

} // namespace fairdiv
