#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "fairdiv/corpus.hpp"
#include "fairdiv/errors.hpp"
#include "fairdiv/gametree.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace fairdiv;

namespace {

std::map<std::vector<int>, Rational> support_map(const OutcomeDistribution& dist) {
    std::map<std::vector<int>, Rational> out;
    for (const Outcome& o : dist.support) {
        auto [it, inserted] = out.emplace(o.recipients, o.probability);
        CHECK(inserted); // support entries have distinct assignments
        (void)it;
    }
    return out;
}

} // namespace

TEST_CASE("two symmetric agents split two items evenly") {
    Instance inst = corpus_fig1().instance;
    BidMatrix bids = truthful_bids(inst);

    auto dist = outcome_distribution(inst, MechanismKind::BalancedLike, bids);
    REQUIRE(dist.support.size() == 2);
    auto support = support_map(dist);
    CHECK(support.at({0, 1}) == Rational(1, 2));
    CHECK(support.at({1, 0}) == Rational(1, 2));

    CHECK(receipt_probability(inst, MechanismKind::BalancedLike, bids, 0, 1) == Rational(1, 2));
    CHECK(expected_utilities(inst, MechanismKind::BalancedLike, bids).values[0][0] == 1);
}

TEST_CASE("a single agent bidding on everything wins everything") {
    Instance inst = validate_instance({{"A", 1}}, {"x", "y", "z"}, {{1, 1, 1}});
    auto dist = outcome_distribution(inst, MechanismKind::Like, truthful_bids(inst));
    REQUIRE(dist.support.size() == 1);
    CHECK(dist.support[0].probability == 1);
    CHECK(dist.support[0].recipients == std::vector<int>{0, 0, 0});
}

TEST_CASE("the unbounded-envy pair plays deterministically") {
    Instance inst = corpus_thm10(3).instance;
    auto dist = outcome_distribution(inst, MechanismKind::BalancedLike, truthful_bids(inst));
    REQUIRE(dist.support.size() == 1);
    CHECK(dist.support[0].recipients == std::vector<int>{1, 0}); // agent 2 takes a, agent 1 takes b
    CHECK(dist.support[0].probability == 1);
}

TEST_CASE("independent coin flips under like") {
    Instance inst = corpus_like_envy(3).instance;
    auto dist = outcome_distribution(inst, MechanismKind::Like, truthful_bids(inst));
    CHECK(dist.support.size() == 8);
    for (const Outcome& o : dist.support)
        CHECK(o.probability == Rational(1, 8));
}

TEST_CASE("items nobody bids for are discarded without branching") {
    Instance with_dead = validate_instance({{"A", 1}, {"B", 1}}, {"x", "dead", "y"},
                                           {{1, 0, 1}, {1, 0, 1}});
    Instance without = validate_instance({{"A", 1}, {"B", 1}}, {"x", "y"},
                                         {{1, 1}, {1, 1}});
    for (MechanismKind kind : all_mechanisms()) {
        auto wd = outcome_distribution(with_dead, kind, truthful_bids(with_dead));
        auto wo = outcome_distribution(without, kind, truthful_bids(without));
        REQUIRE(wd.support.size() == wo.support.size());
        std::map<std::vector<int>, Rational> projected;
        for (const Outcome& o : wd.support) {
            CHECK(o.recipients[1] == kDiscarded);
            projected[{o.recipients[0], o.recipients[2]}] = o.probability;
        }
        CHECK(projected == support_map(wo));
    }
}

TEST_CASE("agents not bidding in a round have zero receipt probability") {
    Instance inst = corpus_thm3().instance;
    BidMatrix bids = truthful_bids(inst);
    // agent C never bids for items I1 and I3
    for (MechanismKind kind : all_mechanisms()) {
        CHECK(receipt_probability(inst, kind, bids, 2, 0) == 0);
        CHECK(receipt_probability(inst, kind, bids, 2, 2) == 0);
    }
}

TEST_CASE("manipulation values from the three-agent example") {
    Instance inst = corpus_thm3().instance;
    BidMatrix sincere = truthful_bids(inst);
    CHECK(expected_utilities(inst, MechanismKind::BalancedLike, sincere).values[0][0] ==
          Rational(9, 8));
    CHECK(receipt_probability(inst, MechanismKind::BalancedLike, sincere, 0, 0) ==
          Rational(1, 2));

    BidMatrix lying = sincere;
    lying.bids[0] = {false, true, true};
    CHECK(agent_value(inst, MechanismKind::BalancedLike, lying, 0) == Rational(5, 4));
}

TEST_CASE("manipulation values from the two-agent general-utility example") {
    Instance inst = corpus_thm4().instance;
    BidMatrix sincere = truthful_bids(inst);
    auto expected = expected_utilities(inst, MechanismKind::BalancedLike, sincere);
    CHECK(expected.values[1][1] == Rational(1, 2));
    CHECK(expected.values[0][0] == Rational(1, 2));

    BidMatrix lying = sincere;
    lying.bids[1] = {false, true};
    CHECK(agent_value(inst, MechanismKind::BalancedLike, lying, 1) == Rational(3, 4));
}

TEST_CASE("support cap is a hard error, never a truncation") {
    Instance inst = corpus_like_envy(4).instance; // 16 outcomes under like
    CHECK_THROWS_AS(
        outcome_distribution(inst, MechanismKind::Like, truthful_bids(inst), 15),
        GuardError);
    CHECK_NOTHROW(outcome_distribution(inst, MechanismKind::Like, truthful_bids(inst), 16));
}

TEST_CASE("memoized DP equals the naive full-tree oracle") {
    helpers::TestRng rng(21);
    helpers::GenOptions opt;
    opt.min_agents = 1;
    opt.max_agents = 3;
    opt.max_items = 5;
    opt.weights = helpers::WeightStyle::AnyPositive;
    for (int t = 0; t < 250; ++t) {
        opt.binary = t % 2 == 0;
        Instance inst = helpers::random_instance(rng, opt);
        BidMatrix bids = truthful_bids(inst);
        // flip a few bids so untruthful matrices are covered too
        for (int f = rng.below(4); f > 0; --f) {
            int j = rng.below(inst.n());
            int k = rng.below(inst.m());
            bids.bids[j][k] = !bids.bids[j][k];
        }
        for (MechanismKind kind : all_mechanisms()) {
            oracle::NaiveResult naive = oracle::naive_full_tree(inst, kind, bids);
            ReceiptProbabilities receipts = receipt_probabilities(inst, kind, bids);
            CHECK(receipts.by_round == naive.receipt);
            CHECK(receipts.discard == naive.discard);

            auto dist = outcome_distribution(inst, kind, bids);
            CHECK(support_map(dist) == naive.outcomes);
            CHECK(dist.support.size() == naive.leaves); // paths are in bijection with outcomes

            CHECK(expected_utilities(inst, kind, bids).values == naive.expected);
        }
    }
}

TEST_CASE("distribution, receipts and expectations stay consistent") {
    helpers::TestRng rng(22);
    helpers::GenOptions opt;
    opt.max_agents = 4;
    opt.max_items = 6;
    opt.binary = false;
    opt.weights = helpers::WeightStyle::AtLeastOne;
    for (int t = 0; t < 120; ++t) {
        Instance inst = helpers::random_instance(rng, opt);
        BidMatrix bids = truthful_bids(inst);
        for (MechanismKind kind : all_mechanisms()) {
            ReceiptProbabilities receipts = receipt_probabilities(inst, kind, bids);
            // per-round mass balances
            for (int k = 0; k < inst.m(); ++k) {
                Rational total = receipts.discard[k];
                for (AgentId j = 0; j < inst.n(); ++j)
                    total += receipts.by_round[k][j];
                CHECK(total == 1);
            }

            auto dist = outcome_distribution(inst, kind, bids);
            Rational mass(0);
            for (const Outcome& o : dist.support) {
                CHECK(o.probability > 0);
                mass += o.probability;
            }
            CHECK(mass == 1);

            // expectation via the support must equal the receipt route
            auto expected = expected_utilities(inst, kind, bids);
            for (AgentId i = 0; i < inst.n(); ++i) {
                for (AgentId j = 0; j < inst.n(); ++j) {
                    Rational via_support(0);
                    for (const Outcome& o : dist.support)
                        via_support += o.probability * o.bundle_utility(inst, i, j);
                    CHECK(via_support == expected.values[i][j]);
                }
            }
        }
    }
}

TEST_CASE("per-path item totals grow by zero or one each round") {
    helpers::TestRng rng(23);
    helpers::GenOptions opt;
    for (int t = 0; t < 50; ++t) {
        Instance inst = helpers::random_instance(rng, opt);
        BidMatrix bids = truthful_bids(inst);
        for_each_outcome(inst, MechanismKind::BalancedLike, bids, kDefaultSupportCap,
                         [&](const Outcome& o) {
                             int held = 0;
                             for (int k = 0; k < inst.m(); ++k)
                                 held += o.recipients[k] != kDiscarded ? 1 : 0;
                             CHECK(held <= inst.m());
                             // allocated items are exactly the non-discarded rounds,
                             // so the running total increases by 0 or 1 per round
                             auto bundles = o.bundles(inst.n());
                             int total = 0;
                             for (const auto& b : bundles)
                                 total += static_cast<int>(b.size());
                             CHECK(total == held);
                         });
    }
}

TEST_CASE("DOT dump renders the labeled tree and refuses huge ones") {
    Instance inst = corpus_fig2().instance;
    std::string dot = game_tree_dot(inst, MechanismKind::WeightedBalancedLike,
                                    truthful_bids(inst));
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("(0, 0/60, 0/40)") != std::string::npos);
    CHECK(dot.find("(1, 1/60, 0/40)") != std::string::npos);
    CHECK(dot.find("label=\"1/2\"") != std::string::npos);

    Instance big = corpus_like_envy(12).instance; // 3^12 leaves
    CHECK_THROWS_AS(game_tree_dot(big, MechanismKind::Like, truthful_bids(big)), GuardError);
}
