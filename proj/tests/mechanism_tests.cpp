#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fairdiv/mechanism.hpp"
#include "helpers.hpp"

using namespace fairdiv;

namespace {

std::vector<Rational> weights_of(std::initializer_list<Rational> ws) { return ws; }

RoundDistribution dist(MechanismKind kind, std::vector<int> counts, std::vector<AgentId> bidders,
                       std::vector<Rational> weights) {
    return round_distribution(kind, counts, bidders, weights);
}

} // namespace

TEST_CASE("mechanism names round trip") {
    for (MechanismKind kind : all_mechanisms())
        CHECK(mechanism_from_name(mechanism_name(kind)) == kind);
    CHECK(!mechanism_from_name("nash"));
}

TEST_CASE("feasible agents per mechanism") {
    // identical load scores 0/60 and 0/40 keep both agents feasible
    auto ws = weights_of({60, 40});
    CHECK(feasible_agents(MechanismKind::WeightedBalancedLike, std::vector<int>{0, 0},
                          std::vector<AgentId>{0, 1}, ws) == std::vector<AgentId>{0, 1});

    // balanced-like keeps only the count-argmin among bidders
    auto ones = weights_of({1, 1, 1});
    CHECK(feasible_agents(MechanismKind::BalancedLike, std::vector<int>{1, 0, 0},
                          std::vector<AgentId>{0, 2}, ones) == std::vector<AgentId>{2});

    // like ignores counts entirely
    CHECK(feasible_agents(MechanismKind::Like, std::vector<int>{5, 0, 2},
                          std::vector<AgentId>{0, 1, 2}, ones) ==
          std::vector<AgentId>{0, 1, 2});

    CHECK(feasible_agents(MechanismKind::BalancedLike, std::vector<int>{0, 0},
                          std::vector<AgentId>{}, weights_of({1, 1}))
              .empty());

    // weighted argmin with rational weights: 1/(1/2) = 2 vs 1/3
    auto mixed = weights_of({Rational(1, 2), 3});
    CHECK(feasible_agents(MechanismKind::WeightedBalancedLike, std::vector<int>{1, 1},
                          std::vector<AgentId>{0, 1}, mixed) == std::vector<AgentId>{1});
}

TEST_CASE("round distributions match the rules") {
    auto d = dist(MechanismKind::WeightedLike, {0, 0}, {0, 1}, {2, 1});
    CHECK(d.probabilities[0] == Rational(2, 3));
    CHECK(d.probabilities[1] == Rational(1, 3));
    CHECK(d.discard_probability == 0);

    d = dist(MechanismKind::WeightedBalancedLike, {0, 0}, {0, 1}, {1, 1});
    CHECK(d.probabilities[0] == Rational(1, 2));
    CHECK(d.probabilities[1] == Rational(1, 2));

    d = dist(MechanismKind::BalancedLike, {1, 1}, {0, 1}, {1, 1});
    CHECK(d.probabilities[0] == Rational(1, 2));
    CHECK(d.probabilities[1] == Rational(1, 2));

    for (MechanismKind kind : all_mechanisms()) {
        d = dist(kind, {3, 1}, {}, {1, 1});
        CHECK(d.discard_probability == 1);
        CHECK(d.probabilities[0] == 0);
        CHECK(d.probabilities[1] == 0);
    }
}

TEST_CASE("load comparison is an exact cross-multiplication") {
    CHECK(compare_load(0, 60, 0, 40) == 0);
    CHECK(compare_load(1, 60, 0, 40) > 0);
    CHECK(compare_load(1, 60, 1, 40) < 0);
    CHECK(compare_load(2, Rational(2, 3), 3, 1) == 0); // 2/(2/3) = 3 = 3/1
    CHECK(compare_load(1, Rational(1, 3), 2, 1) > 0);  // 3 > 2
}

namespace {

struct RandomState {
    std::vector<int> counts;
    std::vector<AgentId> bidders;
    std::vector<Rational> weights;
};

RandomState random_state(helpers::TestRng& rng, helpers::WeightStyle style) {
    const int n = 1 + rng.below(5);
    RandomState s;
    for (int j = 0; j < n; ++j) {
        s.counts.push_back(rng.below(4));
        s.weights.push_back(helpers::random_weight(rng, style));
        if (rng.coin())
            s.bidders.push_back(j);
    }
    return s;
}

} // namespace

TEST_CASE("normalization: probabilities plus discard mass are exactly 1") {
    helpers::TestRng rng(11);
    for (int t = 0; t < 500; ++t) {
        RandomState s = random_state(rng, helpers::WeightStyle::AnyPositive);
        for (MechanismKind kind : all_mechanisms()) {
            RoundDistribution d = round_distribution(kind, s.counts, s.bidders, s.weights);
            Rational total = d.discard_probability;
            for (const Rational& p : d.probabilities) {
                CHECK(p >= 0);
                total += p;
            }
            CHECK(total == 1);
            CHECK((d.discard_probability == 0 || d.discard_probability == 1));
            CHECK((d.discard_probability == 1) == s.bidders.empty());
        }
    }
}

TEST_CASE("positive probability implies feasibility") {
    helpers::TestRng rng(12);
    for (int t = 0; t < 300; ++t) {
        RandomState s = random_state(rng, helpers::WeightStyle::AnyPositive);
        for (MechanismKind kind : all_mechanisms()) {
            RoundDistribution d = round_distribution(kind, s.counts, s.bidders, s.weights);
            auto feasible = feasible_agents(kind, std::span<const int>(s.counts),
                                            std::span<const AgentId>(s.bidders), s.weights);
            for (AgentId j = 0; j < static_cast<AgentId>(s.counts.size()); ++j) {
                bool in_feasible =
                    std::find(feasible.begin(), feasible.end(), j) != feasible.end();
                if (d.probabilities[j] > 0)
                    CHECK(in_feasible);
            }
        }
    }
}

TEST_CASE("equal weights reduce the weighted mechanisms to the unweighted ones") {
    helpers::TestRng rng(13);
    for (int t = 0; t < 500; ++t) {
        RandomState s = random_state(rng, helpers::WeightStyle::AnyPositive);
        // overwrite with one shared weight
        Rational shared = helpers::random_weight(rng, helpers::WeightStyle::AnyPositive);
        for (Rational& w : s.weights)
            w = shared;
        RoundDistribution wl = round_distribution(MechanismKind::WeightedLike, s.counts,
                                                  s.bidders, s.weights);
        RoundDistribution l = round_distribution(MechanismKind::Like, s.counts, s.bidders,
                                                 s.weights);
        CHECK(wl.probabilities == l.probabilities);
        RoundDistribution wbl = round_distribution(MechanismKind::WeightedBalancedLike, s.counts,
                                                   s.bidders, s.weights);
        RoundDistribution bl = round_distribution(MechanismKind::BalancedLike, s.counts,
                                                  s.bidders, s.weights);
        CHECK(wbl.probabilities == bl.probabilities);
    }
}

TEST_CASE("scaling every weight leaves distributions unchanged") {
    helpers::TestRng rng(14);
    for (int t = 0; t < 500; ++t) {
        RandomState s = random_state(rng, helpers::WeightStyle::AnyPositive);
        Rational scale = helpers::random_weight(rng, helpers::WeightStyle::AnyPositive);
        std::vector<Rational> scaled = s.weights;
        for (Rational& w : scaled)
            w *= scale;
        for (MechanismKind kind : all_mechanisms()) {
            RoundDistribution a = round_distribution(kind, s.counts, s.bidders, s.weights);
            RoundDistribution b = round_distribution(kind, s.counts, s.bidders, scaled);
            CHECK(a.probabilities == b.probabilities);
            CHECK(a.discard_probability == b.discard_probability);
        }
    }
}
