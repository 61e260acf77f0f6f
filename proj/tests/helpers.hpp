#ifndef FAIRDIV_TESTS_HELPERS_HPP
#define FAIRDIV_TESTS_HELPERS_HPP

// shared generators for the randomized suites; everything is seeded
// through the library's own SplitMix64 so results are reproducible on
// any platform

#include <string>
#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/rng.hpp"

namespace helpers {

struct TestRng {
    fairdiv::SplitMix64 gen;

    explicit TestRng(std::uint64_t seed) : gen(seed) {}

    // uniform in [0, n)
    int below(int n) { return static_cast<int>(gen.next() % static_cast<std::uint64_t>(n)); }
    bool coin() { return gen.next() & 1u; }
};

enum class WeightStyle {
    AllOne,          // the unweighted setting
    EqualRational,   // one random positive rational shared by everyone
    AtLeastOne,      // random rationals in [1, 6]
    AnyPositive,     // random rationals in (0, 6], may be < 1
};

inline fairdiv::Rational random_weight(TestRng& rng, WeightStyle style) {
    switch (style) {
    case WeightStyle::AllOne:
        return 1;
    case WeightStyle::EqualRational:
    case WeightStyle::AnyPositive: {
        int den = 1 + rng.below(4);
        int num = 1 + rng.below(6 * den);
        return fairdiv::Rational(num, den);
    }
    case WeightStyle::AtLeastOne: {
        int den = 1 + rng.below(3);
        int num = den + rng.below(5 * den);
        return fairdiv::Rational(num, den);
    }
    }
    return 1;
}

struct GenOptions {
    int min_agents = 2;
    int max_agents = 3;
    int min_items = 1;
    int max_items = 5;
    bool binary = true;
    WeightStyle weights = WeightStyle::AllOne;
};

inline fairdiv::Instance random_instance(TestRng& rng, const GenOptions& opt) {
    const int n = opt.min_agents + rng.below(opt.max_agents - opt.min_agents + 1);
    const int m = opt.min_items + rng.below(opt.max_items - opt.min_items + 1);

    std::vector<fairdiv::Agent> agents;
    fairdiv::Rational shared = random_weight(rng, opt.weights);
    for (int j = 0; j < n; ++j) {
        fairdiv::Rational w = opt.weights == WeightStyle::EqualRational
                                  ? shared
                                  : random_weight(rng, opt.weights);
        agents.push_back({"a" + std::to_string(j), w});
    }

    std::vector<std::string> items;
    for (int k = 0; k < m; ++k)
        items.push_back("i" + std::to_string(k));

    std::vector<std::vector<fairdiv::Rational>> utilities(n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < m; ++k) {
            if (opt.binary) {
                utilities[j].push_back(rng.coin() ? 1 : 0);
            } else {
                // zero sometimes, occasionally > 1
                int num = rng.below(5);
                int den = 1 + rng.below(4);
                utilities[j].push_back(fairdiv::Rational(num, den));
            }
        }
    }
    return fairdiv::validate_instance(std::move(agents), std::move(items), std::move(utilities));
}

} // namespace helpers

#endif
