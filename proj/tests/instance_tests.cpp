#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "fairdiv/errors.hpp"
#include "fairdiv/instance.hpp"
#include "fairdiv/instance_io.hpp"

using namespace fairdiv;
using nlohmann::json;

namespace {

Instance two_by_two() {
    return validate_instance({{"A", 1}, {"B", 1}}, {"F1", "F2"}, {{1, 1}, {1, 1}});
}

} // namespace

TEST_CASE("validation accepts a well-formed binary instance") {
    Instance inst = two_by_two();
    CHECK(inst.n() == 2);
    CHECK(inst.m() == 2);
    CHECK(inst.binary);
}

TEST_CASE("validation flags non-binary utilities") {
    Instance inst = validate_instance({{"A", 1}}, {"x"}, {{Rational(1, 2)}});
    CHECK(!inst.binary);
}

TEST_CASE("validation rejects invariant violations") {
    CHECK_THROWS_WITH_AS(validate_instance({{"A", 0}}, {"x"}, {{1}}),
                         doctest::Contains("non-positive weight"), ValidationError);
    CHECK_THROWS_WITH_AS(validate_instance({{"A", -1}}, {"x"}, {{1}}),
                         doctest::Contains("non-positive weight"), ValidationError);
    CHECK_THROWS_WITH_AS(validate_instance({{"A", 1}}, {"x"}, {{Rational(-1)}}),
                         doctest::Contains("negative utility"), ValidationError);
    CHECK_THROWS_WITH_AS(
        validate_instance({{"A", 1}, {"B", 1}, {"C", 1}}, {"x"}, {{1}, {1}}),
        doctest::Contains("dimension mismatch"), ValidationError);
    CHECK_THROWS_WITH_AS(validate_instance({{"A", 1}}, {"x", "y"}, {{1}}),
                         doctest::Contains("dimension mismatch"), ValidationError);
    CHECK_THROWS_AS(validate_instance({}, {"x"}, {}), ValidationError);
    CHECK_THROWS_AS(validate_instance({{"A", 1}}, {}, {{}}), ValidationError);
    CHECK_THROWS_WITH_AS(validate_instance({{"A", 1}, {"A", 2}}, {"x"}, {{1}, {1}}),
                         doctest::Contains("duplicate"), ValidationError);
}

TEST_CASE("truthful bids follow positive utilities") {
    Instance inst = validate_instance({{"A", 1}, {"B", 1}}, {"x", "y"},
                                      {{1, 0}, {0, 1}});
    BidMatrix bids = truthful_bids(inst);
    CHECK(bids.bids == std::vector<std::vector<bool>>{{true, false}, {false, true}});
    CHECK(truthful_bids(inst).bids == bids.bids); // re-derivation is identical

    // the three-agent manipulation example
    Instance thm3 = validate_instance({{"A", 1}, {"B", 1}, {"C", 1}}, {"I1", "I2", "I3"},
                                      {{1, 1, 1}, {1, 0, 1}, {0, 1, 0}});
    CHECK(truthful_bids(thm3).bids ==
          std::vector<std::vector<bool>>{{true, true, true},
                                         {true, false, true},
                                         {false, true, false}});

    Instance zero = validate_instance({{"A", 1}}, {"x", "y"}, {{0, 0}});
    CHECK(truthful_bids(zero).bids == std::vector<std::vector<bool>>{{false, false}});
}

TEST_CASE("binary instances bid exactly on utility-1 items") {
    Instance inst = validate_instance({{"A", 1}, {"B", 2}}, {"x", "y", "z"},
                                      {{1, 0, 1}, {0, 1, 0}});
    REQUIRE(inst.binary);
    BidMatrix bids = truthful_bids(inst);
    for (AgentId j = 0; j < inst.n(); ++j)
        for (ItemId k = 0; k < inst.m(); ++k)
            CHECK(bids.at(j, k) == (inst.utility(j, k) == 1));
}

TEST_CASE("JSON round trip preserves the instance") {
    Instance inst = validate_instance({{"A", Rational(3, 2)}, {"B", 1}}, {"x", "y"},
                                      {{Rational(1, 2), 0}, {1, Rational(7, 3)}});
    json j = instance_to_json(inst);
    LoadedInstance back = parse_instance_json(j);
    CHECK(back.instance.agents[0].weight == Rational(3, 2));
    CHECK(back.instance.utilities == inst.utilities);
    CHECK(back.instance.items == inst.items);
    CHECK(!back.bids);
    CHECK(instance_hash(back.instance) == instance_hash(inst));
}

TEST_CASE("JSON parsing is strict about rationals") {
    json base = {{"agents", {{{"name", "A"}, {"weight", "1"}}}},
                 {"items", {"x"}},
                 {"utilities", {{"1"}}}};

    json floats = base;
    floats["utilities"][0][0] = 0.5; // JSON number, not a string
    CHECK_THROWS_WITH_AS(parse_instance_json(floats), doctest::Contains("must be strings"),
                         ParseError);

    json integer_number = base;
    integer_number["agents"][0]["weight"] = 1;
    CHECK_THROWS_AS(parse_instance_json(integer_number), ParseError);

    json float_string = base;
    float_string["utilities"][0][0] = "0.5";
    CHECK_THROWS_AS(parse_instance_json(float_string), ParseError);

    json missing = base;
    missing.erase("utilities");
    CHECK_THROWS_WITH_AS(parse_instance_json(missing), doctest::Contains("utilities"),
                         ParseError);
}

TEST_CASE("unknown top-level keys are ignored") {
    json j = {{"agents", {{{"name", "A"}, {"weight", "1"}}}},
              {"items", {"x"}},
              {"utilities", {{"1"}}},
              {"expected", {{"anything", true}}}};
    CHECK_NOTHROW(parse_instance_json(j));
}

TEST_CASE("embedded and external bid matrices") {
    json j = instance_to_json(two_by_two());
    j["bids"] = {{true, false}, {false, false}};
    LoadedInstance loaded = parse_instance_json(j);
    REQUIRE(loaded.bids);
    CHECK(loaded.bids->at(0, 0));
    CHECK(!loaded.bids->at(1, 1));

    json wrong = instance_to_json(two_by_two());
    wrong["bids"] = {{true}, {false}};
    CHECK_THROWS_AS(parse_instance_json(wrong), ValidationError);

    json numbers = instance_to_json(two_by_two());
    numbers["bids"] = {{1, 0}, {0, 1}};
    CHECK_THROWS_WITH_AS(parse_instance_json(numbers), doctest::Contains("boolean"), ParseError);
}

TEST_CASE("instance hash is stable and content-sensitive") {
    Instance a = two_by_two();
    CHECK(instance_hash(a) == instance_hash(two_by_two()));
    Instance b = validate_instance({{"A", 1}, {"B", 2}}, {"F1", "F2"}, {{1, 1}, {1, 1}});
    CHECK(instance_hash(a) != instance_hash(b));
}
