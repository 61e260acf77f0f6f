#include "fairdiv/instance_io.hpp"

#include <cstdint>
#include <fstream>

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

using nlohmann::json;

Rational rational_field(const json& j, const std::string& where) {
    if (!j.is_string())
        throw ParseError(where + ": rational values must be strings like \"3/2\", got " +
                         std::string(j.type_name()));
    return parse_rational(j.get<std::string>());
}

const json& required(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string("missing required key \"") + key + "\"");
    return *it;
}

} // namespace

LoadedInstance parse_instance_json(const json& j) {
    if (!j.is_object())
        throw ParseError("instance file must be a JSON object");

    const json& jagents = required(j, "agents");
    if (!jagents.is_array())
        throw ParseError("\"agents\" must be an array");
    std::vector<Agent> agents;
    for (std::size_t i = 0; i < jagents.size(); ++i) {
        const json& ja = jagents[i];
        if (!ja.is_object())
            throw ParseError("agent entries must be objects with \"name\" and \"weight\"");
        const json& jname = required(ja, "name");
        if (!jname.is_string())
            throw ParseError("agent \"name\" must be a string");
        agents.push_back(Agent{jname.get<std::string>(),
                               rational_field(required(ja, "weight"),
                                              "agent \"" + jname.get<std::string>() + "\" weight")});
    }

    const json& jitems = required(j, "items");
    if (!jitems.is_array())
        throw ParseError("\"items\" must be an array of strings");
    std::vector<std::string> items;
    for (const json& ji : jitems) {
        if (!ji.is_string())
            throw ParseError("\"items\" must be an array of strings");
        items.push_back(ji.get<std::string>());
    }

    const json& jutilities = required(j, "utilities");
    if (!jutilities.is_array())
        throw ParseError("\"utilities\" must be an array of rows");
    std::vector<std::vector<Rational>> utilities;
    for (std::size_t r = 0; r < jutilities.size(); ++r) {
        const json& row = jutilities[r];
        if (!row.is_array())
            throw ParseError("utility rows must be arrays");
        std::vector<Rational> parsed;
        for (const json& cell : row)
            parsed.push_back(rational_field(cell, "utilities row " + std::to_string(r)));
        utilities.push_back(std::move(parsed));
    }

    LoadedInstance out{validate_instance(std::move(agents), std::move(items), std::move(utilities)),
                       std::nullopt};
    if (auto it = j.find("bids"); it != j.end())
        out.bids = parse_bids_json(*it, out.instance);
    return out;
}

LoadedInstance load_instance_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("file not found: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return parse_instance_json(j);
}

nlohmann::json instance_to_json(const Instance& instance, const BidMatrix* bids) {
    json jagents = json::array();
    for (const Agent& a : instance.agents)
        jagents.push_back({{"name", a.name}, {"weight", format_rational(a.weight)}});

    json jutilities = json::array();
    for (const auto& row : instance.utilities) {
        json jrow = json::array();
        for (const Rational& u : row)
            jrow.push_back(format_rational(u));
        jutilities.push_back(std::move(jrow));
    }

    json out = {{"agents", std::move(jagents)},
                {"items", instance.items},
                {"utilities", std::move(jutilities)}};
    if (bids)
        out["bids"] = bids->bids;
    return out;
}

BidMatrix parse_bids_json(const nlohmann::json& j, const Instance& instance) {
    const json* matrix = &j;
    if (j.is_object()) {
        auto it = j.find("bids");
        if (it == j.end())
            throw ParseError("bid file object has no \"bids\" key");
        matrix = &*it;
    }
    if (!matrix->is_array())
        throw ParseError("\"bids\" must be an n x m boolean matrix");
    BidMatrix out;
    for (const json& row : *matrix) {
        if (!row.is_array())
            throw ParseError("bid rows must be arrays of booleans");
        std::vector<bool> parsed;
        for (const json& cell : row) {
            if (!cell.is_boolean())
                throw ParseError("bid entries must be booleans");
            parsed.push_back(cell.get<bool>());
        }
        out.bids.push_back(std::move(parsed));
    }
    validate_bids(instance, out);
    return out;
}

BidMatrix load_bids_file(const std::filesystem::path& path, const Instance& instance) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("file not found: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return parse_bids_json(j, instance);
}

std::string instance_hash(const Instance& instance) {
    // canonical form: nlohmann sorts object keys, dump() is whitespace-free
    const std::string canon = instance_to_json(instance).dump();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a:") + buf;
}

} // namespace fairdiv
