#ifndef FAIRDIV_INSTANCE_IO_HPP
#define FAIRDIV_INSTANCE_IO_HPP

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "fairdiv/instance.hpp"

namespace fairdiv {

// Instance files are JSON:
//   {"agents":[{"name":"A","weight":"3/2"}, ...],
//    "items":["F1","F2", ...],
//    "utilities":[["1","0"], ...],
//    "bids": optional n x m boolean matrix}
// Every rational is a string "p/q" or "p"; JSON numbers are rejected so
// no float can sneak into the exact engine. Unknown top-level keys are
// ignored (corpus files carry an "expected" block for the golden runner).
struct LoadedInstance {
    Instance instance;
    std::optional<BidMatrix> bids; // absent means truthful
};

LoadedInstance parse_instance_json(const nlohmann::json& j);
LoadedInstance load_instance_file(const std::filesystem::path& path);

nlohmann::json instance_to_json(const Instance& instance, const BidMatrix* bids = nullptr);

// bare n x m boolean array, or any object with a "bids" key holding one
BidMatrix parse_bids_json(const nlohmann::json& j, const Instance& instance);
BidMatrix load_bids_file(const std::filesystem::path& path, const Instance& instance);

// FNV-1a 64-bit over the canonical serialization; embedded in every
// report so results can be traced back to the exact input
std::string instance_hash(const Instance& instance);

} // namespace fairdiv

#endif
