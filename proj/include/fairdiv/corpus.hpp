#ifndef FAIRDIV_CORPUS_HPP
#define FAIRDIV_CORPUS_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "fairdiv/instance.hpp"

namespace fairdiv {

// The shipped instance corpus. Every entry carries an "expected" block
// of independently hand-derived values (never produced by the engine);
// the golden test runner replays them against the engine.
struct CorpusEntry {
    std::string id; // file stem
    Instance instance;
    nlohmann::json expected;
};

CorpusEntry corpus_fig1();                       // 2 agents, 2 items, everyone bids
CorpusEntry corpus_fig2();                       // the 60/40 entitlement variant
CorpusEntry corpus_thm3();                       // 3-agent manipulation example
CorpusEntry corpus_thm4();                       // 2-agent general-utility manipulation
CorpusEntry corpus_like_envy(int items);         // 2 agents, all items liked by both
CorpusEntry corpus_thm10(const Rational& p);     // unbounded-envy pair, requires p > 2

// the six defaults shipped under corpus/: fig1, fig2, thm3, thm4,
// like-envy with m = 5, thm10 with p = 3
std::vector<CorpusEntry> default_corpus();

nlohmann::json corpus_entry_to_json(const CorpusEntry& entry);

} // namespace fairdiv

#endif
