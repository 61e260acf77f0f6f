// command-line front end: loads an instance, runs one engine operation,
// writes a report (text/json/csv/dot) with enough metadata to reproduce it
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairdiv/analysis.hpp"
#include "fairdiv/corpus.hpp"
#include "fairdiv/errors.hpp"
#include "fairdiv/gametree.hpp"
#include "fairdiv/instance_io.hpp"
#include "fairdiv/report_io.hpp"
#include "fairdiv/simulate.hpp"
#include "fairdiv/version.hpp"

namespace {

using fairdiv::Rational;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1; // --assert and the checked property failed
constexpr int kExitError = 2;    // usage, parse, validation or guard errors

struct CommonOpts {
    std::string instance_path;
    std::string mechanism;
    std::string bids = "truthful";
    bool bids_given = false;
    std::string out;
    std::string format = "text";
    bool assert_mode = false;
};

struct LoadedRun {
    fairdiv::Instance instance;
    fairdiv::BidMatrix bids;
    std::string bids_source;
    fairdiv::MechanismKind kind;
};

LoadedRun load_run(const CommonOpts& opts, bool force_truthful = false) {
    auto kind = fairdiv::mechanism_from_name(opts.mechanism);
    if (!kind)
        throw fairdiv::ParseError(
            "unknown mechanism '" + opts.mechanism +
            "' (expected like, balanced-like, weighted-like or weighted-balanced-like)");

    fairdiv::LoadedInstance loaded = fairdiv::load_instance_file(opts.instance_path);
    LoadedRun out{std::move(loaded.instance), {}, "truthful", *kind};
    if (force_truthful) {
        out.bids = fairdiv::truthful_bids(out.instance);
        return out;
    }
    if (opts.bids_given && opts.bids != "truthful") {
        out.bids = fairdiv::load_bids_file(opts.bids, out.instance);
        out.bids_source = opts.bids;
    } else if (!opts.bids_given && loaded.bids) {
        out.bids = *loaded.bids;
        out.bids_source = "instance file";
    } else {
        out.bids = fairdiv::truthful_bids(out.instance);
    }
    return out;
}

void write_output(const CommonOpts& opts, const std::string& payload) {
    if (opts.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(opts.out);
    if (!f)
        throw fairdiv::Error("cannot write output file: " + opts.out);
    f << payload;
}

std::string text_header(const CommonOpts& opts, const LoadedRun& run,
                        std::optional<std::uint64_t> seed = std::nullopt) {
    std::string line = std::string(fairdiv::kArtifactName) + " " + fairdiv::kArtifactVersion +
                       " | " + opts.instance_path + " | " +
                       fairdiv::instance_hash(run.instance) + " | " +
                       std::string(fairdiv::mechanism_name(run.kind)) + " | bids: " +
                       run.bids_source;
    if (seed)
        line += " | seed " + std::to_string(*seed);
    return line + "\n\n";
}

json envelope(const std::string& command, const CommonOpts& opts, const LoadedRun& run,
              json report, std::optional<std::uint64_t> seed = std::nullopt) {
    json out = {{"artifact", {{"name", fairdiv::kArtifactName},
                              {"version", fairdiv::kArtifactVersion}}},
                {"command", command},
                {"instance", {{"path", opts.instance_path},
                              {"hash", fairdiv::instance_hash(run.instance)}}},
                {"mechanism", std::string(fairdiv::mechanism_name(run.kind))},
                {"bids", run.bids_source},
                {"report", std::move(report)}};
    if (seed)
        out["seed"] = *seed;
    return out;
}

void require_format(const CommonOpts& opts, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (opts.format == f)
            return;
    std::string msg = "format '" + opts.format + "' not supported here (use";
    for (const char* f : allowed)
        msg += std::string(" ") + f;
    throw fairdiv::ParseError(msg + ")");
}

fairdiv::AgentId resolve_agent(const fairdiv::Instance& instance, const std::string& name) {
    if (auto id = instance.agent_index(name))
        return *id;
    throw fairdiv::ParseError("no agent named '" + name + "' in the instance");
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_bids = true) {
    cmd->add_option("instance", opts.instance_path, "instance JSON file")->required();
    cmd->add_option("--mechanism", opts.mechanism,
                    "like | balanced-like | weighted-like | weighted-balanced-like")
        ->required();
    if (with_bids)
        cmd->add_option("--bids", opts.bids, "bid matrix JSON file, or 'truthful'")
            ->each([&opts](const std::string&) { opts.bids_given = true; });
    cmd->add_option("--out", opts.out, "write the report to this file");
    cmd->add_option("--format", opts.format, "text | json | csv | dot");
    cmd->add_flag("--assert", opts.assert_mode,
                  "exit 1 when the checked property is violated");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(fairdiv::kArtifactName) +
                 " - exact online fair division mechanisms"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string agent_name;
    std::string bound_text;
    std::string thm10_p = "3";
    std::uint64_t seed = 0;
    std::uint64_t runs = 1;
    int threads = 0;
    int like_envy_items = 5;
    double sigma = 4.0;
    bool compare_exact = false;
    std::size_t support_cap = fairdiv::kDefaultSupportCap;
    std::size_t misreport_cap = fairdiv::kDefaultMisreportCap;
    std::size_t state_cap = fairdiv::kDefaultStateCap;
    std::size_t node_cap = fairdiv::kDefaultTreeDumpCap;
    std::string corpus_dir = "corpus";
    std::string corpus_only;

    CLI::App* expect = app.add_subcommand("expect", "exact expected-utility matrix");
    add_common(expect, opts);

    CLI::App* distribution =
        app.add_subcommand("distribution", "exact outcome distribution (full support)");
    add_common(distribution, opts);
    distribution->add_option("--support-cap", support_cap, "max support size");

    CLI::App* run_cmd = app.add_subcommand("run", "execute seeded episodes and print allocations");
    add_common(run_cmd, opts);
    run_cmd->add_option("--seed", seed, "PRNG seed");
    run_cmd->add_option("--runs", runs, "number of episodes");

    CLI::App* ef_ante = app.add_subcommand("check-ef-ante", "envy-freeness ex-ante under truthful bids");
    add_common(ef_ante, opts, false);

    CLI::App* ef_post =
        app.add_subcommand("check-ef-post", "bounded envy-freeness ex-post under truthful bids");
    add_common(ef_post, opts, false);
    ef_post->add_option("--bound", bound_text, "envy bound as p/q (default 1 on binary instances)");
    ef_post->add_option("--support-cap", support_cap, "max support size");

    CLI::App* check_sp = app.add_subcommand("check-sp", "exhaustive misreport search");
    add_common(check_sp, opts, false);
    check_sp->add_option("--agent", agent_name, "restrict to one agent (default: all)");
    check_sp->add_option("--misreport-cap", misreport_cap, "max number of bid vectors");
    check_sp->add_option("--threads", threads, "worker threads (0 = all)");

    CLI::App* best_response =
        app.add_subcommand("best-response", "optimal history-dependent manipulation");
    add_common(best_response, opts, false);
    best_response->add_option("--agent", agent_name, "the manipulating agent")->required();
    best_response->add_option("--state-cap", state_cap, "max number of solver states");

    CLI::App* simulate_cmd = app.add_subcommand("simulate", "seeded Monte Carlo execution");
    add_common(simulate_cmd, opts);
    simulate_cmd->add_option("--seed", seed, "PRNG seed");
    simulate_cmd->add_option("--runs", runs, "number of runs");
    simulate_cmd->add_option("--threads", threads, "worker threads (0 = all; never changes results)");
    simulate_cmd->add_flag("--compare-exact", compare_exact,
                           "also compare against the exact engine");
    simulate_cmd->add_option("--sigma", sigma, "flag deviations beyond this many standard errors");

    CLI::App* dump_tree = app.add_subcommand("dump-tree", "DOT rendering of the game tree");
    add_common(dump_tree, opts);
    dump_tree->add_option("--node-cap", node_cap, "refuse trees with more than this many leaves");

    CLI::App* corpus_cmd =
        app.add_subcommand("corpus", "write the bundled instance corpus as JSON files");
    corpus_cmd->add_option("--dir", corpus_dir, "output directory");
    corpus_cmd->add_option("--only", corpus_only,
                           "generate a single entry: fig1, fig2, thm3, thm4, like-envy, thm10");
    corpus_cmd->add_option("--p", thm10_p, "p parameter for thm10 (rational > 2)");
    corpus_cmd->add_option("--items", like_envy_items, "item count for like-envy");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) // --help
            return app.exit(e);
        app.exit(e);
        return kExitError;
    }

    bool violated = false;
    try {
        if (*expect) {
            require_format(opts, {"text", "json"});
            LoadedRun run = load_run(opts);
            auto receipts = fairdiv::receipt_probabilities(run.instance, run.kind, run.bids);
            auto matrix = fairdiv::expected_utilities(run.instance, run.kind, run.bids);
            if (opts.format == "json")
                write_output(opts, envelope("expect", opts, run,
                                            fairdiv::expect_json(run.instance, matrix, receipts))
                                       .dump(2) + "\n");
            else
                write_output(opts, text_header(opts, run) +
                                       fairdiv::expect_text(run.instance, matrix, receipts));
        } else if (*distribution) {
            require_format(opts, {"text", "json"});
            LoadedRun run = load_run(opts);
            auto dist = fairdiv::outcome_distribution(run.instance, run.kind, run.bids, support_cap);
            if (opts.format == "json")
                write_output(opts, envelope("distribution", opts, run,
                                            fairdiv::distribution_json(run.instance, dist))
                                       .dump(2) + "\n");
            else
                write_output(opts, text_header(opts, run) +
                                       fairdiv::distribution_text(run.instance, dist));
        } else if (*run_cmd) {
            require_format(opts, {"text", "json"});
            LoadedRun run = load_run(opts);
            if (runs < 1)
                throw fairdiv::ParseError("--runs must be >= 1");
            json all = json::array();
            std::string text;
            for (std::uint64_t r = 0; r < runs; ++r) {
                fairdiv::SplitMix64 rng = fairdiv::run_stream(seed, r);
                auto recipients = fairdiv::run_episode(run.instance, run.kind, run.bids, rng);
                if (opts.format == "json")
                    all.push_back(fairdiv::episode_json(run.instance, recipients));
                else
                    text += "run " + std::to_string(r) + "\n" +
                            fairdiv::episode_text(run.instance, recipients);
            }
            if (opts.format == "json")
                write_output(opts, envelope("run", opts, run, std::move(all), seed).dump(2) + "\n");
            else
                write_output(opts, text_header(opts, run, seed) + text);
        } else if (*ef_ante) {
            require_format(opts, {"text", "json"});
            LoadedRun run = load_run(opts, true);
            auto report = fairdiv::check_ef_ex_ante(run.instance, run.kind);
            violated = !report.holds;
            if (opts.format == "json")
                write_output(opts, envelope("check-ef-ante", opts, run,
                                            fairdiv::ef_ante_json(run.instance, report))
                                       .dump(2) + "\n");
            else
                write_output(opts, text_header(opts, run) +
                                       fairdiv::ef_ante_text(run.instance, report));
        } else if (*ef_post) {
            require_format(opts, {"text", "json"});
            LoadedRun run = load_run(opts, true);
            Rational bound;
            if (!bound_text.empty())
                bound = fairdiv::parse_rational(bound_text);
            else if (run.instance.binary)
                bound = 1;
            else
                throw fairdiv::ParseError(
                    "--bound is required for non-binary instances (no canonical bound exists)");
            auto report = fairdiv::check_bounded_ef_ex_post(run.instance, run.kind, bound,
                                                            support_cap);
            violated = !report.bound_holds;
            if (opts.format == "json")
                write_output(opts, envelope("check-ef-post", opts, run,
                                            fairdiv::ef_post_json(run.instance, report))
                                       .dump(2) + "\n");
            else
                write_output(opts, text_header(opts, run) +
                                       fairdiv::ef_post_text(run.instance, report));
        } else if (*check_sp) {
            require_format(opts, {"text", "json"});
            LoadedRun run = load_run(opts, true);
            std::vector<fairdiv::AgentId> agents;
            if (!agent_name.empty())
                agents.push_back(resolve_agent(run.instance, agent_name));
            else
                for (fairdiv::AgentId j = 0; j < run.instance.n(); ++j)
                    agents.push_back(j);
            json reports = json::array();
            std::string text;
            for (fairdiv::AgentId j : agents) {
                auto report =
                    fairdiv::check_strategyproof(run.instance, run.kind, j, misreport_cap, threads);
                violated |= !report.strategyproof_for_agent;
                reports.push_back(fairdiv::manipulation_json(run.instance, report));
                text += fairdiv::manipulation_text(run.instance, report);
            }
            if (opts.format == "json")
                write_output(opts,
                             envelope("check-sp", opts, run, std::move(reports)).dump(2) + "\n");
            else
                write_output(opts, text_header(opts, run) + text);
        } else if (*best_response) {
            require_format(opts, {"text", "json"});
            LoadedRun run = load_run(opts, true);
            auto report = fairdiv::best_adaptive_response(
                run.instance, run.kind, resolve_agent(run.instance, agent_name), state_cap);
            violated = report.gain > 0;
            if (opts.format == "json")
                write_output(opts, envelope("best-response", opts, run,
                                            fairdiv::adaptive_json(run.instance, report))
                                       .dump(2) + "\n");
            else
                write_output(opts, text_header(opts, run) +
                                       fairdiv::adaptive_text(run.instance, report));
        } else if (*simulate_cmd) {
            require_format(opts, {"text", "json", "csv"});
            LoadedRun run = load_run(opts);
            fairdiv::SimulationConfig config{run.kind, run.bids, seed, runs, threads};
            if (compare_exact) {
                auto report = fairdiv::compare_exact_empirical(run.instance, config, sigma);
                violated = report.any_flagged;
                if (opts.format == "json")
                    write_output(opts, envelope("simulate", opts, run,
                                                fairdiv::comparison_json(run.instance, report),
                                                seed)
                                           .dump(2) + "\n");
                else if (opts.format == "csv")
                    write_output(opts, fairdiv::stats_csv(run.instance, report.stats));
                else
                    write_output(opts, text_header(opts, run, seed) +
                                           fairdiv::comparison_text(run.instance, report));
            } else {
                auto stats = fairdiv::simulate(run.instance, config);
                if (opts.format == "json")
                    write_output(opts, envelope("simulate", opts, run,
                                                fairdiv::stats_json(run.instance, stats), seed)
                                           .dump(2) + "\n");
                else if (opts.format == "csv")
                    write_output(opts, fairdiv::stats_csv(run.instance, stats));
                else
                    write_output(opts, text_header(opts, run, seed) +
                                           fairdiv::stats_text(run.instance, stats));
            }
        } else if (*dump_tree) {
            if (opts.format == "text")
                opts.format = "dot"; // the only sensible rendering here
            require_format(opts, {"dot"});
            LoadedRun run = load_run(opts);
            write_output(opts, fairdiv::game_tree_dot(run.instance, run.kind, run.bids, node_cap));
        } else if (*corpus_cmd) {
            std::filesystem::create_directories(corpus_dir);
            std::vector<fairdiv::CorpusEntry> entries;
            if (corpus_only.empty()) {
                entries = fairdiv::default_corpus();
            } else if (corpus_only == "fig1") {
                entries.push_back(fairdiv::corpus_fig1());
            } else if (corpus_only == "fig2") {
                entries.push_back(fairdiv::corpus_fig2());
            } else if (corpus_only == "thm3") {
                entries.push_back(fairdiv::corpus_thm3());
            } else if (corpus_only == "thm4") {
                entries.push_back(fairdiv::corpus_thm4());
            } else if (corpus_only == "like-envy") {
                entries.push_back(fairdiv::corpus_like_envy(like_envy_items));
            } else if (corpus_only == "thm10") {
                entries.push_back(fairdiv::corpus_thm10(fairdiv::parse_rational(thm10_p)));
            } else {
                throw fairdiv::ParseError("unknown corpus entry '" + corpus_only + "'");
            }
            for (const auto& entry : entries) {
                std::filesystem::path path =
                    std::filesystem::path(corpus_dir) / (entry.id + ".json");
                std::ofstream f(path);
                if (!f)
                    throw fairdiv::Error("cannot write " + path.string());
                f << fairdiv::corpus_entry_to_json(entry).dump(2) << "\n";
                std::cout << "wrote " << path.string() << "\n";
            }
        }
    } catch (const fairdiv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }

    return (violated && opts.assert_mode) ? kExitViolated : kExitOk;
}
