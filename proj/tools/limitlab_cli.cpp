// limitlab: single runs, sweeps, the detection/identification round trip and
// the tell-tale checker. Human summaries go to stdout, artifacts to files.

#include "limitlab/angluin.hpp"
#include "limitlab/errors.hpp"
#include "limitlab/harness.hpp"
#include "limitlab/scenario_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace limitlab;

namespace {

enum Exit : int { ok = 0, failed = 1, validation = 2, inapplicable = 3, internal = 4 };

[[noreturn]] void fail(Exit code, std::string_view kind, const std::string& message)
{
    std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
    std::exit(code);
}

struct ScenarioFlags {
    std::string config;
    std::string collection;
    Index target = 0;
    std::string g;
    std::string detector;
    std::string identifier = "telltale";
    std::string reduction;
    bool fresh_copies = false;
    bool parallel_pool = false;
    std::string strategy = "canonical";
    std::uint64_t seed = 0;
    std::string repeat_prob = "1/2";
    std::uint64_t block_growth = 1;
    std::uint64_t period = 1;
    std::uint64_t horizon = 0;
    std::string id;
};

void add_scenario_flags(CLI::App* cmd, ScenarioFlags& f)
{
    cmd->add_option("--config", f.config, "Scenario file (JSON)");
    cmd->add_option("--collection", f.collection, "Catalog collection id");
    cmd->add_option("--target", f.target, "Target index k (K = L_k)");
    cmd->add_option("--g", f.g, "Candidate set: lang:<i>[+{..}][-{..}], set:{..}, all, empty");
    cmd->add_option("--detector", f.detector, "negex or alg1")->check(CLI::IsMember({"negex", "alg1"}));
    cmd->add_option("--identifier", f.identifier, "telltale or consistency_min")
        ->check(CLI::IsMember({"telltale", "consistency_min"}));
    cmd->add_option("--reduction", f.reduction, "alg2: identification from detection")
        ->check(CLI::IsMember({"alg2"}));
    cmd->add_flag("--fresh-copies", f.fresh_copies, "alg2: replay a new detector per index per round");
    cmd->add_flag("--parallel-pool", f.parallel_pool, "alg2: advance the detector pool with OpenMP");
    cmd->add_option("--strategy", f.strategy, "canonical, repeat_heavy, block_shuffle, delay_pattern");
    cmd->add_option("--seed", f.seed, "Adversary seed");
    cmd->add_option("--repeat-prob", f.repeat_prob, "repeat_heavy probability as num/den");
    cmd->add_option("--block-growth", f.block_growth, "block_shuffle growth");
    cmd->add_option("--period", f.period, "delay_pattern period");
    cmd->add_option("--horizon", f.horizon, "Steps T");
    cmd->add_option("--id", f.id, "Scenario id");
}

Strategy strategy_from(const ScenarioFlags& f)
{
    Strategy s;
    s.kind = parse_strategy_kind(f.strategy);
    s.seed = f.seed;
    const auto slash = f.repeat_prob.find('/');
    if (slash == std::string::npos)
        throw ConfigError("--repeat-prob: expected num/den");
    try {
        s.repeat_num = std::stoull(f.repeat_prob.substr(0, slash));
        s.repeat_den = std::stoull(f.repeat_prob.substr(slash + 1));
    } catch (const std::exception&) {
        throw ConfigError("--repeat-prob: expected num/den");
    }
    s.block_growth = f.block_growth;
    s.period = f.period;
    s.validate();
    return s;
}

json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("--config: cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("--config: " + std::string(e.what()));
    }
}

const Collection& require_collection(const ScenarioFlags& f)
{
    if (f.collection.empty())
        throw ConfigError("--collection: required");
    return find_collection(f.collection);
}

GameScenario scenario_from_flags(const ScenarioFlags& f, std::uint64_t default_t)
{
    if (!f.config.empty()) {
        auto all = scenarios_from_json(read_json(f.config));
        if (all.size() != 1)
            throw ConfigError("--config: expected exactly one scenario");
        return all.front();
    }
    GameScenario s;
    s.collection = &require_collection(f);
    if (f.target == 0)
        throw ConfigError("--target: required, >= 1");
    s.target = f.target;
    s.adversary = strategy_from(f);
    s.horizon = f.horizon ? f.horizon : default_t;
    s.algorithm.identifier = parse_identifier_kind(f.identifier);
    if (!f.reduction.empty() && !f.detector.empty())
        throw ConfigError("--reduction and --detector are exclusive");
    if (!f.reduction.empty()) {
        s.algorithm.kind = AlgorithmKind::alg2;
        s.algorithm.pool = f.fresh_copies ? PoolMode::fresh_copies : PoolMode::incremental;
        s.algorithm.pool_execution = f.parallel_pool ? Execution::parallel : Execution::serial;
    } else if (f.detector == "negex") {
        s.algorithm.kind = AlgorithmKind::negex;
    } else if (f.detector == "alg1") {
        s.algorithm.kind = AlgorithmKind::alg1;
    } else {
        s.algorithm.kind = AlgorithmKind::identifier;
    }
    if (!f.g.empty())
        s.candidate = parse_candidate(f.g, *s.collection);
    s.id = f.id.empty() ? s.collection->id() + "/k" + std::to_string(s.target) + "/" + s.algorithm.name() : f.id;
    s.validate();
    return s;
}

fs::path output_dir(const std::string& flag)
{
    fs::path dir = flag;
    if (dir.empty()) {
        const char* env = std::getenv("LIMITLAB_OUT_DIR");
        dir = env && *env ? env : "limitlab-out";
    }
    fs::create_directories(dir);
    return dir;
}

std::string file_stem(std::string id)
{
    for (char& c : id)
        if (c == '/' || c == '\\' || c == ' ' || c == ':')
            c = '_';
    return id;
}

void write_file(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << text;
}

std::string t_star_text(const StabilizationReport& r)
{
    return r.t_star ? std::to_string(*r.t_star) : "-";
}

int cmd_run(const ScenarioFlags& f, const std::string& out)
{
    const auto s = scenario_from_flags(f, default_horizon);
    const auto result = run_game(s);
    const auto dir = output_dir(out);
    const auto stem = file_stem(s.id);
    write_file(dir / (stem + ".transcript.jsonl"), transcript_jsonl(result.transcript));
    write_file(dir / (stem + ".report.json"), report_to_json(s, result).dump(2) + "\n");
    if (result.transcript.status == RunStatus::inapplicable)
        fail(Exit::inapplicable, "inapplicable", result.transcript.message);

    const auto& r = result.report;
    std::cout << s.id << ": stabilized=" << (r.stabilized ? "yes" : "no") << " t*=" << t_star_text(r)
              << " final=" << (r.final_output ? std::to_string(*r.final_output) : "-") << '\n';
    return Exit::ok;
}

struct SweepFlags {
    std::string config;
    bool grid = false;
    std::vector<std::string> collections;
    Index max_target = 8;
    std::string algorithm = "negex";
    std::vector<std::uint64_t> seeds{1, 2};
    std::uint64_t horizon = default_horizon;
    bool serial = false;
};

int cmd_sweep(const SweepFlags& f, const std::string& out)
{
    std::vector<GameScenario> scenarios;
    if (!f.config.empty()) {
        if (f.grid)
            throw ConfigError("--config and --grid are exclusive");
        scenarios = scenarios_from_json(read_json(f.config));
    } else if (f.grid) {
        GridSpec spec;
        if (f.collections.empty())
            spec.collections = catalog();
        for (const auto& id : f.collections)
            spec.collections.push_back(&find_collection(id));
        spec.max_target = f.max_target;
        spec.strategies = standard_strategies();
        spec.seeds = f.seeds;
        spec.horizon = f.horizon;
        spec.algorithm = algorithm_from_json(json(f.algorithm));
        if (spec.algorithm.is_detector())
            spec.roles = standard_roles();
        scenarios = make_grid(spec);
    } else {
        throw ConfigError("sweep: give --config or --grid");
    }

    const auto rows = run_sweep(scenarios, f.serial ? Execution::serial : Execution::parallel);
    const auto dir = output_dir(out);
    write_file(dir / "summary.csv", summary_csv(rows));

    std::size_t stabilized = 0, errors = 0;
    for (const auto& r : rows) {
        stabilized += r.stabilized ? 1 : 0;
        errors += r.status == "error" ? 1 : 0;
    }
    std::cout << rows.size() << " scenarios, " << stabilized << " stabilized, " << errors << " errors -> "
              << (dir / "summary.csv").string() << '\n';
    return errors ? Exit::failed : Exit::ok;
}

int cmd_roundtrip(const ScenarioFlags& f, const std::string& out)
{
    const Collection& coll = require_collection(f);
    if (!identifier_applicable(IdentifierKind::telltale, coll))
        fail(Exit::inapplicable, "inapplicable",
             "collection '" + coll.id() + "' has no tell-tale for every index; the round trip needs one");
    if (f.target == 0)
        throw ConfigError("--target: required, >= 1");

    GameScenario base;
    base.collection = &coll;
    base.target = f.target;
    base.adversary = strategy_from(f);
    base.horizon = f.horizon ? f.horizon : default_roundtrip_horizon;
    base.algorithm.identifier = IdentifierKind::telltale;
    const std::string prefix = f.id.empty() ? coll.id() + "/k" + std::to_string(f.target) + "/roundtrip" : f.id;

    GameScenario a = base;
    a.id = prefix + "/a";
    a.algorithm.kind = AlgorithmKind::identifier;

    GameScenario b = base;
    b.id = prefix + "/b";
    b.algorithm.kind = AlgorithmKind::alg1;
    b.candidate = f.g.empty() ? CandidateSet::language_of(coll, f.target) : parse_candidate(f.g, coll);

    GameScenario c = base;
    c.id = prefix + "/c";
    c.algorithm.kind = AlgorithmKind::alg2;
    c.algorithm.pool = f.fresh_copies ? PoolMode::fresh_copies : PoolMode::incremental;

    const auto dir = output_dir(out);
    json parts = json::object();
    bool identified = true;
    std::ostringstream line;
    line << prefix << ':';
    for (const auto* s : {&a, &b, &c}) {
        s->validate();
        const auto result = run_game(*s);
        if (result.transcript.status == RunStatus::inapplicable)
            fail(Exit::inapplicable, "inapplicable", result.transcript.message);
        write_file(dir / (file_stem(s->id) + ".transcript.jsonl"), transcript_jsonl(result.transcript));
        const auto key = s->id.substr(s->id.size() - 1);
        parts[key] = report_to_json(*s, result);
        const auto& r = result.report;
        line << ' ' << key << "=" << (r.stabilized ? "stable" : "unstable") << "@" << t_star_text(r) << "->"
             << (r.final_output ? std::to_string(*r.final_output) : "-");
        if (s != &b) {
            const bool good = r.stabilized && r.final_output && languages_equal(coll, *r.final_output, f.target);
            identified = identified && good;
        }
    }
    json report{{"scenario", prefix}, {"rng_algorithm", rng_algorithm}, {"identified", identified}, {"parts", parts}};
    write_file(dir / (file_stem(prefix) + ".roundtrip.json"), report.dump(2) + "\n");
    line << (identified ? " ok" : " FAILED");
    std::cout << line.str() << '\n';
    return identified ? Exit::ok : Exit::failed;
}

struct AngluinFlags {
    std::string collection;
    Index index = 0;
    std::string telltale;
    std::string bounds;
    std::string replay;
};

std::vector<std::uint64_t> parse_numbers(const std::string& text, const std::string& flag)
{
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoull(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError(flag + ": '" + item + "' is not a non-negative integer");
        }
    }
    return out;
}

int cmd_check_angluin(const AngluinFlags& f, const std::string& out)
{
    if (!f.replay.empty()) {
        const auto result = certificate_from_json(read_json(f.replay));
        const bool good = replay_certificate(find_collection(result.collection), result);
        std::cout << f.replay << ": replay " << (good ? "ok" : "FAILED") << '\n';
        return good ? Exit::ok : Exit::failed;
    }
    if (f.collection.empty())
        throw ConfigError("--collection: required");
    if (f.index == 0)
        throw ConfigError("--index: required, >= 1");
    const Collection& coll = find_collection(f.collection);

    std::optional<std::vector<Element>> telltale;
    if (!f.telltale.empty()) {
        telltale.emplace();
        for (auto v : parse_numbers(f.telltale, "--telltale")) {
            if (v == 0)
                throw ConfigError("--telltale: elements start at 1");
            telltale->push_back(Element{v});
        }
    }
    AngluinBounds bounds;
    if (!f.bounds.empty()) {
        const auto b = parse_numbers(f.bounds, "--bounds");
        if (b.size() != 2)
            throw ConfigError("--bounds: expected J,M");
        bounds.index_bound = b[0];
        bounds.element_bound = b[1];
    }

    const auto result = check_angluin(coll, f.index, telltale, bounds);
    const auto dir = output_dir(out);
    const auto path = dir / (file_stem(coll.id() + "_i" + std::to_string(f.index)) + ".certificate.json");
    write_file(path, certificate_to_json(result).dump(2) + "\n");
    std::cout << coll.id() << " index " << f.index << ": " << to_string(result.verdict);
    if (result.certificate)
        std::cout << " (witness L_" << result.certificate->witness << ')';
    std::cout << '\n';
    return Exit::ok;
}

int cmd_catalog(bool as_json)
{
    json all = json::array();
    for (const auto* c : catalog()) {
        json entry{{"id", c->id()},
                   {"exact_relations", c->has_exact_relations()},
                   {"telltale_rule", c->has_telltale_rule()},
                   {"telltale_identifier", identifier_applicable(IdentifierKind::telltale, *c)}};
        json first = json::array();
        for (Index i = 1; i <= 4; ++i)
            first.push_back(c->language(i).describe());
        entry["first_languages"] = first;
        all.push_back(entry);
    }
    if (as_json) {
        std::cout << all.dump(2) << '\n';
        return Exit::ok;
    }
    for (const auto& e : all) {
        std::cout << e["id"].get<std::string>() << "  exact_relations=" << e["exact_relations"]
                  << " telltale=" << e["telltale_rule"] << "  ";
        for (const auto& l : e["first_languages"])
            std::cout << l.get<std::string>() << ' ';
        std::cout << '\n';
    }
    return Exit::ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"limitlab: hallucination detection and language identification in the limit"};
    app.require_subcommand(1, 1);
    std::string out;
    app.add_option("--out", out, "Output directory (default $LIMITLAB_OUT_DIR or ./limitlab-out)");

    ScenarioFlags run_flags;
    auto* run = app.add_subcommand("run", "Run one game");
    add_scenario_flags(run, run_flags);

    SweepFlags sweep_flags;
    auto* sweep = app.add_subcommand("sweep", "Run many games and write summary.csv");
    sweep->add_option("--config", sweep_flags.config, "Scenario list (JSON)");
    sweep->add_flag("--grid", sweep_flags.grid, "Use the standard grid");
    sweep->add_option("--collection", sweep_flags.collections, "Grid collections (repeatable)");
    sweep->add_option("--max-target", sweep_flags.max_target, "Grid target indices 1..k");
    sweep->add_option("--algorithm", sweep_flags.algorithm, "negex, alg1, alg2, telltale, consistency_min");
    sweep->add_option("--seeds", sweep_flags.seeds, "Grid seeds")->delimiter(',');
    sweep->add_option("--horizon", sweep_flags.horizon, "Steps T");
    sweep->add_flag("--serial", sweep_flags.serial, "Run scenarios one at a time");

    ScenarioFlags rt_flags;
    auto* roundtrip = app.add_subcommand("roundtrip", "Identifier, detector built on it, identifier built on that");
    roundtrip->add_option("--collection", rt_flags.collection, "Catalog collection id")->required();
    roundtrip->add_option("--target", rt_flags.target, "Target index k")->required();
    roundtrip->add_option("--g", rt_flags.g, "Candidate set for the detector (default lang:<k>)");
    roundtrip->add_flag("--fresh-copies", rt_flags.fresh_copies, "Replay a new detector per index per round");
    roundtrip->add_option("--strategy", rt_flags.strategy, "Adversary strategy");
    roundtrip->add_option("--seed", rt_flags.seed, "Adversary seed");
    roundtrip->add_option("--repeat-prob", rt_flags.repeat_prob, "repeat_heavy probability as num/den");
    roundtrip->add_option("--block-growth", rt_flags.block_growth, "block_shuffle growth");
    roundtrip->add_option("--period", rt_flags.period, "delay_pattern period");
    roundtrip->add_option("--horizon", rt_flags.horizon, "Steps T (default 300)");
    roundtrip->add_option("--id", rt_flags.id, "Scenario id prefix");

    AngluinFlags ang_flags;
    auto* check = app.add_subcommand("check-angluin", "Check a tell-tale for L_i");
    check->add_option("--collection", ang_flags.collection, "Catalog collection id");
    check->add_option("--index", ang_flags.index, "Index i");
    check->add_option("--telltale", ang_flags.telltale, "Comma-separated tell-tale (default: the collection's)");
    check->add_option("--bounds", ang_flags.bounds, "J,M: index and element bounds (default 64,64)");
    check->add_option("--replay", ang_flags.replay, "Re-verify a certificate file");

    bool catalog_json = false;
    auto* cat = app.add_subcommand("catalog", "List the shipped collections");
    cat->add_flag("--json", catalog_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        fail(Exit::validation, "validation", e.what());
    }

    try {
        if (*run)
            return cmd_run(run_flags, out);
        if (*sweep)
            return cmd_sweep(sweep_flags, out);
        if (*roundtrip)
            return cmd_roundtrip(rt_flags, out);
        if (*check)
            return cmd_check_angluin(ang_flags, out);
        if (*cat)
            return cmd_catalog(catalog_json);
    } catch (const ConfigError& e) {
        fail(Exit::validation, "validation", e.what());
    } catch (const InapplicableError& e) {
        fail(Exit::inapplicable, "inapplicable", e.what());
    } catch (const std::exception& e) {
        fail(Exit::internal, "internal", e.what());
    }
    return Exit::internal;
}
