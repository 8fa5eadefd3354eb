#pragma once

#include "limitlab/adversary.hpp"
#include "limitlab/candidate.hpp"
#include "limitlab/detectors.hpp"
#include "limitlab/identifiers.hpp"
#include "limitlab/reduction.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace limitlab {

enum class AlgorithmKind {
    identifier,  // run an identifier directly
    alg1,        // detection from identification
    negex,       // detection with negative examples
    alg2,        // identification from detection (over alg1)
};

struct AlgorithmSpec {
    AlgorithmKind kind = AlgorithmKind::negex;
    IdentifierKind identifier = IdentifierKind::telltale;
    PoolMode pool = PoolMode::incremental;
    Execution pool_execution = Execution::serial;

    // "telltale", "consistency_min", "alg1", "negex" or "alg2".
    [[nodiscard]] std::string name() const;
    [[nodiscard]] bool is_detector() const { return kind == AlgorithmKind::alg1 || kind == AlgorithmKind::negex; }
};

inline constexpr std::uint64_t default_horizon = 1000;
inline constexpr std::uint64_t default_roundtrip_horizon = 300;

struct GameScenario {
    std::string id;
    const Collection* collection = nullptr;
    Index target = 1;
    std::optional<CandidateSet> candidate;  // required for detectors
    Strategy adversary;
    AlgorithmSpec algorithm;
    std::uint64_t horizon = default_horizon;

    // Throws ConfigError naming the offending field.
    void validate() const;
};

struct StepRecord {
    std::uint64_t t = 0;
    Element w;
    std::optional<bool> label;          // labeled games only
    std::optional<Index> guess;         // identifier guess (also alg1's inner guess)
    std::optional<Verdict> verdict;     // detectors only
    QueryCounts fresh;                  // oracle calls made during this step
    std::vector<Index> consistent;      // alg2 only: C'_t
};

enum class RunStatus { ok, inapplicable };

struct Transcript {
    std::string scenario_id;
    RunStatus status = RunStatus::ok;
    std::string message;
    std::vector<StepRecord> steps;
    std::optional<RoundRecord> final_round;  // alg2 only
};

// "Stable through the horizon": a finite run never proves convergence.
struct StabilizationReport {
    bool stabilized = false;
    std::optional<std::uint64_t> t_star;        // least t with constant, correct output on [t, T]
    std::optional<std::uint64_t> final_output;  // verdict bit or guess index
    bool correct_at_horizon = false;
};

struct GameResult {
    Transcript transcript;
    StabilizationReport report;
    std::optional<bool> ground_truth_subset;  // 1{G ⊆ K}, detection games
    Index target_class = 1;                   // least z with L_z = K
};

[[nodiscard]] StabilizationReport analyze_stabilization(std::span<const std::uint64_t> outputs,
                                                        const std::function<bool(std::uint64_t)>& correct);

// Throws ConfigError for invalid scenarios; inapplicable algorithms yield
// RunStatus::inapplicable.
[[nodiscard]] GameResult run_game(const GameScenario& scenario);

// Output sequence the stabilization analysis runs on (verdict bits or guesses).
[[nodiscard]] std::vector<std::uint64_t> output_series(const Transcript& transcript, const AlgorithmSpec& algorithm);

struct SummaryRow {
    std::string scenario_id;
    std::string algorithm;
    std::string status;  // ok | inapplicable | error
    std::string message;
    bool stabilized = false;
    std::optional<std::uint64_t> t_star;
    bool correct_at_horizon = false;
    QueryCounts queries;
};

// Runs every scenario; per-scenario failures become rows. Rows come back
// sorted by scenario id whatever the execution mode. Throws ConfigError on
// duplicate ids.
[[nodiscard]] std::vector<SummaryRow> run_sweep(std::span<const GameScenario> scenarios,
                                                Execution execution = Execution::parallel);

[[nodiscard]] std::string summary_csv(std::span<const SummaryRow> rows);

// --- scenario grids ---------------------------------------------------------

enum class CandidateRole { equal, superset, subset, plus_outside, empty, all };

[[nodiscard]] std::string_view to_string(CandidateRole role);

// G for a grid cell. superset/subset pick the least catalog index whose
// language is a proper superset/subset of K, or K itself when none exists;
// plus_outside adds the least element outside K.
[[nodiscard]] CandidateSet grid_candidate(const Collection& collection, Index target, CandidateRole role);

struct GridSpec {
    std::vector<const Collection*> collections;
    Index max_target = 8;
    std::vector<CandidateRole> roles;    // empty: no candidate (identification)
    std::vector<Strategy> strategies;    // seeds are overridden by `seeds`
    std::vector<std::uint64_t> seeds;
    AlgorithmSpec algorithm;
    std::uint64_t horizon = default_horizon;
};

// Strategies of the standard grid: canonical, repeat_heavy(1/2), block_shuffle(2).
[[nodiscard]] std::vector<Strategy> standard_strategies();
[[nodiscard]] std::vector<CandidateRole> standard_roles();

[[nodiscard]] std::vector<GameScenario> make_grid(const GridSpec& spec);

} // namespace limitlab
