#pragma once

#include "limitlab/detectors.hpp"
#include "limitlab/identifiers.hpp"
#include "limitlab/ledger.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace limitlab {

// How "run a copy of D on E_t with target L_i for t steps" is realized.
//  incremental:  one persistent detector per index, advanced one step per round
//  fresh_copies: a brand-new detector per index per round, replayed over E_t
enum class PoolMode { incremental, fresh_copies };

enum class Execution { serial, parallel };

[[nodiscard]] std::string_view to_string(PoolMode mode);

// Builds a fresh detector whose candidate set is L_i. All oracle calls of the
// detector must be charged to `ledger`.
using DetectorFactory = std::function<std::unique_ptr<PositiveDetector>(Index candidate, QueryLedger& ledger)>;

// Alg1 over the given identifier, with every query tagged as detector work.
[[nodiscard]] DetectorFactory identification_detector_factory(const Collection& collection, IdentifierKind identifier);

struct RoundRecord {
    std::uint64_t t = 0;
    std::vector<Index> consistent;      // C'_t, ascending
    std::vector<std::uint8_t> verdicts; // d_i^t for i = 1..t at [i - 1]
    std::vector<Index> accepted;        // N = {i in C'_t : d_i^t = 1}
    Index guess = 1;                    // min N, or 1 when N is empty
    std::vector<Index> inapplicable;    // indices whose detector could not run (treated as 0)
    std::uint64_t consistency_queries = 0;
    std::uint64_t detector_queries = 0;
};

// Identification from detection: guess the least index that is consistent
// with E_t and whose detector copy reports no hallucination.
class DetectionReduction {
public:
    DetectionReduction(CollectionOracle consistency, DetectorFactory factory, PoolMode mode = PoolMode::incremental,
                       Execution execution = Execution::serial);
    ~DetectionReduction();
    DetectionReduction(DetectionReduction&&) noexcept;
    DetectionReduction& operator=(DetectionReduction&&) noexcept;

    Index step(Element w);

    [[nodiscard]] const RoundRecord& last_round() const { return round_; }
    [[nodiscard]] const std::vector<Element>& prefix() const { return prefix_; }

private:
    struct PoolEntry;

    void advance_incremental();
    void advance_fresh();
    void advance_entry(PoolEntry& entry);
    void replay_fresh(PoolEntry& entry, Index i);

    CollectionOracle consistency_;
    DetectorFactory factory_;
    PoolMode mode_;
    Execution execution_;
    ConsistencyTracker tracker_;
    std::vector<Element> prefix_;
    std::vector<std::unique_ptr<PoolEntry>> pool_;  // index i at [i - 1]
    RoundRecord round_;
};

} // namespace limitlab
