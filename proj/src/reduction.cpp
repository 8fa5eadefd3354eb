#include "limitlab/reduction.hpp"

#include "limitlab/errors.hpp"

#include <cstddef>

namespace limitlab {

struct DetectionReduction::PoolEntry {
    std::unique_ptr<PositiveDetector> detector;
    QueryLedger ledger;
    std::uint64_t consumed = 0;
    std::uint64_t reported = 0;
    Verdict last = Verdict::hallucinates;
    bool inapplicable = false;
};

std::string_view to_string(PoolMode mode) { return mode == PoolMode::incremental ? "incremental" : "fresh_copies"; }

DetectorFactory identification_detector_factory(const Collection& collection, IdentifierKind identifier)
{
    return [&collection, identifier](Index i, QueryLedger& ledger) -> std::unique_ptr<PositiveDetector> {
        CollectionOracle oracle(collection, ledger, QueryPurpose::detector);
        return std::make_unique<IdentificationDetector>(
            make_identifier(identifier, oracle),
            CandidateOracle(CandidateSet::language_of(collection, i), ledger, QueryPurpose::detector), oracle);
    };
}

DetectionReduction::DetectionReduction(CollectionOracle consistency, DetectorFactory factory, PoolMode mode,
                                       Execution execution)
    : consistency_{consistency}, factory_{std::move(factory)}, mode_{mode}, execution_{execution},
      tracker_{consistency}
{
}

DetectionReduction::~DetectionReduction() = default;
DetectionReduction::DetectionReduction(DetectionReduction&&) noexcept = default;
DetectionReduction& DetectionReduction::operator=(DetectionReduction&&) noexcept = default;

void DetectionReduction::advance_entry(PoolEntry& entry)
{
    if (entry.inapplicable)
        return;
    try {
        while (entry.consumed < prefix_.size())
            entry.last = entry.detector->step(prefix_[entry.consumed++]);
    } catch (const InapplicableError&) {
        entry.inapplicable = true;
    }
}

void DetectionReduction::replay_fresh(PoolEntry& entry, Index i)
{
    entry.inapplicable = false;
    try {
        auto detector = factory_(i, entry.ledger);
        for (auto w : prefix_)
            entry.last = detector->step(w);
        entry.consumed = prefix_.size();
    } catch (const InapplicableError&) {
        entry.inapplicable = true;
    }
}

void DetectionReduction::advance_incremental()
{
    const auto n = static_cast<std::ptrdiff_t>(pool_.size());
    if (execution_ == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t k = 0; k < n; ++k)
            advance_entry(*pool_[k]);
    } else {
        for (std::ptrdiff_t k = 0; k < n; ++k)
            advance_entry(*pool_[k]);
    }
}

void DetectionReduction::advance_fresh()
{
    const auto n = static_cast<std::ptrdiff_t>(pool_.size());
    if (execution_ == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t k = 0; k < n; ++k)
            replay_fresh(*pool_[k], static_cast<Index>(k + 1));
    } else {
        for (std::ptrdiff_t k = 0; k < n; ++k)
            replay_fresh(*pool_[k], static_cast<Index>(k + 1));
    }
}

Index DetectionReduction::step(Element w)
{
    QueryLedger& ledger = consistency_.ledger();
    const auto before = ledger.totals()[QueryPurpose::consistency];

    prefix_.push_back(w);
    tracker_.observe(w);
    const std::uint64_t t = tracker_.step();

    auto entry = std::make_unique<PoolEntry>();
    if (mode_ == PoolMode::incremental) {
        try {
            entry->detector = factory_(t, entry->ledger);
        } catch (const InapplicableError&) {
            entry->inapplicable = true;
        }
    }
    pool_.push_back(std::move(entry));

    if (mode_ == PoolMode::incremental)
        advance_incremental();
    else
        advance_fresh();

    round_ = RoundRecord{};
    round_.t = t;
    round_.consistent.assign(tracker_.consistent_indices().begin(), tracker_.consistent_indices().end());
    round_.verdicts.reserve(t);
    for (Index i = 1; i <= t; ++i) {
        auto& e = *pool_[i - 1];
        const auto delta = e.ledger.total() - e.reported;
        e.reported = e.ledger.total();
        round_.detector_queries += delta;
        const bool clean = !e.inapplicable && e.last == Verdict::clean;
        round_.verdicts.push_back(clean ? 1 : 0);
        if (e.inapplicable)
            round_.inapplicable.push_back(i);
    }
    ledger.record(QueryPurpose::detector, round_.detector_queries);
    for (Index i : round_.consistent)
        if (round_.verdicts[i - 1])
            round_.accepted.push_back(i);
    round_.guess = round_.accepted.empty() ? 1 : round_.accepted.front();
    round_.consistency_queries = ledger.totals()[QueryPurpose::consistency] - before;
    return round_.guess;
}

} // namespace limitlab
