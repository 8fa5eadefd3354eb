#include "limitlab/ledger.hpp"

#include <algorithm>
#include <stdexcept>

namespace limitlab {

QueryCounts& QueryCounts::operator+=(const QueryCounts& other)
{
    for (std::size_t k = 0; k < query_purpose_count; ++k)
        by_purpose[k] += other.by_purpose[k];
    return *this;
}

QueryLedger::QueryLedger() { steps_.push_back({0, {}}); }

void QueryLedger::begin_step(std::uint64_t t)
{
    if (t <= current_ && !(t == 0 && current_ == 0))
        throw std::logic_error("ledger steps must increase");
    current_ = t;
    if (steps_.back().t != t)
        steps_.push_back({t, {}});
}

void QueryLedger::record(QueryPurpose purpose, std::uint64_t n)
{
    const auto k = static_cast<std::size_t>(purpose);
    steps_.back().counts.by_purpose[k] += n;
    totals_.by_purpose[k] += n;
}

QueryCounts QueryLedger::at(std::uint64_t t) const
{
    auto it = std::lower_bound(steps_.begin(), steps_.end(), t,
                               [](const StepEntry& e, std::uint64_t v) { return e.t < v; });
    if (it == steps_.end() || it->t != t)
        return {};
    return it->counts;
}

} // namespace limitlab
