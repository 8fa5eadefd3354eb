#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace limitlab {

enum class QueryPurpose : std::uint8_t {
    candidate,    // membership in the set G under test
    consistency,  // collection membership used to maintain consistent index sets
    detector,     // collection membership issued by a detector (scan or inner copies)
};

inline constexpr std::size_t query_purpose_count = 3;

struct QueryCounts {
    std::array<std::uint64_t, query_purpose_count> by_purpose{};

    [[nodiscard]] std::uint64_t operator[](QueryPurpose p) const { return by_purpose[static_cast<std::size_t>(p)]; }
    [[nodiscard]] std::uint64_t total() const { return by_purpose[0] + by_purpose[1] + by_purpose[2]; }

    QueryCounts& operator+=(const QueryCounts& other);
    friend bool operator==(const QueryCounts&, const QueryCounts&) = default;
};

// Per-step oracle call counters for one game run. Calls recorded before the
// first begin_step() land in step 0.
class QueryLedger {
public:
    QueryLedger();

    // Steps are strictly increasing.
    void begin_step(std::uint64_t t);
    void record(QueryPurpose purpose, std::uint64_t n = 1);

    [[nodiscard]] std::uint64_t current_step() const { return current_; }
    [[nodiscard]] const QueryCounts& current() const { return steps_.back().counts; }
    // Counters for step t; zero if no call was recorded at t.
    [[nodiscard]] QueryCounts at(std::uint64_t t) const;
    [[nodiscard]] const QueryCounts& totals() const { return totals_; }
    [[nodiscard]] std::uint64_t total() const { return totals_.total(); }

private:
    struct StepEntry {
        std::uint64_t t;
        QueryCounts counts;
    };

    std::uint64_t current_ = 0;
    std::vector<StepEntry> steps_;
    QueryCounts totals_;
};

} // namespace limitlab
