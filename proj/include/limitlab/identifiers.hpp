#pragma once

#include "limitlab/candidate.hpp"
#include "limitlab/collection.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace limitlab {

// Maintains E_t (distinct elements seen) and the consistent index set
// {i <= t : E_t ⊆ L_i}. Per step it issues at most t - 1 queries for the
// surviving old indices (only when the element is new) plus at most |E_t|
// for the new index t, so at most 2t - 1 in total.
class ConsistencyTracker {
public:
    explicit ConsistencyTracker(CollectionOracle oracle) : oracle_{oracle} {}

    void observe(Element w);

    [[nodiscard]] std::uint64_t step() const { return step_; }
    [[nodiscard]] bool consistent(Index i) const { return alive_.contains(i); }
    [[nodiscard]] const std::set<Index>& consistent_indices() const { return alive_; }
    // Indices that left the consistent set during the latest step.
    [[nodiscard]] const std::vector<Index>& dropped() const { return dropped_; }
    // Distinct elements in first-seen order.
    [[nodiscard]] const std::vector<Element>& distinct() const { return distinct_; }
    [[nodiscard]] bool seen(Element x) const { return seen_.contains(x.value); }
    [[nodiscard]] bool last_was_new() const { return last_new_; }

private:
    CollectionOracle oracle_;
    std::uint64_t step_ = 0;
    std::vector<Element> distinct_;
    std::unordered_set<std::uint64_t> seen_;
    std::set<Index> alive_;
    std::vector<Index> dropped_;
    bool last_new_ = false;
};

enum class IdentifierKind { telltale, consistency_min };

[[nodiscard]] std::string_view to_string(IdentifierKind kind);
[[nodiscard]] IdentifierKind parse_identifier_kind(std::string_view name);

// Consumes one enumerated element per step and emits a guess index i_t >= 1.
class Identifier {
public:
    virtual ~Identifier() = default;
    virtual Index step(Element w) = 0;
    [[nodiscard]] virtual IdentifierKind kind() const = 0;
};

// Least i <= t with T_i ⊆ E_t and E_t ⊆ L_i, else 1. Throws
// InapplicableError when a probed index has no tell-tale.
class TelltaleIdentifier final : public Identifier {
public:
    explicit TelltaleIdentifier(CollectionOracle oracle);

    Index step(Element w) override;
    [[nodiscard]] IdentifierKind kind() const override { return IdentifierKind::telltale; }

private:
    void admit_index(Index i);

    const Collection* collection_;
    ConsistencyTracker tracker_;
    std::vector<std::uint64_t> missing_;  // unseen tell-tale elements of index i at [i - 1]
    std::unordered_map<std::uint64_t, std::vector<Index>> waiting_;
    std::set<Index> ready_;  // tell-tale fully seen
};

// Least i <= t with E_t ⊆ L_i, else 1.
class ConsistencyMinIdentifier final : public Identifier {
public:
    explicit ConsistencyMinIdentifier(CollectionOracle oracle) : tracker_{oracle} {}

    Index step(Element w) override;
    [[nodiscard]] IdentifierKind kind() const override { return IdentifierKind::consistency_min; }

private:
    ConsistencyTracker tracker_;
};

// Whether `kind` can run on every target of `collection`.
[[nodiscard]] bool identifier_applicable(IdentifierKind kind, const Collection& collection);

// Throws InapplicableError when !identifier_applicable(kind, collection).
[[nodiscard]] std::unique_ptr<Identifier> make_identifier(IdentifierKind kind, CollectionOracle oracle);

} // namespace limitlab
