#pragma once

#include "limitlab/collection.hpp"
#include "limitlab/ledger.hpp"

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace limitlab {

// The set G under test. Built from a small grammar so that membership is
// decidable and G ⊆ K can be decided exactly.
class CandidateSet {
public:
    struct LanguageOf {
        const Collection* collection;
        Index index;
    };
    struct UnionWith;
    struct Minus;
    struct ExplicitFinite {
        std::vector<Element> elements;  // sorted, unique
    };
    struct AllOfDomain {};
    struct Empty {};

    using Node = std::variant<LanguageOf, UnionWith, Minus, ExplicitFinite, AllOfDomain, Empty>;

    static CandidateSet language_of(const Collection& collection, Index index);
    static CandidateSet finite_union_with(CandidateSet base, std::vector<Element> extra);
    static CandidateSet finite_minus(CandidateSet base, std::vector<Element> removed);
    static CandidateSet explicit_finite(std::vector<Element> elements);
    static CandidateSet all_of_domain();
    static CandidateSet empty();

    [[nodiscard]] bool contains(Element x) const;
    // Renders in the flag grammar: lang:<i>, set:{a,b}, all, empty, with
    // trailing +{..} / -{..} modifiers.
    [[nodiscard]] std::string descriptor() const;
    [[nodiscard]] const Node& node() const;

private:
    explicit CandidateSet(std::shared_ptr<const Node> node) : node_{std::move(node)} {}

    std::shared_ptr<const Node> node_;
};

struct CandidateSet::UnionWith {
    CandidateSet base;
    std::vector<Element> elements;
};

struct CandidateSet::Minus {
    CandidateSet base;
    std::vector<Element> elements;
};

inline const CandidateSet::Node& CandidateSet::node() const { return *node_; }

// G = (base \ removed) ∪ added, with base a single language (nullopt = ∅).
struct CandidateNormalForm {
    std::optional<LanguageDescriptor> base;
    std::set<Element> removed;
    std::set<Element> added;
};

[[nodiscard]] CandidateNormalForm normal_form(const CandidateSet& g);

// Exact decision of G ⊆ K.
[[nodiscard]] bool candidate_subset(const CandidateSet& g, const LanguageDescriptor& k);

// Least-value element of G \ K, if any.
[[nodiscard]] std::optional<Element> least_hallucination(const CandidateSet& g, const LanguageDescriptor& k);

// Parses the flag grammar. `lang:<i>` refers to `collection`.
[[nodiscard]] CandidateSet parse_candidate(std::string_view text, const Collection& collection);

// Membership in G with each call charged to a ledger.
class CandidateOracle {
public:
    CandidateOracle(CandidateSet g, QueryLedger& ledger, QueryPurpose purpose = QueryPurpose::candidate)
        : g_{std::move(g)}, ledger_{&ledger}, purpose_{purpose}
    {
    }

    [[nodiscard]] bool contains(Element x) const
    {
        ledger_->record(purpose_);
        return g_.contains(x);
    }
    [[nodiscard]] const CandidateSet& set() const { return g_; }

private:
    CandidateSet g_;
    QueryLedger* ledger_;
    QueryPurpose purpose_;
};

// Membership in L_i with each call charged to a ledger.
class CollectionOracle {
public:
    CollectionOracle(const Collection& collection, QueryLedger& ledger, QueryPurpose purpose)
        : collection_{&collection}, ledger_{&ledger}, purpose_{purpose}
    {
    }

    [[nodiscard]] bool contains(Index i, Element x) const
    {
        ledger_->record(purpose_);
        return collection_->contains(i, x);
    }
    [[nodiscard]] const Collection& collection() const { return *collection_; }
    [[nodiscard]] QueryLedger& ledger() const { return *ledger_; }

private:
    const Collection* collection_;
    QueryLedger* ledger_;
    QueryPurpose purpose_;
};

} // namespace limitlab
