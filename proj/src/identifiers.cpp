#include "limitlab/identifiers.hpp"

#include "limitlab/errors.hpp"

namespace limitlab {

void ConsistencyTracker::observe(Element w)
{
    ++step_;
    dropped_.clear();
    last_new_ = seen_.insert(w.value).second;
    if (last_new_) {
        distinct_.push_back(w);
        for (auto it = alive_.begin(); it != alive_.end();) {
            if (oracle_.contains(*it, w)) {
                ++it;
            } else {
                dropped_.push_back(*it);
                it = alive_.erase(it);
            }
        }
    }
    const Index fresh = step_;
    for (auto x : distinct_)
        if (!oracle_.contains(fresh, x))
            return;
    alive_.insert(fresh);
}

std::string_view to_string(IdentifierKind kind)
{
    return kind == IdentifierKind::telltale ? "telltale" : "consistency_min";
}

IdentifierKind parse_identifier_kind(std::string_view name)
{
    if (name == "telltale")
        return IdentifierKind::telltale;
    if (name == "consistency_min")
        return IdentifierKind::consistency_min;
    throw ConfigError("unknown identifier '" + std::string(name) + "'");
}

TelltaleIdentifier::TelltaleIdentifier(CollectionOracle oracle)
    : collection_{&oracle.collection()}, tracker_{oracle}
{
}

void TelltaleIdentifier::admit_index(Index i)
{
    auto tt = collection_->telltale(i);
    if (!tt)
        throw InapplicableError("collection '" + collection_->id() + "' has no tell-tale for index " +
                                std::to_string(i));
    std::uint64_t missing = 0;
    for (auto x : *tt) {
        if (!tracker_.seen(x)) {
            ++missing;
            waiting_[x.value].push_back(i);
        }
    }
    missing_.push_back(missing);
    if (missing == 0)
        ready_.insert(i);
}

Index TelltaleIdentifier::step(Element w)
{
    tracker_.observe(w);
    if (tracker_.last_was_new()) {
        if (auto it = waiting_.find(w.value); it != waiting_.end()) {
            for (Index i : it->second)
                if (--missing_[i - 1] == 0)
                    ready_.insert(i);
            waiting_.erase(it);
        }
    }
    admit_index(tracker_.step());
    // Inconsistency is permanent, so stale entries can be dropped for good.
    for (auto it = ready_.begin(); it != ready_.end();) {
        if (tracker_.consistent(*it))
            return *it;
        it = ready_.erase(it);
    }
    return 1;
}

Index ConsistencyMinIdentifier::step(Element w)
{
    tracker_.observe(w);
    const auto& alive = tracker_.consistent_indices();
    return alive.empty() ? 1 : *alive.begin();
}

bool identifier_applicable(IdentifierKind kind, const Collection& collection)
{
    return kind == IdentifierKind::consistency_min || collection.has_telltale_rule();
}

std::unique_ptr<Identifier> make_identifier(IdentifierKind kind, CollectionOracle oracle)
{
    if (!identifier_applicable(kind, oracle.collection()))
        throw InapplicableError("identifier '" + std::string(to_string(kind)) + "' needs a tell-tale rule for every index of '" +
                                oracle.collection().id() + "'");
    if (kind == IdentifierKind::telltale)
        return std::make_unique<TelltaleIdentifier>(oracle);
    return std::make_unique<ConsistencyMinIdentifier>(oracle);
}

} // namespace limitlab
