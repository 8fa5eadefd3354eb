#include "limitlab/language.hpp"

#include "limitlab/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace limitlab {

LanguageDescriptor::LanguageDescriptor(LanguageKind kind, std::string collection_id, Index index,
                                       std::uint64_t param, std::vector<Element> elements)
    : kind_{kind}, collection_id_{std::move(collection_id)}, index_{index}, param_{param},
      elements_{std::move(elements)}
{
}

LanguageDescriptor LanguageDescriptor::multiples(std::string collection_id, Index index, std::uint64_t modulus)
{
    if (modulus == 0)
        throw ConfigError("multiples language needs a positive modulus");
    return {LanguageKind::multiples, std::move(collection_id), index, modulus, {}};
}

LanguageDescriptor LanguageDescriptor::finite_prefix(std::string collection_id, Index index, std::uint64_t bound)
{
    return {LanguageKind::finite_prefix, std::move(collection_id), index, bound, {}};
}

LanguageDescriptor LanguageDescriptor::finite_set(std::string collection_id, Index index, std::vector<Element> elements)
{
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (!elements.empty() && elements.front().value == 0)
        throw ConfigError("elements are positive integers");
    return {LanguageKind::finite_set, std::move(collection_id), index, 0, std::move(elements)};
}

LanguageDescriptor LanguageDescriptor::all_of_domain(std::string collection_id, Index index)
{
    return {LanguageKind::all_of_domain, std::move(collection_id), index, 1, {}};
}

bool LanguageDescriptor::contains(Element x) const
{
    switch (kind_) {
    case LanguageKind::multiples:
        return x.value % param_ == 0;
    case LanguageKind::finite_prefix:
        return x.value >= 1 && x.value <= param_;
    case LanguageKind::finite_set:
        return std::binary_search(elements_.begin(), elements_.end(), x);
    case LanguageKind::all_of_domain:
        return true;
    }
    return false;
}

bool LanguageDescriptor::is_all() const
{
    return kind_ == LanguageKind::all_of_domain || (kind_ == LanguageKind::multiples && param_ == 1);
}

std::uint64_t LanguageDescriptor::size() const
{
    if (kind_ == LanguageKind::finite_prefix)
        return param_;
    if (kind_ == LanguageKind::finite_set)
        return elements_.size();
    throw std::logic_error("size() of an infinite language");
}

Element LanguageDescriptor::nth(std::uint64_t rank) const
{
    if (rank == 0 || (is_finite() && rank > size()))
        throw std::out_of_range("rank outside the language");
    switch (kind_) {
    case LanguageKind::multiples:
        return Element{param_ * rank};
    case LanguageKind::finite_prefix:
    case LanguageKind::all_of_domain:
        return Element{rank};
    case LanguageKind::finite_set:
        return elements_[rank - 1];
    }
    return Element{rank};
}

LanguagePrefix LanguageDescriptor::enumerate(std::size_t n) const
{
    LanguagePrefix out;
    std::uint64_t count = n;
    if (is_finite() && size() <= n) {
        count = size();
        out.exhausted = true;
    }
    out.elements.reserve(count);
    for (std::uint64_t r = 1; r <= count; ++r)
        out.elements.push_back(nth(r));
    return out;
}

std::string LanguageDescriptor::describe() const
{
    std::ostringstream os;
    switch (kind_) {
    case LanguageKind::multiples:
        os << "multiples(" << param_ << ")";
        break;
    case LanguageKind::finite_prefix:
        os << "prefix(1.." << param_ << ")";
        break;
    case LanguageKind::finite_set: {
        os << "{";
        for (std::size_t k = 0; k < elements_.size(); ++k)
            os << (k ? "," : "") << elements_[k].value;
        os << "}";
        break;
    }
    case LanguageKind::all_of_domain:
        os << "all";
        break;
    }
    return os.str();
}

bool language_subset(const LanguageDescriptor& a, const LanguageDescriptor& b)
{
    if (a.is_finite()) {
        if (a.kind() == LanguageKind::finite_set)
            return std::all_of(a.elements().begin(), a.elements().end(), [&](Element x) { return b.contains(x); });
        // {1..n} ⊆ B
        switch (b.kind()) {
        case LanguageKind::all_of_domain:
            return true;
        case LanguageKind::multiples:
            return a.size() == 0 || b.param() == 1;
        case LanguageKind::finite_prefix:
            return a.size() <= b.param();
        case LanguageKind::finite_set: {
            const auto& els = b.elements();
            return a.size() <= els.size() && (a.size() == 0 || els[a.size() - 1].value == a.size());
        }
        }
        return false;
    }
    if (b.is_finite())
        return false;
    if (b.is_all())
        return true;
    // a infinite: multiples(m) or all (= multiples(1)); b = multiples(n)
    return a.param() % b.param() == 0;
}

} // namespace limitlab
