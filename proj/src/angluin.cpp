#include "limitlab/angluin.hpp"

#include "limitlab/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace limitlab {

std::string_view to_string(AngluinVerdict verdict)
{
    switch (verdict) {
    case AngluinVerdict::satisfied_exactly:
        return "satisfied_exactly";
    case AngluinVerdict::violation_certified:
        return "violation_certified";
    case AngluinVerdict::inconclusive_within_bounds:
        return "inconclusive_within_bounds";
    }
    return "?";
}

namespace {

std::optional<Element> strictness_witness(const Collection& c, Index i, Index j, std::uint64_t bound)
{
    for (std::uint64_t x = 1; x <= bound; ++x)
        if (c.contains(i, Element{x}) && !c.contains(j, Element{x}))
            return Element{x};
    return std::nullopt;
}

// Tries to certify T ⊆ L_j ⊊ L_i.
std::optional<ViolationCertificate> certify(const Collection& c, Index i, Index j, const std::vector<Element>& t,
                                            const AngluinBounds& bounds)
{
    if (j == 0 || (c.index_bound() && j > *c.index_bound()))
        return std::nullopt;
    for (auto x : t)
        if (!c.contains(j, x))
            return std::nullopt;

    const auto lj = c.language(j);
    ViolationCertificate cert;
    cert.witness = j;
    cert.witness_finite = lj.is_finite();
    if (cert.witness_finite)
        cert.witness_language = lj.enumerate(lj.size()).elements;
    cert.strictness = strictness_witness(c, i, j, bounds.element_bound);
    if (!cert.strictness)
        return std::nullopt;

    if (auto sub = c.subset_of(j, i)) {
        if (!*sub || c.equals(j, i).value_or(false))
            return std::nullopt;
        cert.basis = "exact_relations";
        return cert;
    }
    if (!cert.witness_finite)
        return std::nullopt;
    for (auto x : cert.witness_language)
        if (!c.contains(i, x))
            return std::nullopt;
    cert.basis = "finite_containment";
    return cert;
}

} // namespace

AngluinCheckResult check_angluin(const Collection& collection, Index i, std::optional<std::vector<Element>> telltale,
                                 AngluinBounds bounds)
{
    if (bounds.index_bound == 0 || bounds.element_bound == 0)
        throw ConfigError("bounds: J and M must be >= 1");
    if (!telltale)
        telltale = collection.telltale(i);
    if (!telltale)
        throw ConfigError("telltale: collection '" + collection.id() + "' has no tell-tale for index " +
                          std::to_string(i) + " and none was supplied");
    std::sort(telltale->begin(), telltale->end());
    telltale->erase(std::unique(telltale->begin(), telltale->end()), telltale->end());
    for (auto x : *telltale)
        if (x.value == 0 || !collection.contains(i, x))
            throw ConfigError("telltale: element " + std::to_string(x.value) + " is not in L_" + std::to_string(i));

    AngluinCheckResult result;
    result.collection = collection.id();
    result.index = i;
    result.telltale = *telltale;
    result.bounds = bounds;

    const auto closed = collection.telltale_condition(i, result.telltale);
    if (closed && !closed->holds && closed->violation)
        result.certificate = certify(collection, i, *closed->violation, result.telltale, bounds);
    for (Index j = 1; !result.certificate && j <= bounds.index_bound; ++j)
        result.certificate = certify(collection, i, j, result.telltale, bounds);

    if (closed && closed->holds) {
        if (result.certificate)
            throw std::logic_error("closed-form tell-tale verdict contradicted by a certified violation");
        result.verdict = AngluinVerdict::satisfied_exactly;
    } else if (result.certificate) {
        result.verdict = AngluinVerdict::violation_certified;
    } else {
        result.verdict = AngluinVerdict::inconclusive_within_bounds;
    }
    return result;
}

bool replay_certificate(const Collection& c, const AngluinCheckResult& result)
{
    if (result.verdict != AngluinVerdict::violation_certified || !result.certificate)
        return false;
    const auto& cert = *result.certificate;
    const Index i = result.index;
    const Index j = cert.witness;

    for (auto x : result.telltale)
        if (!c.contains(i, x) || !c.contains(j, x))
            return false;
    if (!cert.strictness || !c.contains(i, *cert.strictness) || c.contains(j, *cert.strictness))
        return false;

    std::uint64_t scan_to = result.bounds.element_bound;
    if (cert.witness_finite) {
        for (auto x : cert.witness_language) {
            if (!c.contains(j, x) || !c.contains(i, x))
                return false;
            scan_to = std::max(scan_to, x.value);
        }
    }
    // Every member of L_j up to the scan bound is listed (finite) and lies in L_i.
    for (std::uint64_t v = 1; v <= scan_to; ++v) {
        const Element x{v};
        if (!c.contains(j, x))
            continue;
        if (!c.contains(i, x))
            return false;
        if (cert.witness_finite &&
            !std::binary_search(cert.witness_language.begin(), cert.witness_language.end(), x))
            return false;
    }
    return true;
}

} // namespace limitlab
