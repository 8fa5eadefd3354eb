#include "limitlab/collection.hpp"

#include "limitlab/errors.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

namespace limitlab {

namespace {

bool bit_member(std::uint64_t code, Element x)
{
    return x.value >= 1 && x.value <= 64 && ((code >> (x.value - 1)) & 1u) != 0;
}

std::uint64_t max_value(std::span<const Element> t)
{
    std::uint64_t m = 0;
    for (auto x : t)
        m = std::max(m, x.value);
    return m;
}

// Shared closed form for the bit-encoded families; `code` is the bit pattern
// of L_i and T ⊆ L_i. The witness is returned as a bit pattern.
TelltaleVerdict finite_set_condition(std::uint64_t code, std::span<const Element> t)
{
    const auto tcode = encode_finite_set(t).value_or(0);
    if (tcode == code || (tcode == 0 && std::popcount(code) == 1))
        return {true, std::nullopt};
    if (tcode != 0)
        return {false, tcode};
    return {false, code & (~code + 1)};
}

} // namespace

void Collection::check_index(Index i) const
{
    if (i == 0)
        throw ConfigError("collection '" + id_ + "': indices start at 1");
    if (auto bound = index_bound(); bound && i > *bound)
        throw ConfigError("collection '" + id_ + "': index " + std::to_string(i) + " exceeds bound " +
                          std::to_string(*bound));
}

std::vector<Element> decode_finite_set(Index code)
{
    std::vector<Element> out;
    for (std::uint64_t bit = 0; bit < 64; ++bit)
        if ((code >> bit) & 1u)
            out.push_back(Element{bit + 1});
    return out;
}

std::optional<Index> encode_finite_set(std::span<const Element> elements)
{
    Index code = 0;
    for (auto x : elements) {
        if (x.value == 0 || x.value > 64)
            return std::nullopt;
        code |= Index{1} << (x.value - 1);
    }
    return code;
}

// --- multiples -------------------------------------------------------------

LanguageDescriptor MultiplesCollection::language(Index i) const
{
    check_index(i);
    return LanguageDescriptor::multiples(id(), i, i);
}

bool MultiplesCollection::contains(Index i, Element x) const
{
    check_index(i);
    return x.value % i == 0;
}

std::optional<bool> MultiplesCollection::subset_of(Index i, Index j) const
{
    check_index(i);
    check_index(j);
    return i % j == 0;
}

std::optional<bool> MultiplesCollection::equals(Index i, Index j) const
{
    check_index(i);
    check_index(j);
    return i == j;
}

std::optional<std::vector<Element>> MultiplesCollection::telltale(Index i) const
{
    check_index(i);
    return std::vector<Element>{Element{i}};
}

std::optional<TelltaleVerdict> MultiplesCollection::telltale_condition(Index i, std::span<const Element> t) const
{
    check_index(i);
    // T ⊆ L_j iff j | gcd(T); L_j ⊊ L_i iff i | j, j != i.
    std::uint64_t g = 0;
    for (auto x : t)
        g = std::gcd(g, x.value);
    if (g == i)
        return TelltaleVerdict{true, std::nullopt};
    if (g == 0)
        return TelltaleVerdict{false, 2 * i};
    return TelltaleVerdict{false, g};
}

// --- finite prefixes -------------------------------------------------------

LanguageDescriptor FinitePrefixesCollection::language(Index i) const
{
    check_index(i);
    return LanguageDescriptor::finite_prefix(id(), i, i);
}

bool FinitePrefixesCollection::contains(Index i, Element x) const
{
    check_index(i);
    return x.value >= 1 && x.value <= i;
}

std::optional<bool> FinitePrefixesCollection::subset_of(Index i, Index j) const
{
    check_index(i);
    check_index(j);
    return i <= j;
}

std::optional<bool> FinitePrefixesCollection::equals(Index i, Index j) const
{
    check_index(i);
    check_index(j);
    return i == j;
}

std::optional<std::vector<Element>> FinitePrefixesCollection::telltale(Index i) const
{
    check_index(i);
    return std::vector<Element>{Element{i}};
}

std::optional<TelltaleVerdict> FinitePrefixesCollection::telltale_condition(Index i, std::span<const Element> t) const
{
    check_index(i);
    // T ⊆ L_j iff j >= max(T); L_j ⊊ L_i iff j < i.
    const auto m = max_value(t);
    if (m == i || (m == 0 && i == 1))
        return TelltaleVerdict{true, std::nullopt};
    return TelltaleVerdict{false, m == 0 ? i - 1 : m};
}

// --- finite sets -----------------------------------------------------------

LanguageDescriptor FiniteSetsCollection::language(Index i) const
{
    check_index(i);
    return LanguageDescriptor::finite_set(id(), i, decode_finite_set(i));
}

bool FiniteSetsCollection::contains(Index i, Element x) const
{
    check_index(i);
    return bit_member(i, x);
}

std::optional<bool> FiniteSetsCollection::subset_of(Index i, Index j) const
{
    check_index(i);
    check_index(j);
    return (i & ~j) == 0;
}

std::optional<bool> FiniteSetsCollection::equals(Index i, Index j) const
{
    check_index(i);
    check_index(j);
    return i == j;
}

std::optional<std::vector<Element>> FiniteSetsCollection::telltale(Index i) const
{
    check_index(i);
    return decode_finite_set(i);
}

std::optional<TelltaleVerdict> FiniteSetsCollection::telltale_condition(Index i, std::span<const Element> t) const
{
    check_index(i);
    return finite_set_condition(i, t);
}

// --- finite plus all -------------------------------------------------------

LanguageDescriptor FinitePlusAllCollection::language(Index i) const
{
    check_index(i);
    if (i == 1)
        return LanguageDescriptor::all_of_domain(id(), i);
    return LanguageDescriptor::finite_set(id(), i, decode_finite_set(i - 1));
}

bool FinitePlusAllCollection::contains(Index i, Element x) const
{
    check_index(i);
    return i == 1 || bit_member(i - 1, x);
}

std::optional<Index> FinitePlusAllCollection::index_bound() const
{
    return std::numeric_limits<Index>::max();
}

std::optional<bool> FinitePlusAllCollection::subset_of(Index i, Index j) const
{
    check_index(i);
    check_index(j);
    if (j == 1)
        return true;
    if (i == 1)
        return false;
    return ((i - 1) & ~(j - 1)) == 0;
}

std::optional<bool> FinitePlusAllCollection::equals(Index i, Index j) const
{
    check_index(i);
    check_index(j);
    return i == j;
}

std::optional<std::vector<Element>> FinitePlusAllCollection::telltale(Index i) const
{
    check_index(i);
    if (i == 1)
        return std::nullopt;
    return decode_finite_set(i - 1);
}

std::optional<TelltaleVerdict> FinitePlusAllCollection::telltale_condition(Index i, std::span<const Element> t) const
{
    check_index(i);
    if (i == 1) {
        // Every finite T sits inside the finite language T itself (or {1} when
        // T is empty), which is a proper subset of the whole domain.
        if (t.empty())
            return TelltaleVerdict{false, Index{2}};
        auto code = encode_finite_set(t);
        if (!code)
            return TelltaleVerdict{false, std::nullopt};
        return TelltaleVerdict{false, *code + 1};
    }
    // L_1 is never a subset of a finite language, so only finite j compete.
    auto v = finite_set_condition(i - 1, t);
    if (v.violation)
        *v.violation += 1;
    return v;
}

// --- explicit --------------------------------------------------------------

ExplicitCollection::ExplicitCollection(std::string id, std::vector<LanguageDescriptor> languages,
                                       std::vector<std::optional<std::vector<Element>>> telltales)
    : Collection(std::move(id)), languages_{std::move(languages)}, telltales_{std::move(telltales)}
{
    if (!telltales_.empty() && telltales_.size() != languages_.size())
        throw ConfigError("explicit collection: one tell-tale slot per language");
}

LanguageDescriptor ExplicitCollection::language(Index i) const
{
    check_index(i);
    return languages_[i - 1];
}

bool ExplicitCollection::contains(Index i, Element x) const
{
    check_index(i);
    return languages_[i - 1].contains(x);
}

bool ExplicitCollection::has_telltale_rule() const
{
    return !telltales_.empty() &&
           std::all_of(telltales_.begin(), telltales_.end(), [](const auto& t) { return t.has_value(); });
}

std::optional<std::vector<Element>> ExplicitCollection::telltale(Index i) const
{
    check_index(i);
    if (telltales_.empty())
        return std::nullopt;
    return telltales_[i - 1];
}

// --- helpers ---------------------------------------------------------------

bool languages_equal(const Collection& c, Index i, Index j)
{
    if (auto eq = c.equals(i, j))
        return *eq;
    const auto a = c.language(i);
    const auto b = c.language(j);
    return language_subset(a, b) && language_subset(b, a);
}

Index least_equal_index(const Collection& c, Index k)
{
    for (Index z = 1; z < k; ++z)
        if (languages_equal(c, z, k))
            return z;
    return k;
}

std::vector<const Collection*> catalog()
{
    static const MultiplesCollection multiples;
    static const FinitePrefixesCollection prefixes;
    static const FiniteSetsCollection sets;
    static const FinitePlusAllCollection plus_all;
    return {&multiples, &prefixes, &sets, &plus_all};
}

const Collection& find_collection(std::string_view id)
{
    for (const auto* c : catalog())
        if (c->id() == id)
            return *c;
    throw ConfigError("unknown collection '" + std::string(id) + "'");
}

} // namespace limitlab
