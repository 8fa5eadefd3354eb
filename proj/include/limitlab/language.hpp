#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace limitlab {

// A point of the countable domain. The domain is the positive integers and
// its canonical enumeration x_1, x_2, ... is the identity (x_j has value j).
struct Element {
    std::uint64_t value = 1;

    friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

// Position of a language inside an indexed collection, starting at 1.
using Index = std::uint64_t;

enum class LanguageKind { multiples, finite_prefix, finite_set, all_of_domain };

struct LanguagePrefix {
    std::vector<Element> elements;
    bool exhausted = false;  // set iff the whole language fits in the request
};

// One concrete language L_i. Membership is total and deterministic.
class LanguageDescriptor {
public:
    static LanguageDescriptor multiples(std::string collection_id, Index index, std::uint64_t modulus);
    static LanguageDescriptor finite_prefix(std::string collection_id, Index index, std::uint64_t bound);
    static LanguageDescriptor finite_set(std::string collection_id, Index index, std::vector<Element> elements);
    static LanguageDescriptor all_of_domain(std::string collection_id, Index index);

    [[nodiscard]] bool contains(Element x) const;
    [[nodiscard]] bool is_finite() const { return kind_ == LanguageKind::finite_prefix || kind_ == LanguageKind::finite_set; }
    [[nodiscard]] bool is_empty() const { return is_finite() && size() == 0; }
    [[nodiscard]] bool is_all() const;
    // Cardinality of a finite language. Only valid when is_finite().
    [[nodiscard]] std::uint64_t size() const;
    // rank-th element (1-based) of the ascending listing; rank <= size() for finite languages.
    [[nodiscard]] Element nth(std::uint64_t rank) const;
    // First min(n, |L|) elements in ascending order.
    [[nodiscard]] LanguagePrefix enumerate(std::size_t n) const;

    [[nodiscard]] LanguageKind kind() const { return kind_; }
    [[nodiscard]] const std::string& collection_id() const { return collection_id_; }
    [[nodiscard]] Index index() const { return index_; }
    [[nodiscard]] std::uint64_t param() const { return param_; }
    [[nodiscard]] const std::vector<Element>& elements() const { return elements_; }
    [[nodiscard]] std::string describe() const;

private:
    LanguageDescriptor(LanguageKind kind, std::string collection_id, Index index, std::uint64_t param,
                       std::vector<Element> elements);

    LanguageKind kind_;
    std::string collection_id_;
    Index index_;
    std::uint64_t param_;  // modulus or prefix bound
    std::vector<Element> elements_;  // finite_set only, sorted, unique
};

// Exact decision of A ⊆ B for the four descriptor kinds.
[[nodiscard]] bool language_subset(const LanguageDescriptor& a, const LanguageDescriptor& b);

} // namespace limitlab
