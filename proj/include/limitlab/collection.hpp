#pragma once

#include "limitlab/language.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace limitlab {

// Closed-form answer to "is T a tell-tale for L_i": holds, or a witness j
// with T ⊆ L_j ⊊ L_i when one is constructible.
struct TelltaleVerdict {
    bool holds = false;
    std::optional<Index> violation;
};

// An indexed family L_1, L_2, ... with a membership oracle. Duplicate
// languages are allowed. Exact relations and tell-tales are optional.
class Collection {
public:
    explicit Collection(std::string id) : id_{std::move(id)} {}
    virtual ~Collection() = default;

    [[nodiscard]] const std::string& id() const { return id_; }

    // Throws ConfigError for index 0 or an index past index_bound().
    [[nodiscard]] virtual LanguageDescriptor language(Index i) const = 0;
    [[nodiscard]] virtual bool contains(Index i, Element x) const = 0;
    [[nodiscard]] virtual std::optional<Index> index_bound() const { return std::nullopt; }

    [[nodiscard]] virtual bool has_exact_relations() const { return false; }
    // L_i ⊆ L_j
    [[nodiscard]] virtual std::optional<bool> subset_of(Index, Index) const { return std::nullopt; }
    [[nodiscard]] virtual std::optional<bool> equals(Index, Index) const { return std::nullopt; }

    // True iff telltale(i) is available for every index.
    [[nodiscard]] virtual bool has_telltale_rule() const { return false; }
    [[nodiscard]] virtual std::optional<std::vector<Element>> telltale(Index) const { return std::nullopt; }
    // Requires T ⊆ L_i.
    [[nodiscard]] virtual std::optional<TelltaleVerdict> telltale_condition(Index, std::span<const Element>) const
    {
        return std::nullopt;
    }

protected:
    void check_index(Index i) const;

private:
    std::string id_;
};

// L_i = multiples of i.
class MultiplesCollection final : public Collection {
public:
    MultiplesCollection() : Collection("multiples") {}
    [[nodiscard]] LanguageDescriptor language(Index i) const override;
    [[nodiscard]] bool contains(Index i, Element x) const override;
    [[nodiscard]] bool has_exact_relations() const override { return true; }
    [[nodiscard]] std::optional<bool> subset_of(Index i, Index j) const override;
    [[nodiscard]] std::optional<bool> equals(Index i, Index j) const override;
    [[nodiscard]] bool has_telltale_rule() const override { return true; }
    [[nodiscard]] std::optional<std::vector<Element>> telltale(Index i) const override;
    [[nodiscard]] std::optional<TelltaleVerdict> telltale_condition(Index i, std::span<const Element> t) const override;
};

// L_i = {1, ..., i}.
class FinitePrefixesCollection final : public Collection {
public:
    FinitePrefixesCollection() : Collection("finite_prefixes") {}
    [[nodiscard]] LanguageDescriptor language(Index i) const override;
    [[nodiscard]] bool contains(Index i, Element x) const override;
    [[nodiscard]] bool has_exact_relations() const override { return true; }
    [[nodiscard]] std::optional<bool> subset_of(Index i, Index j) const override;
    [[nodiscard]] std::optional<bool> equals(Index i, Index j) const override;
    [[nodiscard]] bool has_telltale_rule() const override { return true; }
    [[nodiscard]] std::optional<std::vector<Element>> telltale(Index i) const override;
    [[nodiscard]] std::optional<TelltaleVerdict> telltale_condition(Index i, std::span<const Element> t) const override;
};

// L_i = the finite set whose characteristic vector is the binary expansion
// of i: bit k (from 0) set means element k + 1 is present.
class FiniteSetsCollection final : public Collection {
public:
    FiniteSetsCollection() : Collection("finite_sets") {}
    [[nodiscard]] LanguageDescriptor language(Index i) const override;
    [[nodiscard]] bool contains(Index i, Element x) const override;
    [[nodiscard]] bool has_exact_relations() const override { return true; }
    [[nodiscard]] std::optional<bool> subset_of(Index i, Index j) const override;
    [[nodiscard]] std::optional<bool> equals(Index i, Index j) const override;
    [[nodiscard]] bool has_telltale_rule() const override { return true; }
    [[nodiscard]] std::optional<std::vector<Element>> telltale(Index i) const override;
    [[nodiscard]] std::optional<TelltaleVerdict> telltale_condition(Index i, std::span<const Element> t) const override;
};

// L_1 = the whole domain, L_{i+1} = i-th finite set. Index 1 has no tell-tale.
class FinitePlusAllCollection final : public Collection {
public:
    FinitePlusAllCollection() : Collection("finite_plus_all") {}
    [[nodiscard]] LanguageDescriptor language(Index i) const override;
    [[nodiscard]] bool contains(Index i, Element x) const override;
    [[nodiscard]] std::optional<Index> index_bound() const override;
    [[nodiscard]] bool has_exact_relations() const override { return true; }
    [[nodiscard]] std::optional<bool> subset_of(Index i, Index j) const override;
    [[nodiscard]] std::optional<bool> equals(Index i, Index j) const override;
    [[nodiscard]] std::optional<std::vector<Element>> telltale(Index i) const override;
    [[nodiscard]] std::optional<TelltaleVerdict> telltale_condition(Index i, std::span<const Element> t) const override;
};

// A finite, explicitly listed collection without closed-form relations.
class ExplicitCollection final : public Collection {
public:
    ExplicitCollection(std::string id, std::vector<LanguageDescriptor> languages,
                       std::vector<std::optional<std::vector<Element>>> telltales = {});

    [[nodiscard]] LanguageDescriptor language(Index i) const override;
    [[nodiscard]] bool contains(Index i, Element x) const override;
    [[nodiscard]] std::optional<Index> index_bound() const override { return languages_.size(); }
    [[nodiscard]] bool has_telltale_rule() const override;
    [[nodiscard]] std::optional<std::vector<Element>> telltale(Index i) const override;

private:
    std::vector<LanguageDescriptor> languages_;
    std::vector<std::optional<std::vector<Element>>> telltales_;
};

// Set <-> index bijection used by the finite-set families. Elements above 64
// have no encoding.
[[nodiscard]] std::vector<Element> decode_finite_set(Index code);
[[nodiscard]] std::optional<Index> encode_finite_set(std::span<const Element> elements);

// L_i = L_j, from exact relations when present, else from the descriptors.
[[nodiscard]] bool languages_equal(const Collection& c, Index i, Index j);
// Least z with L_z = L_k.
[[nodiscard]] Index least_equal_index(const Collection& c, Index k);

// The shipped catalog: multiples, finite_prefixes, finite_sets, finite_plus_all.
[[nodiscard]] std::vector<const Collection*> catalog();
// Throws ConfigError for an unknown id.
[[nodiscard]] const Collection& find_collection(std::string_view id);

} // namespace limitlab
