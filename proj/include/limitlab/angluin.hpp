#pragma once

#include "limitlab/collection.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace limitlab {

enum class AngluinVerdict { satisfied_exactly, violation_certified, inconclusive_within_bounds };

[[nodiscard]] std::string_view to_string(AngluinVerdict verdict);

struct AngluinBounds {
    Index index_bound = 64;            // J: indices scanned for a violating L_j
    std::uint64_t element_bound = 64;  // M: largest element used as evidence
};

// Evidence that T ⊆ L_j ⊊ L_i.
struct ViolationCertificate {
    Index witness = 0;
    bool witness_finite = false;
    std::vector<Element> witness_language;  // full listing of L_j when finite
    std::optional<Element> strictness;      // element of L_i \ L_j, <= M
    std::string basis;                      // "exact_relations" or "finite_containment"
};

struct AngluinCheckResult {
    AngluinVerdict verdict = AngluinVerdict::inconclusive_within_bounds;
    std::string collection;
    Index index = 1;
    std::vector<Element> telltale;
    AngluinBounds bounds;
    std::optional<ViolationCertificate> certificate;
};

// Semi-decision of "T is a tell-tale for L_i": satisfied_exactly only from a
// closed-form argument over all j; violation_certified with a replayable
// certificate; inconclusive otherwise. The tell-tale defaults to the
// collection's rule. Throws ConfigError when no tell-tale is available, when
// T ⊄ L_i, or when a bound is zero.
[[nodiscard]] AngluinCheckResult check_angluin(const Collection& collection, Index i,
                                               std::optional<std::vector<Element>> telltale = std::nullopt,
                                               AngluinBounds bounds = {});

// Re-verifies a violation certificate with membership queries only.
[[nodiscard]] bool replay_certificate(const Collection& collection, const AngluinCheckResult& result);

} // namespace limitlab
