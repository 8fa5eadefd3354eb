#pragma once

#include "limitlab/adversary.hpp"
#include "limitlab/candidate.hpp"
#include "limitlab/identifiers.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace limitlab {

// 0: "G hallucinates", 1: "G does not hallucinate".
enum class Verdict : std::uint8_t { hallucinates = 0, clean = 1 };

[[nodiscard]] constexpr int bit(Verdict v) { return static_cast<int>(v); }
[[nodiscard]] constexpr Verdict verdict_from(bool subset) { return subset ? Verdict::clean : Verdict::hallucinates; }

// A detector for the positive-only game: one enumerated element per step.
class PositiveDetector {
public:
    virtual ~PositiveDetector() = default;
    virtual Verdict step(Element w) = 0;
    // Guess of an inner identifier at the latest step, when there is one.
    [[nodiscard]] virtual std::optional<Index> last_guess() const { return std::nullopt; }
};

// Detection from identification: feed w to the identifier, then look for an
// x_j (j <= t) with x_j ∈ G and x_j ∉ L_{i_t}. Candidate answers are cached
// for the whole run; collection answers are cached per guessed index.
class IdentificationDetector final : public PositiveDetector {
public:
    IdentificationDetector(std::unique_ptr<Identifier> identifier, CandidateOracle candidate,
                           CollectionOracle scan);

    Verdict step(Element w) override;
    [[nodiscard]] std::optional<Index> last_guess() const override { return guess_; }

private:
    struct ScanRow {
        std::uint64_t scanned = 0;           // prefix x_1..x_scanned examined
        std::optional<std::uint64_t> witness; // least j with x_j ∈ G \ L_i
    };

    std::unique_ptr<Identifier> identifier_;
    CandidateOracle candidate_;
    CollectionOracle scan_;
    std::uint64_t step_ = 0;
    std::vector<std::uint8_t> in_candidate_;  // 1{x_j ∈ G} at [j - 1]
    std::unordered_map<Index, ScanRow> rows_;
    std::optional<Index> guess_;
};

// Detection with negative examples: G hallucinates once some (w, 0) with
// w ∈ G has been seen. One candidate query per 0-labeled step until then.
class NegativeExampleDetector {
public:
    explicit NegativeExampleDetector(CandidateOracle candidate) : candidate_{std::move(candidate)} {}

    Verdict step(LabeledElement pair);

    struct Witness {
        Element w;
        std::uint64_t step;
    };
    [[nodiscard]] const std::optional<Witness>& witness() const { return witness_; }

private:
    CandidateOracle candidate_;
    std::uint64_t step_ = 0;
    std::optional<Witness> witness_;
};

} // namespace limitlab
