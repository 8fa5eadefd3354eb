#include "limitlab/detectors.hpp"

namespace limitlab {

IdentificationDetector::IdentificationDetector(std::unique_ptr<Identifier> identifier, CandidateOracle candidate,
                                               CollectionOracle scan)
    : identifier_{std::move(identifier)}, candidate_{std::move(candidate)}, scan_{scan}
{
}

Verdict IdentificationDetector::step(Element w)
{
    ++step_;
    const Index guess = identifier_->step(w);
    guess_ = guess;

    // Domain prefix x_1..x_t, x_j = j.
    in_candidate_.push_back(candidate_.contains(Element{step_}) ? 1 : 0);

    auto& row = rows_[guess];
    while (!row.witness && row.scanned < step_) {
        const std::uint64_t j = ++row.scanned;
        if (in_candidate_[j - 1] && !scan_.contains(guess, Element{j}))
            row.witness = j;
    }
    return row.witness ? Verdict::hallucinates : Verdict::clean;
}

Verdict NegativeExampleDetector::step(LabeledElement pair)
{
    ++step_;
    if (witness_)
        return Verdict::hallucinates;
    if (!pair.in_target && candidate_.contains(pair.w)) {
        witness_ = Witness{pair.w, step_};
        return Verdict::hallucinates;
    }
    return Verdict::clean;
}

} // namespace limitlab
