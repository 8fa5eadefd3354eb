#include "limitlab/adversary.hpp"

#include "limitlab/errors.hpp"

#include <limits>
#include <sstream>
#include <utility>

namespace limitlab {

std::uint64_t Rng::below(std::uint64_t n)
{
    // Reject the tail of the 64-bit range that would bias the modulo.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    for (;;) {
        const std::uint64_t draw = engine_();
        if (draw < limit)
            return draw % n;
    }
}

std::string_view to_string(StrategyKind kind)
{
    switch (kind) {
    case StrategyKind::canonical:
        return "canonical";
    case StrategyKind::repeat_heavy:
        return "repeat_heavy";
    case StrategyKind::block_shuffle:
        return "block_shuffle";
    case StrategyKind::delay_pattern:
        return "delay_pattern";
    }
    return "?";
}

StrategyKind parse_strategy_kind(std::string_view name)
{
    for (auto k : {StrategyKind::canonical, StrategyKind::repeat_heavy, StrategyKind::block_shuffle,
                   StrategyKind::delay_pattern})
        if (to_string(k) == name)
            return k;
    throw ConfigError("unknown adversary strategy '" + std::string(name) + "'");
}

void Strategy::validate() const
{
    if (kind == StrategyKind::repeat_heavy && (repeat_den == 0 || repeat_num >= repeat_den))
        throw ConfigError("repeat_heavy needs 0 <= repeat_num < repeat_den");
    if (kind == StrategyKind::block_shuffle && block_growth == 0)
        throw ConfigError("block_shuffle needs block_growth >= 1");
    if (kind == StrategyKind::delay_pattern && period == 0)
        throw ConfigError("delay_pattern needs period >= 1");
}

std::string Strategy::describe() const
{
    std::ostringstream os;
    os << to_string(kind);
    switch (kind) {
    case StrategyKind::canonical:
        break;
    case StrategyKind::repeat_heavy:
        os << "(seed=" << seed << ",p=" << repeat_num << "/" << repeat_den << ")";
        break;
    case StrategyKind::block_shuffle:
        os << "(seed=" << seed << ",growth=" << block_growth << ")";
        break;
    case StrategyKind::delay_pattern:
        os << "(period=" << period << ")";
        break;
    }
    return os.str();
}

Presenter::Presenter(Strategy strategy, Source source)
    : strategy_{strategy}, source_{std::move(source)}, rng_{strategy.seed}
{
    strategy_.validate();
}

Element Presenter::fresh()
{
    const auto x = source_(next_rank_++);
    if (emitted_set_.insert(x.value).second)
        emitted_.push_back(x);
    return x;
}

Element Presenter::next()
{
    ++step_;
    switch (strategy_.kind) {
    case StrategyKind::canonical:
        last_ = fresh();
        break;
    case StrategyKind::repeat_heavy:
        if (!emitted_.empty() && rng_.below(strategy_.repeat_den) < strategy_.repeat_num)
            last_ = emitted_[rng_.below(emitted_.size())];
        else
            last_ = fresh();
        break;
    case StrategyKind::block_shuffle:
        if (block_.empty()) {
            ++block_number_;
            const std::uint64_t size = strategy_.block_growth * block_number_;
            const std::uint64_t first = next_rank_;
            next_rank_ += size;
            block_.resize(size);
            for (std::uint64_t k = 0; k < size; ++k)
                block_[k] = first + k;
            // Fisher-Yates with the portable draw.
            for (std::uint64_t k = size; k > 1; --k)
                std::swap(block_[k - 1], block_[rng_.below(k)]);
        }
        last_ = source_(block_.back());
        block_.pop_back();
        break;
    case StrategyKind::delay_pattern:
        if ((step_ - 1) % strategy_.period == 0)
            last_ = fresh();
        break;
    }
    return last_;
}

namespace {

Presenter::Source language_source(const LanguageDescriptor& k)
{
    if (k.is_finite()) {
        const auto n = k.size();
        return [k, n](std::uint64_t rank) { return k.nth((rank - 1) % n + 1); };
    }
    return [k](std::uint64_t rank) { return k.nth(rank); };
}

} // namespace

EnumerationStream::EnumerationStream(LanguageDescriptor target, Strategy strategy)
    : target_{std::move(target)}, presenter_{strategy, [](std::uint64_t r) { return Element{r}; }}
{
    if (target_.is_empty())
        throw ConfigError("the empty language has no enumeration");
    presenter_ = Presenter(strategy, language_source(target_));
}

LabeledEnumerationStream::LabeledEnumerationStream(LanguageDescriptor target, Strategy strategy)
    : target_{std::move(target)}, presenter_{strategy, [](std::uint64_t r) { return Element{r}; }}
{
}

LabeledElement LabeledEnumerationStream::next()
{
    const auto w = presenter_.next();
    return {w, target_.contains(w)};
}

} // namespace limitlab
