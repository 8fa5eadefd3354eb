#pragma once

#include "limitlab/language.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace limitlab {

// Recorded in transcripts so golden vectors can be tied to the generator.
inline constexpr std::string_view rng_algorithm = "mt19937_64/rejection-v1";

// Seeded generator with a portable bounded draw (std distributions are not
// portable across standard libraries).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_{seed} {}

    // Uniform in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n);

private:
    std::mt19937_64 engine_;
};

enum class StrategyKind { canonical, repeat_heavy, block_shuffle, delay_pattern };

struct Strategy {
    StrategyKind kind = StrategyKind::canonical;
    std::uint64_t seed = 0;
    // repeat_heavy: re-emit an old element with probability num/den (num < den).
    std::uint64_t repeat_num = 1;
    std::uint64_t repeat_den = 2;
    // block_shuffle: block b has block_growth * b elements.
    std::uint64_t block_growth = 1;
    // delay_pattern: a new element every `period` steps.
    std::uint64_t period = 1;

    void validate() const;
    [[nodiscard]] std::string describe() const;
};

[[nodiscard]] std::string_view to_string(StrategyKind kind);
// Throws ConfigError on an unknown name.
[[nodiscard]] StrategyKind parse_strategy_kind(std::string_view name);

// Applies a presentation strategy to an infinite canonical source
// c_1, c_2, ... (rank -> element). Every rank is emitted at a finite step.
class Presenter {
public:
    using Source = std::function<Element(std::uint64_t rank)>;

    Presenter(Strategy strategy, Source source);

    Element next();
    [[nodiscard]] std::uint64_t step() const { return step_; }

private:
    Element fresh();

    Strategy strategy_;
    Source source_;
    Rng rng_;
    std::uint64_t step_ = 0;
    std::uint64_t next_rank_ = 1;
    Element last_{};
    std::vector<Element> emitted_;  // distinct, in first-emission order
    std::unordered_set<std::uint64_t> emitted_set_;
    std::vector<std::uint64_t> block_;  // pending ranks of the current block, back() first
    std::uint64_t block_number_ = 0;
};

// A complete enumeration of a nonempty language K. Finite K is presented as
// the ascending listing cycled forever.
class EnumerationStream {
public:
    // Throws ConfigError when K is empty.
    EnumerationStream(LanguageDescriptor target, Strategy strategy);

    Element next() { return presenter_.next(); }
    [[nodiscard]] std::uint64_t step() const { return presenter_.step(); }
    [[nodiscard]] const LanguageDescriptor& target() const { return target_; }

private:
    LanguageDescriptor target_;
    Presenter presenter_;
};

struct LabeledElement {
    Element w;
    bool in_target = false;
};

// A complete enumeration of the whole domain labeled by membership in K.
// K may be empty.
class LabeledEnumerationStream {
public:
    LabeledEnumerationStream(LanguageDescriptor target, Strategy strategy);

    LabeledElement next();
    [[nodiscard]] std::uint64_t step() const { return presenter_.step(); }
    [[nodiscard]] const LanguageDescriptor& target() const { return target_; }

private:
    LanguageDescriptor target_;
    Presenter presenter_;
};

} // namespace limitlab
