#include "limitlab/harness.hpp"

#include "limitlab/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <sstream>

namespace limitlab {

std::string AlgorithmSpec::name() const
{
    switch (kind) {
    case AlgorithmKind::identifier:
        return std::string(to_string(identifier));
    case AlgorithmKind::alg1:
        return "alg1";
    case AlgorithmKind::negex:
        return "negex";
    case AlgorithmKind::alg2:
        return "alg2";
    }
    return "?";
}

void GameScenario::validate() const
{
    if (id.empty())
        throw ConfigError("scenario_id: must not be empty");
    if (collection == nullptr)
        throw ConfigError("collection: missing");
    if (target == 0)
        throw ConfigError("target_index: must be >= 1");
    (void)collection->language(target);
    if (horizon == 0)
        throw ConfigError("horizon: must be >= 1");
    if (algorithm.is_detector() && !candidate)
        throw ConfigError("candidate: required by detector '" + algorithm.name() + "'");
    adversary.validate();
}

StabilizationReport analyze_stabilization(std::span<const std::uint64_t> outputs,
                                          const std::function<bool(std::uint64_t)>& correct)
{
    StabilizationReport report;
    if (outputs.empty())
        return report;
    const auto final_output = outputs.back();
    report.final_output = final_output;
    report.correct_at_horizon = correct(final_output);
    if (!report.correct_at_horizon)
        return report;
    std::size_t first = outputs.size() - 1;
    while (first > 0 && outputs[first - 1] == final_output)
        --first;
    report.stabilized = true;
    report.t_star = first + 1;
    return report;
}

std::vector<std::uint64_t> output_series(const Transcript& transcript, const AlgorithmSpec& algorithm)
{
    std::vector<std::uint64_t> out;
    out.reserve(transcript.steps.size());
    for (const auto& row : transcript.steps) {
        if (algorithm.is_detector())
            out.push_back(static_cast<std::uint64_t>(bit(row.verdict.value())));
        else
            out.push_back(row.guess.value());
    }
    return out;
}

namespace {

StepRecord make_row(std::uint64_t t, Element w, const QueryLedger& ledger)
{
    StepRecord row;
    row.t = t;
    row.w = w;
    row.fresh = ledger.current();
    return row;
}

void play(const GameScenario& s, const LanguageDescriptor& k, QueryLedger& ledger, Transcript& transcript)
{
    const Collection& coll = *s.collection;
    auto& steps = transcript.steps;
    steps.reserve(s.horizon);

    switch (s.algorithm.kind) {
    case AlgorithmKind::identifier: {
        auto identifier = make_identifier(s.algorithm.identifier, CollectionOracle(coll, ledger, QueryPurpose::consistency));
        EnumerationStream stream(k, s.adversary);
        for (std::uint64_t t = 1; t <= s.horizon; ++t) {
            ledger.begin_step(t);
            const auto w = stream.next();
            const auto guess = identifier->step(w);
            auto& row = steps.emplace_back(make_row(t, w, ledger));
            row.guess = guess;
        }
        break;
    }
    case AlgorithmKind::alg1: {
        IdentificationDetector detector(
            make_identifier(s.algorithm.identifier, CollectionOracle(coll, ledger, QueryPurpose::consistency)),
            CandidateOracle(*s.candidate, ledger), CollectionOracle(coll, ledger, QueryPurpose::detector));
        EnumerationStream stream(k, s.adversary);
        for (std::uint64_t t = 1; t <= s.horizon; ++t) {
            ledger.begin_step(t);
            const auto w = stream.next();
            const auto verdict = detector.step(w);
            auto& row = steps.emplace_back(make_row(t, w, ledger));
            row.verdict = verdict;
            row.guess = detector.last_guess();
        }
        break;
    }
    case AlgorithmKind::negex: {
        NegativeExampleDetector detector(CandidateOracle(*s.candidate, ledger));
        LabeledEnumerationStream stream(k, s.adversary);
        for (std::uint64_t t = 1; t <= s.horizon; ++t) {
            ledger.begin_step(t);
            const auto pair = stream.next();
            const auto verdict = detector.step(pair);
            auto& row = steps.emplace_back(make_row(t, pair.w, ledger));
            row.label = pair.in_target;
            row.verdict = verdict;
        }
        break;
    }
    case AlgorithmKind::alg2: {
        if (!identifier_applicable(s.algorithm.identifier, coll))
            throw InapplicableError("alg2 over alg1/" + std::string(to_string(s.algorithm.identifier)) +
                                    " needs a tell-tale rule for every index of '" + coll.id() + "'");
        DetectionReduction reduction(CollectionOracle(coll, ledger, QueryPurpose::consistency),
                                     identification_detector_factory(coll, s.algorithm.identifier),
                                     s.algorithm.pool, s.algorithm.pool_execution);
        EnumerationStream stream(k, s.adversary);
        for (std::uint64_t t = 1; t <= s.horizon; ++t) {
            ledger.begin_step(t);
            const auto w = stream.next();
            const auto guess = reduction.step(w);
            auto& row = steps.emplace_back(make_row(t, w, ledger));
            row.guess = guess;
            row.consistent = reduction.last_round().consistent;
        }
        transcript.final_round = reduction.last_round();
        break;
    }
    }
}

} // namespace

GameResult run_game(const GameScenario& s)
{
    s.validate();
    const Collection& coll = *s.collection;
    const auto k = coll.language(s.target);

    GameResult result;
    result.transcript.scenario_id = s.id;
    result.target_class = least_equal_index(coll, s.target);
    if (s.algorithm.is_detector())
        result.ground_truth_subset = candidate_subset(*s.candidate, k);

    QueryLedger ledger;
    try {
        play(s, k, ledger, result.transcript);
    } catch (const InapplicableError& e) {
        result.transcript.status = RunStatus::inapplicable;
        result.transcript.message = e.what();
        result.transcript.steps.clear();
        result.transcript.final_round.reset();
        return result;
    }

    const auto outputs = output_series(result.transcript, s.algorithm);
    if (s.algorithm.is_detector()) {
        const std::uint64_t truth = *result.ground_truth_subset ? 1 : 0;
        result.report = analyze_stabilization(outputs, [truth](std::uint64_t v) { return v == truth; });
    } else {
        result.report = analyze_stabilization(
            outputs, [&coll, &s](std::uint64_t guess) { return languages_equal(coll, guess, s.target); });
    }
    return result;
}

// --- sweeps -----------------------------------------------------------------

namespace {

SummaryRow summarize(const GameScenario& s)
{
    SummaryRow row;
    row.scenario_id = s.id;
    row.algorithm = s.algorithm.name();
    try {
        const auto result = run_game(s);
        if (result.transcript.status == RunStatus::inapplicable) {
            row.status = "inapplicable";
            row.message = result.transcript.message;
        } else {
            row.status = "ok";
        }
        row.stabilized = result.report.stabilized;
        row.t_star = result.report.t_star;
        row.correct_at_horizon = result.report.correct_at_horizon;
        for (const auto& step : result.transcript.steps)
            row.queries += step.fresh;
    } catch (const std::exception& e) {
        row.status = "error";
        row.message = e.what();
    }
    return row;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::vector<SummaryRow> run_sweep(std::span<const GameScenario> scenarios, Execution execution)
{
    std::set<std::string> ids;
    for (const auto& s : scenarios)
        if (!ids.insert(s.id).second)
            throw ConfigError("scenario_id '" + s.id + "' is not unique within the sweep");

    std::vector<SummaryRow> rows(scenarios.size());
    const auto n = static_cast<std::ptrdiff_t>(scenarios.size());
    if (execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t k = 0; k < n; ++k)
            rows[k] = summarize(scenarios[k]);
    } else {
        for (std::ptrdiff_t k = 0; k < n; ++k)
            rows[k] = summarize(scenarios[k]);
    }
    std::sort(rows.begin(), rows.end(),
              [](const SummaryRow& a, const SummaryRow& b) { return a.scenario_id < b.scenario_id; });
    return rows;
}

std::string summary_csv(std::span<const SummaryRow> rows)
{
    std::ostringstream os;
    os << "scenario_id,algorithm,stabilized,t_star,correct_at_horizon,candidate_queries,"
          "consistency_queries,detector_queries,status,message\n";
    for (const auto& r : rows) {
        os << csv_field(r.scenario_id) << ',' << r.algorithm << ',' << (r.stabilized ? 1 : 0) << ',';
        if (r.t_star)
            os << *r.t_star;
        os << ',' << (r.correct_at_horizon ? 1 : 0) << ',' << r.queries[QueryPurpose::candidate] << ','
           << r.queries[QueryPurpose::consistency] << ',' << r.queries[QueryPurpose::detector] << ',' << r.status
           << ',' << csv_field(r.message) << '\n';
    }
    return os.str();
}

// --- grids ------------------------------------------------------------------

std::string_view to_string(CandidateRole role)
{
    switch (role) {
    case CandidateRole::equal:
        return "equal";
    case CandidateRole::superset:
        return "superset";
    case CandidateRole::subset:
        return "subset";
    case CandidateRole::plus_outside:
        return "plus_outside";
    case CandidateRole::empty:
        return "empty";
    case CandidateRole::all:
        return "all";
    }
    return "?";
}

namespace {

bool proper_subset(const Collection& c, Index a, Index b)
{
    const auto la = c.language(a);
    const auto lb = c.language(b);
    const bool sub = c.subset_of(a, b).value_or(language_subset(la, lb));
    return sub && !languages_equal(c, a, b);
}

} // namespace

CandidateSet grid_candidate(const Collection& c, Index target, CandidateRole role)
{
    const Index search = 4 * target + 4;
    switch (role) {
    case CandidateRole::equal:
        return CandidateSet::language_of(c, target);
    case CandidateRole::superset:
        for (Index j = 1; j <= search; ++j)
            if (proper_subset(c, target, j))
                return CandidateSet::language_of(c, j);
        return CandidateSet::language_of(c, target);
    case CandidateRole::subset:
        for (Index j = 1; j <= search; ++j)
            if (proper_subset(c, j, target))
                return CandidateSet::language_of(c, j);
        return CandidateSet::language_of(c, target);
    case CandidateRole::plus_outside: {
        const auto k = c.language(target);
        if (k.is_all())
            return CandidateSet::language_of(c, target);
        std::uint64_t x = 1;
        while (k.contains(Element{x}))
            ++x;
        return CandidateSet::finite_union_with(CandidateSet::language_of(c, target), {Element{x}});
    }
    case CandidateRole::empty:
        return CandidateSet::empty();
    case CandidateRole::all:
        return CandidateSet::all_of_domain();
    }
    return CandidateSet::empty();
}

std::vector<Strategy> standard_strategies()
{
    Strategy canonical;
    Strategy repeat;
    repeat.kind = StrategyKind::repeat_heavy;
    repeat.repeat_num = 1;
    repeat.repeat_den = 2;
    Strategy shuffle;
    shuffle.kind = StrategyKind::block_shuffle;
    shuffle.block_growth = 2;
    return {canonical, repeat, shuffle};
}

std::vector<CandidateRole> standard_roles()
{
    return {CandidateRole::equal, CandidateRole::superset, CandidateRole::subset,
            CandidateRole::plus_outside, CandidateRole::empty, CandidateRole::all};
}

std::vector<GameScenario> make_grid(const GridSpec& spec)
{
    std::vector<GameScenario> out;
    const auto seeds = spec.seeds.empty() ? std::vector<std::uint64_t>{0} : spec.seeds;
    const std::vector<std::optional<CandidateRole>> roles = [&] {
        std::vector<std::optional<CandidateRole>> r;
        if (spec.roles.empty())
            r.emplace_back(std::nullopt);
        for (auto role : spec.roles)
            r.emplace_back(role);
        return r;
    }();
    for (const auto* c : spec.collections) {
        for (Index k = 1; k <= spec.max_target; ++k) {
            for (const auto& role : roles) {
                for (const auto& base : spec.strategies) {
                    for (auto seed : seeds) {
                        GameScenario s;
                        s.collection = c;
                        s.target = k;
                        s.adversary = base;
                        s.adversary.seed = seed;
                        s.algorithm = spec.algorithm;
                        s.horizon = spec.horizon;
                        std::ostringstream id;
                        id << c->id() << "/k" << k;
                        if (role) {
                            s.candidate = grid_candidate(*c, k, *role);
                            id << '/' << to_string(*role);
                        }
                        id << '/' << to_string(base.kind) << "/s" << seed << '/' << spec.algorithm.name();
                        s.id = id.str();
                        out.push_back(std::move(s));
                    }
                }
            }
        }
    }
    return out;
}

} // namespace limitlab
