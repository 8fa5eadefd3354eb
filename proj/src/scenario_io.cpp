#include "limitlab/scenario_io.hpp"

#include "limitlab/errors.hpp"

#include <set>
#include <sstream>

namespace limitlab {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where)
{
    for (const auto& [key, value] : j.items())
        if (!allowed.contains(key))
            throw ConfigError(where + key + ": unknown field");
}

const json& require(const json& j, const std::string& key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key))
        throw ConfigError(where + key + ": missing");
    return j.at(key);
}

std::uint64_t as_uint(const json& j, const std::string& field)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        throw ConfigError(field + ": expected a non-negative integer");
    return j.get<std::uint64_t>();
}

std::string as_string(const json& j, const std::string& field)
{
    if (!j.is_string())
        throw ConfigError(field + ": expected a string");
    return j.get<std::string>();
}

std::vector<Element> as_elements(const json& j, const std::string& field)
{
    if (!j.is_array())
        throw ConfigError(field + ": expected an array of positive integers");
    std::vector<Element> out;
    for (const auto& v : j) {
        const auto x = as_uint(v, field);
        if (x == 0)
            throw ConfigError(field + ": elements start at 1");
        out.push_back(Element{x});
    }
    return out;
}

json elements_json(const std::vector<Element>& v)
{
    json arr = json::array();
    for (auto x : v)
        arr.push_back(x.value);
    return arr;
}

Strategy adversary_from_json(const json& j)
{
    const std::string where = "adversary.";
    if (!j.is_object())
        throw ConfigError("adversary: expected an object");
    reject_unknown(j, {"strategy", "seed", "params"}, where);
    Strategy s;
    s.kind = parse_strategy_kind(as_string(require(j, "strategy", where), "adversary.strategy"));
    if (j.contains("seed"))
        s.seed = as_uint(j.at("seed"), "adversary.seed");
    const json params = j.value("params", json::object());
    reject_unknown(params, {"repeat_num", "repeat_den", "block_growth", "period"}, "adversary.params.");
    if (params.contains("repeat_num"))
        s.repeat_num = as_uint(params.at("repeat_num"), "adversary.params.repeat_num");
    if (params.contains("repeat_den"))
        s.repeat_den = as_uint(params.at("repeat_den"), "adversary.params.repeat_den");
    if (params.contains("block_growth"))
        s.block_growth = as_uint(params.at("block_growth"), "adversary.params.block_growth");
    if (params.contains("period"))
        s.period = as_uint(params.at("period"), "adversary.params.period");
    s.validate();
    return s;
}

json adversary_to_json(const Strategy& s)
{
    json params = json::object();
    switch (s.kind) {
    case StrategyKind::canonical:
        break;
    case StrategyKind::repeat_heavy:
        params["repeat_num"] = s.repeat_num;
        params["repeat_den"] = s.repeat_den;
        break;
    case StrategyKind::block_shuffle:
        params["block_growth"] = s.block_growth;
        break;
    case StrategyKind::delay_pattern:
        params["period"] = s.period;
        break;
    }
    return {{"strategy", to_string(s.kind)}, {"seed", s.seed}, {"params", params}};
}

json algorithm_to_json(const AlgorithmSpec& a)
{
    json j{{"name", a.name()}};
    if (a.kind == AlgorithmKind::alg1)
        j["params"] = {{"identifier", to_string(a.identifier)}};
    if (a.kind == AlgorithmKind::alg2)
        j["params"] = {{"identifier", to_string(a.identifier)},
                       {"mode", to_string(a.pool)},
                       {"parallel", a.pool_execution == Execution::parallel}};
    return j;
}

json counts_json(const QueryCounts& c)
{
    return {{"consistency", c[QueryPurpose::consistency]}, {"detector", c[QueryPurpose::detector]}};
}

} // namespace

AlgorithmSpec algorithm_from_json(const json& j)
{
    const std::string where = "algorithm.";
    if (j.is_string())
        return algorithm_from_json(json{{"name", j}});
    if (!j.is_object())
        throw ConfigError("algorithm: expected an object");
    reject_unknown(j, {"name", "params"}, where);
    const auto name = as_string(require(j, "name", where), "algorithm.name");
    const json params = j.value("params", json::object());
    reject_unknown(params, {"identifier", "mode", "parallel"}, "algorithm.params.");

    AlgorithmSpec a;
    if (name == "telltale" || name == "consistency_min") {
        a.kind = AlgorithmKind::identifier;
        a.identifier = parse_identifier_kind(name);
        return a;
    }
    if (name == "negex") {
        a.kind = AlgorithmKind::negex;
        return a;
    }
    if (name == "alg1" || name == "alg2") {
        a.kind = name == "alg1" ? AlgorithmKind::alg1 : AlgorithmKind::alg2;
        a.identifier = parse_identifier_kind(
            params.contains("identifier") ? as_string(params.at("identifier"), "algorithm.params.identifier")
                                          : std::string("telltale"));
        if (params.contains("mode")) {
            const auto mode = as_string(params.at("mode"), "algorithm.params.mode");
            if (mode == "incremental")
                a.pool = PoolMode::incremental;
            else if (mode == "fresh_copies")
                a.pool = PoolMode::fresh_copies;
            else
                throw ConfigError("algorithm.params.mode: expected incremental or fresh_copies");
        }
        if (params.contains("parallel")) {
            if (!params.at("parallel").is_boolean())
                throw ConfigError("algorithm.params.parallel: expected a boolean");
            a.pool_execution = params.at("parallel").get<bool>() ? Execution::parallel : Execution::serial;
        }
        return a;
    }
    throw ConfigError("algorithm.name: unknown algorithm '" + name + "'");
}

CandidateSet candidate_from_json(const json& j, const Collection& collection)
{
    if (j.is_string())
        return parse_candidate(j.get<std::string>(), collection);
    const std::string where = "candidate.";
    if (!j.is_object())
        throw ConfigError("candidate: expected a string or an object");
    reject_unknown(j, {"kind", "params"}, where);
    const auto kind = as_string(require(j, "kind", where), "candidate.kind");
    const json params = j.value("params", json::object());
    if (kind == "language_of")
        return CandidateSet::language_of(collection, as_uint(require(params, "index", "candidate.params."), "candidate.params.index"));
    if (kind == "finite_union_with" || kind == "finite_minus") {
        auto base = candidate_from_json(require(params, "base", "candidate.params."), collection);
        auto els = as_elements(require(params, "elements", "candidate.params."), "candidate.params.elements");
        return kind == "finite_union_with" ? CandidateSet::finite_union_with(std::move(base), std::move(els))
                                           : CandidateSet::finite_minus(std::move(base), std::move(els));
    }
    if (kind == "explicit_finite")
        return CandidateSet::explicit_finite(
            as_elements(require(params, "elements", "candidate.params."), "candidate.params.elements"));
    if (kind == "all_of_domain")
        return CandidateSet::all_of_domain();
    if (kind == "empty")
        return CandidateSet::empty();
    throw ConfigError("candidate.kind: unknown kind '" + kind + "'");
}

json candidate_to_json(const CandidateSet& g)
{
    return std::visit(
        overloaded{
            [](const CandidateSet::LanguageOf& n) -> json {
                return {{"kind", "language_of"}, {"params", {{"index", n.index}}}};
            },
            [](const CandidateSet::UnionWith& n) -> json {
                return {{"kind", "finite_union_with"},
                        {"params", {{"base", candidate_to_json(n.base)}, {"elements", elements_json(n.elements)}}}};
            },
            [](const CandidateSet::Minus& n) -> json {
                return {{"kind", "finite_minus"},
                        {"params", {{"base", candidate_to_json(n.base)}, {"elements", elements_json(n.elements)}}}};
            },
            [](const CandidateSet::ExplicitFinite& n) -> json {
                return {{"kind", "explicit_finite"}, {"params", {{"elements", elements_json(n.elements)}}}};
            },
            [](const CandidateSet::AllOfDomain&) -> json { return {{"kind", "all_of_domain"}}; },
            [](const CandidateSet::Empty&) -> json { return {{"kind", "empty"}}; },
        },
        g.node());
}

GameScenario scenario_from_json(const json& j)
{
    if (!j.is_object())
        throw ConfigError("scenario: expected an object");
    reject_unknown(j, {"scenario_id", "collection", "target_index", "candidate", "adversary", "algorithm", "horizon"}, "");
    GameScenario s;
    s.id = as_string(require(j, "scenario_id", ""), "scenario_id");
    s.collection = &find_collection(as_string(require(j, "collection", ""), "collection"));
    s.target = as_uint(require(j, "target_index", ""), "target_index");
    if (s.target == 0)
        throw ConfigError("target_index: must be >= 1");
    if (j.contains("candidate") && !j.at("candidate").is_null())
        s.candidate = candidate_from_json(j.at("candidate"), *s.collection);
    if (j.contains("adversary"))
        s.adversary = adversary_from_json(j.at("adversary"));
    s.algorithm = algorithm_from_json(require(j, "algorithm", ""));
    if (j.contains("horizon"))
        s.horizon = as_uint(j.at("horizon"), "horizon");
    s.validate();
    return s;
}

json scenario_to_json(const GameScenario& s)
{
    json j{{"scenario_id", s.id},
           {"collection", s.collection ? s.collection->id() : std::string()},
           {"target_index", s.target},
           {"adversary", adversary_to_json(s.adversary)},
           {"algorithm", algorithm_to_json(s.algorithm)},
           {"horizon", s.horizon}};
    if (s.candidate)
        j["candidate"] = candidate_to_json(*s.candidate);
    return j;
}

std::vector<GameScenario> scenarios_from_json(const json& j)
{
    if (j.is_object() && j.contains("scenarios"))
        return scenarios_from_json(j.at("scenarios"));
    if (j.is_object())
        return {scenario_from_json(j)};
    if (!j.is_array())
        throw ConfigError("scenarios: expected an object or an array");
    std::vector<GameScenario> out;
    for (std::size_t k = 0; k < j.size(); ++k) {
        try {
            out.push_back(scenario_from_json(j[k]));
        } catch (const ConfigError& e) {
            throw ConfigError("scenarios[" + std::to_string(k) + "]." + e.what());
        }
    }
    return out;
}

json step_to_json(const StepRecord& row)
{
    json j{{"t", row.t},
           {"w", row.w.value},
           {"fresh_candidate_queries", row.fresh[QueryPurpose::candidate]},
           {"fresh_collection_queries", counts_json(row.fresh)}};
    if (row.label)
        j["y"] = *row.label ? 1 : 0;
    if (row.guess)
        j["guess"] = *row.guess;
    if (row.verdict)
        j["verdict"] = bit(*row.verdict);
    if (!row.consistent.empty())
        j["consistent"] = row.consistent;
    return j;
}

std::string transcript_jsonl(const Transcript& transcript)
{
    std::string out;
    for (const auto& row : transcript.steps) {
        out += step_to_json(row).dump();
        out += '\n';
    }
    return out;
}

json report_to_json(const GameScenario& s, const GameResult& result)
{
    const auto& r = result.report;
    json report{{"stabilized", r.stabilized},
                {"correct_at_horizon", r.correct_at_horizon},
                {"horizon", s.horizon},
                {"t_star", r.t_star ? json(*r.t_star) : json(nullptr)},
                {"final_output", r.final_output ? json(*r.final_output) : json(nullptr)}};
    QueryCounts totals;
    for (const auto& row : result.transcript.steps)
        totals += row.fresh;
    json j{{"scenario", scenario_to_json(s)},
           {"rng_algorithm", rng_algorithm},
           {"status", result.transcript.status == RunStatus::ok ? "ok" : "inapplicable"},
           {"report", report},
           {"target_class", result.target_class},
           {"query_totals",
            {{"candidate", totals[QueryPurpose::candidate]},
             {"consistency", totals[QueryPurpose::consistency]},
             {"detector", totals[QueryPurpose::detector]}}}};
    if (!result.transcript.message.empty())
        j["message"] = result.transcript.message;
    if (result.ground_truth_subset)
        j["ground_truth_subset"] = *result.ground_truth_subset;
    if (const auto& f = result.transcript.final_round) {
        j["final_round"] = {{"t", f->t},
                            {"consistent", f->consistent},
                            {"accepted", f->accepted},
                            {"guess", f->guess},
                            {"inapplicable", f->inapplicable}};
    }
    return j;
}

json certificate_to_json(const AngluinCheckResult& r)
{
    json j{{"collection", r.collection},
           {"index", r.index},
           {"telltale", elements_json(r.telltale)},
           {"verdict", to_string(r.verdict)},
           {"bounds", {{"index_bound", r.bounds.index_bound}, {"element_bound", r.bounds.element_bound}}}};
    if (r.certificate) {
        const auto& c = *r.certificate;
        json cj{{"witness", c.witness}, {"witness_finite", c.witness_finite}, {"basis", c.basis}};
        if (c.witness_finite)
            cj["witness_language"] = elements_json(c.witness_language);
        if (c.strictness)
            cj["strictness"] = c.strictness->value;
        j["certificate"] = cj;
    }
    return j;
}

AngluinCheckResult certificate_from_json(const json& j)
{
    AngluinCheckResult r;
    r.collection = as_string(require(j, "collection", "certificate."), "collection");
    r.index = as_uint(require(j, "index", "certificate."), "index");
    r.telltale = as_elements(require(j, "telltale", "certificate."), "telltale");
    const auto verdict = as_string(require(j, "verdict", "certificate."), "verdict");
    if (verdict == "satisfied_exactly")
        r.verdict = AngluinVerdict::satisfied_exactly;
    else if (verdict == "violation_certified")
        r.verdict = AngluinVerdict::violation_certified;
    else if (verdict == "inconclusive_within_bounds")
        r.verdict = AngluinVerdict::inconclusive_within_bounds;
    else
        throw ConfigError("verdict: unknown value '" + verdict + "'");
    const auto& b = require(j, "bounds", "certificate.");
    r.bounds.index_bound = as_uint(require(b, "index_bound", "bounds."), "bounds.index_bound");
    r.bounds.element_bound = as_uint(require(b, "element_bound", "bounds."), "bounds.element_bound");
    if (j.contains("certificate")) {
        const auto& cj = j.at("certificate");
        ViolationCertificate c;
        c.witness = as_uint(require(cj, "witness", "certificate."), "certificate.witness");
        c.witness_finite = cj.value("witness_finite", false);
        c.basis = cj.value("basis", std::string());
        if (cj.contains("witness_language"))
            c.witness_language = as_elements(cj.at("witness_language"), "certificate.witness_language");
        if (cj.contains("strictness"))
            c.strictness = Element{as_uint(cj.at("strictness"), "certificate.strictness")};
        r.certificate = c;
    }
    return r;
}

} // namespace limitlab
