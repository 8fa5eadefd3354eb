#include "oracle.hpp"

#include "limitlab/adversary.hpp"
#include "limitlab/errors.hpp"
#include "limitlab/harness.hpp"
#include "limitlab/identifiers.hpp"

#include <doctest.h>

using namespace limitlab;

namespace {

std::vector<std::uint64_t> guesses(IdentifierKind kind, const char* coll, const std::vector<std::uint64_t>& w)
{
    QueryLedger ledger;
    auto id = make_identifier(kind, CollectionOracle(find_collection(coll), ledger, QueryPurpose::consistency));
    std::vector<std::uint64_t> out;
    for (auto x : w)
        out.push_back(id->step(Element{x}));
    return out;
}

std::vector<std::uint64_t> stream_prefix(const Collection& c, Index k, const Strategy& s, std::size_t n)
{
    EnumerationStream stream(c.language(k), s);
    std::vector<std::uint64_t> out;
    for (std::size_t t = 0; t < n; ++t)
        out.push_back(stream.next().value);
    return out;
}

using V = std::vector<std::uint64_t>;

} // namespace

TEST_SUITE("identifiers")
{
    TEST_CASE("tell-tale identifier on multiples, K = L6")
    {
        const V w{12, 18, 6, 24};
        const auto got = guesses(IdentifierKind::telltale, "multiples", w);
        CHECK(got == oracle::telltale_guesses("multiples", w));
        // Index 6 is only eligible once t >= 6.
        CHECK(got == V{1, 1, 1, 1});

        const V longer{12, 18, 6, 24, 30, 36};
        const auto more = guesses(IdentifierKind::telltale, "multiples", longer);
        CHECK(more == oracle::telltale_guesses("multiples", longer));
        CHECK(more == V{1, 1, 1, 1, 1, 6});
    }

    TEST_CASE("tell-tale identifier on finite prefixes, K = L3")
    {
        const V w{1, 2, 3, 1, 2};
        const auto got = guesses(IdentifierKind::telltale, "finite_prefixes", w);
        CHECK(got == oracle::telltale_guesses("finite_prefixes", w));
        CHECK(got == V{1, 2, 3, 3, 3});
    }

    TEST_CASE("consistency-min examples")
    {
        const V even{2, 4, 6, 8, 10, 12, 14, 16};
        CHECK(guesses(IdentifierKind::consistency_min, "multiples", even) == V(8, 1));

        const V w{1, 2, 3, 1, 2};
        const auto got = guesses(IdentifierKind::consistency_min, "finite_prefixes", w);
        CHECK(got == oracle::consistency_min_guesses("finite_prefixes", w));
        CHECK(got == V{1, 2, 3, 3, 3});

        const V twos{2, 2, 2};
        const auto sets = guesses(IdentifierKind::consistency_min, "finite_sets", twos);
        CHECK(sets == oracle::consistency_min_guesses("finite_sets", twos));
        CHECK(sets == V{1, 2, 2});
    }

    TEST_CASE("identifiers agree with the brute-force rule on random streams")
    {
        for (const auto* c : catalog())
            for (Index k = 1; k <= 12; ++k)
                for (const auto& base : standard_strategies())
                    for (std::uint64_t seed : {1, 2}) {
                        auto s = base;
                        s.seed = seed;
                        const auto w = stream_prefix(*c, k, s, 120);
                        INFO(c->id(), " k=", k, " ", s.describe());
                        CHECK(guesses(IdentifierKind::consistency_min, c->id().c_str(), w) ==
                              oracle::consistency_min_guesses(c->id(), w));
                        if (c->has_telltale_rule())
                            CHECK(guesses(IdentifierKind::telltale, c->id().c_str(), w) ==
                                  oracle::telltale_guesses(c->id(), w));
                    }
    }

    TEST_CASE("tell-tale identifier stabilizes on the target index")
    {
        for (const auto* c : catalog()) {
            if (!c->has_telltale_rule())
                continue;
            for (Index k = 1; k <= 12; ++k)
                for (const auto& base : standard_strategies())
                    for (std::uint64_t seed : {1, 2}) {
                        GameScenario g;
                        g.id = "x";
                        g.collection = c;
                        g.target = k;
                        g.adversary = base;
                        g.adversary.seed = seed;
                        g.algorithm.kind = AlgorithmKind::identifier;
                        g.horizon = 1000;
                        const auto r = run_game(g);
                        INFO(c->id(), " k=", k, " ", g.adversary.describe());
                        CHECK(r.report.stabilized);
                        CHECK(r.report.final_output == k);
                    }
        }
    }

    TEST_CASE("consistency tracker: bound, antitone set, growing evidence")
    {
        for (const auto* c : catalog())
            for (Index k = 1; k <= 8; ++k) {
                Strategy s;
                s.kind = StrategyKind::repeat_heavy;
                s.seed = k;
                EnumerationStream stream(c->language(k), s);
                QueryLedger ledger;
                ConsistencyTracker tracker(CollectionOracle(*c, ledger, QueryPurpose::consistency));
                std::set<Index> ever_dropped;
                std::size_t distinct = 0;
                for (std::uint64_t t = 1; t <= 200; ++t) {
                    ledger.begin_step(t);
                    tracker.observe(stream.next());
                    CHECK(ledger.current()[QueryPurpose::consistency] <= 2 * t - 1);
                    CHECK(tracker.distinct().size() >= distinct);
                    distinct = tracker.distinct().size();
                    for (auto i : tracker.dropped())
                        ever_dropped.insert(i);
                    for (auto i : tracker.consistent_indices())
                        REQUIRE_FALSE(ever_dropped.contains(i));
                    for (Index i = 1; i <= t; ++i) {
                        bool ok = true;
                        for (auto x : tracker.distinct())
                            ok = ok && oracle::member(c->id(), i, x.value);
                        REQUIRE(tracker.consistent(i) == ok);
                    }
                }
            }
    }

    TEST_CASE("tell-tale identifier needs a tell-tale rule")
    {
        const auto& fpa = find_collection("finite_plus_all");
        CHECK_FALSE(identifier_applicable(IdentifierKind::telltale, fpa));
        CHECK(identifier_applicable(IdentifierKind::consistency_min, fpa));
        QueryLedger ledger;
        CHECK_THROWS_AS((void)make_identifier(IdentifierKind::telltale,
                                              CollectionOracle(fpa, ledger, QueryPurpose::consistency)),
                        InapplicableError);

        GameScenario g;
        g.id = "fpa";
        g.collection = &fpa;
        g.target = 3;
        g.algorithm.kind = AlgorithmKind::identifier;
        g.horizon = 20;
        const auto r = run_game(g);
        CHECK(r.transcript.status == RunStatus::inapplicable);
        CHECK(r.transcript.steps.empty());
        CHECK_FALSE(r.report.stabilized);
    }

    TEST_CASE("identifier names")
    {
        CHECK(parse_identifier_kind("telltale") == IdentifierKind::telltale);
        CHECK(to_string(IdentifierKind::consistency_min) == "consistency_min");
        CHECK_THROWS_AS((void)parse_identifier_kind("gold"), ConfigError);
    }
}
