#include "oracle.hpp"

#include "limitlab/candidate.hpp"
#include "limitlab/collection.hpp"
#include "limitlab/errors.hpp"
#include "limitlab/ledger.hpp"

#include <doctest.h>

using namespace limitlab;

namespace {

const Collection& coll(const char* id) { return find_collection(id); }

std::vector<std::uint64_t> values(const std::vector<Element>& v)
{
    std::vector<std::uint64_t> out;
    for (auto x : v)
        out.push_back(x.value);
    return out;
}

} // namespace

TEST_SUITE("lang_core")
{
    TEST_CASE("membership examples")
    {
        CHECK(coll("multiples").contains(2, Element{6}));
        CHECK_FALSE(coll("multiples").contains(4, Element{6}));
        CHECK(coll("finite_prefixes").contains(3, Element{3}));
        CHECK_FALSE(coll("finite_prefixes").contains(3, Element{4}));
    }

    TEST_CASE("membership agrees with the oracle")
    {
        for (const auto* c : catalog())
            for (Index i = 1; i <= 64; ++i)
                for (std::uint64_t x = 1; x <= 200; ++x)
                    REQUIRE(c->contains(i, Element{x}) == oracle::member(c->id(), i, x));
    }

    TEST_CASE("language descriptors match the family rule")
    {
        for (const auto* c : catalog())
            for (Index i = 1; i <= 40; ++i) {
                const auto l = c->language(i);
                CHECK(l.is_finite() == oracle::finite(c->id(), i));
                for (std::uint64_t x = 1; x <= 200; ++x)
                    REQUIRE(l.contains(Element{x}) == oracle::member(c->id(), i, x));
            }
    }

    TEST_CASE("enumerate_language")
    {
        auto a = coll("multiples").language(2).enumerate(3);
        CHECK(values(a.elements) == std::vector<std::uint64_t>{2, 4, 6});
        CHECK_FALSE(a.exhausted);

        auto b = coll("finite_prefixes").language(2).enumerate(5);
        CHECK(values(b.elements) == std::vector<std::uint64_t>{1, 2});
        CHECK(b.exhausted);

        auto c = coll("finite_plus_all").language(1).enumerate(4);
        CHECK(values(c.elements) == std::vector<std::uint64_t>{1, 2, 3, 4});
        CHECK_FALSE(c.exhausted);

        auto d = coll("finite_sets").language(18).enumerate(2);
        CHECK(values(d.elements) == std::vector<std::uint64_t>{2, 5});
        CHECK(d.exhausted);
    }

    TEST_CASE("finite set encoding")
    {
        // {2, 5} has characteristic bits 1 and 4: 2 + 16.
        CHECK(encode_finite_set(std::vector<Element>{Element{2}, Element{5}}) == 18);
        CHECK(coll("finite_sets").contains(18, Element{5}));
        CHECK_FALSE(coll("finite_sets").contains(18, Element{3}));
        for (Index code = 1; code <= 1024; ++code) {
            const auto s = decode_finite_set(code);
            CHECK(encode_finite_set(s) == code);
            for (auto x : s)
                CHECK(oracle::bit_member(code, x.value));
        }
        CHECK_FALSE(encode_finite_set(std::vector<Element>{Element{65}}).has_value());
    }

    TEST_CASE("exact relations examples")
    {
        const auto& m = coll("multiples");
        CHECK(m.equals(2, 2) == true);
        CHECK(m.subset_of(4, 2) == true);
        CHECK(m.subset_of(2, 4) == false);
        CHECK(m.subset_of(3, 2) == false);
    }

    TEST_CASE("catalog soundness: relations agree with extensional containment")
    {
        // subset_of(i, j) means L_i ⊆ L_j. For finite L_i the full listing is
        // compared; otherwise a scan to 10 * max(i, j, 64) decides it for
        // these families.
        for (const auto* c : catalog()) {
            REQUIRE(c->has_exact_relations());
            for (Index i = 1; i <= 32; ++i)
                for (Index j = 1; j <= 32; ++j) {
                    const std::uint64_t bound = 10 * std::max<std::uint64_t>({i, j, 64});
                    const bool sub = oracle::subset_upto(oracle::lang(c->id(), i), oracle::lang(c->id(), j), bound);
                    const bool eq = sub && oracle::subset_upto(oracle::lang(c->id(), j), oracle::lang(c->id(), i), bound);
                    INFO(c->id(), " i=", i, " j=", j);
                    CHECK(c->subset_of(i, j) == sub);
                    CHECK(c->equals(i, j) == eq);
                    CHECK(language_subset(c->language(i), c->language(j)) == sub);
                }
        }
    }

    TEST_CASE("tell-tale containment")
    {
        for (const auto* c : catalog())
            for (Index i = 1; i <= 64; ++i) {
                const auto t = c->telltale(i);
                const auto expected = oracle::telltale(c->id(), i);
                REQUIRE(t.has_value() == expected.has_value());
                if (!t)
                    continue;
                CHECK(values(*t) == *expected);
                for (auto x : *t)
                    CHECK(c->contains(i, x));
            }
        CHECK(coll("multiples").has_telltale_rule());
        CHECK_FALSE(coll("finite_plus_all").has_telltale_rule());
    }

    TEST_CASE("least equal index")
    {
        for (const auto* c : catalog())
            for (Index k = 1; k <= 16; ++k)
                CHECK(least_equal_index(*c, k) == oracle::least_equal(c->id(), k));

        // Duplicates are legal: L_1 repeated at index 3.
        ExplicitCollection dup("dup", {LanguageDescriptor::all_of_domain("dup", 1),
                                       LanguageDescriptor::multiples("dup", 2, 2),
                                       LanguageDescriptor::all_of_domain("dup", 3)});
        CHECK(languages_equal(dup, 1, 3));
        CHECK(least_equal_index(dup, 3) == 1);
        CHECK_FALSE(languages_equal(dup, 2, 3));
    }

    TEST_CASE("configuration errors")
    {
        CHECK_THROWS_AS((void)find_collection("primes"), ConfigError);
        CHECK_THROWS_AS((void)coll("multiples").language(0), ConfigError);
        ExplicitCollection small("small", {LanguageDescriptor::finite_prefix("small", 1, 3)});
        CHECK_THROWS_AS((void)small.language(2), ConfigError);
    }

    TEST_CASE("candidate membership examples")
    {
        QueryLedger ledger;
        CandidateOracle g3(CandidateSet::language_of(coll("multiples"), 3), ledger);
        CHECK(g3.contains(Element{3}));
        CandidateOracle empty(CandidateSet::empty(), ledger);
        CHECK_FALSE(empty.contains(Element{7}));
        CandidateOracle plus(
            CandidateSet::finite_union_with(CandidateSet::language_of(coll("finite_prefixes"), 2), {Element{9}}),
            ledger);
        CHECK(plus.contains(Element{9}));
        CHECK(ledger.totals()[QueryPurpose::candidate] == 3);
    }

    TEST_CASE("candidate grammar agrees with the oracle")
    {
        const std::vector<std::string> texts{"lang:3",       "lang:4+{9}",    "lang:2-{2,4}",   "set:{1,5,7}",
                                             "all",          "empty",         "all-{1,2,3}",    "empty+{4}",
                                             "lang:6+{1}-{6}", "set:{}",      "lang:1-{10}+{10}"};
        for (const auto* c : catalog())
            for (const auto& text : texts) {
                const auto g = parse_candidate(text, *c);
                const auto ref = oracle::candidate(c->id(), text);
                CHECK(g.descriptor() == text);
                for (std::uint64_t x = 1; x <= 200; ++x)
                    REQUIRE(g.contains(Element{x}) == ref(x));
            }
    }

    TEST_CASE("candidate subset decision against brute force")
    {
        const std::vector<std::string> texts{"lang:1", "lang:2", "lang:3", "lang:4+{9}", "lang:2-{2}", "set:{1,2}",
                                             "all",    "empty",  "all-{1}", "lang:5+{1,2}", "set:{3}"};
        for (const auto* c : catalog())
            for (Index k = 1; k <= 12; ++k) {
                const auto klang = c->language(k);
                for (const auto& text : texts) {
                    const auto g = parse_candidate(text, *c);
                    const auto ref = oracle::candidate(c->id(), text);
                    const bool sub = oracle::subset_upto(ref, oracle::lang(c->id(), k), 400);
                    INFO(c->id(), " k=", k, " G=", text);
                    CHECK(candidate_subset(g, klang) == sub);
                    std::optional<std::uint64_t> least;
                    for (std::uint64_t x = 1; x <= 400 && !least; ++x)
                        if (ref(x) && !oracle::member(c->id(), k, x))
                            least = x;
                    const auto h = least_hallucination(g, klang);
                    CHECK(h.has_value() == least.has_value());
                    if (h && least)
                        CHECK(h->value == *least);
                }
            }
    }

    TEST_CASE("candidate parse errors carry an offset")
    {
        const auto& m = coll("multiples");
        for (const char* bad : {"lang:", "lang:0", "set:{1,", "foo", "lang:2*{3}", "set:{a}"}) {
            CHECK_THROWS_AS((void)parse_candidate(bad, m), ConfigError);
            try {
                (void)parse_candidate(bad, m);
            } catch (const ConfigError& e) {
                CHECK(std::string(e.what()).find("offset") != std::string::npos);
            }
        }
    }

    TEST_CASE("ledger completeness")
    {
        QueryLedger ledger;
        CollectionOracle cons(coll("multiples"), ledger, QueryPurpose::consistency);
        CollectionOracle det(coll("multiples"), ledger, QueryPurpose::detector);
        CandidateOracle g(CandidateSet::all_of_domain(), ledger);
        std::uint64_t calls = 0;
        std::array<std::uint64_t, 3> by{};
        for (std::uint64_t t = 1; t <= 50; ++t) {
            ledger.begin_step(t);
            for (std::uint64_t k = 0; k < t % 7; ++k, ++calls, ++by[1])
                (void)cons.contains(t, Element{k + 1});
            for (std::uint64_t k = 0; k < t % 3; ++k, ++calls, ++by[2])
                (void)det.contains(2, Element{k + 1});
            if (t % 2 == 0) {
                (void)g.contains(Element{t});
                ++calls;
                ++by[0];
            }
            CHECK(ledger.current().total() == t % 7 + t % 3 + (t % 2 == 0 ? 1 : 0));
        }
        CHECK(ledger.total() == calls);
        CHECK(ledger.totals()[QueryPurpose::candidate] == by[0]);
        CHECK(ledger.totals()[QueryPurpose::consistency] == by[1]);
        CHECK(ledger.totals()[QueryPurpose::detector] == by[2]);
        QueryCounts sum;
        for (std::uint64_t t = 0; t <= 50; ++t)
            sum += ledger.at(t);
        CHECK(sum == ledger.totals());
        CHECK(ledger.at(999).total() == 0);
    }

    TEST_CASE("ledger steps are strictly increasing")
    {
        QueryLedger ledger;
        ledger.record(QueryPurpose::candidate);
        CHECK(ledger.at(0).total() == 1);
        ledger.begin_step(3);
        CHECK_THROWS((void)ledger.begin_step(3));
        CHECK_THROWS((void)ledger.begin_step(2));
    }
}
