#include "limitlab/candidate.hpp"

#include "limitlab/errors.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace limitlab {

namespace {

std::vector<Element> sorted_unique(std::vector<Element> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (!v.empty() && v.front().value == 0)
        throw ConfigError("candidate elements are positive integers");
    return v;
}

bool in_sorted(const std::vector<Element>& v, Element x) { return std::binary_search(v.begin(), v.end(), x); }

void write_set(std::ostream& os, const std::vector<Element>& v)
{
    os << '{';
    for (std::size_t k = 0; k < v.size(); ++k)
        os << (k ? "," : "") << v[k].value;
    os << '}';
}

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

} // namespace

CandidateSet CandidateSet::language_of(const Collection& collection, Index index)
{
    (void)collection.language(index);  // validates the index
    return CandidateSet(std::make_shared<const Node>(LanguageOf{&collection, index}));
}

CandidateSet CandidateSet::finite_union_with(CandidateSet base, std::vector<Element> extra)
{
    return CandidateSet(std::make_shared<const Node>(UnionWith{std::move(base), sorted_unique(std::move(extra))}));
}

CandidateSet CandidateSet::finite_minus(CandidateSet base, std::vector<Element> removed)
{
    return CandidateSet(std::make_shared<const Node>(Minus{std::move(base), sorted_unique(std::move(removed))}));
}

CandidateSet CandidateSet::explicit_finite(std::vector<Element> elements)
{
    return CandidateSet(std::make_shared<const Node>(ExplicitFinite{sorted_unique(std::move(elements))}));
}

CandidateSet CandidateSet::all_of_domain() { return CandidateSet(std::make_shared<const Node>(AllOfDomain{})); }

CandidateSet CandidateSet::empty() { return CandidateSet(std::make_shared<const Node>(Empty{})); }

bool CandidateSet::contains(Element x) const
{
    return std::visit(overloaded{
                          [&](const LanguageOf& n) { return n.collection->contains(n.index, x); },
                          [&](const UnionWith& n) { return in_sorted(n.elements, x) || n.base.contains(x); },
                          [&](const Minus& n) { return !in_sorted(n.elements, x) && n.base.contains(x); },
                          [&](const ExplicitFinite& n) { return in_sorted(n.elements, x); },
                          [](const AllOfDomain&) { return true; },
                          [](const Empty&) { return false; },
                      },
                      *node_);
}

std::string CandidateSet::descriptor() const
{
    std::ostringstream os;
    std::visit(overloaded{
                   [&](const LanguageOf& n) { os << "lang:" << n.index; },
                   [&](const UnionWith& n) {
                       os << n.base.descriptor() << '+';
                       write_set(os, n.elements);
                   },
                   [&](const Minus& n) {
                       os << n.base.descriptor() << '-';
                       write_set(os, n.elements);
                   },
                   [&](const ExplicitFinite& n) {
                       os << "set:";
                       write_set(os, n.elements);
                   },
                   [&](const AllOfDomain&) { os << "all"; },
                   [&](const Empty&) { os << "empty"; },
               },
               *node_);
    return os.str();
}

CandidateNormalForm normal_form(const CandidateSet& g)
{
    return std::visit(overloaded{
                          [](const CandidateSet::LanguageOf& n) {
                              return CandidateNormalForm{n.collection->language(n.index), {}, {}};
                          },
                          [](const CandidateSet::UnionWith& n) {
                              auto nf = normal_form(n.base);
                              nf.added.insert(n.elements.begin(), n.elements.end());
                              return nf;
                          },
                          [](const CandidateSet::Minus& n) {
                              auto nf = normal_form(n.base);
                              for (auto x : n.elements) {
                                  nf.removed.insert(x);
                                  nf.added.erase(x);
                              }
                              return nf;
                          },
                          [](const CandidateSet::ExplicitFinite& n) {
                              return CandidateNormalForm{std::nullopt, {}, {n.elements.begin(), n.elements.end()}};
                          },
                          [](const CandidateSet::AllOfDomain&) {
                              return CandidateNormalForm{LanguageDescriptor::all_of_domain("", 0), {}, {}};
                          },
                          [](const CandidateSet::Empty&) { return CandidateNormalForm{}; },
                      },
                      g.node());
}

std::optional<Element> least_hallucination(const CandidateSet& g, const LanguageDescriptor& k)
{
    const auto nf = normal_form(g);
    std::optional<Element> best;
    for (auto x : nf.added) {
        if (!k.contains(x)) {
            best = x;
            break;
        }
    }
    if (nf.base) {
        const auto& base = *nf.base;
        const auto accept = [&](Element x) { return !nf.removed.contains(x) && !k.contains(x); };
        if (base.is_finite()) {
            for (std::uint64_t r = 1; r <= base.size(); ++r) {
                const auto x = base.nth(r);
                if (best && *best < x)
                    break;
                if (accept(x)) {
                    best = x;
                    break;
                }
            }
        } else if (!language_subset(base, k)) {
            // An infinite base outside K leaves infinitely many elements
            // outside K (all shipped kinds), so this scan terminates.
            for (std::uint64_t r = 1;; ++r) {
                const auto x = base.nth(r);
                if (best && *best < x)
                    break;
                if (accept(x)) {
                    best = x;
                    break;
                }
            }
        }
    }
    return best;
}

bool candidate_subset(const CandidateSet& g, const LanguageDescriptor& k)
{
    const auto nf = normal_form(g);
    for (auto x : nf.added)
        if (!k.contains(x))
            return false;
    if (!nf.base)
        return true;
    const auto& base = *nf.base;
    if (base.is_finite()) {
        for (std::uint64_t r = 1; r <= base.size(); ++r) {
            const auto x = base.nth(r);
            if (!nf.removed.contains(x) && !k.contains(x))
                return false;
        }
        return true;
    }
    // base \ K is empty or infinite; removing finitely many cannot empty it.
    return language_subset(base, k);
}

// --- parsing ---------------------------------------------------------------

namespace {

class CandidateParser {
public:
    CandidateParser(std::string_view text, const Collection& collection) : text_{text}, collection_{collection} {}

    CandidateSet parse()
    {
        auto g = parse_atom();
        while (pos_ < text_.size()) {
            const char op = text_[pos_++];
            if (op != '+' && op != '-')
                fail("expected '+{..}' or '-{..}'");
            auto els = parse_set();
            g = op == '+' ? CandidateSet::finite_union_with(std::move(g), std::move(els))
                          : CandidateSet::finite_minus(std::move(g), std::move(els));
        }
        return g;
    }

private:
    CandidateSet parse_atom()
    {
        if (consume("all"))
            return CandidateSet::all_of_domain();
        if (consume("empty"))
            return CandidateSet::empty();
        if (consume("set:"))
            return CandidateSet::explicit_finite(parse_set());
        if (consume("lang:")) {
            const auto i = parse_number();
            return CandidateSet::language_of(collection_, i);
        }
        fail("expected lang:<i>, set:{..}, all or empty");
    }

    std::vector<Element> parse_set()
    {
        if (!consume("{"))
            fail("expected '{'");
        std::vector<Element> out;
        if (consume("}"))
            return out;
        for (;;) {
            out.push_back(Element{parse_number()});
            if (consume("}"))
                return out;
            if (!consume(","))
                fail("expected ',' or '}'");
        }
    }

    std::uint64_t parse_number()
    {
        std::uint64_t v = 0;
        const auto* first = text_.data() + pos_;
        const auto* last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr == first)
            fail("expected a number");
        if (v == 0)
            fail("values start at 1");
        pos_ += static_cast<std::size_t>(ptr - first);
        return v;
    }

    bool consume(std::string_view token)
    {
        if (text_.substr(pos_, token.size()) != token)
            return false;
        pos_ += token.size();
        return true;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ConfigError("candidate '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    const Collection& collection_;
    std::size_t pos_ = 0;
};

} // namespace

CandidateSet parse_candidate(std::string_view text, const Collection& collection)
{
    return CandidateParser(text, collection).parse();
}

} // namespace limitlab
