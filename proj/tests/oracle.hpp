#pragma once

// Brute-force reference implementations. Nothing here calls into the
// library: memberships, tell-tales, candidate sets and every algorithm are
// re-derived from their definitions by exhaustive search.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using Pred = std::function<bool(u64)>;

inline bool bit_member(u64 code, u64 x) { return x >= 1 && x <= 64 && ((code >> (x - 1)) & 1u); }

inline bool member(const std::string& coll, u64 i, u64 x)
{
    if (coll == "multiples")
        return x % i == 0;
    if (coll == "finite_prefixes")
        return x <= i;
    if (coll == "finite_sets")
        return bit_member(i, x);
    if (coll == "finite_plus_all")
        return i == 1 || bit_member(i - 1, x);
    throw std::invalid_argument(coll);
}

inline bool finite(const std::string& coll, u64 i)
{
    return coll == "finite_prefixes" || coll == "finite_sets" || (coll == "finite_plus_all" && i > 1);
}

inline std::optional<std::vector<u64>> telltale(const std::string& coll, u64 i)
{
    if (coll == "multiples" || coll == "finite_prefixes")
        return std::vector<u64>{i};
    std::vector<u64> out;
    u64 code = coll == "finite_sets" ? i : i - 1;
    if (coll == "finite_plus_all" && i == 1)
        return std::nullopt;
    for (u64 x = 1; x <= 64; ++x)
        if (bit_member(code, x))
            out.push_back(x);
    return out;
}

// Extensional comparison up to `bound`. Every language in the catalog with
// index <= 200 is determined by its members up to 200.
inline bool subset_upto(const Pred& a, const Pred& b, u64 bound = 200)
{
    for (u64 x = 1; x <= bound; ++x)
        if (a(x) && !b(x))
            return false;
    return true;
}

inline Pred lang(const std::string& coll, u64 i)
{
    return [coll, i](u64 x) { return member(coll, i, x); };
}

inline bool equal_lang(const std::string& coll, u64 i, u64 j)
{
    return subset_upto(lang(coll, i), lang(coll, j)) && subset_upto(lang(coll, j), lang(coll, i));
}

inline u64 least_equal(const std::string& coll, u64 k)
{
    for (u64 z = 1;; ++z)
        if (equal_lang(coll, z, k))
            return z;
}

// Candidate sets written in the flag grammar:
//   lang:<i> | set:{a,b} | all | empty, followed by +{..} / -{..} modifiers.
inline Pred candidate(const std::string& coll, const std::string& text)
{
    std::size_t pos = 0;
    auto read_set = [&]() {
        std::set<u64> out;
        if (text.at(pos) != '{')
            throw std::invalid_argument(text);
        ++pos;
        while (text.at(pos) != '}') {
            std::size_t used = 0;
            out.insert(std::stoull(text.substr(pos), &used));
            pos += used;
            if (text.at(pos) == ',')
                ++pos;
        }
        ++pos;
        return out;
    };
    Pred base;
    if (text.rfind("lang:", 0) == 0) {
        std::size_t used = 0;
        const u64 i = std::stoull(text.substr(5), &used);
        pos = 5 + used;
        base = lang(coll, i);
    } else if (text.rfind("set:", 0) == 0) {
        pos = 4;
        auto s = read_set();
        base = [s](u64 x) { return s.contains(x); };
    } else if (text.rfind("all", 0) == 0) {
        pos = 3;
        base = [](u64) { return true; };
    } else if (text.rfind("empty", 0) == 0) {
        pos = 5;
        base = [](u64) { return false; };
    } else {
        throw std::invalid_argument(text);
    }
    while (pos < text.size()) {
        const char op = text[pos++];
        auto s = read_set();
        if (op == '+')
            base = [base, s](u64 x) { return base(x) || s.contains(x); };
        else
            base = [base, s](u64 x) { return base(x) && !s.contains(x); };
    }
    return base;
}

inline std::vector<u64> telltale_guesses(const std::string& coll, const std::vector<u64>& w)
{
    std::vector<u64> out;
    std::set<u64> e;
    for (std::size_t t = 1; t <= w.size(); ++t) {
        e.insert(w[t - 1]);
        u64 guess = 1;
        for (u64 i = 1; i <= t; ++i) {
            const auto tt = telltale(coll, i);
            if (!tt)
                throw std::logic_error("no tell-tale");
            const bool covered = std::all_of(tt->begin(), tt->end(), [&](u64 x) { return e.contains(x); });
            const bool consistent = std::all_of(e.begin(), e.end(), [&](u64 x) { return member(coll, i, x); });
            if (covered && consistent) {
                guess = i;
                break;
            }
        }
        out.push_back(guess);
    }
    return out;
}

inline std::vector<u64> consistency_min_guesses(const std::string& coll, const std::vector<u64>& w)
{
    std::vector<u64> out;
    std::set<u64> e;
    for (std::size_t t = 1; t <= w.size(); ++t) {
        e.insert(w[t - 1]);
        u64 guess = 1;
        for (u64 i = 1; i <= t; ++i) {
            if (std::all_of(e.begin(), e.end(), [&](u64 x) { return member(coll, i, x); })) {
                guess = i;
                break;
            }
        }
        out.push_back(guess);
    }
    return out;
}

// Verdict at step t: 0 iff some j <= t has j in G and j outside L_{guess_t}.
inline std::vector<int> alg1_verdicts(const std::string& coll, const std::vector<u64>& guesses, const Pred& g)
{
    std::vector<int> out;
    for (std::size_t t = 1; t <= guesses.size(); ++t) {
        int d = 1;
        for (u64 j = 1; j <= t; ++j)
            if (g(j) && !member(coll, guesses[t - 1], j))
                d = 0;
        out.push_back(d);
    }
    return out;
}

inline std::vector<int> negex_verdicts(const std::vector<u64>& w, const Pred& k, const Pred& g)
{
    std::vector<int> out;
    bool seen = false;
    for (auto x : w) {
        seen = seen || (!k(x) && g(x));
        out.push_back(seen ? 0 : 1);
    }
    return out;
}

struct Alg2Round {
    std::vector<u64> consistent;
    std::vector<int> verdicts;
    u64 guess = 1;
};

// Identification from detection with alg1-over-telltale copies, each
// copy re-run from scratch on the prefix.
inline std::vector<Alg2Round> alg2_rounds(const std::string& coll, const std::vector<u64>& w)
{
    std::vector<Alg2Round> out;
    for (std::size_t t = 1; t <= w.size(); ++t) {
        const std::vector<u64> prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(t));
        const auto inner = telltale_guesses(coll, prefix);
        Alg2Round r;
        for (u64 i = 1; i <= t; ++i) {
            if (std::all_of(prefix.begin(), prefix.end(), [&](u64 x) { return member(coll, i, x); }))
                r.consistent.push_back(i);
            r.verdicts.push_back(alg1_verdicts(coll, inner, lang(coll, i)).back());
        }
        for (auto i : r.consistent) {
            if (r.verdicts[i - 1] == 1) {
                r.guess = i;
                break;
            }
        }
        out.push_back(r);
    }
    return out;
}

struct Stability {
    bool stabilized = false;
    std::optional<u64> t_star;
};

// Least t such that outputs on [t, T] are all equal and correct.
inline Stability stability(const std::vector<u64>& outputs, const std::function<bool(u64)>& correct)
{
    for (std::size_t t = 1; t <= outputs.size(); ++t) {
        bool ok = true;
        for (std::size_t s = t; s <= outputs.size() && ok; ++s)
            ok = outputs[s - 1] == outputs[t - 1] && correct(outputs[s - 1]);
        if (ok)
            return {true, t};
    }
    return {};
}

} // namespace oracle
