#include "ksieve/formulas.hpp"

#include <algorithm>
#include <string>

#include "ksieve/errors.hpp"
#include "ksieve/metrics.hpp"

namespace ksieve {

using nlohmann::json;

const char* to_string(FormulaStatus status)
{
    return status == FormulaStatus::proven_elementary ? "PROVEN-ELEMENTARY" : "HYPOTHESIS";
}

std::optional<std::int64_t> FormulaResult::value() const
{
    if (candidates.empty())
        return std::nullopt;
    auto strict = std::find_if(candidates.begin(), candidates.end(), [](const auto& c) { return c.strict; });
    return strict != candidates.end() ? strict->value : candidates.front().value;
}

bool FormulaResult::matches(std::int64_t observed) const
{
    return std::any_of(candidates.begin(), candidates.end(), [&](const auto& c) { return c.value == observed; });
}

FormulaResult not_applicable(std::string source, FormulaStatus status, std::string diagnostic)
{
    FormulaResult r;
    r.source = std::move(source);
    r.status = status;
    r.diagnostic = std::move(diagnostic);
    return r;
}

namespace {

FormulaResult single(std::string source, FormulaStatus status, std::int64_t value, std::string tag)
{
    FormulaResult r;
    r.source = std::move(source);
    r.status = status;
    r.candidates.push_back({value, std::move(tag), true});
    return r;
}

std::string num(std::size_t x)
{
    return std::to_string(x);
}

} // namespace

FormulaResult phi_cycle(std::size_t n)
{
    if (n < 3)
        throw DomainError("cycle formula needs n >= 3");
    return single("cycle", FormulaStatus::proven_elementary, static_cast<std::int64_t>(n % 2),
                  n % 2 ? "odd cycle" : "even cycle");
}

FormulaResult phi_complete(std::size_t n)
{
    if (n < 1)
        throw DomainError("complete-graph formula needs n >= 1");
    auto value = static_cast<std::int64_t>((n - 1) * (n >= 2 ? n - 2 : 0) / 2);
    return single("complete", FormulaStatus::proven_elementary, value, "(n-1)(n-2)/2");
}

FormulaResult phi_bipartite()
{
    return single("bipartite", FormulaStatus::proven_elementary, 0, "bipartite");
}

FormulaResult phi_path_sieve(std::size_t n, std::size_t k, PathSieveMode mode)
{
    if (k < 3 || k > n)
        throw DomainError("path-sieve formula needs 3 <= k <= n (got n=" + num(n) + ", k=" + num(k) + ")");
    const std::string source = "path-sieve";

    if (k == n) {
        FormulaResult r = phi_cycle(n + 1);
        r.source = source;
        r.candidates.front().case_tag = "k=n: sieve is C_" + num(n + 1);
        return r;
    }
    if (k % 2 == 1)
        return single(source, FormulaStatus::hypothesis, 0, "odd k");

    FormulaResult r;
    r.source = source;
    r.status = FormulaStatus::hypothesis;
    auto add = [&](std::int64_t value, std::string tag) {
        if (value >= 0)
            r.candidates.push_back({value, std::move(tag), true});
    };

    if (mode == PathSieveMode::proof) {
        const std::size_t rr = n / k, s = n % k;
        const auto q = static_cast<std::int64_t>(rr);
        const std::string params = " (r=" + num(rr) + ", s=" + num(s) + ")";
        if (rr >= 2 && s + 2 <= rr)
            add(2 * q - 3, "s<=r-2" + params);
        else if (rr >= 1 && s + 1 == rr)
            add(2 * q - 2, "s=r-1" + params);
        else if (s == rr)
            add(2 * q - 1, "s=r" + params);
        if (r.candidates.empty())
            r.diagnostic = "no case covers n=" + num(n) + " = " + num(rr) + "k+" + num(s) + " with s > r";
        return r;
    }

    // (lk + r)k + s = n with every quantity non-negative; smallest l first,
    // then case order, then ascending r.
    const std::size_t q_max = n / k;
    for (std::size_t l = 0; l * k <= q_max; ++l) {
        for (int which = 1; which <= 3; ++which) {
            for (std::size_t rr = 0; l * k + rr <= q_max; ++rr) {
                const std::size_t q = l * k + rr;
                const std::size_t s = n - q * k;
                const std::string params = " (l=" + num(l) + ", r=" + num(rr) + ", s=" + num(s) + ")";
                const auto twice_q = static_cast<std::int64_t>(2 * q);
                if (which == 1 && rr >= 2 && s + 2 <= rr)
                    add(twice_q - 3, "s<=r-2" + params);
                else if (which == 2 && rr >= 1 && s + 1 == rr)
                    add(twice_q - 2, "s=r-1" + params);
                else if (which == 3 && s == rr)
                    add(twice_q - 1, "s=r" + params);
            }
        }
    }
    if (r.candidates.empty())
        r.diagnostic = "no decomposition (lk+r)k+s=" + num(n) + " meets a case condition";
    return r;
}

FormulaResult phi_cycle_sieve_odd_k(std::size_t n, std::size_t k)
{
    if (k < 3 || k % 2 == 0)
        throw DomainError("odd-k cycle-sieve formula needs odd k >= 3");
    const std::string source = "cycle-sieve-odd-k";
    if (n < 2 * k + 1)
        return not_applicable(source, FormulaStatus::hypothesis,
                              "needs n >= 2k+1 = " + num(2 * k + 1) + ", got n=" + num(n));
    if (n % 2 == 0)
        return single(source, FormulaStatus::hypothesis, 0, "even cycle");
    return single(source, FormulaStatus::hypothesis, static_cast<std::int64_t>(k + 1), "odd cycle: k+1");
}

FormulaResult phi_cycle_sieve_even_k(std::size_t n, std::size_t k)
{
    if (k < 4 || k % 2 == 1)
        throw DomainError("even-k cycle-sieve formula needs even k >= 4");
    const std::string source = "cycle-sieve-even-k";
    if (n < 2 * k)
        return not_applicable(source, FormulaStatus::hypothesis,
                              "needs n >= 2k = " + num(2 * k) + ", got n=" + num(n));

    FormulaResult r;
    r.source = source;
    r.status = FormulaStatus::hypothesis;
    if (n == 2 * k)
        r.candidates.push_back({3, "n=2k", true});
    for (std::size_t l = 2; l * k <= n; ++l) {
        const std::size_t rr = n - l * k;
        if (rr >= l)
            continue;
        const auto inner = static_cast<std::int64_t>((l - 1) * k + rr) - 1;
        const auto value = 2 * (static_cast<std::int64_t>(n) - 2 * (inner / 2));
        r.candidates.push_back({value, "n=lk+r (l=" + num(l) + ", r=" + num(rr) + ")", rr >= 1});
    }
    if (n % (k + 1) == 0 && n / (k + 1) >= 2)
        r.candidates.push_back({static_cast<std::int64_t>(2 * (n / (k + 1))),
                                "n=l(k+1) (l=" + num(n / (k + 1)) + ")", true});
    if (r.candidates.empty())
        r.diagnostic = "n=" + num(n) + " is neither 2k, lk+r with r<l, nor l(k+1)";
    return r;
}

FormulaResult phi_sieve_trivial(const Graph& g, std::size_t k, std::uint64_t budget)
{
    if (k < 2)
        throw DomainError("sieve distance k must be at least 2");
    const std::string source = "sieve-trivial";
    const std::size_t longest = longest_path_length(g);
    if (k <= longest)
        return not_applicable(source, FormulaStatus::proven_elementary,
                              "k=" + num(k) + " does not exceed the longest path length " + num(longest));
    auto solved = sparing_number(g, budget);
    FormulaResult r = single(source, FormulaStatus::proven_elementary, static_cast<std::int64_t>(solved.phi),
                             "k > longest path " + num(longest) + ": phi(G)");
    if (!solved.proven_optimal()) {
        r.status = FormulaStatus::hypothesis;
        r.diagnostic = "solver budget exhausted on G; value is an upper bound";
    }
    return r;
}

json formula_to_json(const FormulaResult& result)
{
    json candidates = json::array();
    for (const auto& c : result.candidates)
        candidates.push_back({{"value", c.value}, {"case", c.case_tag}, {"strict", c.strict}});
    json out{{"source", result.source},
             {"status", to_string(result.status)},
             {"applicable", result.applicable()},
             {"candidates", std::move(candidates)}};
    if (auto v = result.value())
        out["value"] = *v;
    else
        out["value"] = "NOT-APPLICABLE";
    if (!result.diagnostic.empty())
        out["diagnostic"] = result.diagnostic;
    return out;
}

} // namespace ksieve
