// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "imzv/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>

namespace {

struct Tally
{
    std::size_t total = 0;
    std::size_t failed = 0;
    std::string first_failure;

    void add(const imzv::CheckReport& r)
    {
        ++total;
        if (!r.pass) {
            if (failed++ == 0)
                first_failure = imzv::report_json(r, true).dump();
        }
    }
    bool ok() const { return total > 0 && failed == 0; }
};

using Filter = std::function<bool(const std::string& claim)>;

bool any_claim(const std::string&) { return true; }

void collect(const std::string& suite, const imzv::SuiteParams& params, std::vector<std::pair<Filter, Tally*>> routes)
{
    imzv::run_suite(suite, params, [&](const imzv::CheckReport& r) {
        bool routed = false;
        for (auto& [filter, tally] : routes)
            if (filter(r.claim)) {
                tally->add(r);
                routed = true;
            }
        if (!routed && r.claim == "error")
            for (auto& route : routes)
                route.second->add(r);
    });
}

bool report(int n, const char* what, const Tally& t, double seconds)
{
    std::printf("criterion %d: %s  %s (%zu/%zu checks, %.1fs)\n", n, t.ok() ? "PASS" : "FAIL", what,
                t.total - t.failed, t.total, seconds);
    if (!t.ok() && !t.first_failure.empty())
        std::printf("    first failure: %s\n", t.first_failure.c_str());
    std::fflush(stdout);
    return t.ok();
}

double since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main()
{
    imzv::SuiteParams base;
    base.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    bool all = true;

    {
        // recurrences and the four-term identity share one sweep
        auto start = std::chrono::steady_clock::now();
        Tally recur, four;
        imzv::SuiteParams p = base;
        p.max_weight = 7;
        p.max_m = 4;
        collect("recurrences", p,
                {{[](const std::string& c) { return c != "f-four-term"; }, &recur},
                 {[](const std::string& c) { return c == "f-four-term"; }, &four}});
        const double s = since(start);
        all &= report(1, "g/G/h unit, up and right recurrences, wt <= 7, m <= 4", recur, s);
        all &= report(2, "four-term f identity, 1 <= k <= 8, e <= 6, i <= 4", four, s);
    }
    {
        auto start = std::chrono::steady_clock::now();
        Tally t;
        imzv::SuiteParams p = base;
        p.max_weight = 7;
        p.max_m = 4;
        collect("gh-equality", p, {{any_claim, &t}});
        all &= report(3, "G_m(k) = h_m(k), wt <= 7, m <= 4", t, since(start));
    }
    {
        auto start = std::chrono::steady_clock::now();
        Tally t;
        imzv::SuiteParams p = base;
        p.max_weight = 6;
        p.max_m = 4;
        collect("genfun", p, {{any_claim, &t}});
        collect("dual-genfun", p, {{any_claim, &t}});
        all &= report(4, "X direct/closed, sigma(X) three ways, tau sigma tau X vs dual side, wt <= 6, U <= 4", t,
                      since(start));
    }
    {
        auto start = std::chrono::steady_clock::now();
        Tally t;
        imzv::SuiteParams p = base;
        p.max_weight = 6;
        p.max_m = 4;
        collect("specialize", p, {{any_claim, &t}});
        imzv::SuiteParams c = base;
        c.k_max = 10;
        collect("claim", c, {{any_claim, &t}});
        all &= report(5, "t = 0 / t = 1 specializations, depth 1/2 closed forms, coefficient identity", t, since(start));
    }
    {
        auto start = std::chrono::steady_clock::now();
        Tally t;
        imzv::SuiteParams p = base;
        p.max_weight = 5;
        p.max_m = 3;
        p.prime_lo = 11;
        p.prime_hi = 47;
        collect("fmzv-ohno", p, {{any_claim, &t}});
        all &= report(6, "finite Ohno-type relations (plain, star, interpolated), wt <= 5, m <= 3, p in 11..47", t,
                      since(start));
    }
    {
        auto start = std::chrono::steady_clock::now();
        Tally t;
        imzv::SuiteParams p = base;
        p.k_max = 7;
        p.prime_lo = 11;
        p.prime_hi = 47;
        collect("fmzv-sum", p, {{any_claim, &t}});
        all &= report(7, "finite sum formula k <= 7 and depth-2 closed form a+b <= 8, p in 11..47", t, since(start));
    }
    {
        auto start = std::chrono::steady_clock::now();
        Tally t;
        imzv::SuiteParams p = base;
        p.trunc = 1000000;
        p.tol = 1e-2;
        p.max_weight = 5;
        p.max_m = 2;
        p.t_values = {0, 1, imzv::Rat(1, 2)};
        collect("numeric-ohno", p, {{any_claim, &t}});
        imzv::SuiteParams s = p;
        s.k_max = 6;
        s.t_values = {0, imzv::Rat(1, 2), 1};
        collect("numeric-sum", s, {{any_claim, &t}});
        all &= report(8, "numeric Ohno-type at t = 0, 1/2, 1 and sum formula, N = 10^6, tol 1e-2", t, since(start));
    }
    {
        auto start = std::chrono::steady_clock::now();
        Tally t;
        imzv::SuiteParams p = base;
        p.max_weight = 6;
        p.prime_lo = 5;
        p.prime_hi = 47;
        p.trunc = 1000000;
        p.tol = 1e-2;
        collect("star-oracle", p, {{any_claim, &t}});
        all &= report(9, "interpolated value at t = 1 vs independent star sums (mod p and numeric), wt <= 6", t,
                      since(start));
    }
    return all ? 0 : 1;
}
