#pragma once

// Batch verification: every suite expands into independent instances, runs them
// (optionally on several threads) and emits one report per check in instance
// order, regardless of completion order.

#include "imzv/finite.hpp"
#include "imzv/genfun_checks.hpp"
#include "imzv/interp_checks.hpp"
#include "imzv/numeric.hpp"
#include "imzv/verdict.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <functional>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace imzv {

struct CheckReport
{
    std::string claim;
    Json params = Json::object(); // instance parameters, e.g. {"k":[1,2],"m":2,"p":31}
    bool pass = false;
    Json counterexample;          // present iff !pass
    double wall_ms = 0;
};

/// Suite parameters. Unset optional ranges fall back to each suite's own default.
struct SuiteParams
{
    std::optional<int> max_weight;
    std::optional<int> max_m;
    std::optional<int> k_max;
    std::uint64_t prime_lo = 11;
    std::uint64_t prime_hi = 47;
    std::int64_t trunc = 1000000;
    double tol = 1e-2;
    std::vector<Rat> t_values; // empty: suite default
    int jobs = 1;
};

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"recurrences", "gh-equality", "genfun",       "dual-genfun",
                                                "fmzv-ohno",   "fmzv-sum",    "claim",        "numeric-ohno",
                                                "numeric-sum", "specialize",  "star-oracle"};
    return names;
}

inline Json report_json(const CheckReport& r, bool stable)
{
    Json j{{"claim", r.claim}};
    for (const auto& [key, value] : r.params.items())
        j[key] = value;
    j["pass"] = r.pass;
    if (!r.pass)
        j["counterexample"] = r.counterexample;
    if (!stable)
        j["wall_ms"] = r.wall_ms;
    return j;
}

namespace detail {

inline std::string csv_quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace detail

inline std::string csv_header(bool stable)
{
    return stable ? "claim,params,pass,counterexample" : "claim,params,pass,counterexample,wall_ms";
}

inline std::string report_csv(const CheckReport& r, bool stable)
{
    std::string line = r.claim + "," + detail::csv_quote(r.params.dump()) + "," + (r.pass ? "true" : "false") + "," +
                       (r.pass ? std::string() : detail::csv_quote(r.counterexample.dump()));
    if (!stable)
        line += "," + std::to_string(r.wall_ms);
    return line;
}

/// One unit of work; returns every verdict it produced, all sharing `params`.
struct Instance
{
    Json params;
    std::function<std::vector<Verdict>()> run;
};

namespace detail {

inline std::vector<CheckReport> run_instance(const Instance& inst)
{
    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckReport> out;
    std::vector<Verdict> verdicts;
    try {
        verdicts = inst.run();
    } catch (const std::exception& ex) {
        verdicts.push_back(Verdict{"error", false, Json{{"exception", ex.what()}}});
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() /
        static_cast<double>(std::max<std::size_t>(verdicts.size(), 1));
    for (auto& v : verdicts)
        out.push_back(CheckReport{v.claim, inst.params, v.pass, v.pass ? Json() : std::move(v.counterexample), ms});
    return out;
}

inline std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = std::max<std::uint64_t>(lo, 3); p <= hi; ++p)
        if (is_prime(p))
            out.push_back(p);
    return out;
}

inline Json t_json(const Rat& t) { return to_string(t); }

inline std::vector<Rat> t_values_or(const SuiteParams& params, std::vector<Rat> fallback)
{
    return params.t_values.empty() ? fallback : params.t_values;
}

} // namespace detail

/// Expands a suite into its instances. Throws std::invalid_argument for unknown
/// suites or invalid ranges.
inline std::vector<Instance> build_suite(const std::string& name, const SuiteParams& params)
{
    std::vector<Instance> out;
    auto range_check = [](int v, int lo, const char* what) {
        if (v < lo)
            throw std::invalid_argument(std::string(what) + " must be >= " + std::to_string(lo));
        return v;
    };
    if (params.prime_lo > params.prime_hi)
        throw std::invalid_argument("empty prime range");
    if (params.trunc < 10)
        throw std::invalid_argument("--trunc must be >= 10");
    if (!(params.tol >= 0))
        throw std::invalid_argument("--tol must be non-negative");

    if (name == "recurrences") {
        const int W = range_check(params.max_weight.value_or(7), 1, "--max-weight");
        const int M = range_check(params.max_m.value_or(4), 0, "--max-m");
        for (const auto& k : indices_up_to_weight(W, false))
            for (int m = 0; m <= M; ++m)
                out.push_back({Json{{"k", to_json(k)}, {"m", m}}, [k, m] { return recurrence_checks(k, m); }});
        for (int k = 1; k <= W + 1; ++k)
            for (int e = 0; e <= M + 2; ++e)
                out.push_back({Json{{"kk", k}, {"e", e}}, [k, e, M] {
                                   std::vector<Verdict> v;
                                   for (int i = 0; i <= M; ++i) {
                                       auto r = f_four_term_check(k, e, i);
                                       if (!r.pass)
                                           r.counterexample["i"] = i;
                                       v.push_back(std::move(r));
                                   }
                                   return v;
                               }});
    } else if (name == "gh-equality") {
        const int W = range_check(params.max_weight.value_or(7), 1, "--max-weight");
        const int M = range_check(params.max_m.value_or(4), 0, "--max-m");
        for (const auto& k : indices_up_to_weight(W, false))
            for (int m = 0; m <= M; ++m)
                out.push_back({Json{{"k", to_json(k)}, {"m", m}},
                               [k, m] { return std::vector<Verdict>{gh_equality_check(k, m), support_shape_check(k, m)}; }});
    } else if (name == "genfun") {
        const int W = range_check(params.max_weight.value_or(6), 1, "--max-weight");
        const int U = range_check(params.max_m.value_or(4), 0, "--max-m");
        for (const auto& k : indices_up_to_weight(W, false))
            out.push_back({Json{{"k", to_json(k)}, {"U", U}}, [k, U] {
                               std::vector<Verdict> v{x_direct_closed_check(k, U)};
                               for (auto& r : sigma_x_genfun_checks(k, U))
                                   v.push_back(std::move(r));
                               return v;
                           }});
    } else if (name == "dual-genfun") {
        const int W = range_check(params.max_weight.value_or(6), 2, "--max-weight");
        const int U = range_check(params.max_m.value_or(4), 0, "--max-m");
        for (const auto& k : indices_up_to_weight(W, true))
            out.push_back({Json{{"k", to_json(k)}, {"U", U}}, [k, U] { return std::vector<Verdict>{dual_genfun_check(k, U)}; }});
        for (const auto& k : indices_up_to_weight(W + 2, true))
            out.push_back({Json{{"k", to_json(k)}}, [k] { return std::vector<Verdict>{dual_transport_check(k)}; }});
    } else if (name == "fmzv-ohno") {
        const int W = range_check(params.max_weight.value_or(5), 1, "--max-weight");
        const int M = range_check(params.max_m.value_or(3), 0, "--max-m");
        const auto primes = detail::primes_in(params.prime_lo, params.prime_hi);
        for (const auto& k : indices_up_to_weight(W, false))
            for (int m = 0; m <= M; ++m)
                for (auto p : primes) {
                    if (p <= static_cast<std::uint64_t>(k.weight() + m + 2))
                        continue;
                    out.push_back({Json{{"k", to_json(k)}, {"m", m}, {"p", p}}, [k, m, p] {
                                       return std::vector<Verdict>{check_oyama(k, m, p), check_c2_star_ohno(k, m, p),
                                                                   check_interp_F_ohno(k, m, p)};
                                   }});
                }
        for (const auto& k : indices_up_to_weight(W + 1, true))
            for (int m = 0; m <= M; ++m)
                out.push_back({Json{{"k", to_json(k)}, {"m", m}}, [k, m] { return std::vector<Verdict>{hoffman_dual_shift_check(k, m)}; }});
    } else if (name == "fmzv-sum") {
        const int K = range_check(params.k_max.value_or(7), 2, "--k-max");
        const auto primes = detail::primes_in(params.prime_lo, params.prime_hi);
        for (int k = 2; k <= K; ++k)
            for (int r = 1; r < k; ++r)
                for (auto p : primes) {
                    if (p <= static_cast<std::uint64_t>(k + 2))
                        continue;
                    out.push_back({Json{{"k", k}, {"r", r}, {"p", p}}, [k, r, p] { return std::vector<Verdict>{check_sum_formula_F(k, r, p)}; }});
                }
        for (int w = 2; w <= K + 1; ++w)
            for (int a = 1; a < w; ++a)
                for (auto p : primes) {
                    if (static_cast<std::uint64_t>(w) + 2 > p)
                        continue;
                    out.push_back({Json{{"a", a}, {"b", w - a}, {"p", p}},
                                   [a, b = w - a, p] { return std::vector<Verdict>{depth2_closed_form_check(a, b, p)}; }});
                }
    } else if (name == "claim") {
        const int K = range_check(params.k_max.value_or(10), 3, "--k-max");
        for (int k = 3; k <= K; ++k)
            for (int r = 2; r < k; ++r)
                out.push_back({Json{{"k", k}, {"r", r}}, [k, r] { return std::vector<Verdict>{claim_identity_check(k, r)}; }});
    } else if (name == "numeric-ohno") {
        const int W = range_check(params.max_weight.value_or(5), 2, "--max-weight");
        const int M = range_check(params.max_m.value_or(2), 0, "--max-m");
        const auto ts = detail::t_values_or(params, {Rat(0), Rat(1), Rat(1, 2)});
        for (const auto& k : indices_up_to_weight(W, true))
            for (int m = 0; m <= M; ++m)
                for (const auto& t : ts)
                    out.push_back({Json{{"k", to_json(k)}, {"m", m}, {"t", detail::t_json(t)}, {"N", params.trunc}},
                                   [k, m, t, n = params.trunc, tol = params.tol] {
                                       return std::vector<Verdict>{check_ohno_numeric(k, m, t, n, tol)};
                                   }});
    } else if (name == "numeric-sum") {
        const int K = range_check(params.k_max.value_or(6), 2, "--k-max");
        const auto ts = detail::t_values_or(params, {Rat(0), Rat(1, 2), Rat(1)});
        for (int k = 2; k <= K; ++k)
            for (int r = 1; r < k; ++r)
                for (const auto& t : ts)
                    out.push_back({Json{{"k", k}, {"r", r}, {"t", detail::t_json(t)}, {"N", params.trunc}},
                                   [k, r, t, n = params.trunc, tol = params.tol] {
                                       return std::vector<Verdict>{check_sum_formula_numeric(k, r, t, n, tol)};
                                   }});
    } else if (name == "specialize") {
        const int W = range_check(params.max_weight.value_or(6), 1, "--max-weight");
        const int M = range_check(params.max_m.value_or(4), 0, "--max-m");
        for (const auto& k : indices_up_to_weight(W, false))
            for (int m = 0; m <= M; ++m)
                out.push_back({Json{{"k", to_json(k)}, {"m", m}}, [k, m] { return g_specialize_checks(k, m); }});
        for (int k = 1; k <= W; ++k)
            for (int m = 0; m <= M; ++m)
                out.push_back({Json{{"k", Json::array({k})}, {"m", m}}, [k, m] { return std::vector<Verdict>{dep1_closed_form_check(k, m)}; }});
        for (int w = 2; w <= W; ++w)
            for (int k1 = 1; k1 < w; ++k1)
                for (int m = 0; m <= M; ++m)
                    out.push_back({Json{{"k", Json::array({k1, w - k1})}, {"m", m}},
                                   [k1, k2 = w - k1, m] { return std::vector<Verdict>{dep2_closed_form_check(k1, k2, m)}; }});
    } else if (name == "star-oracle") {
        const int W = range_check(params.max_weight.value_or(6), 1, "--max-weight");
        const std::uint64_t lo = std::max<std::uint64_t>(params.prime_lo, 5);
        for (const auto& k : indices_up_to_weight(W, false))
            for (auto p : detail::primes_in(lo, params.prime_hi))
                out.push_back({Json{{"k", to_json(k)}, {"p", p}}, [k, p] { return std::vector<Verdict>{star_oracle_mod_p(k, p)}; }});
        for (const auto& k : indices_up_to_weight(W, true))
            out.push_back({Json{{"k", to_json(k)}, {"N", params.trunc}}, [k, n = params.trunc, tol = params.tol] {
                               return std::vector<Verdict>{star_oracle_numeric(k, n, tol)};
                           }});
    } else {
        throw std::invalid_argument("unknown suite \"" + name + "\"");
    }
    return out;
}

/// Runs instances on `jobs` threads and hands reports to `sink` in instance order.
/// Returns true iff every check passed.
inline bool run_instances(const std::vector<Instance>& instances, int jobs,
                          const std::function<void(const CheckReport&)>& sink)
{
    bool all_pass = true;
    auto emit = [&](const std::vector<CheckReport>& reports) {
        for (const auto& r : reports) {
            all_pass = all_pass && r.pass;
            sink(r);
        }
    };

    if (jobs <= 1 || instances.size() <= 1) {
        for (const auto& inst : instances)
            emit(detail::run_instance(inst));
        return all_pass;
    }

    std::vector<std::optional<std::vector<CheckReport>>> slots(instances.size());
    std::atomic<std::size_t> next{0};
    std::mutex mutex;
    std::condition_variable ready;

    std::vector<std::jthread> workers;
    const auto count = std::min<std::size_t>(static_cast<std::size_t>(jobs), instances.size());
    for (std::size_t w = 0; w < count; ++w)
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < instances.size(); i = next++) {
                auto reports = detail::run_instance(instances[i]);
                {
                    std::lock_guard lock(mutex);
                    slots[i] = std::move(reports);
                }
                ready.notify_all();
            }
        });

    for (std::size_t i = 0; i < instances.size(); ++i) {
        std::vector<CheckReport> reports;
        {
            std::unique_lock lock(mutex);
            ready.wait(lock, [&] { return slots[i].has_value(); });
            reports = std::move(*slots[i]);
            slots[i].reset();
        }
        emit(reports);
    }
    return all_pass;
}

inline bool run_suite(const std::string& name, const SuiteParams& params,
                      const std::function<void(const CheckReport&)>& sink)
{
    return run_instances(build_suite(name, params), params.jobs, sink);
}

} // namespace imzv
